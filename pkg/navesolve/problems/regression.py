#!/usr/bin/env python3
"""
Asymmetric ridge regression and the sparse (l1) heuristic
written as NAVE problems for the quadratic loss
L(x) = 1/2 ||Ax - b||^2
Author: navesolve developers
"""
from dataclasses import dataclass

import numpy as np

from ..base.core import NaveProblem, as_matrix, as_vector
from ..base.errors import InvalidSpec
from ..pstructure.maps import p0_map_sample_check
from .catalog import DEFAULT_SEED


@dataclass
class RidgeSpec:
    '''Asymmetric ridge problem

       min L(x) + sum_j lam_j max(x_j, 0)^2 + mu_j max(-x_j, 0)^2

       Attributes
       ----------
       design : np.array
           m x d matrix A
       target : np.array
           Vector b of length m
       lam, mu : np.array
           Penalties of length d with lam_j != mu_j
    '''
    design: np.ndarray
    target: np.ndarray
    lam: np.ndarray
    mu: np.ndarray

    def __post_init__(self):
        self.design = as_matrix(self.design, 'design')
        m, d = self.design.shape
        self.target = as_vector(self.target, 'target', m)
        self.lam = np.broadcast_to(np.asarray(self.lam, dtype=np.float64),
                                   (d,)).copy()
        self.mu = np.broadcast_to(np.asarray(self.mu, dtype=np.float64),
                                  (d,)).copy()
        if np.any(self.lam < 0) or np.any(self.mu < 0):
            raise InvalidSpec("ridge penalties must be nonnegative")
        if np.any(self.lam == self.mu):
            raise InvalidSpec("lam_j and mu_j must differ for every j "
                              "(classical ridge is excluded)")


def loss_gradient(A, b, x):
    return A.T @ (A @ x - b)


def make_ridge(spec, label=None):
    '''NAVE form of asymmetric ridge regression
       ----------------------------------------
       The optimality condition grad L + 2 lam max(x,0) - 2 mu max(-x,0) = 0
       is F(x) - |x| = 0 with, coordinatewise,
       F(x) = (grad L(x) + (mu + lam) x) / (mu - lam)

       Parameters
       ----------
       spec : RidgeSpec
       label : string (optional)

       Returns
       -------
       p : NaveProblem
           Zero right-hand side; `meta['spec']` holds the spec
    '''
    if not isinstance(spec, RidgeSpec):
        raise InvalidSpec("make_ridge expects a RidgeSpec")
    A, b = spec.design, spec.target
    w = 1.0 / (spec.mu - spec.lam)
    shift = (spec.mu + spec.lam) * w
    AtA = A.T @ A
    d = A.shape[1]

    def f_eval(x):
        return w * loss_gradient(A, b, x) + shift * x

    def jac_eval(x):
        return w[:, None] * AtA + np.diag(shift)

    if label is None:
        label = 'ridge m=%d d=%d' % A.shape
    return NaveProblem(dim=d, f_eval=f_eval, jac_eval=jac_eval, label=label,
                       meta={'spec': spec})


def make_random_ridge(m, d, lam, mu, seed=DEFAULT_SEED):
    '''Ridge instance with A and b drawn uniformly from [-5, 5]'''
    rng = np.random.default_rng(seed)
    A = rng.uniform(-5.0, 5.0, (m, d))
    b = rng.uniform(-5.0, 5.0, m)
    spec = RidgeSpec(A, b, lam, mu)
    return make_ridge(spec, label='ridge (%g,%g) (%d,%d)' % (lam, mu, m, d))


def ridge_stationarity(spec, x):
    '''grad L(x) + 2 lam max(x, 0) - 2 mu max(-x, 0)

       Vanishes exactly at the zeros of the NAVE residual,
       being (mu - lam) times it.
    '''
    x = as_vector(x, dim=spec.design.shape[1])
    return (loss_gradient(spec.design, spec.target, x)
            + 2 * spec.lam * np.maximum(x, 0.0)
            - 2 * spec.mu * np.maximum(-x, 0.0))


def p0_preconditions(p, box=(-5.0, 5.0), samples=20, seed=DEFAULT_SEED):
    '''Sampled P0 checks of F - I and -(F + I)

       Returns
       -------
       verdicts : dict
           'FminusI' and 'negFplusI' mapped to P0Verdict
    '''
    return {shift: p0_map_sample_check(p, shift, box, samples, seed)
            for shift in ('FminusI', 'negFplusI')}


def make_sparse_heuristic(A, b, lam, label=None, sign=-1):
    '''NAVE form of the l1 optimality condition
       ----------------------------------------
       x grad L(x) + lam |x| = 0 is written as F(x) - |x| = 0 with
       F(x) = -(1/lam) x grad L(x). Every solution of the l1
       problem solves it, the converse does not hold (x = 0 is
       always a solution).

       With sign=+1 the map is F(x) = (1/lam) x grad L(x), the
       equation x grad L(x) - lam |x| = 0. Its F - I is the
       -(F + I) of the default and vice versa, so the two P0
       candidates trade places.

       Parameters
       ----------
       A : array-like
           m x d design
       b : array-like
           Target of length m
       lam : float
           Positive penalty
       label : string (optional)
       sign : int
           -1 (default) or +1

       Returns
       -------
       p : NaveProblem
    '''
    if not lam > 0:
        raise InvalidSpec("sparse heuristic needs lam > 0, got %r" % lam)
    if sign not in (-1, 1):
        raise InvalidSpec("sparse heuristic sign must be -1 or +1, got %r"
                          % (sign,))
    A = as_matrix(A, 'A')
    b = as_vector(b, 'b', A.shape[0])
    AtA = A.T @ A
    c = sign / lam

    def f_eval(x):
        return c * x * loss_gradient(A, b, x)

    def jac_eval(x):
        return c * (np.diag(loss_gradient(A, b, x)) + x[:, None] * AtA)

    if label is None:
        label = 'sparse lam=%g' % lam if sign < 0 else \
            'sparse lam=%g sign=+1' % lam
    return NaveProblem(dim=A.shape[1], f_eval=f_eval, jac_eval=jac_eval,
                       label=label, meta={'A': A, 'b': b, 'lam': lam,
                                          'sign': sign})


def random_sparse_data(m, d, seed=DEFAULT_SEED):
    '''A uniform on [-1, 1], b uniform on [-0.05, 0]'''
    rng = np.random.default_rng(seed)
    return rng.uniform(-1.0, 1.0, (m, d)), rng.uniform(-0.05, 0.0, m)


def make_random_sparse(m, d, lam, seed=DEFAULT_SEED, sign=-1):
    A, b = random_sparse_data(m, d, seed)
    suffix = '' if sign < 0 else ' sign=+1'
    return make_sparse_heuristic(A, b, lam, sign=sign,
                                 label='sparse lam=%g (%d,%d)%s'
                                 % (lam, m, d, suffix))
