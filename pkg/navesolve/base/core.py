#!/usr/bin/env python3
"""
Shared numeric types, variable splitting and
NAVE residual evaluation
Author: navesolve developers
"""
from collections import namedtuple
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .errors import InvalidInput, EvaluationFailure

SplitPair = namedtuple('SplitPair', 'y z')

DEFAULT_FD_STEP = 1e-6


def as_vector(x, name='x', dim=None):
    '''Validate a real vector
       ----------------------
       Parameters
       ----------
       x : array-like
           Candidate 1-D vector
       name : string
           Name used in error messages
       dim : int (optional)
           Expected length

       Returns
       -------
       x : np.array
           Float64 copy-free view of the input
    '''
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 0:
        x = x.reshape(1)
    if x.ndim != 1 or x.size == 0:
        raise InvalidInput("%s must be a nonempty 1-D vector, got shape %s"
                           % (name, x.shape))
    if dim is not None and x.size != dim:
        raise InvalidInput("%s has dimension %d, expected %d"
                           % (name, x.size, dim))
    if not np.all(np.isfinite(x)):
        raise InvalidInput("%s contains non-finite entries" % name)
    return x


def as_matrix(A, name='A', square=False):
    '''Validate a dense real matrix

       Scalars and 1-D inputs of length one are
       promoted to 1 x 1 matrices.
    '''
    A = np.asarray(A, dtype=np.float64)
    if A.ndim == 0:
        A = A.reshape(1, 1)
    if A.ndim != 2 or A.size == 0:
        raise InvalidInput("%s must be a nonempty 2-D matrix, got shape %s"
                           % (name, A.shape))
    if square and A.shape[0] != A.shape[1]:
        raise InvalidInput("%s must be square, got shape %s" % (name, A.shape))
    if not np.all(np.isfinite(A)):
        raise InvalidInput("%s contains non-finite entries" % name)
    return A


@dataclass(frozen=True)
class NaveProblem:
    '''Nonlinear absolute value equation F(x) - |x| = b

       Attributes
       ----------
       dim : int
           Problem dimension d
       f_eval : callable
           Maps a d-vector to a d-vector
       jac_eval : callable or None
           Maps a d-vector to the d x d Jacobian of F.
           When `None` central finite differences are used
       rhs : np.array
           Right-hand side b (zero vector by default)
       label : string
           Human readable name used in tables
       exact_solution : np.array or None
           Known solution when the instance is manufactured
       meta : dict
           Builder-specific extras (matrices, mesh, spec)
    '''
    dim: int
    f_eval: Callable
    jac_eval: Optional[Callable] = None
    rhs: Optional[np.ndarray] = None
    label: str = ''
    exact_solution: Optional[np.ndarray] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if int(self.dim) < 1:
            raise InvalidInput("dim must be positive, got %r" % self.dim)
        rhs = np.zeros(self.dim) if self.rhs is None else self.rhs
        object.__setattr__(self, 'rhs', as_vector(rhs, 'rhs', self.dim))
        if self.exact_solution is not None:
            object.__setattr__(self, 'exact_solution',
                               as_vector(self.exact_solution,
                                         'exact_solution', self.dim))

    def evaluate(self, x):
        '''Evaluate F(x) with shape and finiteness checks'''
        x = as_vector(x, dim=self.dim)
        fx = np.asarray(self.f_eval(x), dtype=np.float64).reshape(-1)
        if fx.size != self.dim:
            raise EvaluationFailure("%s: F returned %d entries, expected %d"
                                    % (self.label, fx.size, self.dim))
        if not np.all(np.isfinite(fx)):
            raise EvaluationFailure("%s: F returned non-finite values"
                                    % self.label)
        return fx

    def jacobian(self, x, h=DEFAULT_FD_STEP):
        '''Jacobian of F, analytic when available'''
        if self.jac_eval is None:
            return fd_jacobian(self, x, h)
        x = as_vector(x, dim=self.dim)
        J = np.asarray(self.jac_eval(x), dtype=np.float64)
        if J.shape != (self.dim, self.dim):
            raise EvaluationFailure("%s: Jacobian has shape %s, expected %s"
                                    % (self.label, J.shape,
                                       (self.dim, self.dim)))
        if not np.all(np.isfinite(J)):
            raise EvaluationFailure("%s: Jacobian has non-finite entries"
                                    % self.label)
        return J

    def with_rhs(self, b, label=None):
        '''Copy of the problem with another right-hand side'''
        b = as_vector(b, 'rhs', self.dim)
        return replace(self, rhs=b, exact_solution=None,
                       label=self.label if label is None else label)


def split(x):
    '''Split a vector into positive and negative parts
       -----------------------------------------------
       Parameters
       ----------
       x : array-like
           Finite real vector

       Returns
       -------
       pair : SplitPair
           y = max(x, 0) and z = max(-x, 0), so that
           x = y - z and |x| = y + z
    '''
    x = as_vector(x)
    return SplitPair(np.maximum(x, 0.0), np.maximum(-x, 0.0))


def merge(pair):
    '''Inverse of `split`: returns y - z'''
    y = np.asarray(pair[0], dtype=np.float64)
    z = np.asarray(pair[1], dtype=np.float64)
    if y.shape != z.shape:
        raise InvalidInput("y and z differ in shape: %s vs %s"
                           % (y.shape, z.shape))
    return y - z


def nave_residual(p, x):
    '''NAVE residual F(x) - |x| - b
       ----------------------------
       Parameters
       ----------
       p : NaveProblem
       x : array-like
           Point of dimension p.dim

       Returns
       -------
       res : np.array
           A point solves the NAVE when the 2-norm of
           the residual is below the tolerance
    '''
    x = as_vector(x, dim=p.dim)
    return p.evaluate(x) - np.abs(x) - p.rhs


def fd_jacobian(p, x, h=DEFAULT_FD_STEP):
    '''Central finite-difference Jacobian of F
       ---------------------------------------
       Column j is (F(x + h e_j) - F(x - h e_j)) / (2h)

       Parameters
       ----------
       p : NaveProblem
       x : array-like
       h : float
           Positive difference step (default 1e-6)

       Returns
       -------
       J : np.array
           d x d approximation of the Jacobian
    '''
    if not h > 0:
        raise InvalidInput("difference step must be positive, got %r" % h)
    x = as_vector(x, dim=p.dim)
    J = np.empty((p.dim, p.dim))
    for j in range(p.dim):
        e = np.zeros(p.dim)
        e[j] = h
        J[:, j] = (p.evaluate(x + e) - p.evaluate(x - e)) / (2 * h)
    return J


def singular_values(A):
    return np.linalg.svd(as_matrix(A), compute_uv=False)


def is_invertible(A, rtol=1e-12):
    '''True when sigma_min(A) > rtol * max(1, sigma_max(A))'''
    s = singular_values(A)
    return bool(s[-1] > rtol * max(1.0, s[0]))


def is_singular(A, rtol=1e-10):
    '''True when sigma_min(A) <= rtol * max(1, sigma_max(A))'''
    s = singular_values(A)
    return bool(s[-1] <= rtol * max(1.0, s[0]))
