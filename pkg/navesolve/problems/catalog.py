#!/usr/bin/env python3
"""
Benchmark NAVE instances and the problem-id registry
Author: navesolve developers
"""
import numpy as np

from ..base.core import NaveProblem
from ..base.errors import InvalidSpec
from .lcp import make_affine

DEFAULT_SEED = 42

# right-hand sides of the three- and four-dimensional examples
B_VECTORS = {
    'b1': (-1.0, -5.0, 10.0),
    'b2': (9.0, -100.0, 10.0),
    'b3': (200.0, 0.0, 900.0),
    'bstar1': (10.0, 10.0, -12.0, 0.0),
    'bstar2': (20.0, -100.0, -12.0, 1.0),
    'bstar3': (200.0, 10.0, -5.0, -5.0),
}

# (T, x0) of single discretized solves
ODE_SOLVE_DEFAULTS = {'ode-stiff': (5.0, -1.0),
                      'ode-bvp': (2.0, -1.0),
                      'ode-arctan': (1.0, 1.0)}


def tridiag_matrix(d, lower=-1.0, diag=4.0, upper=-1.0):
    return (np.diag(np.full(d, diag)) + np.diag(np.full(d - 1, lower), -1)
            + np.diag(np.full(d - 1, upper), 1))


def make_tridiag(d, mode='random_b', seed=DEFAULT_SEED):
    '''AVE with A = tridiag(-1, 4, -1)
       -------------------------------
       Parameters
       ----------
       d : int
           Dimension, at least 2
       mode : string or array-like
           'random_b' draws b uniformly from [-5, 5]^d,
           'x_star' draws x* from [-5, 5]^d and sets b = Ax* - |x*|.
           An explicit x* may be passed instead of a mode name
       seed : int
           Seed of the generator

       Returns
       -------
       p : NaveProblem
           F(x) = Ax with known solution in 'x_star' mode
    '''
    if d < 2:
        raise InvalidSpec("tridiag needs d >= 2, got %r" % d)
    A = tridiag_matrix(d)
    rng = np.random.default_rng(seed)
    if isinstance(mode, str):
        if mode == 'random_b':
            b = rng.uniform(-5.0, 5.0, d)
            return make_affine(A, b, label='tridiag d=%d' % d)
        if mode != 'x_star':
            raise InvalidSpec("unknown tridiag mode %r" % mode)
        x_star = rng.uniform(-5.0, 5.0, d)
    else:
        x_star = np.asarray(mode, dtype=np.float64)
        if x_star.shape != (d,):
            raise InvalidSpec("x* must have dimension %d" % d)
    b = A @ x_star - np.abs(x_star)
    return make_affine(A, b, label='tridiag d=%d x*' % d,
                       exact_solution=x_star)


def _f_r3(x):
    x1, x2, x3 = x
    return np.array([2 * x1 - 2,
                     2 * x2 + x2**3 - x3 + 3,
                     x2 + 2 * x3 + 2 * x3**3 - 3])


def _jac_r3(x):
    _, x2, x3 = x
    return np.array([[2.0, 0.0, 0.0],
                     [0.0, 2 + 3 * x2**2, -1.0],
                     [0.0, 1.0, 2 + 6 * x3**2]])


def make_example_r3(b=None):
    '''Three-dimensional polynomial NAVE

       F(x) = (2x1 - 2, 2x2 + x2^3 - x3 + 3, x2 + 2x3 + 2x3^3 - 3)
       with right-hand side b (a key of B_VECTORS or a vector)
    '''
    label, b = _resolve_b('r3', b, 3)
    return NaveProblem(dim=3, f_eval=_f_r3, jac_eval=_jac_r3, rhs=b,
                       label=label)


def _f_r4(x):
    x1, x2, x3, x4 = x
    return np.array([
        3 * x1**2 + x1 + 2 * x1 * x2 + 2 * x2**2 + x3 + 3 * x4,
        2 * x1**2 + x1 + x2**2 + x2 + 10 * x3 + 2 * x4,
        3 * x1**2 + x1 * x2 + 2 * x2**2 + 3 * x3 + 9 * x4,
        x1**2 + 3 * x2**2 + 2 * x3 + 4 * x4])


def _jac_r4(x):
    x1, x2, _, _ = x
    return np.array([[6 * x1 + 1 + 2 * x2, 2 * x1 + 4 * x2, 1.0, 3.0],
                     [4 * x1 + 1, 2 * x2 + 1, 10.0, 2.0],
                     [6 * x1 + x2, x1 + 4 * x2, 3.0, 9.0],
                     [2 * x1, 6 * x2, 2.0, 4.0]])


def make_example_r4(b=None):
    '''Four-dimensional quadratic NAVE'''
    label, b = _resolve_b('r4', b, 4)
    return NaveProblem(dim=4, f_eval=_f_r4, jac_eval=_jac_r4, rhs=b,
                       label=label)


def _resolve_b(name, b, dim):
    if b is None:
        return name, np.zeros(dim)
    if isinstance(b, str):
        if b not in B_VECTORS or len(B_VECTORS[b]) != dim:
            raise InvalidSpec("%s has no right-hand side named %r" % (name, b))
        return '%s:%s' % (name, b), np.array(B_VECTORS[b])
    return name, np.asarray(b, dtype=np.float64)


# ---- problem ids -----------------------------------------------------

def parse_problem_id(problem_id):
    '''Split 'name:key=value:...' into the name and a dict

       A bare token after the name (as in 'r3:b1') is stored
       under the key 'b'.
    '''
    tokens = [t.strip() for t in str(problem_id).split(':') if t.strip()]
    if not tokens:
        raise InvalidSpec("empty problem id")
    name, params = tokens[0].lower(), {}
    for tok in tokens[1:]:
        key, sep, value = tok.partition('=')
        if sep:
            params[key.strip()] = value.strip()
        elif 'b' not in params:
            params['b'] = tok
        else:
            raise InvalidSpec("malformed token %r in %r" % (tok, problem_id))
    return name, params


def _take(params, key, cast, default=None):
    if key not in params:
        if default is None:
            raise InvalidSpec("missing parameter %r" % key)
        return default
    try:
        return cast(params.pop(key))
    except ValueError:
        raise InvalidSpec("parameter %r is not a valid %s"
                          % (key, cast.__name__))


def build_problem(problem_id):
    '''Build a catalog problem from its id
       -----------------------------------
       Recognised ids::

           tridiag:d=10:mode=random_b:seed=42
           r3:b1            r4:bstar2
           ridge:seed=42:m=3:d=10:lam=0:mu=100
           sparse:seed=42:lam=0.1:m=20:d=40:sign=-1
           ode-stiff:h=0.05:T=5:x0=-1
           ode-bvp:h=0.05:T=2:x0=-1
           ode-arctan:h=0.0125:T=1:x0=1

       Parameters
       ----------
       problem_id : string

       Returns
       -------
       p : NaveProblem
    '''
    from .regression import make_random_ridge, make_random_sparse
    from .ode import make_stiff_ivp, make_stiff_bvp, make_arctan_ivp

    name, params = parse_problem_id(problem_id)
    seed = _take(params, 'seed', int, DEFAULT_SEED)
    if name == 'tridiag':
        p = make_tridiag(_take(params, 'd', int, 10),
                         _take(params, 'mode', str, 'random_b'), seed)
    elif name in ('r3', 'r4'):
        b = params.pop('b', None)
        p = make_example_r3(b) if name == 'r3' else make_example_r4(b)
    elif name == 'ridge':
        p = make_random_ridge(_take(params, 'm', int, 3),
                              _take(params, 'd', int, 10),
                              _take(params, 'lam', float, 0.0),
                              _take(params, 'mu', float, 100.0), seed)
    elif name == 'sparse':
        p = make_random_sparse(_take(params, 'm', int, 20),
                               _take(params, 'd', int, 40),
                               _take(params, 'lam', float, 0.1), seed,
                               _take(params, 'sign', int, -1))
    elif name in ('ode-stiff', 'ode-bvp', 'ode-arctan'):
        h = _take(params, 'h', float)
        default_T, default_x0 = ODE_SOLVE_DEFAULTS[name]
        T = _take(params, 'T', float, default_T)
        x0 = _take(params, 'x0', float, default_x0)
        N = int(round(T / h))
        builder = {'ode-stiff': make_stiff_ivp, 'ode-bvp': make_stiff_bvp,
                   'ode-arctan': make_arctan_ivp}[name]
        _, p = builder(x0=x0, T=T, N=N)
    else:
        raise InvalidSpec("unknown problem family %r in %r"
                          % (name, problem_id))
    if params:
        raise InvalidSpec("unused parameters %s in %r"
                          % (sorted(params), problem_id))
    return p
