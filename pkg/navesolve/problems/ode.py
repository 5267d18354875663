#!/usr/bin/env python3
"""
Finite-difference discretizations of second-order ODEs
with an absolute value term, each leading to a NAVE
Author: navesolve developers
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..base.core import NaveProblem
from ..base.errors import InvalidSpec


@dataclass
class OdeDiscretization:
    '''Mesh, matrices and right-hand side of a discretized ODE

       Attributes
       ----------
       kind : string
           'ivp' or 'bvp'
       mesh_h : float
           Mesh width T/N
       n_steps : int
           N, the number of mesh intervals
       A : np.array
           Second-difference matrix
       B : np.array or None
           First-difference matrix (stiff problems)
       rhs : np.array
       t : np.array
           Mesh nodes carrying the unknowns
       exact_solution : callable or None
           t -> exact solution
       boundary : dict
           'x0' with 'v0' (initial value) or 'y0' (boundary value)
    '''
    kind: str
    mesh_h: float
    n_steps: int
    A: np.ndarray
    rhs: np.ndarray
    t: np.ndarray
    B: Optional[np.ndarray] = None
    exact_solution: Optional[Callable] = None
    boundary: dict = field(default_factory=dict)

    def exact_on_mesh(self):
        return self.exact_solution(self.t)


def stiff_exact(t, x0):
    '''Exact solution of x'' + 1001 x' - 1000 |x| = 0, x(0) = x0 < 0, x'(0) = 0'''
    t = np.asarray(t, dtype=np.float64)
    return x0 * (-np.exp(-1000.0 * t) / 999.0 + 1000.0 / 999.0 * np.exp(-t))


def arctan_exact(t):
    return np.cos(np.pi * np.asarray(t, dtype=np.float64))


def arctan_source(t):
    c = np.cos(np.pi * np.asarray(t, dtype=np.float64))
    return np.arctan(c) - np.abs(c) - np.pi**2 * c


ERROR_NORMS = ('max', 'terminal')


def ode_error(disc, x, norm='max'):
    '''Error against the exact solution on the mesh
       --------------------------------------------
       Parameters
       ----------
       disc : OdeDiscretization
       x : array-like
           Discrete solution on `disc.t`
       norm : string
           'max' for the max-norm over all nodes, 'terminal' for
           the error at the last node

       Returns
       -------
       err : float
    '''
    e = np.abs(np.asarray(x) - disc.exact_on_mesh())
    if norm == 'max':
        return float(np.max(e))
    if norm == 'terminal':
        return float(e[-1])
    raise InvalidSpec("unknown error norm %r, choose from %s"
                      % (norm, ERROR_NORMS))


def _check_mesh(T, N):
    if N < 3:
        raise InvalidSpec("the mesh needs N >= 3 intervals, got %r" % N)
    if not T > 0:
        raise InvalidSpec("final time T must be positive, got %r" % T)
    return T / N


def backward_second_difference(N, h):
    '''(x_{i-2} - 2x_{i-1} + x_i) / h^2 with x_{-1} = x_0 folded out'''
    A = np.diag(np.ones(N)) + np.diag(np.full(N - 1, -2.0), -1) \
        + np.diag(np.ones(N - 2), -2)
    return A / h**2


def centered_first_difference(N, h):
    '''(x_{i+1} - x_{i-1}) / 2h with a 3-point backward last row'''
    B = np.diag(np.ones(N - 1), 1) - np.diag(np.ones(N - 1), -1)
    B[-1, :] = 0.0
    B[-1, -3:] = (1.0, -4.0, 3.0)
    return B / (2 * h)


def make_stiff_ivp(x0=-1.0, T=5.0, N=100):
    '''Stiff initial value problem
       ---------------------------
       x'' + 1001 x' - 1000 |x| = 0 with x(0) = x0 < 0, x'(0) = 0,
       discretized on t_i = ih, i = 1..N, as
       (1/1000) A x + (1001/1000) B x - |x| = b

       Parameters
       ----------
       x0 : float
           Negative initial value
       T : float
           Final time
       N : int
           Number of mesh intervals, at least 3

       Returns
       -------
       (disc, p) : tuple
           OdeDiscretization and the NAVE problem
    '''
    if not x0 < 0:
        raise InvalidSpec("the stiff problem needs x0 < 0, got %r" % x0)
    h = _check_mesh(T, N)
    A = backward_second_difference(N, h)
    B = centered_first_difference(N, h)
    K = A / 1000.0 + 1001.0 / 1000.0 * B
    b = np.zeros(N)
    b[0] = x0 * (1.0 / (1000.0 * h**2) + 1001.0 / (2000.0 * h))
    b[1] = -x0 / (1000.0 * h**2)
    t = h * np.arange(1, N + 1)
    disc = OdeDiscretization('ivp', h, N, A, b, t, B=B,
                             exact_solution=lambda s: stiff_exact(s, x0),
                             boundary={'x0': x0, 'v0': 0.0})
    p = NaveProblem(dim=N, f_eval=lambda x: K @ x, jac_eval=lambda x: K,
                    rhs=b, label='ode-stiff h=%g' % h,
                    exact_solution=disc.exact_on_mesh(), meta={'disc': disc})
    return disc, p


def make_stiff_bvp(x0=-1.0, T=2.0, N=40, y0=None):
    '''Boundary value version of the stiff problem
       -------------------------------------------
       x'' + 1001 x' - 1000 |x| = 0 on (0, T), x(0) = x0, x(T) = y0,
       with central second and first-order backward first
       differences at the interior nodes t_1..t_{N-1}.
       By default y0 is the exact solution at T.

       Returns
       -------
       (disc, p) : tuple
    '''
    h = _check_mesh(T, N)
    if y0 is None:
        y0 = float(stiff_exact(T, x0))
    n = N - 1
    D2 = (np.diag(np.full(n, -2.0)) + np.diag(np.ones(n - 1), 1)
          + np.diag(np.ones(n - 1), -1)) / h**2
    D1 = (np.eye(n) - np.diag(np.ones(n - 1), -1)) / h
    K = D2 / 1000.0 + 1001.0 / 1000.0 * D1
    b = np.zeros(n)
    b[0] -= x0 / (1000.0 * h**2) - 1001.0 * x0 / (1000.0 * h)
    b[-1] -= y0 / (1000.0 * h**2)
    t = h * np.arange(1, N)
    disc = OdeDiscretization('bvp', h, N, D2, b, t, B=D1,
                             exact_solution=lambda s: stiff_exact(s, x0),
                             boundary={'x0': x0, 'y0': y0})
    p = NaveProblem(dim=n, f_eval=lambda x: K @ x, jac_eval=lambda x: K,
                    rhs=b, label='ode-bvp h=%g' % h,
                    exact_solution=disc.exact_on_mesh(), meta={'disc': disc})
    return disc, p


def make_arctan_ivp(x0=1.0, T=1.0, N=80):
    '''x'' + arctan(x) - |x| = f(t), x(0) = x0, x'(0) = 0
       --------------------------------------------------
       The source f(t) = arctan(cos pi t) - |cos pi t| - pi^2 cos pi t
       makes cos(pi t) the exact solution when x0 = 1. The NAVE
       is A x + arctan(x) - |x| = b with A as in `make_stiff_ivp`.

       Returns
       -------
       (disc, p) : tuple
    '''
    h = _check_mesh(T, N)
    A = backward_second_difference(N, h)
    t = h * np.arange(1, N + 1)
    b = arctan_source(t)
    b[0] += x0 / h**2
    b[1] -= x0 / h**2
    disc = OdeDiscretization('ivp', h, N, A, b, t,
                             exact_solution=arctan_exact,
                             boundary={'x0': x0, 'v0': 0.0})
    exact = disc.exact_on_mesh() if x0 == 1.0 else None
    p = NaveProblem(dim=N,
                    f_eval=lambda x: A @ x + np.arctan(x),
                    jac_eval=lambda x: A + np.diag(1.0 / (1.0 + x**2)),
                    rhs=b, label='ode-arctan h=%g' % h,
                    exact_solution=exact, meta={'disc': disc})
    return disc, p
