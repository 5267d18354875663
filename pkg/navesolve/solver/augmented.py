#!/usr/bin/env python3
"""
Augmented system H(y, z, r) = 0 of size 2d + 1,
its Jacobian and the merit function 1/2 ||H||^2
Author: navesolve developers
"""
import numpy as np

from ..base.errors import DomainError
from ..smoothing.kernels import gr_component, gr_partials


def _negative_part(v):
    return np.maximum(-v, 0.0)


def assemble_residual(p, cfg, X):
    '''Residual of the augmented system
       --------------------------------
       Blocks, for x = y - z:

       1. y + z - F(x) + b (d rows), zero iff F(x) - |x| = b
          once y and z are complementary
       2. G_r(y_i, z_i) (d rows)
       3. 1/2 ||y^-||^2 + 1/2 ||z^-||^2 + r^2 + eps r (one row)

       Parameters
       ----------
       p : NaveProblem
       cfg : SolverConfig
       X : AugmentedState

       Returns
       -------
       H : np.array
           Vector of length 2d + 1
    '''
    if not X.r > 0:
        raise DomainError("augmented residual needs r > 0, got %r" % X.r)
    block1 = X.y + X.z - p.evaluate(X.x) + p.rhs
    block2 = np.atleast_1d(gr_component(cfg.family, X.y, X.z, X.r))
    yn, zn = _negative_part(X.y), _negative_part(X.z)
    block3 = 0.5 * yn @ yn + 0.5 * zn @ zn + X.r**2 + cfg.epsilon * X.r
    return np.concatenate([block1, block2, [block3]])


def assemble_jacobian(p, cfg, X):
    '''Jacobian of the augmented residual
       ----------------------------------
       Row blocks::

           [ I - JF      I + JF      0      ]
           [ diag(Gy)    diag(Gz)    Gr     ]
           [ -(y^-)^T    -(z^-)^T    2r+eps ]

       where JF is the Jacobian of F at y - z and Gy, Gz, Gr
       are the partial derivatives of G_r.

       Returns
       -------
       J : np.array
           (2d + 1) x (2d + 1) matrix
    '''
    if not X.r > 0:
        raise DomainError("augmented Jacobian needs r > 0, got %r" % X.r)
    d = X.dim
    JF = p.jacobian(X.x)
    eye = np.eye(d)
    gy, gz, gr = (np.atleast_1d(g) for g in
                  gr_partials(cfg.family, X.y, X.z, X.r))
    J = np.zeros((2 * d + 1, 2 * d + 1))
    J[:d, :d] = eye - JF
    J[:d, d:2 * d] = eye + JF
    rows = np.arange(d, 2 * d)
    J[rows, rows - d] = gy
    J[rows, rows] = gz
    J[d:2 * d, -1] = gr
    J[-1, :d] = -_negative_part(X.y)
    J[-1, d:2 * d] = -_negative_part(X.z)
    J[-1, -1] = 2 * X.r + cfg.epsilon
    return J


def merit(p, cfg, X):
    '''Theta(X) = 1/2 ||H(X)||^2'''
    H = assemble_residual(p, cfg, X)
    return 0.5 * float(H @ H)


def merit_gradient(p, cfg, X):
    '''grad Theta(X) = J(X)^T H(X)'''
    return assemble_jacobian(p, cfg, X).T @ assemble_residual(p, cfg, X)
