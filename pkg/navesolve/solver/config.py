#!/usr/bin/env python3
"""
Configuration of the smoothing Newton method
Author: navesolve developers
"""
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from ..base.errors import ConfigError
from ..smoothing.kernels import SmoothingFamily, make_theta1, get_family


@dataclass(frozen=True)
class SolverConfig:
    '''Parameters of `newton_armijo_solve`

       Attributes
       ----------
       tol : float
           Stop when ||H(X)|| <= tol and the NAVE error of x is
           below tol (default 1e-10)
       max_iter : int
           Iteration cap (default 2000)
       tau : float
           Armijo constant in (0, 1/2) (default 1e-4)
       rho : float
           Backtracking factor in (0, 1) (default 0.5)
       epsilon : float
           Positive coefficient of r in the last equation
           r^2 + eps r = 0 (default 1.0)
       init : tuple or None
           (y0, z0) with positive entries; `None` starts
           from y0 = z0 = ones
       max_backtracks : int
           Line search cap (default 60)
       family : SmoothingFamily
           Kernel, theta_1 by default
    '''
    tol: float = 1e-10
    max_iter: int = 2000
    tau: float = 1e-4
    rho: float = 0.5
    epsilon: float = 1.0
    init: Optional[tuple] = None
    max_backtracks: int = 60
    family: SmoothingFamily = field(default_factory=make_theta1)

    def __post_init__(self):
        if isinstance(self.family, str):
            try:
                object.__setattr__(self, 'family', get_family(self.family))
            except KeyError as err:
                raise ConfigError(str(err))
        if not self.tol > 0:
            raise ConfigError("tol must be positive, got %r" % self.tol)
        if not 0 < self.tau < 0.5:
            raise ConfigError("tau must lie in (0, 1/2), got %r" % self.tau)
        if not 0 < self.rho < 1:
            raise ConfigError("rho must lie in (0, 1), got %r" % self.rho)
        if not self.epsilon > 0:
            raise ConfigError("epsilon must be positive, got %r"
                              % self.epsilon)
        if int(self.max_iter) < 1 or int(self.max_backtracks) < 1:
            raise ConfigError("max_iter and max_backtracks must be positive")

    def replace(self, **kwargs):
        '''Copy of the configuration with some fields changed'''
        return replace(self, **kwargs)

    def initial_point(self, d):
        '''(y0, z0) for a problem of dimension d'''
        if self.init is None:
            return np.ones(d), np.ones(d)
        y0, z0 = (np.asarray(v, dtype=np.float64) for v in self.init)
        if y0.shape != (d,) or z0.shape != (d,):
            raise ConfigError("initial point must have dimension %d" % d)
        if np.any(~(y0 > 0)) or np.any(~(z0 > 0)):
            raise ConfigError("initial y0 and z0 must be strictly positive")
        return y0.copy(), z0.copy()
