#!/usr/bin/env python3
"""
Configuration of the soft-max and interior point baselines
Author: navesolve developers
"""
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ..base.errors import ConfigError


@dataclass(frozen=True)
class BaselineConfig:
    '''Parameters of the baseline solvers

       Attributes
       ----------
       tol : float
           Target 2-norm of the NAVE residual (default 1e-10)
       max_iter : int
           Cap on Newton steps (default 2000)
       r_init, shrink, r_min : float
           Soft-max schedule r_init, r_init*shrink, ... down to
           r_min (defaults 1, 0.2, 1e-12)
       sigma : float
           Centering parameter in (0, 1) (default 0.3)
       frac_to_boundary : float
           Step fraction in (0, 1) keeping (y, z) > 0 (default 0.9995)
       tau, rho, max_backtracks :
           Armijo parameters of the soft-max inner Newton loop
       init : tuple or None
           Positive (y0, z0), ones by default
    '''
    tol: float = 1e-10
    max_iter: int = 2000
    r_init: float = 1.0
    shrink: float = 0.2
    r_min: float = 1e-12
    sigma: float = 0.3
    frac_to_boundary: float = 0.9995
    tau: float = 1e-4
    rho: float = 0.5
    max_backtracks: int = 60
    init: Optional[tuple] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ConfigError("tol must be positive, got %r" % self.tol)
        if int(self.max_iter) < 1:
            raise ConfigError("max_iter must be positive")
        if not 0 < self.shrink < 1:
            raise ConfigError("shrink must lie in (0, 1), got %r" % self.shrink)
        if not 0 < self.r_min <= self.r_init:
            raise ConfigError("need 0 < r_min <= r_init, got %r, %r"
                              % (self.r_min, self.r_init))
        if not 0 < self.sigma < 1:
            raise ConfigError("sigma must lie in (0, 1), got %r" % self.sigma)
        if not 0 < self.frac_to_boundary < 1:
            raise ConfigError("frac_to_boundary must lie in (0, 1)")
        if not 0 < self.tau < 0.5 or not 0 < self.rho < 1:
            raise ConfigError("need tau in (0, 1/2) and rho in (0, 1)")

    def replace(self, **kwargs):
        return replace(self, **kwargs)

    def r_schedule(self):
        '''Geometric smoothing schedule, r_min included as last level'''
        n = int(np.floor(np.log(self.r_min / self.r_init)
                         / np.log(self.shrink) + 1e-9))
        levels = [self.r_init * self.shrink**k for k in range(n + 1)]
        if levels[-1] > self.r_min * (1 + 1e-9):
            levels.append(self.r_min)
        return levels

    def initial_point(self, d):
        if self.init is None:
            return np.ones(d), np.ones(d)
        y0, z0 = (np.asarray(v, dtype=np.float64).copy() for v in self.init)
        if y0.shape != (d,) or z0.shape != (d,) or \
                np.any(~(y0 > 0)) or np.any(~(z0 > 0)):
            raise ConfigError("initial point must be positive of dimension %d"
                              % d)
        return y0, z0
