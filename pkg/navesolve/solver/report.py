#!/usr/bin/env python3
"""
Solver state and result types shared by all methods
Author: navesolve developers
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from ..base.core import nave_residual
from ..base.errors import NaveError


class Status(Enum):
    Converged = 'converged'
    MaxIterations = 'max_iterations'
    LineSearchStalled = 'line_search_stalled'
    SingularJacobian = 'singular_jacobian'
    DomainBreakdown = 'domain_breakdown'


@dataclass
class AugmentedState:
    '''Unknown X = (y, z, r) of the augmented system'''
    y: np.ndarray
    z: np.ndarray
    r: float

    @property
    def dim(self):
        return self.y.size

    @property
    def x(self):
        return self.y - self.z

    def to_vector(self):
        return np.concatenate([self.y, self.z, [self.r]])

    @classmethod
    def from_vector(cls, v, d):
        v = np.asarray(v, dtype=np.float64)
        return cls(v[:d].copy(), v[d:2 * d].copy(), float(v[2 * d]))


@dataclass
class SolveReport:
    '''Outcome of one solve

       Attributes
       ----------
       status : Status
       x_final : np.array
           Final iterate x = y - z
       state_final : AugmentedState or None
       residual_history : list of float
           Norm of the method's own residual per iterate
       merit_history : list of float
       iterations : int
           Newton steps taken (summed over the schedule for
           continuation methods)
       wall_time : float
           Seconds
       backtrack_total : int
       error : float
           2-norm of the NAVE residual at x_final, NaN when it
           cannot be evaluated
       method : string
       trace : list of tuple
           (k, ||H||, Theta, step, r) per accepted iterate
       failure_iteration : int or None
           Iteration at which a breakdown occurred
    '''
    status: Status
    x_final: np.ndarray
    state_final: Optional[AugmentedState]
    residual_history: list
    merit_history: list
    iterations: int
    wall_time: float
    backtrack_total: int = 0
    error: float = float('nan')
    method: str = ''
    trace: list = field(default_factory=list)
    failure_iteration: Optional[int] = None

    @property
    def converged(self):
        return self.status is Status.Converged


def nave_error(p, x):
    '''||F(x) - |x| - b||_2, NaN when x or F(x) is not finite'''
    try:
        return float(np.linalg.norm(nave_residual(p, x)))
    except NaveError:
        return float('nan')
