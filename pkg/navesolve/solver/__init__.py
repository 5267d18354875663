#!/usr/bin/env python3
from .config import SolverConfig
from .report import AugmentedState, SolveReport, Status, nave_error
from .augmented import assemble_residual, assemble_jacobian
from .augmented import merit, merit_gradient
from .newton import newton_armijo_solve, newton_direction
from .newton import levenberg_marquardt_direction, complementary_finish
from .newton import keeps_smoothing_floor

__all__ = ['SolverConfig',
           'AugmentedState',
           'SolveReport',
           'Status',
           'nave_error',
           'assemble_residual',
           'assemble_jacobian',
           'merit',
           'merit_gradient',
           'newton_armijo_solve',
           'newton_direction',
           'levenberg_marquardt_direction',
           'complementary_finish',
           'keeps_smoothing_floor']
