#!/usr/bin/env python3
from .base import NaveProblem, split, merge, nave_residual, fd_jacobian
from .base import read_matrix, write_matrix
from .smoothing import make_theta1, make_theta2, get_family, loja_verdict
from .pstructure import is_p0_matrix_exact, p0_refute_randomized
from .solver import SolverConfig, SolveReport, Status, newton_armijo_solve
from .baselines import solve_softmax, solve_interior_point
from .problems import build_problem, ave_to_lcp, lcp_to_nave
from .harness import ExperimentSpec, run_methods_table, convergence_study

__version__ = '0.1.0'

__all__ = ['base',
           'smoothing',
           'pstructure',
           'solver',
           'baselines',
           'problems',
           'harness',
           # submodule methods
           'NaveProblem',
           'split',
           'merge',
           'nave_residual',
           'fd_jacobian',
           'read_matrix',
           'write_matrix',
           'make_theta1',
           'make_theta2',
           'get_family',
           'loja_verdict',
           'is_p0_matrix_exact',
           'p0_refute_randomized',
           'SolverConfig',
           'SolveReport',
           'Status',
           'newton_armijo_solve',
           'solve_softmax',
           'solve_interior_point',
           'build_problem',
           'ave_to_lcp',
           'lcp_to_nave',
           'ExperimentSpec',
           'run_methods_table',
           'convergence_study']
