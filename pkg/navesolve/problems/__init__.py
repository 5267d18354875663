#!/usr/bin/env python3
from .lcp import LcpConversion, make_affine, ave_to_lcp, lcp_to_nave
from .catalog import B_VECTORS, DEFAULT_SEED, tridiag_matrix, make_tridiag
from .catalog import make_example_r3, make_example_r4
from .catalog import parse_problem_id, build_problem
from .regression import RidgeSpec, make_ridge, make_random_ridge
from .regression import ridge_stationarity, p0_preconditions
from .regression import make_sparse_heuristic, make_random_sparse
from .regression import random_sparse_data
from .ode import OdeDiscretization, make_stiff_ivp, make_stiff_bvp
from .ode import make_arctan_ivp, stiff_exact, arctan_exact, ode_error

__all__ = ['LcpConversion',
           'make_affine',
           'ave_to_lcp',
           'lcp_to_nave',
           'B_VECTORS',
           'DEFAULT_SEED',
           'tridiag_matrix',
           'make_tridiag',
           'make_example_r3',
           'make_example_r4',
           'parse_problem_id',
           'build_problem',
           'RidgeSpec',
           'make_ridge',
           'make_random_ridge',
           'ridge_stationarity',
           'p0_preconditions',
           'make_sparse_heuristic',
           'make_random_sparse',
           'random_sparse_data',
           'OdeDiscretization',
           'make_stiff_ivp',
           'make_stiff_bvp',
           'make_arctan_ivp',
           'stiff_exact',
           'arctan_exact',
           'ode_error']
