#!/usr/bin/env python3
from .config import BaselineConfig
from .softmax import softmax_min, solve_softmax
from .interior_point import solve_interior_point, solve_lcp_interior_point
from .interior_point import central_mu, max_step_to_boundary

__all__ = ['BaselineConfig',
           'softmax_min',
           'solve_softmax',
           'solve_interior_point',
           'solve_lcp_interior_point',
           'central_mu',
           'max_step_to_boundary']
