#!/usr/bin/env python3
from .matrices import P0Kind, P0Verdict, is_p0_matrix_exact
from .matrices import p0_refute_randomized, lemma3_probe
from .matrices import principal_minor, max_product, constructive_singular_matrix
from .maps import Shift, p0_map_sample_check, shifted_jacobian

__all__ = ['P0Kind',
           'P0Verdict',
           'is_p0_matrix_exact',
           'p0_refute_randomized',
           'lemma3_probe',
           'principal_minor',
           'max_product',
           'constructive_singular_matrix',
           'Shift',
           'p0_map_sample_check',
           'shifted_jacobian']
