#!/usr/bin/env python3
from .kernels import SmoothingFamily, make_theta1, make_theta2
from .kernels import make_logexp_counterexample, get_family, generic_family
from .kernels import gr_component, gr_partials
from .lojasiewicz import LojaReport, LojaVerdict, loja_ratio, loja_verdict
from .lojasiewicz import check_condition_ii, check_legacy_assumption
from .lojasiewicz import condition_iii_ladder

__all__ = ['SmoothingFamily',
           'make_theta1',
           'make_theta2',
           'make_logexp_counterexample',
           'get_family',
           'generic_family',
           'gr_component',
           'gr_partials',
           'LojaReport',
           'LojaVerdict',
           'loja_ratio',
           'loja_verdict',
           'check_condition_ii',
           'check_legacy_assumption',
           'condition_iii_ladder']
