#!/usr/bin/env python3
from .experiments import ExperimentSpec, TableRow, ConvergenceStudy
from .experiments import run_method, run_methods_table, run_ridge_table
from .experiments import convergence_study, fit_rate, sparse_path
from .experiments import timing_study, default_methods_specs
from .emit import emit, ingest, rows_to_frame, rows_to_markdown
from .specfile import parse_spec_file, parse_ridge_grid

__all__ = ['ExperimentSpec',
           'TableRow',
           'ConvergenceStudy',
           'run_method',
           'run_methods_table',
           'run_ridge_table',
           'convergence_study',
           'fit_rate',
           'sparse_path',
           'timing_study',
           'default_methods_specs',
           'emit',
           'ingest',
           'rows_to_frame',
           'rows_to_markdown',
           'parse_spec_file',
           'parse_ridge_grid']
