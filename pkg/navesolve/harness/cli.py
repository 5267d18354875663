#!/usr/bin/env python3
"""
Command line interface

    navesolve solve --problem r3:b1 --method smooth --theta 1
    navesolve table methods --spec FILE --out DIR --format md
    navesolve table ridge --grid FILE
    navesolve ode stiff --rates --h-list 0.1 0.05 0.025 0.0125
    navesolve check p0 --matrix FILE --strict
    navesolve check loja --family theta2 --grid-max 1e12 --out ratios.csv
    navesolve sparse --lambdas 0.01 0.1 1 --out DIR
    navesolve timing --samples 50 --out DIR

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
Author: navesolve developers
"""
import argparse
import logging
import os
import sys

import numpy as np
import pandas as pd

from ..base.errors import NaveError, ConfigError, InvalidSpec, InvalidInput
from ..base.utils import read_matrix
from ..baselines.config import BaselineConfig
from ..baselines.interior_point import solve_interior_point
from ..baselines.softmax import solve_softmax
from ..problems.catalog import (DEFAULT_SEED, ODE_SOLVE_DEFAULTS,
                                build_problem, parse_problem_id)
from ..problems.ode import ode_error
from ..problems.regression import random_sparse_data
from ..pstructure.matrices import (MAX_EXACT_DIM, is_p0_matrix_exact,
                                   p0_refute_randomized)
from ..smoothing.kernels import get_family
from ..smoothing.lojasiewicz import default_grid, loja_verdict
from ..solver.config import SolverConfig
from ..solver.newton import newton_armijo_solve
from .emit import emit, rows_to_frame, rows_to_markdown
from .experiments import (ODE_BUILDERS, convergence_study,
                          default_methods_specs, run_method,
                          run_methods_table, run_ridge_table, sparse_path,
                          timing_study)
from .specfile import parse_spec_file, parse_ridge_grid

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC = 0, 2, 3


def _with_seed(problem_id, seed):
    if seed is None:
        return problem_id
    name, params = parse_problem_id(problem_id)
    if name not in ('tridiag', 'ridge', 'sparse'):
        return problem_id
    params['seed'] = str(seed)
    return ':'.join([name] + ['%s=%s' % kv for kv in params.items()])


def _out_path(out, name, fmt):
    if out is None:
        return None
    os.makedirs(out, exist_ok=True)
    return os.path.join(out, '%s.%s' % (name, fmt))


def cmd_solve(args):
    p = build_problem(_with_seed(args.problem, args.seed))
    if args.method == 'smooth':
        cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter,
                           epsilon=args.eps, family='theta%d' % args.theta)
        report = newton_armijo_solve(p, cfg)
    else:
        cfg = BaselineConfig(tol=args.tol, max_iter=args.max_iter)
        solver = solve_softmax if args.method == 'softmax' else \
            solve_interior_point
        report = solver(p, cfg)
    if args.trace:
        with open(args.trace, 'w') as fh:
            for k, norm, theta, step, r in report.trace:
                fh.write("%d, %.6e, %.6e, %.6g, %.6e\n"
                         % (k, norm, theta, step, r))
    print("%s  %s  status=%s  iterations=%d  error=%.3e  time=%.2f ms"
          % (p.label, report.method, report.status.value, report.iterations,
             report.error, 1e3 * report.wall_time))
    print("x = %s" % np.array2string(report.x_final, precision=8))
    return EXIT_OK if report.converged else EXIT_NUMERIC


def cmd_table_methods(args):
    specs = parse_spec_file(args.spec) if args.spec else \
        default_methods_specs()
    rows = run_methods_table(specs, n_jobs=args.n_jobs, verbose=args.verbose > 0)
    path = _out_path(args.out, 'methods', args.format)
    if path:
        emit(rows, args.format, path)
    else:
        emit_stdout(rows, args.format)
    return EXIT_OK


def cmd_table_ridge(args):
    grid = parse_ridge_grid(args.grid) if args.grid else None
    rows = run_ridge_table(grid, seed=args.seed, n_jobs=args.n_jobs,
                           verbose=args.verbose > 0)
    path = _out_path(args.out, 'ridge', args.format)
    if path:
        emit(rows, args.format, path)
    else:
        emit_stdout(rows, args.format)
    return EXIT_OK


def emit_stdout(rows, fmt):
    if fmt == 'md':
        print(rows_to_markdown(rows))
    else:
        print(rows_to_frame(rows).to_csv(index=False, na_rep='NaN'), end='')


def cmd_ode(args):
    method = 'theta%d' % args.theta
    if args.rates:
        study = convergence_study(args.ode, args.h_list, method=method,
                                  T=args.T, x0=args.x0,
                                  verbose=args.verbose > 0)
        print(study.to_frame().to_string(index=False))
        print("slope = %.3f (%s error)" % (study.slope, study.error_norm))
        path = _out_path(args.out, 'convergence_%s' % args.ode, 'csv')
        if path:
            emit(study, 'csv', path)
        return EXIT_OK
    builder = ODE_BUILDERS[args.ode][0]
    T, x0 = ODE_SOLVE_DEFAULTS['ode-' + args.ode]
    T = T if args.T is None else args.T
    x0 = x0 if args.x0 is None else args.x0
    disc, p = builder(x0=x0, T=T, N=int(round(T / args.h_list[0])))
    report = run_method(p, method)
    err = ode_error(disc, report.x_final)
    print("%s status=%s iterations=%d max-norm error=%.3e"
          % (p.label, report.status.value, report.iterations, err))
    path = _out_path(args.out, 'solution_%s' % args.ode, 'csv')
    if path:
        emit(pd.DataFrame({'x': report.x_final,
                           'exact': disc.exact_on_mesh()},
                          index=pd.Index(disc.t, name='t')), 'csv', path)
    return EXIT_OK if report.converged else EXIT_NUMERIC


def cmd_check_p0(args):
    A = read_matrix(args.matrix)
    if A.shape[0] <= MAX_EXACT_DIM and args.trials is None:
        verdict = is_p0_matrix_exact(A, strict=args.strict)
    else:
        verdict = p0_refute_randomized(A, trials=args.trials or 1000,
                                       seed=args.seed)
    print("verdict: %s" % verdict.kind.value)
    print("minors checked: %d" % verdict.minors_checked)
    if verdict.certificate is not None:
        print("certificate: %s" % (verdict.certificate,))
    return EXIT_OK


def cmd_check_loja(args):
    fam = get_family(args.family)
    report = loja_verdict(fam, default_grid(args.grid_max))
    df = pd.DataFrame(report.ratio_samples, columns=['x', 'ratio'])
    if args.out:
        emit(df.set_index('x'), 'csv', args.out)
    else:
        print(df.to_csv(index=False), end='')
    print("verdict: %s liminf=%.4g witness=%s"
          % (report.verdict.value, report.liminf_estimate,
             report.condition_ii_witness))
    return EXIT_OK


def cmd_sparse(args):
    A, b = random_sparse_data(args.m, args.d, args.seed)
    paths = sparse_path(A, b, args.lambdas, verbose=args.verbose > 0)
    for method, df in paths.items():
        path = _out_path(args.out, 'sparse_%s' % method, 'csv')
        if path:
            emit(df, 'csv', path)
        else:
            print("# %s" % method)
            print(df.to_csv(), end='')
    return EXIT_OK


def cmd_timing(args):
    df = timing_study(samples=args.samples, seed=args.seed)
    path = _out_path(args.out, 'timing', 'csv')
    if path:
        emit(df, 'csv', path)
    print(df.groupby(['problem', 'method'])['time_ms'].median().to_string())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='navesolve',
        description='Smoothing Newton solvers for nonlinear absolute '
                    'value equations F(x) - |x| = b')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG logging')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('solve', help='solve one catalog problem')
    p.add_argument('--problem', required=True, help='problem id')
    p.add_argument('--method', choices=('smooth', 'softmax', 'ip'),
                   default='smooth')
    p.add_argument('--theta', type=int, choices=(1, 2), default=1)
    p.add_argument('--tol', type=float, default=1e-10)
    p.add_argument('--max-iter', type=int, default=2000)
    p.add_argument('--eps', type=float, default=1.0)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--trace', default=None,
                   help='file receiving "k, ||H||, Theta, step, r" lines')
    p.set_defaults(func=cmd_solve)

    table = sub.add_parser('table', help='reproduce result tables')
    tsub = table.add_subparsers(dest='table', required=True)
    t = tsub.add_parser('methods')
    t.add_argument('--spec', default=None)
    t.add_argument('--out', default=None, help='output directory')
    t.add_argument('--format', choices=('csv', 'md'), default='csv')
    t.add_argument('--n-jobs', type=int, default=1)
    t.set_defaults(func=cmd_table_methods)
    t = tsub.add_parser('ridge')
    t.add_argument('--grid', default=None)
    t.add_argument('--seed', type=int, default=DEFAULT_SEED)
    t.add_argument('--out', default=None)
    t.add_argument('--format', choices=('csv', 'md'), default='csv')
    t.add_argument('--n-jobs', type=int, default=1)
    t.set_defaults(func=cmd_table_ridge)

    o = sub.add_parser('ode', help='ODE solves and convergence rates')
    o.add_argument('ode', choices=('stiff', 'bvp', 'arctan'))
    o.add_argument('--rates', action='store_true')
    o.add_argument('--h-list', type=float, nargs='+',
                   default=[0.1, 0.05, 0.025, 0.0125])
    o.add_argument('--T', type=float, default=None)
    o.add_argument('--x0', type=float, default=None)
    o.add_argument('--theta', type=int, choices=(1, 2), default=1)
    o.add_argument('--out', default=None)
    o.set_defaults(func=cmd_ode)

    check = sub.add_parser('check', help='structural checks')
    csub = check.add_subparsers(dest='check', required=True)
    c = csub.add_parser('p0')
    c.add_argument('--matrix', required=True)
    c.add_argument('--strict', action='store_true')
    c.add_argument('--trials', type=int, default=None)
    c.add_argument('--seed', type=int, default=DEFAULT_SEED)
    c.set_defaults(func=cmd_check_p0)
    c = csub.add_parser('loja')
    c.add_argument('--family', required=True,
                   choices=('theta1', 'theta2', 'logexp-counterexample'))
    c.add_argument('--grid-max', type=float, default=1e12)
    c.add_argument('--out', default=None, help='csv file for (x, ratio)')
    c.set_defaults(func=cmd_check_loja)

    s = sub.add_parser('sparse', help='sparse heuristic coefficient paths')
    s.add_argument('--m', type=int, default=20)
    s.add_argument('--d', type=int, default=40)
    s.add_argument('--seed', type=int, default=DEFAULT_SEED)
    s.add_argument('--lambdas', type=float, nargs='+',
                   default=list(np.geomspace(1e-3, 1.0, 10)))
    s.add_argument('--out', default=None)
    s.set_defaults(func=cmd_sparse)

    tm = sub.add_parser('timing', help='wall times over random b')
    tm.add_argument('--samples', type=int, default=50)
    tm.add_argument('--seed', type=int, default=DEFAULT_SEED)
    tm.add_argument('--out', default=None)
    tm.set_defaults(func=cmd_timing)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    try:
        return args.func(args)
    except (ConfigError, InvalidSpec, InvalidInput) as err:
        logger.error("%s", err)
        print("error: %s" % err, file=sys.stderr)
        return EXIT_CONFIG
    except NaveError as err:
        logger.error("%s", err)
        print("numerical failure: %s" % err, file=sys.stderr)
        return EXIT_NUMERIC
