#!/usr/bin/env python3
"""
Experiment runner: method comparison tables, ridge tables,
mesh convergence studies, sparse coefficient paths and
timing samples
Author: navesolve developers
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
import statsmodels.api as sm
from joblib import Parallel, delayed
from sklearn.linear_model import lasso_path

from ..base.errors import ConfigError, InvalidSpec, InvalidInput, StudyAborted
from ..baselines.config import BaselineConfig
from ..baselines.interior_point import solve_interior_point
from ..baselines.softmax import solve_softmax
from ..problems.catalog import DEFAULT_SEED, build_problem, parse_problem_id
from ..problems.ode import make_stiff_ivp, make_stiff_bvp, make_arctan_ivp
from ..problems.ode import ERROR_NORMS, ode_error
from ..problems.regression import make_random_ridge, make_sparse_heuristic
from ..solver.config import SolverConfig
from ..solver.newton import newton_armijo_solve
from ..solver.report import Status

logger = logging.getLogger(__name__)

METHODS = ('theta1', 'theta2', 'softmax', 'ip')
SEEDED_FAMILIES = ('tridiag', 'ridge', 'sparse')


@dataclass
class ExperimentSpec:
    '''One row of a method comparison table

       Attributes
       ----------
       problem_id : string
           Catalog id, see `build_problem`
       methods : tuple of string
           Subset of ('theta1', 'theta2', 'softmax', 'ip')
       tol, max_iter, eps : as in SolverConfig
       seed : int or None
           Master seed of the random instance; `None` keeps the
           seed of the problem id (or 42)
       repetitions : int
           Independent runs; the table reports the median
       label : string or None
           Row label, the problem id by default
    '''
    problem_id: str
    methods: tuple = METHODS
    tol: float = 1e-10
    max_iter: int = 2000
    eps: float = 1.0
    seed: Optional[int] = None
    repetitions: int = 1
    label: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.methods, str):
            self.methods = tuple(m.strip() for m in self.methods.split(',')
                                 if m.strip())
        self.methods = tuple(self.methods)
        if self.label is None:
            self.label = self.problem_id

    def validate(self):
        '''Raise ConfigError unless every run of the spec can start'''
        if not self.methods:
            raise ConfigError("%s: methods must be nonempty" % self.label)
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ConfigError("%s: unknown methods %s, choose from %s"
                              % (self.label, sorted(unknown), METHODS))
        if int(self.repetitions) < 1:
            raise ConfigError("%s: repetitions must be >= 1" % self.label)
        self.solver_config('theta1')
        self.baseline_config()
        for pid in self.instance_ids():
            try:
                build_problem(pid)
            except (InvalidSpec, InvalidInput) as err:
                raise ConfigError("%s: cannot build %r: %s"
                                  % (self.label, pid, err))
        return self

    def instance_ids(self):
        '''Problem ids of the repetitions, with per-run seeds

           A single run keeps the master seed; repeated runs of a
           random family draw their seeds from
           SeedSequence(seed).spawn(repetitions).
        '''
        name, params = parse_problem_id(self.problem_id)
        if name not in SEEDED_FAMILIES:
            return [self.problem_id] * int(self.repetitions)
        seed = self.seed if self.seed is not None else \
            int(params.get('seed', DEFAULT_SEED))
        if self.repetitions == 1:
            seeds = [seed]
        else:
            seeds = [int(s.generate_state(1, np.uint64)[0]) for s in
                     np.random.SeedSequence(seed).spawn(self.repetitions)]
        ids = []
        for s in seeds:
            params['seed'] = str(s)
            ids.append(':'.join([name] + ['%s=%s' % kv
                                          for kv in params.items()]))
        return ids

    def solver_config(self, method):
        return SolverConfig(tol=self.tol, max_iter=self.max_iter,
                            epsilon=self.eps, family=method)

    def baseline_config(self):
        return BaselineConfig(tol=self.tol, max_iter=self.max_iter)


@dataclass
class TableRow:
    '''One (label, method) cell of a results table

       Attributes
       ----------
       label, method : string
       error : float
           NaN only when status is not converged
       iterations : int
       time_ms : float
           Wall time in milliseconds
       status : string
           Value of the solver Status
       reports : list of SolveReport
           Raw reports of all repetitions, for audit
    '''
    label: str
    method: str
    error: float
    iterations: int
    time_ms: float
    status: str
    reports: list = field(default_factory=list, compare=False, repr=False)


def run_method(p, method, solver_cfg=None, baseline_cfg=None):
    '''Dispatch one solve by method name'''
    if method in ('theta1', 'theta2'):
        cfg = (solver_cfg or SolverConfig()).replace(family=method)
        return newton_armijo_solve(p, cfg)
    if method == 'softmax':
        return solve_softmax(p, baseline_cfg)
    if method == 'ip':
        return solve_interior_point(p, baseline_cfg)
    raise ConfigError("unknown method %r" % method)


def summarize(label, method, reports):
    '''Median aggregation of repeated runs into a TableRow

       The reported error, iterations and status come from the
       run holding the (lower) median error, so the error is
       always that of an actual report.
    '''
    order = sorted(range(len(reports)),
                   key=lambda i: (np.isnan(reports[i].error),
                                  reports[i].error))
    mid = reports[order[(len(reports) - 1) // 2]]
    error = mid.error
    if mid.status is not Status.Converged and not np.isfinite(error):
        error = float('nan')
    return TableRow(label=label, method=method, error=error,
                    iterations=int(mid.iterations),
                    time_ms=1e3 * float(np.median([r.wall_time
                                                   for r in reports])),
                    status=mid.status.value, reports=list(reports))


def _run_cell(spec, method):
    reports = []
    for pid in spec.instance_ids():
        p = build_problem(pid)
        reports.append(run_method(p, method, spec.solver_config(method),
                                  spec.baseline_config()))
    return summarize(spec.label, method, reports)


def run_methods_table(specs, n_jobs=1, verbose=False):
    '''Method comparison table
       -----------------------
       Every spec is validated before the first solve. Cells are
       independent and may run in parallel.

       Parameters
       ----------
       specs : list of ExperimentSpec
       n_jobs : int
           joblib workers, -1 for all cores (default 1)
       verbose : bool
           If `True` print one line per finished cell

       Returns
       -------
       rows : list of TableRow
           One row per (spec, method), in spec then method order
    '''
    specs = [s.validate() for s in specs]
    cells = [(s, m) for s in specs for m in s.methods]
    if not cells:
        return []
    rows = Parallel(n_jobs=n_jobs)(delayed(_run_cell)(s, m) for s, m in cells)
    if verbose:
        for row in rows:
            print("%-24s %-8s error %.2e  iterations %4d  %s"
                  % (row.label, row.method, row.error, row.iterations,
                     row.status))
    return rows


def default_methods_specs():
    '''The method comparison rows of the tridiagonal, three- and
       four-dimensional examples'''
    ids = ['tridiag:d=%d:mode=random_b' % d for d in (10, 50, 200)]
    ids += ['r3:b%d' % i for i in (1, 2, 3)]
    ids += ['r4:bstar%d' % i for i in (1, 2, 3)]
    return [ExperimentSpec(pid) for pid in ids]


DEFAULT_RIDGE_GRID = [((lam, mu), (m, 10)) for lam, mu in ((0, 100),
                                                           (200, 1000))
                      for m in (3, 5, 10, 20)]


def run_ridge_table(grid=None, seed=DEFAULT_SEED, cfg=None,
                    methods=('theta1', 'theta2'), n_jobs=1, verbose=False):
    '''Asymmetric ridge table
       ----------------------
       Parameters
       ----------
       grid : list of ((lam, mu), (m, d)) (optional)
           Cells, the (0, 100) and (200, 1000) penalties against
           m in (3, 5, 10, 20), d = 10 by default
       seed : int
           Master seed; cell i uses the i-th SeedSequence child
       cfg : SolverConfig (optional)
       methods : tuple
           Smoothing kernels to compare

       Returns
       -------
       rows : list of TableRow
           Labels read '(lam,mu) (m,d)'
    '''
    grid = DEFAULT_RIDGE_GRID if grid is None else list(grid)
    for (lam, mu), (m, d) in grid:
        if lam == mu:
            raise ConfigError("ridge cell (%g,%g) needs lam != mu" % (lam, mu))
        if lam < 0 or mu < 0 or m < 1 or d < 1:
            raise ConfigError("invalid ridge cell (%g,%g) (%d,%d)"
                              % (lam, mu, m, d))
    cfg = SolverConfig() if cfg is None else cfg
    seeds = np.random.SeedSequence(seed).spawn(len(grid))

    def cell(i, method):
        (lam, mu), (m, d) = grid[i]
        cell_seed = int(seeds[i].generate_state(1, np.uint64)[0])
        p = make_random_ridge(m, d, lam, mu, cell_seed)
        report = run_method(p, method, cfg)
        return summarize('(%g,%g) (%d,%d)' % (lam, mu, m, d), method,
                         [report])

    rows = Parallel(n_jobs=n_jobs)(delayed(cell)(i, method)
                                   for i in range(len(grid))
                                   for method in methods)
    if verbose:
        for row in rows:
            print("%-20s %-7s error %.2e  iterations %4d"
                  % (row.label, row.method, row.error, row.iterations))
    return rows


# builder, T, x0 and the error norm of the rate study; the stiff
# boundary layer at t = 0 is unresolved on coarse meshes, so its rate
# is read off the last node
ODE_BUILDERS = {
    'stiff': (make_stiff_ivp, 1.0, -2.0, 'terminal'),
    'bvp': (make_stiff_bvp, 2.0, -1.0, 'max'),
    'arctan': (make_arctan_ivp, 1.0, 1.0, 'max'),
}


@dataclass
class ConvergenceStudy:
    '''Errors of one ODE family over a sequence of meshes'''
    name: str
    h: np.ndarray
    errors: np.ndarray
    slope: float
    intercept: float
    reports: list = field(default_factory=list, repr=False)
    error_norm: str = 'max'

    def to_frame(self):
        return pd.DataFrame({'h': self.h, 'error': self.errors})


def fit_rate(h, errors):
    '''Least-squares slope of log(error) against log(h)'''
    fit = sm.OLS(np.log(errors), sm.add_constant(np.log(h))).fit()
    intercept, slope = fit.params
    return float(slope), float(intercept)


def convergence_study(ode_builder, h_list, method='theta1', T=None, x0=None,
                      cfg=None, error_norm=None, verbose=False):
    '''Mesh convergence study of a discretized ODE
       -------------------------------------------
       Parameters
       ----------
       ode_builder : string or callable
           'stiff', 'bvp', 'arctan' or a callable
           (x0=..., T=..., N=...) -> (disc, problem)
       h_list : sequence of float
           At least three strictly decreasing mesh widths
       method : string
           Solver used for every mesh
       T, x0 : float (optional)
           Defaults per family: stiff (1, -2), bvp (2, -1),
           arctan (1, 1)
       cfg : SolverConfig (optional)
       error_norm : string (optional)
           'max' or 'terminal', see `ode_error`. Defaults per
           family: terminal for stiff, max otherwise and for
           custom builders
       verbose : bool

       Returns
       -------
       study : ConvergenceStudy
           Errors and the fitted slope of log e vs log h
    '''
    name = ode_builder if isinstance(ode_builder, str) else \
        getattr(ode_builder, '__name__', 'ode')
    if isinstance(ode_builder, str):
        if ode_builder not in ODE_BUILDERS:
            raise ConfigError("unknown ODE %r, choose from %s"
                              % (ode_builder, sorted(ODE_BUILDERS)))
        ode_builder, T_def, x0_def, norm_def = ODE_BUILDERS[ode_builder]
        error_norm = norm_def if error_norm is None else error_norm
        T = T_def if T is None else T
        x0 = x0_def if x0 is None else x0
    if T is None or x0 is None:
        raise ConfigError("T and x0 are required for a custom builder")
    error_norm = 'max' if error_norm is None else error_norm
    if error_norm not in ERROR_NORMS:
        raise ConfigError("unknown error norm %r, choose from %s"
                          % (error_norm, ERROR_NORMS))
    h_list = np.asarray(h_list, dtype=np.float64)
    if h_list.size < 3 or np.any(np.diff(h_list) >= 0) or np.any(h_list <= 0):
        raise ConfigError("h_list needs >= 3 strictly decreasing positive "
                          "values")
    errors, reports = [], []
    for h in h_list:
        disc, p = ode_builder(x0=x0, T=T, N=int(round(T / h)))
        report = run_method(p, method, cfg)
        if not report.converged:
            raise StudyAborted("%s: solve at h=%g ended with %s"
                               % (name, h, report.status.value),
                               h=float(h), report=report)
        errors.append(ode_error(disc, report.x_final, error_norm))
        reports.append(report)
        if verbose:
            print("%s h=%-8g error %.3e  iterations %d"
                  % (name, h, errors[-1], report.iterations))
    errors = np.array(errors)
    slope, intercept = fit_rate(h_list, errors)
    return ConvergenceStudy(name, h_list, errors, slope, intercept, reports,
                            error_norm)


def sparse_path(A, b, lambdas, methods=('theta1', 'theta2'), cfg=None,
                with_lasso=True, verbose=False):
    '''Coefficient paths of the sparse heuristic
       -----------------------------------------
       Parameters
       ----------
       A : array-like
           m x d design
       b : array-like
           Target
       lambdas : sequence of float
           Positive penalties
       methods : tuple
           Solvers applied at every lambda
       cfg : SolverConfig (optional)
       with_lasso : bool
           Add the scikit-learn lasso path (alpha = lambda/m) as
           reference under the key 'lasso'

       Returns
       -------
       paths : dict
           method -> DataFrame indexed by lambda with columns
           coef_0 .. coef_{d-1}
    '''
    A = np.asarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    lambdas = np.sort(np.asarray(lambdas, dtype=np.float64))
    if lambdas.size == 0 or np.any(lambdas <= 0):
        raise ConfigError("lambdas must be positive and nonempty")
    m, d = A.shape
    columns = ['coef_%d' % j for j in range(d)]
    paths = {}
    for method in methods:
        coefs = []
        for lam in lambdas:
            report = run_method(make_sparse_heuristic(A, b, lam), method, cfg)
            if not report.converged:
                logger.warning("%s at lambda=%g: %s", method, lam,
                               report.status.value)
            coefs.append(report.x_final)
            if verbose:
                print("%s lambda=%-8g nonzeros %d" % (
                    method, lam, int(np.sum(np.abs(report.x_final) > 1e-8))))
        paths[method] = pd.DataFrame(coefs, index=pd.Index(lambdas,
                                                           name='lambda'),
                                     columns=columns)
    if with_lasso:
        alphas, coefs, _ = lasso_path(A, b, alphas=lambdas[::-1] / m)
        paths['lasso'] = pd.DataFrame(coefs.T, index=pd.Index(alphas * m,
                                                              name='lambda'),
                                      columns=columns).sort_index()
    return paths


def timing_study(problem_ids=('tridiag:d=20:mode=random_b', 'r3'),
                 methods=METHODS, samples=50, seed=DEFAULT_SEED, tol=1e-10,
                 max_iter=2000):
    '''Wall times over random right-hand sides
       ---------------------------------------
       For every problem, `samples` vectors b are drawn uniformly
       from [-10, 10]^d and solved by every method.

       Returns
       -------
       df : DataFrame
           Columns problem, sample, method, time_ms, error,
           iterations, status
    '''
    rng = np.random.default_rng(seed)
    solver_cfg = SolverConfig(tol=tol, max_iter=max_iter)
    baseline_cfg = BaselineConfig(tol=tol, max_iter=max_iter)
    records = []
    for pid in problem_ids:
        base = build_problem(pid)
        for i in range(samples):
            p = base.with_rhs(rng.uniform(-10.0, 10.0, base.dim))
            for method in methods:
                r = run_method(p, method, solver_cfg, baseline_cfg)
                records.append({'problem': pid, 'sample': i, 'method': method,
                                'time_ms': 1e3 * r.wall_time,
                                'error': r.error,
                                'iterations': r.iterations,
                                'status': r.status.value})
    return pd.DataFrame.from_records(records)
