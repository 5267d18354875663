#!/usr/bin/env python3
"""
Soft-max baseline: min(y, z) = 0 replaced by its
log-sum-exp smoothing, driven to r -> 0 by continuation
Author: navesolve developers
"""
import logging
import time

import numpy as np
from scipy.special import expit

from ..base.errors import EvaluationFailure, InvalidInput
from ..solver.newton import newton_direction
from ..solver.report import AugmentedState, SolveReport, Status, nave_error
from .config import BaselineConfig

logger = logging.getLogger(__name__)


def softmax_min(a, b, r):
    '''Smoothed minimum -r log(exp(-a/r) + exp(-b/r))
       ----------------------------------------------
       Evaluated as min(a, b) - r log(1 + exp(-|a - b|/r)), which
       never overflows. It stays within r log 2 of min(a, b).

       Parameters
       ----------
       a, b : float or np.array
       r : float
           Positive smoothing parameter

       Returns
       -------
       m : float or np.array
    '''
    if not r > 0:
        raise InvalidInput("r must be positive, got %r" % r)
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    out = np.minimum(a, b) - r * np.log1p(np.exp(-np.abs(a - b) / r))
    return out.item() if out.ndim == 0 else out


def _system(p, y, z, r):
    return np.concatenate([y + z - p.evaluate(y - z) + p.rhs,
                           np.atleast_1d(softmax_min(y, z, r))])


def _jacobian(p, y, z, r):
    d = y.size
    JF = p.jacobian(y - z)
    eye = np.eye(d)
    J = np.zeros((2 * d, 2 * d))
    J[:d, :d] = eye - JF
    J[:d, d:] = eye + JF
    rows = np.arange(d, 2 * d)
    J[rows, rows - d] = expit((z - y) / r)
    J[rows, rows] = expit((y - z) / r)
    return J


def solve_softmax(p, cfg=None):
    '''Soft-max continuation baseline
       ------------------------------
       For r on the schedule of `cfg`, Newton steps with Armijo
       backtracking are applied to
       {y + z - F(y - z) + b = 0, softmax_min(y_i, z_i, r) = 0}
       warm-started from the previous level, until the system
       residual drops below max(tol, r). The solve stops as soon
       as ||F(x) - |x| - b|| <= tol.

       Parameters
       ----------
       p : NaveProblem
       cfg : BaselineConfig (optional)

       Returns
       -------
       report : SolveReport
           `iterations` counts Newton steps over all levels
    '''
    cfg = BaselineConfig() if cfg is None else cfg
    t0 = time.perf_counter()
    d = p.dim
    y, z = cfg.initial_point(d)
    levels = cfg.r_schedule()
    res_hist, merit_hist, trace = [], [], []
    k, backtracks = 0, 0

    def finish(status, r, failed=None):
        x = y - z
        err = nave_error(p, x)
        report = SolveReport(status=status, x_final=x,
                             state_final=AugmentedState(y, z, r),
                             residual_history=res_hist or [float('nan')],
                             merit_history=merit_hist, iterations=k,
                             wall_time=time.perf_counter() - t0,
                             backtrack_total=backtracks, error=err,
                             method='softmax', trace=trace,
                             failure_iteration=failed)
        logger.info("softmax on %s: %s after %d iterations, error %.3e",
                    p.label, status.value, k, err)
        return report

    for level, r in enumerate(levels):
        last = level == len(levels) - 1
        try:
            Phi = _system(p, y, z, r)
        except (EvaluationFailure, InvalidInput):
            return finish(Status.DomainBreakdown, r, k)
        norm = float(np.linalg.norm(Phi))
        res_hist.append(norm)
        merit_hist.append(0.5 * norm**2)
        while k < cfg.max_iter:
            if nave_error(p, y - z) <= cfg.tol:
                return finish(Status.Converged, r)
            if norm <= max(cfg.tol, r) and not last:
                break
            try:
                J = _jacobian(p, y, z, r)
            except (EvaluationFailure, InvalidInput):
                return finish(Status.DomainBreakdown, r, k)
            direction, slope = newton_direction(J, Phi)
            if direction is None:
                return finish(Status.SingularJacobian, r, k)
            step, accepted = 1.0, False
            theta = 0.5 * norm**2
            for _ in range(cfg.max_backtracks + 1):
                y_t = y + step * direction[:d]
                z_t = z + step * direction[d:]
                try:
                    Phi_t = _system(p, y_t, z_t, r)
                    if 0.5 * Phi_t @ Phi_t - theta <= cfg.tau * step * slope:
                        accepted = True
                        break
                except (EvaluationFailure, InvalidInput):
                    pass
                step *= cfg.rho
                backtracks += 1
            if not accepted:
                return finish(Status.LineSearchStalled, r, k)
            y, z, Phi = y_t, z_t, Phi_t
            norm = float(np.linalg.norm(Phi))
            k += 1
            res_hist.append(norm)
            merit_hist.append(0.5 * norm**2)
            trace.append((k, norm, 0.5 * norm**2, step, r))
        if k >= cfg.max_iter:
            break
    status = Status.Converged if nave_error(p, y - z) <= cfg.tol \
        else Status.MaxIterations
    return finish(status, levels[-1])
