#!/usr/bin/env python3
"""
Primal-dual path-following interior point baseline for
complementarity problems in (y, z) form
Author: navesolve developers
"""
import logging
import time

import numpy as np

from ..base.core import as_matrix, as_vector
from ..base.errors import EvaluationFailure, InvalidInput
from ..solver.newton import lu_solve_checked
from ..solver.report import AugmentedState, SolveReport, Status, nave_error
from .config import BaselineConfig

logger = logging.getLogger(__name__)


def max_step_to_boundary(v, dv, frac):
    '''Largest step in (0, 1] keeping v + a dv > 0, scaled by frac'''
    neg = dv < 0
    if not neg.any():
        return 1.0
    return min(1.0, frac * float(np.min(-v[neg] / dv[neg])))


def central_mu(y, z, sigma):
    '''Centering target sigma <y, z> / d'''
    return sigma * float(y @ z) / y.size


def _path_following(feasibility, y, z, cfg, converged, objective,
                    callback=None):
    '''Shared engine
       -------------
       Newton steps on {feasibility(y, z) = 0, y z = mu e} with
       mu = sigma <y, z>/d, capped by the fraction-to-boundary
       rule. `feasibility` returns (R, Jy, Jz). A converged iterate
       is returned as is, otherwise the one with the smallest
       `objective`.
    '''
    t0 = time.perf_counter()
    d = y.size
    res_hist, merit_hist, trace = [], [], []
    best = (np.inf, y, z)
    status, failed, k = Status.MaxIterations, None, 0
    for k in range(cfg.max_iter + 1):
        try:
            R, Jy, Jz = feasibility(y, z)
        except (EvaluationFailure, InvalidInput):
            status, failed = Status.DomainBreakdown, k
            break
        comp = y * z
        norm = float(np.sqrt(R @ R + comp @ comp))
        res_hist.append(norm)
        merit_hist.append(0.5 * norm**2)
        obj = objective(y, z)
        if obj < best[0]:
            best = (obj, y, z)
        if callback is not None:
            callback(k, y, z)
        if converged(y, z, R):
            status = Status.Converged
            break
        if k == cfg.max_iter:
            break
        mu = central_mu(y, z, cfg.sigma)
        J = np.block([[Jy, Jz], [np.diag(z), np.diag(y)]])
        rhs = -np.concatenate([R, comp - mu])
        step = lu_solve_checked(J, rhs)
        if step is None:
            status, failed = Status.SingularJacobian, k
            break
        dy, dz = step[:d], step[d:]
        alpha = min(max_step_to_boundary(y, dy, cfg.frac_to_boundary),
                    max_step_to_boundary(z, dz, cfg.frac_to_boundary))
        y, z = y + alpha * dy, z + alpha * dz
        trace.append((k + 1, norm, 0.5 * norm**2, alpha, mu))

    if status is not Status.Converged:
        _, y, z = best
    return status, k, y, z, res_hist, merit_hist, trace, \
        failed, time.perf_counter() - t0


def solve_interior_point(p, cfg=None, callback=None):
    '''Interior point baseline for F(x) - |x| = b
       ------------------------------------------
       Primal-dual path following on
       {y + z - F(y - z) + b = 0, y z = mu e}, y, z > 0.
       Converged once ||F(x) - |x| - b|| <= tol at x = y - z;
       otherwise the best iterate seen is reported.

       Parameters
       ----------
       p : NaveProblem
       cfg : BaselineConfig (optional)
       callback : callable (optional)
           Called as callback(k, y, z) at every iterate

       Returns
       -------
       report : SolveReport
    '''
    cfg = BaselineConfig() if cfg is None else cfg
    y0, z0 = cfg.initial_point(p.dim)
    eye = np.eye(p.dim)

    def feasibility(y, z):
        JF = p.jacobian(y - z)
        return y + z - p.evaluate(y - z) + p.rhs, eye - JF, eye + JF

    def objective(y, z):
        err = nave_error(p, y - z)
        return np.inf if np.isnan(err) else err

    out = _path_following(feasibility, y0, z0, cfg,
                          converged=lambda y, z, R: objective(y, z) <= cfg.tol,
                          objective=objective, callback=callback)
    status, k, y, z, res_hist, merit_hist, trace, failed, wall = out
    x = y - z
    report = SolveReport(status=status, x_final=x,
                         state_final=AugmentedState(y, z,
                                                    central_mu(y, z, 1.0)),
                         residual_history=res_hist or [float('nan')],
                         merit_history=merit_hist, iterations=k,
                         wall_time=wall, error=nave_error(p, x), method='ip',
                         trace=trace, failure_iteration=failed)
    logger.info("ip on %s: %s after %d iterations, error %.3e",
                p.label, status.value, k, report.error)
    return report


def solve_lcp_interior_point(M, q, cfg=None, callback=None):
    '''Interior point method for the LCP z = My + q, y, z >= 0, y z = 0

       Parameters
       ----------
       M : array-like
           Square matrix
       q : array-like
       cfg : BaselineConfig (optional)
       callback : callable (optional)

       Returns
       -------
       report : SolveReport
           `x_final` holds y; `state_final` holds (y, z, <y, z>/d);
           `error` is the 2-norm of (z - My - q, y z)
    '''
    cfg = BaselineConfig() if cfg is None else cfg
    M = as_matrix(M, 'M', square=True)
    d = M.shape[0]
    q = as_vector(q, 'q', d)
    y0, z0 = cfg.initial_point(d)
    eye = np.eye(d)

    def residual_norm(y, z):
        return float(np.linalg.norm(np.concatenate([z - M @ y - q, y * z])))

    out = _path_following(lambda y, z: (z - M @ y - q, -M, eye), y0, z0, cfg,
                          converged=lambda y, z, R: residual_norm(y, z)
                          <= cfg.tol,
                          objective=residual_norm, callback=callback)
    status, k, y, z, res_hist, merit_hist, trace, failed, wall = out
    return SolveReport(status=status, x_final=y,
                       state_final=AugmentedState(y, z, central_mu(y, z, 1.0)),
                       residual_history=res_hist, merit_history=merit_hist,
                       iterations=k, wall_time=wall,
                       error=residual_norm(y, z), method='ip-lcp',
                       trace=trace, failure_iteration=failed)
