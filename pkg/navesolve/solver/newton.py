#!/usr/bin/env python3
"""
Smoothing Newton method with Armijo line search on the
merit function Theta = 1/2 ||H||^2
Author: navesolve developers
"""
import logging
import time
import warnings

import numpy as np
import scipy.linalg as la

from ..base.errors import (DomainError, EvaluationFailure,
                           DegenerateDerivative)
from .augmented import assemble_residual, assemble_jacobian
from .config import SolverConfig
from .report import AugmentedState, SolveReport, Status, nave_error

logger = logging.getLogger(__name__)

PIVOT_RTOL = 1e-14
REGULARIZATION = 1e-8
# largest factor by which r may shrink in one step while H_1, H_2 are large
SMOOTHING_FLOOR = 0.5
# Levenberg-Marquardt fallback: mu0 * ||H||, grown by LM_GROWTH
LM_MU0 = 1e-6
LM_GROWTH = 10.0
LM_TRIES = 10


def lu_solve_checked(J, rhs):
    scale = max(1.0, float(np.abs(J).max()))
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', la.LinAlgWarning)
        lu, piv = la.lu_factor(J, check_finite=False)
    if np.abs(np.diag(lu)).min() < PIVOT_RTOL * scale:
        return None
    d = la.lu_solve((lu, piv), rhs, check_finite=False)
    return d if np.all(np.isfinite(d)) else None


def newton_direction(J, H, grad=None):
    '''Solve J d = -H by dense LU
       --------------------------
       When a pivot falls below 1e-14 * max(1, max|J|), or the
       direction is not a descent direction for 1/2 ||H||^2,
       the system is retried once with J + mu I,
       mu = 1e-8 ||H||.

       Parameters
       ----------
       J : np.array
           Square Jacobian
       H : np.array
           Residual
       grad : np.array (optional)
           Merit gradient J^T H, computed when omitted

       Returns
       -------
       (d, slope) : tuple
           Direction and grad^T d, or (None, None) when both
           attempts fail
    '''
    if grad is None:
        grad = J.T @ H
    d = lu_solve_checked(J, -H)
    if d is not None and grad @ d < 0:
        return d, float(grad @ d)
    mu = REGULARIZATION * float(np.linalg.norm(H))
    logger.warning("Newton system singular or not descending, "
                   "retrying with mu=%.2e", mu)
    d = lu_solve_checked(J + mu * np.eye(J.shape[0]), -H)
    if d is not None and grad @ d < 0:
        return d, float(grad @ d)
    return None, None


def levenberg_marquardt_direction(J, grad, mu):
    '''Solve (J^T J + mu I) d = -grad

       Returns
       -------
       (d, slope) : tuple
           (None, None) unless d is a descent direction
    '''
    M = J.T @ J + mu * np.eye(J.shape[1])
    try:
        d = la.cho_solve(la.cho_factor(M, check_finite=False), -grad,
                         check_finite=False)
    except la.LinAlgError:
        return None, None
    if not np.all(np.isfinite(d)) or not grad @ d < 0:
        return None, None
    return d, float(grad @ d)


def keeps_smoothing_floor(r, trial, H_new):
    '''Acceptance guard on the smoothing parameter
       -------------------------------------------
       A trial point must keep r_new >= min(c r, ||(H_1, H_2)||^2)
       with c = SMOOTHING_FLOOR and (H_1, H_2) the equation and
       smoothing blocks of the new residual. r may therefore fall
       by at most a factor c per step until those blocks are small.
    '''
    rest = H_new[:2 * trial.dim]
    return trial.r >= min(SMOOTHING_FLOOR * r, float(rest @ rest))


def armijo_search(p, cfg, X, theta, direction, slope):
    '''Backtracking line search on Theta
       ---------------------------------
       Halves the step t = rho^j from 1 until r + t d_r > 0,
       Theta(X + t d) - Theta(X) <= tau t grad Theta^T d and the
       smoothing floor of `keeps_smoothing_floor` hold.

       Returns
       -------
       (trial, H, theta, step, backtracks) : tuple
           `trial` is None when no step was accepted
    '''
    d = X.dim
    v = X.to_vector()
    step = 1.0
    for j in range(cfg.max_backtracks + 1):
        trial = AugmentedState.from_vector(v + step * direction, d)
        if trial.r > 0:
            try:
                H_new = assemble_residual(p, cfg, trial)
                theta_new = 0.5 * float(H_new @ H_new)
                if (theta_new - theta <= cfg.tau * step * slope
                        and keeps_smoothing_floor(X.r, trial, H_new)):
                    return trial, H_new, theta_new, step, j
            except (DomainError, EvaluationFailure):
                pass
        step *= cfg.rho
    return None, None, None, None, cfg.max_backtracks + 1


def complementary_finish(p, cfg, X):
    '''Snap an iterate whose x already solves the NAVE onto
       y = x+, z = x- with r far below tol. Returns the state
       and its residual, or (None, None).
    '''
    x = X.x
    if not nave_error(p, x) <= cfg.tol:
        return None, None
    r = 1e-2 * cfg.tol / (cfg.epsilon + np.sqrt(X.dim) + 1.0)
    snapped = AugmentedState(np.maximum(x, 0.0), np.maximum(-x, 0.0), r)
    try:
        H = assemble_residual(p, cfg, snapped)
    except (DomainError, EvaluationFailure, DegenerateDerivative):
        return None, None
    if not np.linalg.norm(H) <= cfg.tol:
        return None, None
    return snapped, H


def newton_armijo_solve(p, cfg=None, verbose=False):
    '''Solve F(x) - |x| = b by the smoothing Newton method
       ---------------------------------------------------
       Works on X = (y, z, r) with x = y - z, starting from a
       positive (y0, z0) and r0 = <y0, z0>/d. Each step solves
       J(X) d = -H(X) and backtracks the step t = rho^j until
       Theta(X + t d) - Theta(X) <= tau t grad Theta^T d with
       r + t d_r > 0 and r above the smoothing floor.

       When the Newton system is singular or its line search
       fails, Levenberg-Marquardt directions with a growing mu
       are tried before giving up.

       The solve stops as converged once ||H|| <= tol and the
       NAVE error of x is below tol as well. An iterate whose x
       already solves the NAVE to tol while ||H|| is still larger
       is snapped onto the complementary split of x and reported
       as converged when the snapped ||H|| is below tol. A
       breakdown after ||H|| <= tol was reached is reported as
       converged.

       Parameters
       ----------
       p : NaveProblem
       cfg : SolverConfig (optional)
       verbose : bool
           If `True` print one line per iteration

       Returns
       -------
       report : SolveReport
    '''
    cfg = SolverConfig() if cfg is None else cfg
    t0 = time.perf_counter()
    d = p.dim
    y0, z0 = cfg.initial_point(d)
    X = AugmentedState(y0, z0, float(y0 @ z0) / d)
    method = 'smooth-%s' % cfg.family.label

    def finish(status, k, H_hist, M_hist, backtracks, trace, failed=None):
        x = X.x
        report = SolveReport(status=status, x_final=x, state_final=X,
                             residual_history=H_hist, merit_history=M_hist,
                             iterations=k, wall_time=time.perf_counter() - t0,
                             backtrack_total=backtracks,
                             error=nave_error(p, x), method=method,
                             trace=trace, failure_iteration=failed)
        logger.info("%s on %s: %s after %d iterations, error %.3e",
                    method, p.label, status.value, k, report.error)
        return report

    try:
        H = assemble_residual(p, cfg, X)
    except (DomainError, EvaluationFailure) as err:
        logger.warning("initial point rejected: %s", err)
        return finish(Status.DomainBreakdown, 0, [float('nan')], [], 0, [], 0)
    normH = float(np.linalg.norm(H))
    theta = 0.5 * normH**2
    H_hist, M_hist, trace = [normH], [theta], []
    backtracks = 0

    def stopped(k, status):
        if normH <= cfg.tol:
            logger.warning("iteration %d: %s below ||H|| <= tol, NAVE "
                           "error %.3e", k, status.value, nave_error(p, X.x))
            return finish(Status.Converged, k, H_hist, M_hist,
                          backtracks, trace)
        if status is Status.MaxIterations:
            return finish(status, k, H_hist, M_hist, backtracks, trace)
        logger.warning("iteration %d: %s", k, status.value)
        return finish(status, k, H_hist, M_hist, backtracks, trace, k)

    def snap(k):
        # the snapped state enters the histories but is not a Newton step
        nonlocal X
        snapped, H_s = complementary_finish(p, cfg, X)
        if snapped is None:
            return None
        X = snapped
        norm_s = float(np.linalg.norm(H_s))
        H_hist.append(norm_s)
        M_hist.append(0.5 * norm_s**2)
        logger.debug("iteration %d: x solves the NAVE, snapped", k)
        return finish(Status.Converged, k, H_hist, M_hist, backtracks, trace)

    for k in range(cfg.max_iter):
        if nave_error(p, X.x) <= cfg.tol:
            if normH <= cfg.tol:
                return finish(Status.Converged, k, H_hist, M_hist,
                              backtracks, trace)
            report = snap(k)
            if report is not None:
                return report
        try:
            J = assemble_jacobian(p, cfg, X)
        except DegenerateDerivative as err:
            logger.warning("iteration %d: %s", k, err)
            return stopped(k, Status.SingularJacobian)
        except (DomainError, EvaluationFailure) as err:
            logger.warning("iteration %d: %s", k, err)
            return finish(Status.DomainBreakdown, k, H_hist, M_hist,
                          backtracks, trace, k)

        grad = J.T @ H
        direction, slope = newton_direction(J, H, grad)
        failure = Status.SingularJacobian
        trial = None
        if direction is not None:
            failure = Status.LineSearchStalled
            trial, H_new, theta_new, step, j = armijo_search(
                p, cfg, X, theta, direction, slope)
            backtracks += j
        mu = LM_MU0 * max(1.0, normH)
        for _ in range(LM_TRIES):
            if trial is not None:
                break
            direction, slope = levenberg_marquardt_direction(J, grad, mu)
            mu *= LM_GROWTH
            if direction is None:
                continue
            trial, H_new, theta_new, step, j = armijo_search(
                p, cfg, X, theta, direction, slope)
            backtracks += j
        if trial is None:
            return stopped(k, failure)

        X, H, theta = trial, H_new, theta_new
        normH = float(np.linalg.norm(H))
        H_hist.append(normH)
        M_hist.append(theta)
        trace.append((k + 1, normH, theta, step, X.r))
        logger.debug("k=%d ||H||=%.3e Theta=%.3e step=%.3g r=%.3e",
                     k + 1, normH, theta, step, X.r)
        if verbose:
            print("%4d  ||H|| = %.3e  step = %.3g  r = %.3e"
                  % (k + 1, normH, step, X.r))

    if normH > cfg.tol:
        report = snap(cfg.max_iter)
        if report is not None:
            return report
    return stopped(cfg.max_iter, Status.MaxIterations)
