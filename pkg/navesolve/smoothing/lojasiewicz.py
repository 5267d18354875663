#!/usr/bin/env python3
"""
Numerical checks of the Lojasiewicz inequality at infinity
for smoothing kernels and its equivalent growth conditions
Author: navesolve developers
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Optional

import numpy as np
import statsmodels.api as sm

from ..base.errors import DomainError, InvalidInput

logger = logging.getLogger(__name__)

LIMINF_CUT = 1e-3
DEFAULT_M_LADDER = (2, 10, 100)
DEFAULT_N_LIST = tuple(2**k for k in range(1, 11))
DEFAULT_R_LIST = (1, 10, 100)


class LojaVerdict(Enum):
    SatisfiedI = 'SatisfiedI'
    SatisfiedII = 'SatisfiedII'
    FailsBoth = 'FailsBoth'
    Inconclusive = 'Inconclusive'


@dataclass
class LojaReport:
    '''Outcome of `loja_verdict`

       Attributes
       ----------
       family_label : string
       ratio_samples : list of (x, ratio) tuples
       liminf_estimate : float
           Minimum ratio over the last half of the grid
       condition_ii_witness : tuple or None
           First (m, n, R) passing `check_condition_ii`
       verdict : LojaVerdict
       extrapolated_limit : float
           Tail trend of the ratio extrapolated to x = infinity
       ladder : dict
           m -> (n, R) or None, see `condition_iii_ladder`
    '''
    family_label: str
    ratio_samples: list
    liminf_estimate: float
    condition_ii_witness: Optional[tuple]
    verdict: LojaVerdict
    extrapolated_limit: float = float('nan')
    ladder: dict = field(default_factory=dict)


def default_grid(x_max=1e12, num=200):
    return np.geomspace(1.0, x_max, num)


def default_candidates():
    return list(product(DEFAULT_M_LADDER, DEFAULT_N_LIST, DEFAULT_R_LIST))


def loja_ratio(fam, x):
    '''Lojasiewicz ratio x |psi'(x)| / psi(x)
       ---------------------------------------
       Parameters
       ----------
       fam : SmoothingFamily
       x : float
           Positive abscissa

       Returns
       -------
       ratio : float
    '''
    x = float(x)
    if not x > 0:
        raise DomainError("the ratio is evaluated for x > 0, got %r" % x)
    if fam.dlog_psi is not None:
        return x * abs(float(fam.dlog_psi(x)))
    psi = float(fam.psi(x))
    if psi == 0:
        raise DomainError("%s: psi(%g) = 0" % (fam.label, x))
    return x * abs(float(fam.psi_prime(x))) / psi


def _log_psi(fam, x):
    if fam.log_psi is not None:
        return np.asarray(fam.log_psi(x), dtype=np.float64)
    with np.errstate(divide='ignore'):
        return np.log(np.asarray(fam.psi(x), dtype=np.float64))


def check_condition_ii(fam, m, n, R, grid):
    '''Check psi(x)/m >= psi(nx) on a grid beyond R
       --------------------------------------------
       Grid points not exceeding R are ignored. The comparison
       is carried out on log psi so it survives underflow.

       Parameters
       ----------
       fam : SmoothingFamily
       m, n : float
           Constants greater than one
       R : float
           Threshold; only x > R is tested
       grid : array-like

       Returns
       -------
       holds : bool
    '''
    if not (m > 1 and n > 1):
        raise InvalidInput("m and n must exceed 1, got m=%r n=%r" % (m, n))
    grid = np.asarray(grid, dtype=np.float64)
    x = grid[grid > R]
    if x.size == 0:
        raise InvalidInput("grid has no point beyond R=%g" % R)
    lhs = _log_psi(fam, x) - np.log(m)
    rhs = _log_psi(fam, n * x)
    return bool(np.all(lhs >= rhs - 1e-12 * np.maximum(1.0, np.abs(rhs))))


def check_legacy_assumption(fam, a, Ra, grid):
    '''psi(t)/2 >= psi(t/a) beyond Ra, i.e. condition (ii) with m=2, n=1/a'''
    if not 0 < a < 1:
        raise InvalidInput("a must lie in (0, 1), got %r" % a)
    return check_condition_ii(fam, 2.0, 1.0 / a, Ra, grid)


def condition_iii_ladder(fam, grid, m_ladder=DEFAULT_M_LADDER,
                         n_list=None, R_list=DEFAULT_R_LIST):
    '''For every m on the ladder find the first (n, R) passing (ii)

       Parameters
       ----------
       fam : SmoothingFamily
       grid : array-like
       m_ladder : sequence of float
       n_list : sequence of float (optional)
           Powers of two up to 2**20 by default
       R_list : sequence of float

       Returns
       -------
       ladder : dict
           m -> (n, R), or None when nothing on the lists passes
    '''
    if n_list is None:
        n_list = [2**k for k in range(1, 21)]
    ladder = {}
    for m in m_ladder:
        ladder[m] = next(((n, R) for n in n_list for R in R_list
                          if check_condition_ii(fam, m, n, R, grid)), None)
    return ladder


def _tail_limit(x, ratio, liminf):
    '''Extrapolate a decaying ratio to x = infinity

       Fits ratio = a + b / log(x) over the tail; when the ratio
       decays (b > 0) the intercept a estimates the limit.
    '''
    keep = x > 1
    if keep.sum() < 3:
        return liminf
    u = 1.0 / np.log(x[keep])
    fit = sm.OLS(ratio[keep], sm.add_constant(u)).fit()
    a, b = fit.params
    return float(min(liminf, a)) if b > 0 else liminf


def loja_verdict(fam, tail_grid=None, candidates=None):
    '''Cross-check the Lojasiewicz inequality and condition (ii)
       ---------------------------------------------------------
       Condition (i) holds when the ratio's tail minimum and its
       extrapolated limit both exceed 1e-3. Condition (ii) holds
       when some candidate (m, n, R) passes `check_condition_ii`.
       The two are equivalent for convex decreasing psi, so a
       disagreement is reported as Inconclusive.

       Parameters
       ----------
       fam : SmoothingFamily
       tail_grid : array-like (optional)
           Increasing grid with at least 50 points,
           geomspace(1, 1e12, 200) by default
       candidates : list of (m, n, R) (optional)
           Searched in order, m over (2, 10, 100) then n over
           powers of two then R over (1, 10, 100) by default

       Returns
       -------
       report : LojaReport
    '''
    grid = default_grid() if tail_grid is None else \
        np.asarray(tail_grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size < 50 or np.any(np.diff(grid) <= 0):
        raise InvalidInput("tail grid must be strictly increasing "
                           "with at least 50 points")
    if candidates is None:
        candidates = default_candidates()

    samples = []
    for x in grid:
        try:
            samples.append((float(x), loja_ratio(fam, x)))
        except DomainError as err:
            logger.warning("dropping grid point %g: %s", x, err)

    witness = next((c for c in candidates
                    if check_condition_ii(fam, c[0], c[1], c[2], grid)), None)
    ladder = condition_iii_ladder(fam, grid)

    if not samples:
        verdict = LojaVerdict.SatisfiedII if witness else \
            LojaVerdict.Inconclusive
        return LojaReport(fam.label, samples, float('nan'), witness,
                          verdict, ladder=ladder)

    xs = np.array([s[0] for s in samples])
    ratios = np.array([s[1] for s in samples])
    tail = slice(len(samples) // 2, None)
    liminf = float(ratios[tail].min())
    limit = _tail_limit(xs[tail], ratios[tail], liminf)
    cond_i = liminf > LIMINF_CUT and limit > LIMINF_CUT

    if cond_i and witness is not None:
        verdict = LojaVerdict.SatisfiedI
    elif not cond_i and witness is None:
        verdict = LojaVerdict.FailsBoth
    else:
        logger.warning("%s: condition (i) %s but condition (ii) %s",
                       fam.label, 'holds' if cond_i else 'fails',
                       'holds' if witness else 'fails')
        verdict = LojaVerdict.Inconclusive
    return LojaReport(fam.label, samples, liminf, witness, verdict,
                      extrapolated_limit=limit, ladder=ladder)
