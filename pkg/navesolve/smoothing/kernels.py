#!/usr/bin/env python3
"""
Smoothing kernels theta / psi = 1 - theta and the
smoothed complementarity component G_r
Author: navesolve developers
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import expit

from ..base.errors import DomainError, DegenerateDerivative

logger = logging.getLogger(__name__)

TINY = np.finfo(np.float64).tiny


@dataclass(frozen=True)
class SmoothingFamily:
    '''Smoothing kernel (theta, psi, psi', psi^-1)

       All handles accept scalars or numpy arrays.

       Attributes
       ----------
       theta, psi, psi_prime, psi_inv : callable
           The kernel and its complement psi = 1 - theta
       label : string
       log_psi : callable or None
           log(psi(x)) for x > 0, evaluated without underflow
       dlog_psi : callable or None
           psi'(x) / psi(x) for x > 0, evaluated without underflow
       gr : callable or None
           Closed form of G_r(y, z, r) for kernels where the
           generic composition loses precision
       gr_grad : callable or None
           Closed form of (dG/dy, dG/dz, dG/dr)
    '''
    theta: Callable
    psi: Callable
    psi_prime: Callable
    psi_inv: Callable
    label: str
    log_psi: Optional[Callable] = None
    dlog_psi: Optional[Callable] = None
    gr: Optional[Callable] = None
    gr_grad: Optional[Callable] = None

    def __repr__(self):
        return "SmoothingFamily(%s)" % self.label


def _check_psi_inv_domain(s):
    s = np.asarray(s, dtype=np.float64)
    if np.any(~(s > 0)):
        raise DomainError("psi^-1 is defined for s > 0 only, got %s"
                          % s[~(s > 0)].ravel()[:3])
    return s


def _out(v):
    return v.item() if np.ndim(v) == 0 else v


# ---- theta_1(t) = t/(t+1), t >= 0 ; t, t < 0 -------------------------

def _theta1(t):
    t = np.asarray(t, dtype=np.float64)
    tp = np.maximum(t, 0.0)
    return _out(np.where(t >= 0, tp / (tp + 1.0), t))


def _psi1(t):
    t = np.asarray(t, dtype=np.float64)
    tp = np.maximum(t, 0.0)
    return _out(np.where(t >= 0, 1.0 / (1.0 + tp), 1.0 - t))


def _psi1_prime(t):
    t = np.asarray(t, dtype=np.float64)
    tp = np.maximum(t, 0.0)
    return _out(np.where(t >= 0, -1.0 / (1.0 + tp)**2, -1.0))


def _psi1_inv(s):
    s = _check_psi_inv_domain(s)
    return _out(np.where(s <= 1.0, 1.0 / s - 1.0, 1.0 - s))


def _gr1(y, z, r):
    y, z = np.broadcast_arrays(np.asarray(y, dtype=np.float64),
                               np.asarray(z, dtype=np.float64))
    lo, hi = np.minimum(y, z), np.maximum(y, z)
    r2 = r * r
    with np.errstate(divide='ignore', invalid='ignore'):
        rational = (lo * hi - r2) / (2 * r + lo + hi)
        near_zero = r - (r2 / (r + lo) + r2 / (r + hi))
        mixed = lo - r2 / (r + hi)
    out = np.where(lo >= 0,
                   np.where(lo * hi >= r2, rational, near_zero),
                   np.where(hi >= 0, mixed, lo + hi - r))
    return _out(out)


def _gr1_grad(y, z, r):
    y, z = np.broadcast_arrays(np.asarray(y, dtype=np.float64),
                               np.asarray(z, dtype=np.float64))
    r2 = r * r
    both_pos = (y >= 0) & (z >= 0)
    with np.errstate(divide='ignore', invalid='ignore'):
        D2 = (2 * r + y + z)**2
        ry, rz = r + y, r + z
        # y, z >= 0 and yz >= r^2
        a_dy, a_dz = rz**2 / D2, ry**2 / D2
        a_dr = -2 * ry * rz / D2
        # y, z >= 0 and yz < r^2
        b_dy, b_dz = r2 / ry**2, r2 / rz**2
        b_dr = 1 - (r2 + 2 * r * y) / ry**2 - (r2 + 2 * r * z) / rz**2
        # one coordinate negative: G = neg - r^2/(r + pos)
        c_dy = np.where(y < 0, 1.0, r2 / ry**2)
        c_dz = np.where(z < 0, 1.0, r2 / rz**2)
        pos = np.maximum(y, z)
        c_dr = -(r2 + 2 * r * pos) / (r + pos)**2
    a_case = both_pos & (y * z >= r2)
    b_case = both_pos & ~a_case
    c_case = ((y < 0) ^ (z < 0))
    dy = np.select([a_case, b_case, c_case], [a_dy, b_dy, c_dy], 1.0)
    dz = np.select([a_case, b_case, c_case], [a_dz, b_dz, c_dz], 1.0)
    dr = np.select([a_case, b_case, c_case], [a_dr, b_dr, c_dr], -1.0)
    return _out(dy), _out(dz), _out(dr)


def make_theta1():
    '''Rational kernel theta_1
       -----------------------
       theta_1(t) = t/(t+1) for t >= 0 and t for t < 0,
       psi_1(t) = 1/(1+t) for t >= 0 and 1 - t for t < 0

       Returns
       -------
       fam : SmoothingFamily
    '''
    return SmoothingFamily(
        theta=_theta1, psi=_psi1, psi_prime=_psi1_prime, psi_inv=_psi1_inv,
        label='theta1',
        log_psi=lambda x: -np.log1p(x),
        dlog_psi=lambda x: -1.0 / (1.0 + np.asarray(x, dtype=np.float64)),
        gr=_gr1, gr_grad=_gr1_grad)


# ---- theta_2(t) = 1 - exp(-t) ----------------------------------------

def _psi2_inv(s):
    s = _check_psi_inv_domain(s)
    return _out(-np.log(s))


def _gr2(y, z, r):
    y = np.asarray(y, dtype=np.float64)
    z = np.asarray(z, dtype=np.float64)
    u = np.abs(y - z) / r
    return _out(np.minimum(y, z) - r * np.log1p(np.exp(-u)))


def _gr2_grad(y, z, r):
    y = np.asarray(y, dtype=np.float64)
    z = np.asarray(z, dtype=np.float64)
    dy = expit((z - y) / r)
    dz = expit((y - z) / r)
    u = np.abs(y - z) / r
    dr = np.where(u > 700, 0.0, -np.log1p(np.exp(-u)) - u * expit(-u))
    return _out(dy), _out(dz), _out(dr)


def make_theta2():
    '''Exponential kernel theta_2(t) = 1 - exp(-t)

       psi_2(t) = exp(-t) and G_r becomes the soft-min
       -r log(exp(-y/r) + exp(-z/r)), evaluated in
       log-sum-exp form.
    '''
    return SmoothingFamily(
        theta=lambda t: _out(-np.expm1(-np.asarray(t, dtype=np.float64))),
        psi=lambda t: _out(np.exp(-np.asarray(t, dtype=np.float64))),
        psi_prime=lambda t: _out(-np.exp(-np.asarray(t, dtype=np.float64))),
        psi_inv=_psi2_inv,
        label='theta2',
        log_psi=lambda x: -np.asarray(x, dtype=np.float64),
        dlog_psi=lambda x: -np.ones_like(np.asarray(x, dtype=np.float64)),
        gr=_gr2, gr_grad=_gr2_grad)


# ---- psi(x) = 1/log(1+x), fails the Lojasiewicz inequality -----------

def _positive(x):
    x = np.asarray(x, dtype=np.float64)
    if np.any(~(x > 0)):
        raise DomainError("psi(x) = 1/log(1+x) is defined for x > 0 only")
    return x


def make_logexp_counterexample():
    '''Kernel with psi(x) = 1/log(1+x) on x > 0

       Convex and decreasing, yet x|psi'(x)|/psi(x) decays like
       1/log(x). Only the psi-side handles are meaningful;
       it is meant for the Lojasiewicz checkers, not the solver.
    '''
    def psi(x):
        return _out(1.0 / np.log1p(_positive(x)))

    def psi_prime(x):
        x = _positive(x)
        return _out(-1.0 / ((1.0 + x) * np.log1p(x)**2))

    def psi_inv(s):
        s = _check_psi_inv_domain(s)
        return _out(np.expm1(1.0 / s))

    return SmoothingFamily(
        theta=lambda t: _out(1.0 - psi(t)), psi=psi, psi_prime=psi_prime,
        psi_inv=psi_inv, label='logexp-counterexample',
        log_psi=lambda x: -np.log(np.log1p(_positive(x))),
        dlog_psi=lambda x: -1.0 / ((1.0 + _positive(x)) * np.log1p(x)))


FAMILIES = {'theta1': make_theta1,
            'theta2': make_theta2,
            'logexp-counterexample': make_logexp_counterexample}


def get_family(name):
    '''Look up a kernel by name ('theta1', 'theta2', '1', '2', ...)'''
    key = str(name).strip().lower()
    if key in ('1', '2'):
        key = 'theta' + key
    if key not in FAMILIES:
        raise KeyError("unknown smoothing family %r, choose from %s"
                       % (name, sorted(FAMILIES)))
    return FAMILIES[key]()


# ---- G_r and its partial derivatives ---------------------------------

def _check_r(r):
    if not r > 0:
        raise DomainError("smoothing parameter r must be positive, got %r" % r)


def _generic_sum(fam, y, z, r):
    with np.errstate(over='ignore', under='ignore'):
        S = np.asarray(fam.psi(y / r), dtype=np.float64) + \
            np.asarray(fam.psi(z / r), dtype=np.float64)
    if not np.all(np.isfinite(S)):
        raise DomainError("%s: psi(y/r) + psi(z/r) overflows at r=%g"
                          % (fam.label, r))
    if np.any(S == 0):
        logger.debug("%s: psi sum underflowed at r=%g, clamping", fam.label, r)
        S = np.maximum(S, TINY)
    return S


def gr_component(fam, yi, zi, r):
    '''Smoothed complementarity component
       ----------------------------------
       G_r(y, z) = r psi^-1(psi(y/r) + psi(z/r)), symmetric in
       (y, z); G_r(y, z) = 0 forces min(y, z) to vanish as r -> 0

       Parameters
       ----------
       fam : SmoothingFamily
       yi, zi : float or np.array
           Arguments, broadcast together
       r : float
           Positive smoothing parameter

       Returns
       -------
       G : float or np.array
    '''
    _check_r(r)
    y = np.asarray(yi, dtype=np.float64)
    z = np.asarray(zi, dtype=np.float64)
    if fam.gr is not None:
        return fam.gr(y, z, r)
    S = _generic_sum(fam, y, z, r)
    return _out(r * np.asarray(fam.psi_inv(S)))


def gr_partials(fam, yi, zi, r):
    '''Partial derivatives of G_r
       --------------------------
       Parameters
       ----------
       fam : SmoothingFamily
       yi, zi : float or np.array
       r : float

       Returns
       -------
       (dG/dy, dG/dz, dG/dr) : tuple
           dG/dy = psi'(y/r) / psi'(psi^-1(S)), dG/dz likewise and
           dG/dr = psi^-1(S) - (y psi'(y/r) + z psi'(z/r)) / (r psi'(psi^-1(S)))
           where S = psi(y/r) + psi(z/r)
    '''
    _check_r(r)
    y = np.asarray(yi, dtype=np.float64)
    z = np.asarray(zi, dtype=np.float64)
    if fam.gr_grad is not None:
        return fam.gr_grad(y, z, r)
    S = _generic_sum(fam, y, z, r)
    s_inv = np.asarray(fam.psi_inv(S))
    den = np.asarray(fam.psi_prime(s_inv))
    if np.any(den == 0) or not np.all(np.isfinite(den)):
        raise DegenerateDerivative("%s: psi'(psi^-1(S)) vanishes at r=%g"
                                   % (fam.label, r))
    py = np.asarray(fam.psi_prime(y / r))
    pz = np.asarray(fam.psi_prime(z / r))
    dr = s_inv - (y * py + z * pz) / (r * den)
    return _out(py / den), _out(pz / den), _out(dr)


def generic_family(fam):
    '''Strip closed forms so G_r goes through psi^-1(psi + psi)'''
    return SmoothingFamily(theta=fam.theta, psi=fam.psi,
                           psi_prime=fam.psi_prime, psi_inv=fam.psi_inv,
                           label=fam.label + '-generic',
                           log_psi=fam.log_psi, dlog_psi=fam.dlog_psi)
