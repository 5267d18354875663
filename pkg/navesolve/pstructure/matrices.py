#!/usr/bin/env python3
"""
P0- and P-matrix tests: exhaustive principal minors,
randomized refutation and the invertibility probe of
Delta_1 + Delta_2 A
Author: navesolve developers
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Optional

import numpy as np

from ..base.core import as_matrix, is_invertible, is_singular
from ..base.errors import SizeLimit, ProbeDegenerate

logger = logging.getLogger(__name__)

MAX_EXACT_DIM = 16
PRODUCT_THRESHOLD = -1e-12


class P0Kind(Enum):
    ExactP = 'ExactP'
    ExactP0 = 'ExactP0'
    ExactNotP0 = 'ExactNotP0'
    ProbablyP0 = 'ProbablyP0'
    RefutedP0 = 'RefutedP0'


@dataclass
class P0Verdict:
    '''Result of a P0 test

       Attributes
       ----------
       kind : P0Kind
       certificate : tuple or np.array or None
           0-based index set I with det(A_II) < 0 for exact tests,
           vector v with max_{j: v_j != 0} (Av)_j v_j < 0 for
           randomized ones
       minors_checked : int
           Principal minors (or sample vectors) examined
       witness_point : np.array or None
           Sample point x where a P0-map check failed
    '''
    kind: P0Kind
    certificate: Optional[Any] = None
    minors_checked: int = 0
    witness_point: Optional[np.ndarray] = None

    @property
    def is_p0(self):
        return self.kind in (P0Kind.ExactP, P0Kind.ExactP0, P0Kind.ProbablyP0)


def principal_minor(A, index_set):
    idx = np.asarray(index_set, dtype=int)
    return float(np.linalg.det(A[np.ix_(idx, idx)]))


def is_p0_matrix_exact(A, strict=False):
    '''Exact P0 / P test by principal minor enumeration
       ------------------------------------------------
       All 2^d - 1 principal minors are computed, batched by
       subset size. A minor counts as negative below
       -1e-12 * max(1, |det A|) and as positive above +1e-12 * scale.

       Parameters
       ----------
       A : array-like
           Square matrix with d <= 16
       strict : bool
           If `True` test for a P-matrix (all minors positive)

       Returns
       -------
       verdict : P0Verdict
           ExactP (strict only), ExactP0 or ExactNotP0 with the
           first violating index set
    '''
    A = as_matrix(A, square=True)
    d = A.shape[0]
    if d > MAX_EXACT_DIM:
        raise SizeLimit("exact minor enumeration is limited to d <= %d, "
                        "got d = %d; use p0_refute_randomized"
                        % (MAX_EXACT_DIM, d))
    tol = 1e-12 * max(1.0, abs(np.linalg.det(A)))
    checked = 0
    all_positive = True
    for k in range(1, d + 1):
        idx = np.array(list(combinations(range(d), k)))
        minors = np.linalg.det(A[idx[:, :, None], idx[:, None, :]])
        negative = np.flatnonzero(minors < -tol)
        if negative.size:
            checked += int(negative[0]) + 1
            return P0Verdict(P0Kind.ExactNotP0,
                             certificate=tuple(int(i) for i in idx[negative[0]]),
                             minors_checked=checked)
        checked += minors.size
        all_positive = all_positive and bool(np.all(minors > tol))
    if strict and all_positive:
        return P0Verdict(P0Kind.ExactP, minors_checked=checked)
    return P0Verdict(P0Kind.ExactP0, minors_checked=checked)


def max_product(A, v):
    '''max over the support of v of (Av)_j v_j'''
    v = np.asarray(v, dtype=np.float64)
    prod = (A @ v) * v
    support = v != 0
    if not support.any():
        return np.inf
    return float(prod[support].max())


def _batch_max_product(A, V):
    prod = (V @ A.T) * V
    return np.where(V != 0, prod, -np.inf).max(axis=1)


def _local_search(A, v, max_steps):
    '''Greedy sign flips, coordinate drops and rescaling'''
    best = max_product(A, v)
    for _ in range(max_steps):
        support = np.flatnonzero(v)
        moves = []
        for j in support:
            w = v.copy()
            w[j] = -w[j]
            moves.append(w)
            if support.size > 1:
                w = v.copy()
                w[j] = 0.0
                moves.append(w)
        # shrink the coordinate attaining the max
        j = support[np.argmax(((A @ v) * v)[support])]
        w = v.copy()
        w[j] *= 0.5
        moves.append(w)
        W = np.array(moves)
        W /= np.linalg.norm(W, axis=1, keepdims=True)
        vals = _batch_max_product(A, W)
        k = int(np.argmin(vals))
        if vals[k] >= best:
            break
        best, v = float(vals[k]), W[k]
    return v, best


def p0_refute_randomized(A, trials=1000, seed=None, refine=10):
    '''Search for a vector refuting the P0 property
       --------------------------------------------
       A is P0 iff every v != 0 has some j with v_j != 0 and
       (Av)_j v_j >= 0. Random vectors with random supports are
       scored by max_j (Av)_j v_j and the `refine` best are improved
       by local search.

       Parameters
       ----------
       A : array-like
           Square matrix of any size
       trials : int
           Number of random vectors
       seed : int or np.random.Generator (optional)
       refine : int
           Number of best candidates passed to local search

       Returns
       -------
       verdict : P0Verdict
           RefutedP0 with the witness vector when some v reaches
           a maximum below -1e-12, otherwise ProbablyP0
    '''
    A = as_matrix(A, square=True)
    d = A.shape[0]
    rng = np.random.default_rng(seed)
    V = rng.standard_normal((trials, d))
    sizes = rng.integers(1, d + 1, size=trials)
    ranks = rng.random((trials, d)).argsort(axis=1)
    V[ranks >= sizes[:, None]] = 0.0
    V /= np.linalg.norm(V, axis=1, keepdims=True)
    vals = _batch_max_product(A, V)

    order = np.argsort(vals)[:refine]
    for i in order:
        v, val = _local_search(A, V[i].copy(), max_steps=4 * d)
        if val < PRODUCT_THRESHOLD:
            logger.debug("P0 refuted after %d trials, max product %g",
                         trials, val)
            return P0Verdict(P0Kind.RefutedP0, certificate=v,
                             minors_checked=trials)
    return P0Verdict(P0Kind.ProbablyP0, minors_checked=trials)


def constructive_singular_matrix(A, v):
    '''Delta_1 + Delta_2 A annihilating v
       ----------------------------------
       On the support of v, delta_1^i = -(Av)^i / v^i and
       Delta_2 = 1; off the support Delta_1 = 1, Delta_2 = 0.
       Requires (Av)^i v^i < 0 on the support so that
       Delta_1 stays positive.

       Returns
       -------
       (D1, D2) : tuple of np.array
           Diagonal matrices
    '''
    A = as_matrix(A, square=True)
    v = np.asarray(v, dtype=np.float64)
    support = v != 0
    Av = A @ v
    if not support.any() or np.any(Av[support] * v[support] >= 0):
        raise ProbeDegenerate("certificate does not make every product "
                              "(Av)_i v_i negative on its support")
    delta1 = np.ones_like(v)
    delta1[support] = -Av[support] / v[support]
    return np.diag(delta1), np.diag(support.astype(float))


def lemma3_probe(A, trials=200, seed=None):
    '''Probe invertibility of Delta_1 + Delta_2 A
       ------------------------------------------
       A is P0 iff Delta_1 + Delta_2 A is invertible for every
       positive diagonal Delta_1 and nonnegative diagonal Delta_2.
       For a P0 matrix `trials` random pairs are drawn
       (Delta_1 ~ U(0.1, 10), Delta_2 ~ U(0, 10)) and all must be
       invertible; otherwise the refutation certificate must yield
       a singular matrix through `constructive_singular_matrix`.

       Parameters
       ----------
       A : array-like
           Square matrix with d <= 16
       trials : int
       seed : int (optional)

       Returns
       -------
       agrees : bool
           `True` when the probe behaves as the equivalence predicts
    '''
    A = as_matrix(A, square=True)
    d = A.shape[0]
    verdict = is_p0_matrix_exact(A)
    rng = np.random.default_rng(seed)
    if verdict.is_p0:
        for _ in range(trials):
            D1 = np.diag(rng.uniform(0.1, 10.0, d))
            D2 = np.diag(rng.uniform(0.0, 10.0, d))
            if not is_invertible(D1 + D2 @ A):
                logger.info("singular probe for a P0 matrix")
                return False
        return True

    refuted = p0_refute_randomized(A, trials=max(trials, 1000), seed=rng)
    if refuted.kind is not P0Kind.RefutedP0:
        raise ProbeDegenerate("minor %s is negative but no refuting vector "
                              "was found" % (verdict.certificate,))
    D1, D2 = constructive_singular_matrix(A, refuted.certificate)
    return is_singular(D1 + D2 @ A)
