#!/usr/bin/env python3
from itertools import product

import numpy as np
import numpy.testing as npt
import pytest

from navesolve.base import NaveProblem, SizeLimit, is_invertible
from navesolve.problems import make_affine, make_example_r3, tridiag_matrix
from navesolve.pstructure import (P0Kind, is_p0_matrix_exact,
                                  p0_refute_randomized, lemma3_probe,
                                  constructive_singular_matrix, max_product,
                                  p0_map_sample_check, principal_minor)


def test_exact_identity():
    verdict = is_p0_matrix_exact(np.eye(3), strict=True)
    assert verdict.kind is P0Kind.ExactP
    assert verdict.minors_checked == 7
    assert is_p0_matrix_exact(np.eye(3)).kind is P0Kind.ExactP0


def test_exact_negative_scalar():
    verdict = is_p0_matrix_exact([[-1.0]])
    assert verdict.kind is P0Kind.ExactNotP0
    assert verdict.certificate == (0,)
    assert not verdict.is_p0


def test_exact_tridiag_is_p():
    A = tridiag_matrix(3)
    assert is_p0_matrix_exact(A, strict=True).kind is P0Kind.ExactP
    assert principal_minor(A, [0, 1]) == pytest.approx(15.0)
    assert principal_minor(A, [0, 1, 2]) == pytest.approx(56.0)


def test_exact_zero_minors_are_p0_not_p():
    A = np.array([[0.0, 2.0], [-2.0, 0.0]])
    assert is_p0_matrix_exact(A, strict=True).kind is P0Kind.ExactP0


def test_exact_certificate_is_negative_minor():
    A = np.array([[1.0, 3.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 2.0]])
    verdict = is_p0_matrix_exact(A)
    assert verdict.kind is P0Kind.ExactNotP0
    assert verdict.certificate == (0, 1)
    assert principal_minor(A, verdict.certificate) < 0


def test_exact_size_limit():
    with pytest.raises(SizeLimit):
        is_p0_matrix_exact(np.eye(17))


def test_randomized_scalar():
    verdict = p0_refute_randomized([[-1.0]], trials=10, seed=0)
    assert verdict.kind is P0Kind.RefutedP0
    assert max_product([[-1.0]], verdict.certificate) < 0


def test_randomized_identity():
    verdict = p0_refute_randomized(np.eye(50), trials=1000, seed=0)
    assert verdict.kind is P0Kind.ProbablyP0


def test_randomized_skew():
    A = np.array([[0.0, 2.0], [-2.0, 0.0]])
    assert p0_refute_randomized(A, seed=1).kind is P0Kind.ProbablyP0


def test_randomized_finds_hidden_negative_coordinate():
    A = np.diag([3.0, 2.0, -0.5, 4.0, 1.0])
    verdict = p0_refute_randomized(A, trials=200, seed=3)
    assert verdict.kind is P0Kind.RefutedP0
    v = verdict.certificate
    prod = (A @ v) * v
    assert np.all(prod[v != 0] < 0)


def test_randomized_never_refutes_p0_2x2():
    for entries in product(range(-2, 3), repeat=4):
        A = np.array(entries, dtype=float).reshape(2, 2)
        if is_p0_matrix_exact(A).kind is P0Kind.ExactP0:
            verdict = p0_refute_randomized(A, trials=50, seed=0)
            assert verdict.kind is P0Kind.ProbablyP0, A


def test_randomized_never_refutes_p0_3x3(rng):
    for _ in range(300):
        A = rng.integers(-2, 3, (3, 3)).astype(float)
        if is_p0_matrix_exact(A).kind is P0Kind.ExactP0:
            verdict = p0_refute_randomized(A, trials=50, seed=0)
            assert verdict.kind is P0Kind.ProbablyP0, A


def test_singular_value_condition(rng):
    # sigma_min(A) > 1 makes (A + I)^-1 (A - I) a P-matrix
    d = 5
    for _ in range(50):
        U, _, Vt = np.linalg.svd(rng.normal(size=(d, d)))
        A = U @ np.diag(rng.uniform(1.1, 5.0, d)) @ Vt
        eye = np.eye(d)
        assert is_invertible(A + eye) and is_invertible(A - eye)
        M = np.linalg.solve(A + eye, A - eye)
        verdict = p0_refute_randomized(M, trials=200, seed=0)
        assert verdict.kind is P0Kind.ProbablyP0


def test_constructive_singular_matrix():
    A = np.diag([2.0, -1.0, 3.0])
    D1, D2 = constructive_singular_matrix(A, [0.0, 1.0, 0.0])
    npt.assert_allclose(np.diag(D1), [1.0, 1.0, 1.0])
    npt.assert_allclose(np.diag(D2), [0.0, 1.0, 0.0])
    assert abs(np.linalg.det(D1 + D2 @ A)) < 1e-12


@pytest.mark.parametrize('A', [np.eye(3), [[-1.0]], tridiag_matrix(4),
                               np.diag([1.0, -1.0, 1.0])],
                         ids=['identity', 'negative', 'tridiag', 'mixed'])
def test_lemma3_probe(A):
    assert lemma3_probe(A, trials=200, seed=7)


def _linear(scale, d=2):
    return NaveProblem(dim=d, f_eval=lambda x: scale * x,
                       jac_eval=lambda x: scale * np.eye(d), label='linear')


def test_map_check_linear():
    p = _linear(4.0)
    assert p0_map_sample_check(p, 'FminusI', seed=0).kind is P0Kind.ProbablyP0
    verdict = p0_map_sample_check(p, 'negFplusI', seed=0)
    assert verdict.kind is P0Kind.RefutedP0
    assert verdict.witness_point is not None
    assert verdict.certificate == (0,)


def test_map_check_r3():
    verdict = p0_map_sample_check(make_example_r3('b1'), 'FminusI',
                                  box=(-3.0, 3.0), samples=100, seed=0)
    assert verdict.kind is P0Kind.ProbablyP0


def test_map_check_matches_matrix_check(rng):
    # F(x) = (A + I)x makes grad F - I equal to A
    for _ in range(20):
        A = rng.normal(size=(3, 3))
        p = make_affine(A + np.eye(3), np.zeros(3))
        sampled = p0_map_sample_check(p, 'FminusI', samples=3, seed=0)
        assert sampled.is_p0 == is_p0_matrix_exact(A).is_p0
