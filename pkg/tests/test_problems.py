#!/usr/bin/env python3
import numpy as np
import numpy.testing as npt
import pytest

from navesolve.base import (ConversionImpossible, InvalidSpec, nave_residual,
                            fd_jacobian, split)
from navesolve.problems import (ave_to_lcp, lcp_to_nave, make_affine,
                                make_tridiag, make_example_r3,
                                make_example_r4, build_problem,
                                parse_problem_id, RidgeSpec, make_ridge,
                                make_random_ridge, ridge_stationarity,
                                p0_preconditions, make_sparse_heuristic,
                                make_stiff_ivp, make_stiff_bvp,
                                make_arctan_ivp, stiff_exact, arctan_exact)
from navesolve.problems.ode import (backward_second_difference,
                                    centered_first_difference, ode_error)
from navesolve.solver import SolverConfig, Status, newton_armijo_solve


def test_ave_to_lcp_scalar():
    conv = ave_to_lcp([[2.0]], [-3.0])
    npt.assert_allclose(conv.M, [[1 / 3]])
    npt.assert_allclose(conv.q, [1.0])
    npt.assert_allclose(conv.M_mirror, [[3.0]])
    npt.assert_allclose(conv.q_mirror, [-3.0])


def test_ave_to_lcp_zero_solution():
    conv = ave_to_lcp(2 * np.eye(2), np.zeros(2))
    y, z = split(np.zeros(2))
    npt.assert_allclose(conv.M @ y + conv.q, z)


def test_ave_to_lcp_one_sided():
    conv = ave_to_lcp([[1.0]], [1.0])
    assert conv.has_direct and not conv.has_mirror


def test_ave_to_lcp_impossible():
    with pytest.raises(ConversionImpossible):
        ave_to_lcp(np.diag([1.0, -1.0]), np.ones(2))


def _well_conditioned(rng, d):
    U, _, Vt = np.linalg.svd(rng.normal(size=(d, d)))
    return U @ np.diag(rng.uniform(1.5, 4.0, d)) @ Vt


def test_ave_to_lcp_consistent_with_solve(rng):
    A = _well_conditioned(rng, 4)
    b = rng.uniform(-5, 5, 4)
    report = newton_armijo_solve(make_affine(A, b))
    assert report.converged
    y, z = split(report.x_final)
    conv = ave_to_lcp(A, b)
    npt.assert_allclose(conv.M @ y + conv.q, z, atol=1e-8)


def test_lcp_to_nave_recovers_ave(rng):
    A = _well_conditioned(rng, 3)
    b = rng.uniform(-5, 5, 3)
    conv = ave_to_lcp(A, b)
    p = lcp_to_nave(conv.M, conv.q)
    x = rng.normal(size=3)
    npt.assert_allclose(p.evaluate(x), A @ x - b, atol=1e-10)


def test_lcp_to_nave_singular():
    with pytest.raises(ConversionImpossible):
        lcp_to_nave(np.eye(2), np.zeros(2))


def test_tridiag_from_x_star():
    p = make_tridiag(3, mode=[1.0, -1.0, 0.0])
    npt.assert_allclose(p.rhs, [4.0, -6.0, 1.0])
    npt.assert_allclose(nave_residual(p, p.exact_solution), 0.0, atol=1e-14)


def test_tridiag_seeded():
    p, q = make_tridiag(10, seed=5), make_tridiag(10, seed=5)
    npt.assert_array_equal(p.rhs, q.rhs)
    assert np.all(np.abs(p.rhs) <= 5)
    with pytest.raises(InvalidSpec):
        make_tridiag(1)
    with pytest.raises(InvalidSpec):
        make_tridiag(4, mode='other')


def test_polynomial_examples():
    npt.assert_allclose(make_example_r3().evaluate(np.zeros(3)), [-2, 3, -3])
    npt.assert_allclose(make_example_r4().evaluate(np.zeros(4)), np.zeros(4))
    p = make_example_r3('b1')
    x = np.array([0.0, 1.0, 1.0])
    npt.assert_allclose(p.jacobian(x), fd_jacobian(p, x), atol=1e-6)
    q = make_example_r4('bstar2')
    x = np.array([0.5, -1.0, 2.0, 1.0])
    npt.assert_allclose(q.jacobian(x), fd_jacobian(q, x), atol=1e-6)
    npt.assert_allclose(q.rhs, [20.0, -100.0, -12.0, 1.0])


def test_polynomial_rhs_mismatch():
    with pytest.raises(InvalidSpec):
        make_example_r3('bstar1')


def test_parse_problem_id():
    assert parse_problem_id('r3:b1') == ('r3', {'b': 'b1'})
    assert parse_problem_id('tridiag:d=5:seed=1') == \
        ('tridiag', {'d': '5', 'seed': '1'})
    with pytest.raises(InvalidSpec):
        parse_problem_id('')


@pytest.mark.parametrize('pid,dim', [('r3:b1', 3), ('r4:bstar2', 4),
                                     ('tridiag:d=5:seed=1', 5),
                                     ('tridiag:d=4:mode=x_star', 4),
                                     ('ridge:m=3:d=10:lam=0:mu=100', 10),
                                     ('sparse:seed=1:lam=0.5:m=5:d=8', 8),
                                     ('ode-stiff:h=0.05', 100),
                                     ('ode-bvp:h=0.05', 39),
                                     ('ode-arctan:h=0.0125', 80)])
def test_build_problem(pid, dim):
    assert build_problem(pid).dim == dim


def test_build_problem_labels():
    assert build_problem('r3:b1').label == 'r3:b1'
    assert build_problem('r3').label == 'r3'


@pytest.mark.parametrize('pid', ['foo', 'r3:b1:extra=1', 'tridiag:d=abc',
                                 'ode-stiff', 'ridge:lam=1:mu=1',
                                 'r3:b1:b2'])
def test_build_problem_rejects(pid):
    with pytest.raises(InvalidSpec):
        build_problem(pid)


def test_ridge_scalar():
    spec = RidgeSpec(design=[[1.0]], target=[1.0], lam=0.0, mu=2.0)
    p = make_ridge(spec)
    npt.assert_allclose(p.evaluate([3.0]), [1.5 * 3.0 - 0.5])
    report = newton_armijo_solve(p)
    assert report.converged
    npt.assert_allclose(report.x_final, [1.0], atol=1e-8)
    npt.assert_allclose(ridge_stationarity(spec, report.x_final), 0.0,
                        atol=1e-8)


def test_ridge_rejects_equal_penalties():
    with pytest.raises(InvalidSpec):
        RidgeSpec(np.ones((2, 2)), np.ones(2), lam=1.0, mu=1.0)
    with pytest.raises(InvalidSpec):
        RidgeSpec(np.ones((2, 2)), np.ones(2), lam=-1.0, mu=1.0)


def test_ridge_stationarity_at_solution():
    p = make_random_ridge(3, 10, 0.0, 100.0, seed=42)
    report = newton_armijo_solve(p)
    assert report.status is Status.Converged
    assert report.error <= 1e-10
    assert report.iterations <= 50
    spec = p.meta['spec']
    npt.assert_allclose(ridge_stationarity(spec, report.x_final), 0.0,
                        atol=1e-8)


RIDGE_CELLS = [(0.0, 100.0, 3), (0.0, 100.0, 5), (0.0, 100.0, 10),
               (200.0, 1000.0, 3), (200.0, 1000.0, 5), (200.0, 1000.0, 10),
               (200.0, 1000.0, 20)]


@pytest.mark.parametrize('method', ['theta1', 'theta2'])
@pytest.mark.parametrize('lam,mu,m', RIDGE_CELLS)
def test_ridge_cells_converge(lam, mu, m, method):
    p = make_random_ridge(m, 10, lam, mu, seed=42)
    report = newton_armijo_solve(p, SolverConfig(family=method))
    assert report.status is Status.Converged
    assert report.error <= 1e-10
    assert report.iterations <= 50
    spec = p.meta['spec']
    grad = ridge_stationarity(spec, report.x_final)
    npt.assert_allclose(grad, (mu - lam) * nave_residual(p, report.x_final),
                        atol=1e-8)
    assert np.linalg.norm(grad) <= (mu - lam) * 1e-10 + 1e-8


def test_ridge_identity_random_points(rng):
    p = make_random_ridge(5, 10, 200.0, 1000.0, seed=7)
    spec = p.meta['spec']
    for x in rng.normal(scale=3.0, size=(100, 10)):
        npt.assert_allclose(ridge_stationarity(spec, x),
                            800.0 * nave_residual(p, x), rtol=1e-9,
                            atol=1e-8)


def test_ridge_preconditions():
    p = make_random_ridge(3, 6, 0.0, 100.0, seed=42)
    verdicts = p0_preconditions(p, samples=5)
    assert set(verdicts) == {'FminusI', 'negFplusI'}
    assert verdicts['FminusI'].is_p0
    assert not verdicts['negFplusI'].is_p0


def test_sparse_scalar():
    p = make_sparse_heuristic([[1.0]], [2.0], lam=1.0)
    npt.assert_allclose(nave_residual(p, [0.0]), 0.0)
    npt.assert_allclose(nave_residual(p, [1.0]), 0.0, atol=1e-14)
    with pytest.raises(InvalidSpec):
        make_sparse_heuristic([[1.0]], [2.0], lam=0.0)


def test_sparse_origin_is_solution():
    p = build_problem('sparse:seed=3:lam=0.2:m=4:d=6')
    npt.assert_array_equal(nave_residual(p, np.zeros(6)), np.zeros(6))


def test_sparse_plus_sign_scalar():
    # x (x - 2) - |x| = 0 has the solutions 0 and 3
    p = make_sparse_heuristic([[1.0]], [2.0], lam=1.0, sign=1)
    npt.assert_allclose(nave_residual(p, [0.0]), 0.0)
    npt.assert_allclose(nave_residual(p, [3.0]), 0.0, atol=1e-14)
    npt.assert_allclose(nave_residual(p, [1.0]), [-2.0])
    assert p.meta['sign'] == 1
    assert p.label.endswith('sign=+1')
    with pytest.raises(InvalidSpec):
        make_sparse_heuristic([[1.0]], [2.0], lam=1.0, sign=0)


def test_sparse_plus_sign_jacobian(rng):
    p = build_problem('sparse:seed=1:lam=0.5:m=5:d=8:sign=1')
    assert p.meta['sign'] == 1
    for x in rng.uniform(-1.0, 1.0, (5, 8)):
        npt.assert_allclose(p.jacobian(x), fd_jacobian(p, x), atol=1e-6)
    minus = build_problem('sparse:seed=1:lam=0.5:m=5:d=8')
    x = rng.uniform(-1.0, 1.0, 8)
    npt.assert_allclose(p.evaluate(x), -minus.evaluate(x))


def test_sparse_sign_swaps_preconditions():
    plus = build_problem('sparse:seed=2:lam=0.5:m=3:d=4:sign=1')
    minus = build_problem('sparse:seed=2:lam=0.5:m=3:d=4')
    v_plus = p0_preconditions(plus, samples=10)
    v_minus = p0_preconditions(minus, samples=10)
    assert v_plus['FminusI'].kind is v_minus['negFplusI'].kind
    assert v_plus['negFplusI'].kind is v_minus['FminusI'].kind


def test_sparse_rejects_bad_sign():
    with pytest.raises(InvalidSpec):
        build_problem('sparse:seed=1:lam=0.5:m=5:d=8:sign=2')


def test_exact_solutions():
    assert stiff_exact(0.0, -1.0) == pytest.approx(-1.0)
    assert stiff_exact(1.0, -1.0) == pytest.approx(-0.3682477, abs=1e-7)
    assert arctan_exact(0.0) == pytest.approx(1.0)
    assert arctan_exact(1.0) == pytest.approx(-1.0)


def test_difference_stencils_on_quadratics():
    N, h = 12, 0.1
    t = h * np.arange(1, N + 1)
    A = backward_second_difference(N, h)
    B = centered_first_difference(N, h)
    npt.assert_allclose((A @ t**2)[2:], 2.0, rtol=1e-9)
    npt.assert_allclose((B @ t**2)[1:], 2 * t[1:], rtol=1e-9)


def test_stiff_ivp_layout():
    disc, p = make_stiff_ivp(x0=-1.0, T=5.0, N=100)
    h = 0.05
    assert disc.mesh_h == pytest.approx(h)
    assert p.dim == 100
    assert p.rhs[0] == pytest.approx(-(1 / (1000 * h**2) + 1001 / (2000 * h)))
    assert p.rhs[1] == pytest.approx(1 / (1000 * h**2))
    assert np.all(p.rhs[2:] == 0)
    npt.assert_allclose(disc.t[[0, -1]], [h, 5.0])
    with pytest.raises(InvalidSpec):
        make_stiff_ivp(x0=1.0)
    with pytest.raises(InvalidSpec):
        make_stiff_ivp(N=2)


def test_stiff_bvp_smallest_mesh():
    disc, p = make_stiff_bvp(x0=-1.0, T=2.0, N=3)
    assert p.dim == 2
    report = newton_armijo_solve(p)
    assert report.converged
    assert disc.boundary['y0'] == pytest.approx(stiff_exact(2.0, -1.0))


def test_ode_error_norms():
    disc, _ = make_stiff_ivp(x0=-1.0, T=1.0, N=10)
    x = disc.exact_on_mesh().copy()
    x[0] += 0.5
    x[-1] -= 0.1
    assert ode_error(disc, x) == pytest.approx(0.5)
    assert ode_error(disc, x, 'terminal') == pytest.approx(0.1)
    with pytest.raises(InvalidSpec):
        ode_error(disc, x, 'l2')


@pytest.mark.parametrize('builder,T,x0,order', [
    (make_stiff_ivp, 1.0, -2.0, 2.0),
    (make_stiff_bvp, 2.0, -1.0, 1.0),
    (make_arctan_ivp, 1.0, 1.0, 1.0)])
def test_manufactured_residual_order(builder, T, x0, order):
    # exact solution on the second half of the mesh, away from t = 0
    h_list = np.array([0.1, 0.05, 0.025, 0.0125])
    res = []
    for h in h_list:
        _, p = builder(x0=x0, T=T, N=int(round(T / h)))
        r = nave_residual(p, p.exact_solution)
        res.append(np.abs(r[r.size // 2:]).max())
    assert np.all(np.diff(res) < 0)
    slope = np.polyfit(np.log(h_list), np.log(res), 1)[0]
    assert slope == pytest.approx(order, abs=0.2)


def test_arctan_layout():
    disc, p = make_arctan_ivp(x0=1.0, T=1.0, N=80)
    npt.assert_allclose(p.exact_solution, np.cos(np.pi * disc.t))
    x = np.linspace(-1, 1, 80)
    npt.assert_allclose(p.jacobian(x), fd_jacobian(p, x), atol=1e-5)
    _, q = make_arctan_ivp(x0=0.5, T=1.0, N=10)
    assert q.exact_solution is None
