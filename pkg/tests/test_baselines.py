#!/usr/bin/env python3
import numpy as np
import numpy.testing as npt
import pytest

from navesolve.base import ConfigError, InvalidInput
from navesolve.baselines import (BaselineConfig, softmax_min, solve_softmax,
                                 solve_interior_point,
                                 solve_lcp_interior_point, central_mu,
                                 max_step_to_boundary)
from navesolve.problems import build_problem, make_tridiag
from navesolve.solver import (SolveReport, Status, SolverConfig,
                              newton_armijo_solve)


def test_softmax_min_values():
    assert softmax_min(1.0, 2.0, 0.1) == pytest.approx(0.9999955, abs=1e-7)
    assert softmax_min(3.0, 3.0, 0.5) == pytest.approx(3.0 - 0.5 * np.log(2))
    assert abs(softmax_min(0.0, 1e6, 0.01)) < 1e-12
    npt.assert_allclose(softmax_min([1.0, 5.0], [2.0, -1.0], 1e-3),
                        [1.0, -1.0], atol=1e-12)
    with pytest.raises(InvalidInput):
        softmax_min(1.0, 2.0, 0.0)


def test_schedule():
    levels = BaselineConfig().r_schedule()
    assert levels[0] == 1.0
    assert levels[-1] == pytest.approx(1e-12)
    assert len(levels) == 19
    assert np.all(np.diff(levels) < 0)


def test_baseline_config_validation():
    with pytest.raises(ConfigError):
        BaselineConfig(shrink=1.5)
    with pytest.raises(ConfigError):
        BaselineConfig(sigma=0.0)
    with pytest.raises(ConfigError):
        BaselineConfig(r_min=2.0)
    with pytest.raises(ConfigError):
        BaselineConfig(init=(np.ones(2), -np.ones(2))).initial_point(2)


def test_central_mu_at_start():
    assert central_mu(np.ones(4), np.ones(4), 0.3) == pytest.approx(0.3)


def test_step_to_boundary():
    v = np.array([1.0, 2.0])
    assert max_step_to_boundary(v, np.array([1.0, 0.0]), 0.9) == 1.0
    assert max_step_to_boundary(v, np.array([-4.0, 1.0]), 0.9) == \
        pytest.approx(0.225)


def test_softmax_r3_b1(r3_b1):
    report = solve_softmax(r3_b1)
    assert report.converged
    assert report.error <= 1e-10
    assert report.iterations <= 40
    assert report.method == 'softmax'


def test_softmax_never_claims_false_convergence():
    p = build_problem('tridiag:d=50:mode=random_b:seed=42')
    report = solve_softmax(p, BaselineConfig(max_iter=300))
    assert report.status in (Status.Converged, Status.MaxIterations,
                             Status.DomainBreakdown, Status.SingularJacobian,
                             Status.LineSearchStalled)
    if report.converged:
        assert report.error <= 1e-10


def test_softmax_r4_bstar3_reports_honestly():
    report = solve_softmax(build_problem('r4:bstar3'))
    assert len(report.residual_history) >= 1
    assert report.status is not Status.Converged or report.error <= 1e-10
    assert report.iterations <= BaselineConfig().max_iter


def test_lcp_interior_point_known_solution():
    seen = []
    report = solve_lcp_interior_point(np.eye(2), [-1.0, -1.0],
                                      callback=lambda k, y, z: seen.append(k))
    assert report.converged
    assert report.iterations <= 50
    npt.assert_allclose(report.x_final, [1.0, 1.0], atol=1e-8)
    npt.assert_allclose(report.state_final.z, 0.0, atol=1e-8)
    assert seen[0] == 0 and seen[-1] == report.iterations


def test_interior_point_tridiag_stays_interior():
    p = make_tridiag(10, seed=42)
    mins = []
    report = solve_interior_point(p, BaselineConfig(max_iter=500),
                                  callback=lambda k, y, z:
                                  mins.append(min(y.min(), z.min())))
    assert report.status is Status.Converged
    assert report.error <= 1e-10
    assert report.iterations <= 60
    assert len(mins) == report.iterations + 1
    assert min(mins) > 0
    state = report.state_final
    assert np.all(state.y > 0) and np.all(state.z > 0)
    npt.assert_allclose(state.y - state.z, report.x_final)


def test_interior_point_iteration_cap():
    p = make_tridiag(10, seed=42)
    report = solve_interior_point(p, BaselineConfig(max_iter=3))
    assert report.status is Status.MaxIterations
    assert report.iterations == 3
    assert np.all(report.state_final.y > 0)
    assert np.all(report.state_final.z > 0)


def test_interface_parity(r3_b1):
    reports = [newton_armijo_solve(r3_b1, SolverConfig(family='theta1')),
               newton_armijo_solve(r3_b1, SolverConfig(family='theta2')),
               solve_softmax(r3_b1),
               solve_interior_point(r3_b1, BaselineConfig(max_iter=200))]
    for report in reports:
        assert isinstance(report, SolveReport)
        assert report.x_final.shape == (3,)
        assert report.wall_time >= 0
        assert report.iterations >= 0
        assert isinstance(report.status, Status)
    assert len({r.method for r in reports}) == 4
