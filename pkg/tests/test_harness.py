#!/usr/bin/env python3
import os

import numpy as np
import numpy.testing as npt
import pandas as pd
import pytest

from navesolve.base import ConfigError, StudyAborted, write_matrix
from navesolve.harness import (ExperimentSpec, TableRow, run_methods_table,
                               run_ridge_table, convergence_study, fit_rate,
                               sparse_path, timing_study, emit, ingest,
                               rows_to_markdown, parse_spec_file,
                               parse_ridge_grid)
from navesolve.harness.cli import main
from navesolve.harness.experiments import METHODS, summarize
from navesolve.problems import make_stiff_ivp, make_arctan_ivp
from navesolve.problems.ode import ode_error
from navesolve.solver import (SolveReport, SolverConfig, Status,
                              newton_armijo_solve)


def _report(error, status=Status.Converged, iterations=5):
    return SolveReport(status=status, x_final=np.zeros(1), state_final=None,
                       residual_history=[error], merit_history=[],
                       iterations=iterations, wall_time=0.01, error=error)


def test_spec_validation():
    with pytest.raises(ConfigError):
        ExperimentSpec('r3:b1', methods=('newton',)).validate()
    with pytest.raises(ConfigError):
        ExperimentSpec('r3:b1', methods=()).validate()
    with pytest.raises(ConfigError):
        ExperimentSpec('nope').validate()
    with pytest.raises(ConfigError):
        ExperimentSpec('r3:b1', tol=-1.0).validate()
    spec = ExperimentSpec('r3:b1', methods='theta1, ip').validate()
    assert spec.methods == ('theta1', 'ip')
    assert spec.label == 'r3:b1'


def test_instance_ids_spawn_seeds():
    spec = ExperimentSpec('tridiag:d=5:seed=7', repetitions=3)
    ids = spec.instance_ids()
    assert len(set(ids)) == 3
    assert ids == spec.instance_ids()
    assert ExperimentSpec('tridiag:d=5:seed=7').instance_ids() == \
        ['tridiag:d=5:seed=7']
    assert ExperimentSpec('tridiag:d=5', seed=3).instance_ids() == \
        ['tridiag:d=5:seed=3']
    assert ExperimentSpec('r3:b1', repetitions=2).instance_ids() == \
        ['r3:b1', 'r3:b1']


def test_summarize_takes_median_run():
    reports = [_report(1e-3), _report(float('nan'), Status.DomainBreakdown),
               _report(1e-1, Status.MaxIterations, 2000)]
    row = summarize('x', 'theta1', reports)
    assert row.error == pytest.approx(1e-1)
    assert row.iterations == 2000
    assert row.status == 'max_iterations'
    assert row.time_ms == pytest.approx(10.0)
    assert len(row.reports) == 3


def test_methods_table_r3():
    rows = run_methods_table([ExperimentSpec('r3:b1',
                                             methods=('theta1', 'theta2'))])
    assert [r.method for r in rows] == ['theta1', 'theta2']
    for row in rows:
        assert row.label == 'r3:b1'
        assert row.status == 'converged'
        assert row.error <= 1e-10


def _same_error(reported, shown):
    if np.isnan(shown):
        return not np.isfinite(reported)
    return reported == shown


def test_table_rows_come_from_reports():
    specs = [ExperimentSpec('r3:b1'),
             ExperimentSpec('tridiag:d=10', seed=3, repetitions=3)]
    rows = run_methods_table(specs)
    assert len(rows) == 2 * len(METHODS)
    for row in rows:
        assert len(row.reports) == (3 if row.label == 'tridiag:d=10' else 1)
        assert any(_same_error(r.error, row.error)
                   and r.iterations == row.iterations
                   and r.status.value == row.status for r in row.reports)


def test_methods_table_validates_before_solving():
    specs = [ExperimentSpec('r3:b1'), ExperimentSpec('r3:b1:zzz=1')]
    with pytest.raises(ConfigError):
        run_methods_table(specs)


def test_emit_and_ingest(tmp_path):
    rows = [TableRow('r3:b1', 'theta1', 4.7e-11, 14, 1.25, 'converged'),
            TableRow('r3:b1', 'ip', float('nan'), 2000, 830.0,
                     'max_iterations'),
            TableRow('label, with comma', 'theta2', 1.7e-11, 9, 0.5,
                     'converged')]
    path = emit(rows, 'csv', str(tmp_path / 'methods.csv'))
    with open(path) as fh:
        assert fh.readline().strip() == \
            'label,method,error,iterations,time_ms,status'
    back = ingest(path)
    assert [r.label for r in back] == [r.label for r in rows]
    assert back[0].error == 4.7e-11
    assert np.isnan(back[1].error)
    assert back[1].iterations == 2000
    assert back[2].time_ms == 0.5


def test_markdown_table():
    rows = [TableRow('r3:b1', 'theta1', 4.7e-11, 14, 1.25, 'converged'),
            TableRow('r3:b1', 'ip', float('nan'), 2000, 830.0,
                     'max_iterations')]
    text = rows_to_markdown(rows)
    assert 'Error theta1' in text and 'Iterations ip' in text
    assert 'NaN' in text
    assert '4.70e-11' in text
    assert '83.00' in text


def test_emit_errors(tmp_path):
    with pytest.raises(ConfigError):
        emit([], 'xlsx', str(tmp_path / 'x'))
    with pytest.raises(OSError):
        ingest(str(tmp_path / 'missing.csv'))
    with pytest.raises(OSError):
        emit([], 'csv', str(tmp_path / 'no' / 'dir' / 'x.csv'))


def test_parse_spec_file(tmp_path):
    fname = tmp_path / 'specs.txt'
    fname.write_text("# comparison rows\n"
                     "label=first\nproblem=r3:b1\nmethods=theta1,theta2\n"
                     "tol=1e-8\n\n"
                     "problem=tridiag:d=10\nrepetitions=3\nseed=5\n")
    specs = parse_spec_file(str(fname))
    assert len(specs) == 2
    assert specs[0].label == 'first' and specs[0].tol == 1e-8
    assert specs[0].methods == ('theta1', 'theta2')
    assert specs[1].repetitions == 3 and specs[1].seed == 5


@pytest.mark.parametrize('text', ["problem=r3:b1\ncolour=red\n",
                                  "problem=r3:b1\nproblem=r4\n",
                                  "tol=1e-8\n",
                                  "problem=r3:b1\nmax_iter=ten\n",
                                  "problem=r3:b1\nmethods=theta1,bogus\n",
                                  "problem r3:b1\n"])
def test_parse_spec_file_errors(tmp_path, text):
    fname = tmp_path / 'bad.txt'
    fname.write_text(text)
    with pytest.raises(ConfigError):
        parse_spec_file(str(fname))


def test_ridge_grid_and_table(tmp_path):
    fname = tmp_path / 'grid.txt'
    fname.write_text("lam=0\nmu=100\nm=3\nd=10\n")
    grid = parse_ridge_grid(str(fname))
    assert grid == [((0.0, 100.0), (3, 10))]
    rows = run_ridge_table(grid)
    assert [r.label for r in rows] == ['(0,100) (3,10)'] * 2
    assert rows[0].status == 'converged'
    with pytest.raises(ConfigError):
        run_ridge_table([((1, 1), (3, 10))])


def test_fit_rate():
    h = np.array([0.1, 0.05, 0.025])
    slope, intercept = fit_rate(h, 3.0 * h**1.5)
    assert slope == pytest.approx(1.5)
    assert intercept == pytest.approx(np.log(3.0))


def test_convergence_study_arguments():
    with pytest.raises(ConfigError):
        convergence_study('heat', [0.1, 0.05, 0.025])
    with pytest.raises(ConfigError):
        convergence_study('bvp', [0.1, 0.05])
    with pytest.raises(ConfigError):
        convergence_study('bvp', [0.05, 0.1, 0.2])
    with pytest.raises(ConfigError):
        convergence_study('bvp', [0.1, 0.05, 0.025], error_norm='l2')


def test_convergence_study_aborts():
    with pytest.raises(StudyAborted) as info:
        convergence_study('bvp', [0.1, 0.05, 0.025],
                          cfg=SolverConfig(max_iter=1))
    assert info.value.h == pytest.approx(0.1)
    assert not info.value.report.converged


H_LIST = [0.1, 0.05, 0.025, 0.0125]


@pytest.mark.slow
@pytest.mark.parametrize('method', ['theta1', 'theta2'])
@pytest.mark.parametrize('name', ['bvp', 'arctan'])
def test_first_order_convergence(name, method):
    study = convergence_study(name, H_LIST, method=method)
    assert study.error_norm == 'max'
    assert all(r.converged for r in study.reports)
    assert study.slope == pytest.approx(1.0, abs=0.2)
    assert np.all(np.diff(study.errors) < 0)
    assert list(study.to_frame().columns) == ['h', 'error']


@pytest.mark.slow
@pytest.mark.parametrize('method', ['theta1', 'theta2'])
def test_stiff_ivp_convergence(method):
    study = convergence_study('stiff', H_LIST, method=method)
    assert study.error_norm == 'terminal'
    assert study.slope == pytest.approx(0.5, abs=0.15)
    assert np.all(np.diff(study.errors) < 0)


@pytest.mark.slow
@pytest.mark.parametrize('method', ['theta1', 'theta2'])
def test_stiff_ivp_error(method):
    disc, p = make_stiff_ivp(x0=-1.0, T=5.0, N=100)
    report = newton_armijo_solve(p, SolverConfig(family=method))
    assert report.converged
    assert 3e-4 <= ode_error(disc, report.x_final) <= 3e-3


@pytest.mark.slow
def test_arctan_error():
    disc, p = make_arctan_ivp(x0=1.0, T=1.0, N=80)
    report = newton_armijo_solve(p)
    assert report.converged
    assert 0.03 <= ode_error(disc, report.x_final) <= 0.12


def test_sparse_path(rng):
    A = rng.uniform(-1, 1, (5, 8))
    b = rng.uniform(-0.05, 0, 5)
    lam_big = 10 * np.abs(A.T @ b).max()
    paths = sparse_path(A, b, [lam_big, 0.01, 0.1], methods=('theta1',))
    assert set(paths) == {'theta1', 'lasso'}
    for df in paths.values():
        assert df.shape == (3, 8)
        assert df.index.name == 'lambda'
    npt.assert_allclose(paths['lasso'].index, sorted([lam_big, 0.01, 0.1]))
    npt.assert_allclose(paths['lasso'].iloc[-1], 0.0, atol=1e-12)
    with pytest.raises(ConfigError):
        sparse_path(A, b, [0.0, 0.1])


def test_timing_study():
    df = timing_study(problem_ids=('r3',), methods=('theta1', 'softmax'),
                      samples=3, seed=1)
    assert len(df) == 6
    assert set(df.columns) == {'problem', 'sample', 'method', 'time_ms',
                               'error', 'iterations', 'status'}
    assert (df['time_ms'] > 0).all()


def test_cli_solve_and_trace(tmp_path, capsys):
    trace = tmp_path / 'trace.txt'
    assert main(['solve', '--problem', 'r3:b1', '--theta', '2',
                 '--trace', str(trace)]) == 0
    out = capsys.readouterr().out
    assert 'converged' in out
    lines = trace.read_text().strip().splitlines()
    assert len(lines) > 0
    assert len(lines[0].split(',')) == 5


def test_cli_exit_codes(capsys):
    assert main(['solve', '--problem', 'nope']) == 2
    assert main(['solve', '--problem', 'r3:b1', '--max-iter', '1']) == 3
    assert main(['solve', '--problem', 'r3:b1', '--tol', '-1']) == 2


def test_cli_check_p0(tmp_path, capsys):
    fname = str(tmp_path / 'A.txt')
    write_matrix(np.array([[1.0, 3.0], [1.0, 1.0]]), fname)
    assert main(['check', 'p0', '--matrix', fname]) == 0
    out = capsys.readouterr().out
    assert 'ExactNotP0' in out
    assert '(0, 1)' in out


def test_cli_check_loja(tmp_path, capsys):
    out_csv = tmp_path / 'ratios.csv'
    assert main(['check', 'loja', '--family', 'theta1',
                 '--out', str(out_csv)]) == 0
    assert 'SatisfiedI' in capsys.readouterr().out
    df = pd.read_csv(out_csv)
    assert list(df.columns) == ['x', 'ratio']
    assert len(df) == 200


def test_cli_table_methods(tmp_path):
    spec = tmp_path / 'specs.txt'
    spec.write_text("problem=r3:b1\nmethods=theta1\n")
    assert main(['table', 'methods', '--spec', str(spec),
                 '--out', str(tmp_path), '--format', 'md']) == 0
    assert os.path.exists(tmp_path / 'methods.md')
    assert main(['table', 'methods', '--spec', str(spec),
                 '--out', str(tmp_path)]) == 0
    rows = ingest(str(tmp_path / 'methods.csv'))
    assert rows[0].status == 'converged'
