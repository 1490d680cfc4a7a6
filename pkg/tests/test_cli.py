# -*- coding: utf-8 -*-
#
# intervalowa - Ordered weighted averaging under interval uncertainty
# Copyright (c) 2024 The intervalowa developers
#
# intervalowa is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# intervalowa is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

import json
import os
import sys

import pytest

import intervalowa
from intervalowa import cli, config, generators, instancefile, lpformat
from intervalowa.model import UniformMatroid


@pytest.fixture(autouse=True)
def isolated_logging(monkeypatch):
    monkeypatch.setattr(sys, 'excepthook', sys.excepthook)
    monkeypatch.delenv(intervalowa.ENV_LOG_DIR, raising=False)


def test_generate_to_file(tmp_path):
    filename = str(tmp_path / 'instance.json')
    assert cli.main(['generate', '--type', 'II', '--n', '5', '--seed', '1', '-o', filename]) == 0
    assert instancefile.load_instance(filename) == generators.generate_instance('II', 5, 1)


def test_generate_to_stdout(capsys):
    assert cli.main(['generate', '--type', 'I', '--n', '4', '--seed', '0', '--rank', '2']) == 0
    instance = instancefile.parse_instance(capsys.readouterr().out)
    assert instance.n == 4
    assert isinstance(instance.feasibility, UniformMatroid)


def test_evaluate_exact(capsys, example_file):
    code = cli.main(['evaluate', example_file('table1.json'), example_file('table1-x1.json'),
                     '--weight', 'power:3'])
    assert code == 0
    assert float(capsys.readouterr().out) == pytest.approx(7.4, abs=1e-4)


def test_evaluate_sampled(capsys, example_file):
    code = cli.main(['evaluate', example_file('table1.json'), example_file('table1-x2.json'),
                     '--weight', 'uniform', '--method', 'sample', '--K', '20000', '--seed', '5'])
    assert code == 0
    assert float(capsys.readouterr().out) == pytest.approx(6.0, abs=0.1)


def test_evaluate_hurwicz_closed_form(capsys, example_file):
    code = cli.main(['evaluate', example_file('table1.json'), example_file('table1-x1.json'),
                     '--weight', 'hurwicz:0.25:0.1', '--method', 'hurwicz'])
    assert code == 0
    # 0.25 * 10 + 0.75 * 2
    assert capsys.readouterr().out == '4.0\n'


def test_weight_profile(capsys):
    assert cli.main(['weight-profile', 'power:1', 'power:2', 'cvar:0.5', '--points', '5']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 't,w(power:1),W(power:1),w(power:2),W(power:2),w(cvar:0.5),W(cvar:0.5)'
    assert len(lines) == 6
    assert lines[1] == '0.0,1.0,0.0,2.0,0.0,2.0,0.0'
    assert lines[3] == '0.5,1.0,0.5,1.0,0.75,0.0,1.0'
    assert lines[5] == '1.0,1.0,1.0,0.0,1.0,0.0,1.0'


def test_weight_profile_to_file(tmp_path):
    filename = str(tmp_path / 'weights.csv')
    assert cli.main(['weight-profile', 'power:5', '-o', filename]) == 0
    with open(filename) as fp:
        lines = fp.read().splitlines()
    assert len(lines) == 102
    assert lines[1] == '0.0,5.0,0.0'


def test_solve_writes_report(tmp_path, example_file):
    filename = str(tmp_path / 'report.json')
    assert cli.main(['solve', example_file('table1.json'), '--solver', 'midpoint', '--out', filename]) == 0
    with open(filename) as fp:
        report = json.load(fp)
    assert report['solver'] == 'midpoint'
    assert report['selected'] == [1, 2]
    assert report['objective'] == 6.0


def test_solve_sampling_to_stdout(capsys, example_file):
    code = cli.main(['solve', example_file('table1.json'), '--solver', 'sampling',
                     '--weight', 'power:3', '--K', '5000', '--seed', '2'])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report['selected'] == [1, 2]
    assert report['K'] == 5000
    assert report['params']['inner'] == 'exact'


def test_solve_greedy_needs_matroid(capsys, example_file):
    assert cli.main(['solve', example_file('table1.json'), '--solver', 'greedy']) == 1
    assert capsys.readouterr().err.startswith('Error: ')


def test_export_milp(tmp_path):
    instance_file = str(tmp_path / 'instance.json')
    lp_file = str(tmp_path / 'model.lp')
    instancefile.save_instance(generators.generate_instance('I', 4, seed=3, p=2), instance_file)
    code = cli.main(['export-milp', instance_file, '--weight', 'power:2', '--K', '3', '--seed', '0',
                     '-o', lp_file])
    assert code == 0
    with open(lp_file) as fp:
        model = lpformat.parse_lp(fp.read())
    assert model.binaries == ['x1', 'x2', 'x3', 'x4']
    assert len(model.constraints) == 3 * 3 + 1


def test_profile(capsys, example_file):
    code = cli.main(['profile', example_file('table1.json'), example_file('table1-x2.json'),
                     '--points', '5'])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 't,var'
    assert len(lines) == 6
    assert lines[-1] == '1.0,10.0'
    values = [float(line.split(',')[1]) for line in lines[1:]]
    assert values == sorted(values)
    assert values[2] == pytest.approx(6.0, abs=1e-6)


@pytest.mark.parametrize('argv', [
    ['profile', 'table1.json', 'table1-x2.json', '--points', '1'],
    ['evaluate', 'table1.json', 'table1-x1.json', '--weight', 'power:0.5'],
    ['evaluate', 'table1.json', 'table1-x1.json', '--weight', 'lognormal:1'],
    ['evaluate', 'table1.json', 'missing.json', '--weight', 'uniform'],
    ['evaluate', 'table1.json', 'table1-x1.json', '--weight', 'power:2', '--method', 'hurwicz'],
    ['weight-profile', 'power:2', '--points', '1'],
    ['weight-profile', 'power:2', 'bogus'],
])
def test_errors_exit_with_one(capsys, example_file, argv):
    argv = [example_file(arg) if arg.endswith('.json') else arg for arg in argv]
    assert cli.main(argv) == 1
    assert 'Error: ' in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['generate', '--type', 'I', '--n', '0', '--seed', '1'])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['generate', '--type', 'I', '--n', '4', '--seed', '1', '--p', '2', '--rank', '2'])
    assert excinfo.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['--version'])
    assert excinfo.value.code == 0
    assert intervalowa.__version__ in capsys.readouterr().out


def test_experiment(capsys, tmp_path, example_file):
    output = str(tmp_path / 'results')
    overrides = ['experiment.instances=1', 'experiment.n=5', 'experiment.p=2', 'sampling.K_eval=500',
                 'sampling.greedy_K=10', 'output.directory=' + output]
    argv = ['experiment', example_file('experiment2.json')]
    for override in overrides:
        argv.extend(['--set', override])
    assert cli.main(argv) == 0
    assert capsys.readouterr().out.startswith('6 rows written to ')
    assert sorted(os.listdir(output)) == ['experiment2.csv', 'experiment2_config.json', 'experiment2_plot.csv']

    # The saved settings rerun the same experiment
    saved = config.load_config(os.path.join(output, 'experiment2_config.json'))
    assert saved.experiment.n == 5
    assert saved.sampling.greedy_K == 10
    assert saved.output.directory == output


def test_experiment_with_bad_override(capsys, example_file):
    argv = ['experiment', example_file('experiment1.json'), '--set', 'experiment.number=7']
    assert cli.main(argv) == 1
    assert 'Error: ' in capsys.readouterr().err
