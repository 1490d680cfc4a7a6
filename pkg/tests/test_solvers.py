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

import pytest

from intervalowa import discrete, sampling, solvers
from intervalowa.errors import MatroidViolation, ParameterError, ValidationError
from intervalowa.generators import generate_instance
from intervalowa.model import IntervalInstance, MatroidOracle, Selection
from intervalowa.weights import (cumulative_from_function, cumulative_power, make_power_weight,
                                 make_uniform_weight)


def enumeration_minimum(sample, feasibility):
    return min(discrete.owa_of_totals(discrete.scenario_totals(sample.scenarios, basis), sample.weights.values)
               for basis in feasibility.bases())


def test_midpoint_selects_cheapest_midpoint(table1_select_one):
    report = solvers.solve_midpoint(table1_select_one)
    assert report.solution.one_based() == [1]
    assert report.reported_objective == 3.0
    assert report.solver == 'midpoint'
    assert report.K is None


def test_midpoint_on_explicit_set_prefers_smaller_index_tuple(table1, x1):
    # Both solutions have midpoint cost 6
    report = solvers.solve_midpoint(table1)
    assert report.solution == x1
    assert report.reported_objective == 6.0


def test_yager_with_linear_quantifier(table1_select_one):
    report = solvers.solve_yager(table1_select_one, cumulative_from_function(lambda y: y))
    assert report.params['lambda'] == pytest.approx(0.5, abs=1e-12)
    assert report.reported_objective == pytest.approx(3.0, abs=1e-10)
    assert report.solution.one_based() == [1]


def test_yager_lambda_shifts_costs():
    instance = IntervalInstance([(0, 10), (4, 5)], Selection(2, 1))
    optimistic = solvers.solve_yager(instance, cumulative_from_function(lambda y: y ** 4))
    pessimistic = solvers.solve_yager(instance, cumulative_power(5))
    assert optimistic.solution.one_based() == [1]
    assert pessimistic.solution.one_based() == [2]
    assert pessimistic.params['lambda'] == pytest.approx(5 / 6, abs=1e-10)
    assert pessimistic.params['cumulative'] == 'power:5'


def test_sampling_finds_better_solution(table1, x1):
    report = solvers.solve_sampling(table1, make_power_weight(3), 10000, seed=11)
    assert report.solution == x1
    assert report.solver == 'sampling'
    assert report.K == 10000
    assert report.seed == 11
    assert report.params['inner'] == 'exact'
    assert report.params['weight'] == 'power:3'


def test_sampling_objective_is_enumeration_minimum():
    instance = generate_instance('II', 8, seed=5, p=4)
    w = make_power_weight(5)
    report = solvers.solve_sampling(instance, w, 50, seed=9)
    sample = sampling.sample_scenarios(instance, 50, 9, w)
    assert report.reported_objective == enumeration_minimum(sample, instance.feasibility)
    assert report.reported_objective == discrete.discrete_owa_value(sample, report.solution)


def test_sampling_with_local_search():
    instance = generate_instance('I', 9, seed=2, p=3)
    w = make_power_weight(2)
    exact = solvers.solve_sampling(instance, w, 40, seed=1)
    local = solvers.solve_sampling(instance, w, 40, seed=1, inner='local', max_iters=50)
    assert instance.feasibility.is_feasible(local.solution)
    assert local.params['inner'] == 'local'
    assert local.reported_objective >= exact.reported_objective


def test_sampling_thread_parity():
    instance = generate_instance('II', 10, seed=8, p=5)
    w = make_power_weight(1.5)
    inline = solvers.solve_sampling(instance, w, 30, seed=4, thread_limit=1)
    threaded = solvers.solve_sampling(instance, w, 30, seed=4, thread_limit=4)
    assert inline.solution == threaded.solution
    assert inline.reported_objective == threaded.reported_objective


def test_sampling_rejects_unknown_inner(table1):
    with pytest.raises(ParameterError):
        solvers.solve_sampling(table1, make_uniform_weight(), 10, seed=0, inner='annealing')


def test_greedy_needs_matroid(table1):
    with pytest.raises(ValidationError):
        solvers.solve_greedy_matroid(table1, make_power_weight(2), 10, seed=0)


@pytest.mark.parametrize('seed', [0, 1, 2, 3])
def test_greedy_cache_does_not_change_result(seed):
    instance = generate_instance('II', 9, seed=seed, p=4)
    w = make_power_weight(5)
    cached = solvers.solve_greedy_matroid(instance, w, 200, seed=seed, use_cache=True)
    plain = solvers.solve_greedy_matroid(instance, w, 200, seed=seed, use_cache=False)
    assert cached.solution == plain.solution
    assert cached.reported_objective == plain.reported_objective
    assert cached.params['cache'] is True
    assert plain.params['cache'] is False


def test_greedy_reports_sample_objective():
    instance = generate_instance('I', 7, seed=3, p=3)
    w = make_power_weight(2)
    report = solvers.solve_greedy_matroid(instance, w, 64, seed=6)
    sample = sampling.sample_scenarios(instance, 64, 6, w)
    assert report.solution.count == 3
    assert report.reported_objective == discrete.discrete_owa_value(sample, report.solution)
    assert report.reported_objective >= enumeration_minimum(sample, instance.feasibility)


def test_greedy_single_item_is_optimal():
    instance = generate_instance('II', 6, seed=4, p=1)
    w = make_power_weight(3)
    greedy = solvers.solve_greedy_matroid(instance, w, 100, seed=2)
    exact = solvers.solve_sampling(instance, w, 100, seed=2)
    assert greedy.solution == exact.solution


def test_greedy_detects_broken_rank():
    oracle = MatroidOracle(3, lambda s: len(s) <= 1, rank=2)
    instance = IntervalInstance([(1, 2), (2, 3), (3, 4)], oracle)
    with pytest.raises(MatroidViolation) as excinfo:
        solvers.solve_greedy_matroid(instance, make_uniform_weight(), 5, seed=0)
    assert excinfo.value.data['rank'] == 2
    assert len(excinfo.value.data['selected']) == 1


def test_nominal_solution_on_partition_matroid():
    blocks = ({0, 1}, {2, 3})
    oracle = MatroidOracle(4, lambda s: all(len(s & block) <= 1 for block in blocks))
    x = solvers.nominal_solution(oracle, [5, 1, 3, 2])
    assert x.indices == (1, 3)


def test_report_json(table1_select_one):
    text = solvers.solve_midpoint(table1_select_one).to_json()
    assert '"selected": [\n    1\n  ]' in text
    assert '"solver": "midpoint"' in text
