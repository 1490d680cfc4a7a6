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

import numpy as np
import pytest

from intervalowa import sampling
from intervalowa.discrete import scenario_totals
from intervalowa.errors import ParameterError
from intervalowa.model import IntervalInstance, Selection
from intervalowa.weights import make_power_weight, make_uniform_weight


def test_derive_seed_is_deterministic_and_separated():
    assert sampling.derive_seed(7, 'solver', 1, 10) == sampling.derive_seed(7, 'solver', 1, 10)
    seeds = {
        sampling.derive_seed(7, 'instance', 1),
        sampling.derive_seed(7, 'solver', 1),
        sampling.derive_seed(7, 'evaluation', 1),
        sampling.derive_seed(7, 'solver', 2),
        sampling.derive_seed(8, 'solver', 1),
    }
    assert len(seeds) == 5
    assert all(0 <= seed < 2 ** 63 for seed in seeds)


def test_derive_seed_errors():
    with pytest.raises(ParameterError):
        sampling.derive_seed(0, 'training')
    with pytest.raises(ParameterError):
        sampling.derive_seed(-1, 'solver')


def test_scenarios_stay_in_their_intervals(table1):
    sample = sampling.sample_scenarios(table1, 1000, seed=3)
    assert sample.scenarios.shape == (1000, 3)
    assert np.all(sample.scenarios >= table1.lo)
    assert np.all(sample.scenarios <= table1.hi)
    assert sample.seed == 3


def test_default_weights_are_uniform(table1):
    sample = sampling.sample_scenarios(table1, 4, seed=0)
    assert sample.weights.values.tolist() == [0.25] * 4


def test_weights_follow_density(table1):
    sample = sampling.sample_scenarios(table1, 2, seed=0, w=make_power_weight(2))
    assert sample.weights.values.tolist() == [0.75, 0.25]


def test_sample_mean(table1):
    sample = sampling.sample_scenarios(table1, 100000, seed=11)
    assert sample.scenarios[:, 2].mean() == pytest.approx(6.0, abs=0.1)


def test_same_draws_for_any_thread_count(table1):
    K = 3 * sampling.BLOCK_SIZE + 17
    inline = sampling.sample_scenarios(table1, K, seed=5, thread_limit=1)
    threaded = sampling.sample_scenarios(table1, K, seed=5, thread_limit=4)
    assert np.array_equal(inline.scenarios, threaded.scenarios)


def test_smaller_samples_are_prefixes(table1):
    small = sampling.sample_scenarios(table1, 100, seed=9)
    large = sampling.sample_scenarios(table1, sampling.BLOCK_SIZE + 100, seed=9)
    assert np.array_equal(small.scenarios, large.scenarios[:100])


def test_sample_totals_match_scenario_totals(table1, x1):
    K = sampling.BLOCK_SIZE + 5
    sample = sampling.sample_scenarios(table1, K, seed=2)
    totals = sampling.sample_totals(table1, x1, K, seed=2, thread_limit=2)
    assert np.array_equal(totals, scenario_totals(sample.scenarios, x1.indices))


@pytest.mark.parametrize('K', [0, -3, 1.5])
def test_bad_sample_size(table1, K):
    with pytest.raises(ParameterError):
        sampling.sample_scenarios(table1, K, seed=0)


def test_degenerate_sampled_owa_is_exact():
    instance = IntervalInstance([(4, 4), (0.1, 0.1)], Selection(2, 2))
    assert sampling.interval_owa_sampled(instance, make_power_weight(5), [1, 1], 1000, seed=1) == 4.1


def test_sampled_owa_is_reproducible(table1, x1):
    w = make_power_weight(3)
    first = sampling.interval_owa_sampled(table1, w, x1, 5000, seed=4)
    assert sampling.interval_owa_sampled(table1, w, x1, 5000, seed=4, thread_limit=1) == first
    assert 2.0 <= first <= 10.0


def test_sampled_owa_uniform_weight(table1, x1):
    value = sampling.interval_owa_sampled(table1, make_uniform_weight(), x1, 100000, seed=8)
    assert value == pytest.approx(6.0, abs=0.05)


def test_steep_power_weight_at_large_sample_size(table1, x1):
    value = sampling.interval_owa_sampled(table1, make_power_weight(64), x1, 100000, seed=0)
    assert 9 < value <= 10


def test_empirical_quantiles(table1, x2):
    quantiles = sampling.empirical_quantiles(table1, x2, 1000, seed=6)
    values = quantiles.sorted_values
    assert quantiles.K == 1000
    assert np.all(np.diff(values) >= 0)
    assert quantiles.var(0.0) == values[0]
    assert quantiles.var(1.0) == values[-1]
    assert quantiles.var(0.5) == values[499]
    assert quantiles.var(0.5001) == values[500]
    assert quantiles.var(0.5) == pytest.approx(6.0, abs=0.5)
    with pytest.raises(ParameterError):
        quantiles.var(1.1)


@pytest.mark.slow
@pytest.mark.parametrize('w,expected,tolerance', [
    (make_uniform_weight(), 6.0, 0.01),
    (make_power_weight(3), 7.4, 0.02),
])
def test_large_sample_matches_exact_value(table1, x1, w, expected, tolerance):
    value = sampling.interval_owa_sampled(table1, w, x1, 1000000, seed=2024)
    assert value == pytest.approx(expected, abs=tolerance)


@pytest.mark.slow
def test_error_shrinks_with_sample_size(table1, x1):
    w = make_power_weight(3)
    medians = []
    for K in (100, 1000, 10000, 100000):
        errors = [abs(sampling.interval_owa_sampled(table1, w, x1, K, seed) - 7.4) for seed in range(21)]
        medians.append(float(np.median(errors)))
    assert all(later <= earlier for earlier, later in zip(medians, medians[1:]))
    assert medians[-1] <= 0.02
