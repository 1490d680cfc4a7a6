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

from intervalowa.errors import DimensionError, ValidationError
from intervalowa.model import (ExplicitFeasibleSet, Interval, IntervalInstance, MatroidOracle, Selection,
                               Solution, UniformMatroid, as_solution, deterministic_cost, is_feasible)


def partition_matroid():
    # At most one item from {1, 2} and at most one from {3, 4}
    return MatroidOracle(4, lambda s: len(s & {0, 1}) <= 1 and len(s & {2, 3}) <= 1)


def test_interval_properties():
    item = Interval(2, 10)
    assert item.width == 8.0
    assert item.midpoint == 6.0
    assert not item.is_degenerate()
    assert Interval(4, 4).is_degenerate()


@pytest.mark.parametrize('lo,hi', [(5, 1), (float('nan'), 1), (0, float('inf'))])
def test_interval_rejects_bad_bounds(lo, hi):
    with pytest.raises(ValidationError):
        Interval(lo, hi)


def test_instance_names_offending_item():
    with pytest.raises(ValidationError, match='Item 2'):
        IntervalInstance([(1, 2), (5, 1)], Selection(2, 1))


def test_table1_instance(table1):
    assert table1.n == 3
    assert table1.lo.tolist() == [1.0, 1.0, 2.0]
    assert table1.midpoints.tolist() == [3.0, 3.0, 6.0]
    assert table1.widths.tolist() == [4.0, 4.0, 8.0]
    assert not table1.is_degenerate()


def test_degenerate_instance():
    instance = IntervalInstance([(4, 4)], Selection(1, 1))
    assert instance.is_degenerate()
    assert instance.widths.tolist() == [0.0]


def test_instance_bounds_are_read_only(table1):
    with pytest.raises(ValueError):
        table1.lo[0] = 0.0


def test_instance_feasibility_size_mismatch():
    with pytest.raises(DimensionError):
        IntervalInstance([(1, 2), (2, 3)], Selection(3, 1))


def test_instance_equality(table1):
    same = IntervalInstance([(1, 5), (1, 5), (2, 10)], table1.feasibility)
    assert same == table1
    assert table1.with_feasibility(Selection(3, 1)) != table1


def test_solution_basics():
    x = Solution([1, 0, 1])
    assert x.indices == (0, 2)
    assert x.one_based() == [1, 3]
    assert repr(x) == 'Solution(101)'
    assert list(x) == [1, 0, 1]
    assert hash(x) == hash(Solution.from_indices(3, [2, 0]))


def test_solution_rejects_bad_entries():
    with pytest.raises(ValidationError):
        Solution([0, 2, 1])
    with pytest.raises(DimensionError):
        Solution(np.zeros((2, 2)))
    with pytest.raises(ValidationError):
        Solution.from_indices(3, [3])


def test_as_solution_checks_length():
    with pytest.raises(DimensionError):
        as_solution([1, 0], 3)


def test_selection():
    selection = Selection(4, 2)
    assert selection.is_feasible([1, 0, 0, 1])
    assert not selection.is_feasible([1, 1, 1, 0])
    assert selection.basis_count() == 6
    assert list(selection.bases())[:2] == [(0, 1), (0, 2)]
    assert selection.as_dict() == {'type': 'selection', 'p': 2}
    with pytest.raises(ValidationError):
        Selection(3, 4)


def test_is_feasible_wrong_length(table1_select_one):
    with pytest.raises(DimensionError):
        is_feasible(table1_select_one, [1, 0])


def test_explicit_feasible_set(x1, x2):
    feasible = ExplicitFeasibleSet(3, [x2, x1, x2])
    assert list(feasible.bases()) == [(0, 1), (2,)]
    assert feasible.is_feasible(x1)
    assert not feasible.is_feasible([1, 0, 0])
    assert feasible.as_dict() == {'type': 'explicit', 'solutions': [[1, 2], [3]]}
    assert not feasible.is_matroid
    with pytest.raises(ValidationError):
        feasible.is_independent([0])


def test_matroid_oracle():
    matroid = partition_matroid()
    assert matroid.rank == 2
    assert matroid.is_basis([0, 2])
    assert not matroid.is_basis([0])
    assert not matroid.is_feasible([1, 1, 0, 0])
    assert list(matroid.bases()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    with pytest.raises(ValidationError):
        matroid.as_dict()


def test_uniform_matroid():
    matroid = UniformMatroid(5, 2)
    assert matroid.rank == 2
    assert matroid.is_feasible([0, 1, 0, 1, 0])
    assert matroid == UniformMatroid(5, 2)
    assert matroid.as_dict() == {'type': 'uniform_matroid', 'rank': 2}
    with pytest.raises(ValidationError):
        UniformMatroid(2, 3)


def test_deterministic_cost():
    assert deterministic_cost([3, 3, 6], [1, 1, 0]) == 6.0
    assert deterministic_cost([0.1] * 10, [1] * 10) == 1.0
    with pytest.raises(DimensionError):
        deterministic_cost([1, 2], [1, 0, 1])
