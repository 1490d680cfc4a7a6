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

import os

import pytest

from intervalowa.model import ExplicitFeasibleSet, IntervalInstance, Selection, Solution

EXAMPLES_DIR = os.path.join(os.path.dirname(__file__), '..', 'share', 'intervalowa', 'examples')

TABLE1_INTERVALS = [(1, 5), (1, 5), (2, 10)]


@pytest.fixture
def example_file():
    """Path of a file in share/intervalowa/examples"""
    return lambda name: os.path.join(EXAMPLES_DIR, name)


@pytest.fixture
def x1():
    return Solution([1, 1, 0])


@pytest.fixture
def x2():
    return Solution([0, 0, 1])


@pytest.fixture
def table1(x1, x2):
    """Three items, feasible set {x1, x2} = {x : x1 - x2 = 0, x1 + x3 = 1}"""
    return IntervalInstance(TABLE1_INTERVALS, ExplicitFeasibleSet(3, [x1, x2]))


@pytest.fixture
def table1_select_one():
    return IntervalInstance(TABLE1_INTERVALS, Selection(3, 1))
