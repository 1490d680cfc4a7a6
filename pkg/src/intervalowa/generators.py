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

#
#  intervalowa.generators - Random benchmark instances
#
#  All integer ranges are inclusive.
#

import logging

import numpy as np

import intervalowa
from intervalowa.errors import ParameterError
from intervalowa.model import IntervalInstance, Selection, UniformMatroid

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

INSTANCE_TYPES = ('I', 'II')


def _feasibility(n, p=None, rank=None):
    if p is not None and rank is not None:
        raise ParameterError(_('Give either a selection size or a matroid rank, not both'))
    if rank is not None:
        return UniformMatroid(n, rank)
    return Selection(n, n // 2 if p is None else p)


def _check_size(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ParameterError(_('Number of items must be a positive integer, got %r') % (n,))
    return int(n)


def gen_type1(n, seed, p=None, rank=None):
    """Random pair: each interval spans two uniform integers from 1 to 11

    >>> instance = gen_type1(5, seed=1)
    >>> all(1 <= item.lo <= item.hi <= 11 for item in instance.items)
    True
    """
    n = _check_size(n)
    rng = np.random.default_rng(seed)
    draws = rng.integers(1, 11, size=(n, 2), endpoint=True)
    lo, hi = draws.min(axis=1), draws.max(axis=1)
    return IntervalInstance.from_bounds(lo, hi, _feasibility(n, p, rank))


def gen_type2(n, seed, p=None, rank=None):
    """Midpoint deviation: midpoint from 14 to 17, deviation from 1 to 11"""
    n = _check_size(n)
    rng = np.random.default_rng(seed)
    midpoints = rng.integers(14, 17, size=n, endpoint=True)
    deviations = rng.integers(1, 11, size=n, endpoint=True)
    return IntervalInstance.from_bounds(midpoints - deviations, midpoints + deviations,
                                        _feasibility(n, p, rank))


GENERATORS = {
    'I': gen_type1,
    'II': gen_type2,
}


def generate_instance(instance_type, n, seed, p=None, rank=None):
    try:
        generator = GENERATORS[instance_type]
    except KeyError:
        raise ParameterError(_('Unknown instance type %r (expected I or II)') % (instance_type,))
    logger.debug('Generating type %s instance with n=%d, seed=%r', instance_type, n, seed)
    return generator(n, seed, p, rank)
