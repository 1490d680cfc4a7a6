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
#  intervalowa.sampling - Monte Carlo scenarios from a counter-based RNG
#
#  Scenarios are produced in blocks of BLOCK_SIZE. Block b is drawn from a
#  Philox generator keyed by the seed with its counter starting at b << 128,
#  row by row over the n items. Scenario j and item i therefore get the
#  same draw whatever K, the block order or the number of threads.
#

import logging
import math

import numpy as np

import intervalowa
from intervalowa.discrete import ScenarioSample, owa_of_totals
from intervalowa.errors import ParameterError
from intervalowa.model import as_solution
from intervalowa.weights import BinWeights, bin_integrals
from intervalowa.workers import WorkQueueManager

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

BLOCK_SIZE = 4096

# Tags of the disjoint seed streams derived from one base seed
SEED_TAGS = {
    'instance': 0,
    'solver': 1,
    'evaluation': 2,
}


def derive_seed(base, tag, *indices):
    """Derive a 63-bit seed for stream tag and the given indices

    >>> derive_seed(0, 'solver', 3) == derive_seed(0, 'solver', 3)
    True
    >>> derive_seed(0, 'solver', 3) == derive_seed(0, 'evaluation', 3)
    False
    """
    if tag not in SEED_TAGS:
        raise ParameterError(_('Unknown seed stream: %r') % (tag,))
    sequence = np.random.SeedSequence(entropy=_check_seed(base),
                                      spawn_key=(SEED_TAGS[tag],) + tuple(int(i) for i in indices))
    return int(sequence.generate_state(1, dtype=np.uint64)[0]) >> 1


def _check_seed(seed):
    if isinstance(seed, bool) or int(seed) != seed or seed < 0:
        raise ParameterError(_('Seeds must be nonnegative integers, got %r') % (seed,))
    return int(seed)


def _check_count(K):
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ParameterError(_('Number of scenarios must be a positive integer, got %r') % (K,))
    return int(K)


def _philox_key(seed):
    words = np.random.SeedSequence(_check_seed(seed)).generate_state(4, dtype=np.uint32)
    return sum(int(word) << (32 * position) for position, word in enumerate(words))


def uniform_block(key, block, rows, n):
    """Uniform draws of shape (rows, n) for block number block"""
    generator = np.random.Generator(np.random.Philox(key=key, counter=block << 128))
    return generator.random((rows, n))


def _blocks(K):
    return [(block, min(BLOCK_SIZE, K - block * BLOCK_SIZE)) for block in range(math.ceil(K / BLOCK_SIZE))]


def sample_scenarios(instance, K, seed, w=None, thread_limit=None):
    """Draw K scenarios uniformly from the box of item intervals

    The bin weights are bin_integrals(w, K), or 1/K each when w is None.
    """
    K = _check_count(K)
    key = _philox_key(seed)
    lo, widths = instance.lo, instance.widths

    def draw(task):
        block, rows = task
        return lo + widths * uniform_block(key, block, rows, instance.n)

    manager = WorkQueueManager(draw, thread_limit)
    scenarios = np.concatenate(manager.map(_blocks(K)), axis=0)
    weights = bin_integrals(w, K) if w is not None else BinWeights(np.full(K, 1 / K))
    return ScenarioSample(scenarios, weights, seed)


def sample_totals(instance, x, K, seed, thread_limit=None):
    """Scenario totals of x for the scenarios sample_scenarios() draws

    The totals equal scenario_totals() on the full scenario matrix bit for
    bit, without holding the matrix in memory.
    """
    K = _check_count(K)
    x = as_solution(x, instance.n)
    key = _philox_key(seed)
    lo, widths = instance.lo, instance.widths

    def draw(task):
        block, rows = task
        u = uniform_block(key, block, rows, instance.n)
        totals = np.zeros(rows)
        for i in x.indices:
            totals += lo[i] + widths[i] * u[:, i]
        return totals

    manager = WorkQueueManager(draw, thread_limit)
    return np.concatenate(manager.map(_blocks(K)))


def interval_owa_sampled(instance, w, x, K, seed, thread_limit=None):
    """Discrete OWA of x over K sampled scenarios with weights bin_integrals(w, K)"""
    totals = sample_totals(instance, x, K, seed, thread_limit)
    value = owa_of_totals(totals, bin_integrals(w, K).values)
    logger.debug('Sampled OWA with K=%d, seed=%r: %r', K, seed, value)
    return value


class EmpiricalQuantiles(object):
    """Sorted sampled totals and the sample quantile function"""

    def __init__(self, sorted_values, seed, K):
        self.sorted_values = np.asarray(sorted_values, dtype=float)
        self.seed = seed
        self.K = int(K)

    def var(self, t):
        """Sample VaR_t: the ceil(t K)-th smallest value; VaR_0 is the minimum"""
        if not 0 <= t <= 1:
            raise ParameterError(_('Probability must lie in [0, 1], got %r') % t)
        rank = max(1, math.ceil(t * self.K))
        return float(self.sorted_values[rank - 1])


def empirical_quantiles(instance, x, K, seed, thread_limit=None):
    totals = sample_totals(instance, x, K, seed, thread_limit)
    return EmpiricalQuantiles(np.sort(totals), seed, len(totals))
