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
#  intervalowa.discrete - OWA over a finite set of cost scenarios
#

"""Discrete OWA operator, exact and local search solvers, MILP export

The value of a solution is sum_k w'_k a_(k) where a_(1) >= a_(2) >= ...
are its scenario totals sorted nonincreasingly. Scenario totals always
add the selected columns in ascending item order, so every code path
that computes the totals of a set obtains the same floating point
numbers.
"""

import itertools
import logging
import time

import numpy as np

import intervalowa
from intervalowa import lpformat
from intervalowa.errors import CapabilityError, DimensionError, ValidationError
from intervalowa.model import Selection, Solution, UniformMatroid, as_solution
from intervalowa.report import SolveReport
from intervalowa.weights import BinWeights
from intervalowa.workers import WorkQueueManager

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

# Largest number of bases solve_discrete_owa_exact enumerates
ENUMERATION_CAP = 2000000

# Candidates within this relative distance of a chunk minimum are re-evaluated
_RECHECK_TOLERANCE = 1e-9

# Bound on the number of cells of the (scenarios x bases) work matrix
_CHUNK_CELLS = 1 << 22

# Bound on the number of bases held by one chunk
_CHUNK_BASES = 1 << 16


class ScenarioSample(object):
    """K cost scenarios over n items with bin weights w' for the ranks"""

    def __init__(self, scenarios, weights, seed=None):
        scenarios = np.array(scenarios, dtype=float)
        if scenarios.ndim != 2:
            raise DimensionError(2, scenarios.ndim, 'scenario matrix rank')
        if not isinstance(weights, BinWeights):
            weights = BinWeights(weights)
        if weights.K != scenarios.shape[0]:
            raise DimensionError(scenarios.shape[0], weights.K, 'bin weights')
        scenarios.setflags(write=False)
        self.scenarios = scenarios
        self.weights = weights
        self.seed = seed

    @property
    def K(self):
        return self.scenarios.shape[0]

    @property
    def n(self):
        return self.scenarios.shape[1]

    def __repr__(self):
        return 'ScenarioSample(K=%d, n=%d, seed=%r)' % (self.K, self.n, self.seed)


def scenario_totals(scenarios, indices):
    """Totals of the given item columns, added in ascending item order"""
    totals = np.zeros(scenarios.shape[0])
    for i in sorted(indices):
        totals += scenarios[:, i]
    return totals


def owa_of_totals(totals, weights):
    """Sort totals nonincreasingly (ties by scenario index) and weigh by rank

    The sum is taken relative to the smallest total, so equal totals give
    that total back exactly.

    >>> owa_of_totals(np.array([3.0, 1.0, 2.0]), np.array([1.0, 0.0, 0.0]))
    3.0
    """
    order = np.argsort(-totals, kind='stable')
    ranked = totals[order]
    base = ranked[-1]
    return float(base + np.dot(weights, ranked - base))


def discrete_owa_value(sample, x):
    """Discrete OWA of x over the scenarios of sample"""
    x = as_solution(x, sample.n)
    return owa_of_totals(scenario_totals(sample.scenarios, x.indices), sample.weights.values)


def _evaluate_chunk(sample, chunk):
    """Return (value, basis) of the best basis in a chunk of index tuples

    Ties keep the earliest basis of the chunk.
    """
    sizes = set(len(c) for c in chunk)
    if len(sizes) == 1 and chunk[0]:
        index = np.array(chunk, dtype=int)
        totals = np.zeros((sample.K, len(chunk)))
        for column in range(index.shape[1]):
            totals += sample.scenarios[:, index[:, column]]
        ranked = -np.sort(-totals, axis=0)
        base = ranked[-1]
        approx = base + sample.weights.values @ (ranked - base)
        best = approx.min()
        candidates = np.flatnonzero(approx <= best + _RECHECK_TOLERANCE * max(1.0, abs(best)))
    else:
        candidates = range(len(chunk))

    best_value, best_position = None, None
    for position in candidates:
        value = owa_of_totals(scenario_totals(sample.scenarios, chunk[position]), sample.weights.values)
        if best_value is None or value < best_value:
            best_value, best_position = value, int(position)
    return best_value, chunk[best_position]


def _chunks(iterable, size):
    iterator = iter(iterable)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


def solve_discrete_owa_exact(sample, feasibility, thread_limit=None, cap=ENUMERATION_CAP):
    """Minimize the discrete OWA by enumerating all bases

    Ties go to the smallest sorted index tuple, which is the enumeration
    order of the bases.
    """
    if feasibility.n != sample.n:
        raise DimensionError(sample.n, feasibility.n, 'feasibility ground set')

    count = feasibility.basis_count()
    if count > cap:
        raise CapabilityError(_('%d bases exceed the enumeration cap of %d; use local search '
                                'or export the MILP model instead') % (count, cap),
                              {'bases': count, 'cap': cap})

    started = time.perf_counter()
    size = max(1, min(_CHUNK_BASES, _CHUNK_CELLS // max(1, sample.K)))
    manager = WorkQueueManager(lambda chunk: _evaluate_chunk(sample, chunk), thread_limit)
    best_value, best_basis = None, None
    # Chunks are drawn from the basis generator as workers get free
    for value, basis in manager.imap(_chunks(feasibility.bases(), size)):
        if best_value is None or value < best_value:
            best_value, best_basis = value, basis
    if best_basis is None:
        raise ValidationError(_('The feasible set is empty'))

    elapsed = time.perf_counter() - started
    logger.info('Enumerated %d bases in %.3f s, best value %r', count, elapsed, best_value)
    return SolveReport(Solution.from_indices(sample.n, best_basis), best_value, 'exact',
                       K=sample.K, seed=sample.seed, wall_time=elapsed, params={'bases': count})


def local_search_discrete_owa(sample, feasibility, start, max_iters=1000):
    """First-improvement swap search from a feasible start

    The scan removes selected items in ascending order and, for each,
    adds unselected items in ascending order; after an accepted move the
    scan restarts. max_iters bounds the number of accepted moves.
    """
    start = as_solution(start, sample.n)
    if not feasibility.is_feasible(start):
        raise ValidationError(_('Local search needs a feasible start, got %r') % start)

    started = time.perf_counter()
    current = set(start.indices)
    value = discrete_owa_value(sample, start)
    iterations = 0

    improved = True
    while improved and iterations < max_iters:
        improved = False
        for removed in sorted(current):
            for added in range(sample.n):
                if added in current:
                    continue
                candidate = (current - {removed}) | {added}
                x = Solution.from_indices(sample.n, candidate)
                if not feasibility.is_feasible(x):
                    continue
                candidate_value = discrete_owa_value(sample, x)
                if candidate_value < value:
                    current, value = candidate, candidate_value
                    iterations += 1
                    improved = True
                    break
            if improved:
                break

    elapsed = time.perf_counter() - started
    logger.debug('Local search stopped after %d moves at %r', iterations, value)
    return SolveReport(Solution.from_indices(sample.n, current), value, 'local',
                       K=sample.K, seed=sample.seed, wall_time=elapsed,
                       params={'iterations': iterations, 'max_iters': max_iters})


def _cardinality(feasibility):
    if isinstance(feasibility, Selection):
        return feasibility.p
    if isinstance(feasibility, UniformMatroid):
        return feasibility.rank
    raise ValidationError(_('MILP export supports selection and uniform matroid feasibility only'))


def milp_model(sample, feasibility):
    """Build the duality-based MILP of the discrete OWA problem

    min sum_k (a_k + b_k)
    s.t. a_k + b_j >= w'_k * sum_i c^j_i x_i   for all ranks k, scenarios j
         sum_i x_i = p,  x binary,  a, b free
    """
    if not sample.weights.is_nonincreasing():
        raise ValidationError(_('The MILP formulation requires nonincreasing bin weights'))
    if feasibility.n != sample.n:
        raise DimensionError(sample.n, feasibility.n, 'feasibility ground set')
    p = _cardinality(feasibility)

    x = ['x%d' % (i + 1) for i in range(sample.n)]
    a = ['a%d' % (k + 1) for k in range(sample.K)]
    b = ['b%d' % (k + 1) for k in range(sample.K)]

    model = lpformat.LPModel(comment='intervalowa discrete OWA model, K=%d, n=%d, p=%d'
                             % (sample.K, sample.n, p))
    model.set_objective('obj', [(1.0, name) for pair in zip(a, b) for name in pair])

    for k, weight in enumerate(sample.weights.values):
        for j in range(sample.K):
            terms = [(1.0, a[k]), (1.0, b[j])]
            terms.extend((-weight * c, x[i]) for i, c in enumerate(sample.scenarios[j]) if weight * c != 0)
            model.add_constraint('dual_%d_%d' % (k + 1, j + 1), terms, '>=', 0.0)

    model.add_constraint('card', [(1.0, name) for name in x], '=', float(p))
    model.free.extend(a + b)
    model.binaries.extend(x)
    return model


def export_milp(sample, feasibility):
    """Return the MILP model in CPLEX LP text format"""
    return milp_model(sample, feasibility).write()
