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
#  intervalowa.solvers - Sampling, greedy and baseline solvers
#

import logging
import time

import numpy as np

import intervalowa
from intervalowa import discrete, sampling
from intervalowa.distribution import yager_value
from intervalowa.errors import MatroidViolation, ParameterError, ValidationError
from intervalowa.model import ExplicitFeasibleSet, Solution, deterministic_cost
from intervalowa.report import SolveReport
from intervalowa.weights import yager_lambda

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

INNER_SOLVERS = ('exact', 'local')


def nominal_solution(feasibility, costs):
    """Minimize a linear cost over the feasible set; ties go to smaller indices"""
    costs = np.asarray(costs, dtype=float)

    if feasibility.is_matroid:
        # Matroid greedy in ascending cost order is optimal
        order = np.argsort(costs, kind='stable')
        basis = []
        for e in order:
            if len(basis) == feasibility.rank:
                break
            if feasibility.is_independent(basis + [int(e)]):
                basis.append(int(e))
        return Solution.from_indices(feasibility.n, basis)

    if isinstance(feasibility, ExplicitFeasibleSet):
        best, best_value = None, None
        for basis in feasibility.bases():
            value = deterministic_cost(costs, Solution.from_indices(feasibility.n, basis))
            if best_value is None or value < best_value:
                best, best_value = basis, value
        return Solution.from_indices(feasibility.n, best)

    raise ValidationError(_('No nominal solver for %r') % (feasibility,))


def solve_nominal(instance, costs, solver='nominal', params=None):
    started = time.perf_counter()
    x = nominal_solution(instance.feasibility, costs)
    value = deterministic_cost(costs, x)
    return SolveReport(x, value, solver, wall_time=time.perf_counter() - started, params=params)


def solve_midpoint(instance):
    """Nominal optimum for the interval midpoints; a 2-approximation for
    nonincreasing weight densities and optimal for symmetric ones"""
    return solve_nominal(instance, instance.midpoints, 'midpoint')


def solve_yager(instance, W, quad_tol=1e-10):
    """Nominal optimum for lambda * hi + (1 - lambda) * lo, lambda from W"""
    started = time.perf_counter()
    lam = yager_lambda(W, quad_tol)
    costs = lam * instance.hi + (1 - lam) * instance.lo
    x = nominal_solution(instance.feasibility, costs)
    return SolveReport(x, yager_value(instance, x, lam), 'yager',
                       wall_time=time.perf_counter() - started,
                       params={'lambda': lam, 'cumulative': W.name})


def solve_sampling(instance, w, K, seed, inner='exact', max_iters=1000, thread_limit=None,
                   cap=discrete.ENUMERATION_CAP):
    """Sample K scenarios and minimize their discrete OWA

    inner='exact' enumerates all bases; inner='local' runs the swap
    search from the midpoint solution.
    """
    if inner not in INNER_SOLVERS:
        raise ParameterError(_('Unknown inner solver: %r') % (inner,))

    started = time.perf_counter()
    sample = sampling.sample_scenarios(instance, K, seed, w, thread_limit)
    if inner == 'exact':
        report = discrete.solve_discrete_owa_exact(sample, instance.feasibility, thread_limit, cap)
    else:
        start = solve_midpoint(instance).solution
        report = discrete.local_search_discrete_owa(sample, instance.feasibility, start, max_iters)

    elapsed = time.perf_counter() - started
    logger.info('Sampling solver (K=%d, inner=%s) finished in %.3f s', sample.K, inner, elapsed)
    return report.replace(solver='sampling', K=sample.K, seed=seed, wall_time=elapsed,
                          params={'inner': inner, 'weight': w.spec})


class _GreedyTotals(object):
    """Scenario totals of S + {e} from cached prefix sums of S

    The prefix sums follow the ascending order of S, so inserting e at its
    sorted position and adding the remaining columns repeats exactly the
    additions scenario_totals() performs.
    """

    def __init__(self, scenarios):
        self.scenarios = scenarios
        self.members = []
        self.prefixes = [np.zeros(scenarios.shape[0])]

    def add(self, e):
        self.members = sorted(self.members + [e])
        self.prefixes = [self.prefixes[0]]
        for i in self.members:
            self.prefixes.append(self.prefixes[-1] + self.scenarios[:, i])

    def totals_with(self, e):
        position = int(np.searchsorted(self.members, e))
        totals = self.prefixes[position] + self.scenarios[:, e]
        for i in self.members[position:]:
            totals += self.scenarios[:, i]
        return totals


def solve_greedy_matroid(instance, w, K, seed, use_cache=True, thread_limit=None):
    """Grow a basis one element at a time by the smallest discrete OWA

    One sample is drawn up front. Each round adds the element that keeps S
    independent and minimizes the discrete OWA of S + {e}; ties go to the
    smallest element index.
    """
    feasibility = instance.feasibility
    if not feasibility.is_matroid:
        raise ValidationError(_('The greedy solver needs a matroid, got %r') % (feasibility,))

    started = time.perf_counter()
    sample = sampling.sample_scenarios(instance, K, seed, w, thread_limit)
    weights = sample.weights.values
    cache = _GreedyTotals(sample.scenarios) if use_cache else None

    selected = []
    while len(selected) < feasibility.rank:
        best, best_value = None, None
        for e in range(instance.n):
            if e in selected or not feasibility.is_independent(selected + [e]):
                continue
            if cache is not None:
                value = discrete.owa_of_totals(cache.totals_with(e), weights)
            else:
                value = discrete.discrete_owa_value(sample, Solution.from_indices(instance.n, selected + [e]))
            if best_value is None or value < best_value:
                best, best_value = e, value

        if best is None:
            raise MatroidViolation(_('No independent extension of a non-basis set'),
                                   {'selected': [i + 1 for i in sorted(selected)], 'rank': feasibility.rank})
        selected.append(best)
        if cache is not None:
            cache.add(best)
        logger.debug('Greedy round %d: added item %d (value %r)', len(selected), best + 1, best_value)

    x = Solution.from_indices(instance.n, selected)
    elapsed = time.perf_counter() - started
    logger.info('Greedy solver (K=%d) finished in %.3f s', sample.K, elapsed)
    return SolveReport(x, discrete.discrete_owa_value(sample, x), 'greedy', K=sample.K, seed=seed,
                       wall_time=elapsed, params={'weight': w.spec, 'cache': bool(use_cache)})
