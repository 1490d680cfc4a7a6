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
#  intervalowa.distribution - Exact distribution of the total cost
#
#  With independent uniform item costs, the total cost of a fixed solution
#  is a shifted sum of uniforms (a scaled Irwin-Hall variable). Its CDF is
#  piecewise polynomial and evaluated by inclusion-exclusion over the
#  corners of the box of selected widths.
#

"""Exact CDF, Value-at-Risk and interval OWA of a solution's total cost

All internal computations work on the excess s = y - lower over the
lower support bound, on a unit scale s / span. Identical widths are
grouped, so m widths with multiplicities m_1..m_r need prod(m_j + 1)
inclusion-exclusion terms instead of 2**m.
"""

import logging
import math

import numpy as np

import intervalowa
from intervalowa import quadrature
from intervalowa.errors import CapabilityError, ParameterError
from intervalowa.model import as_solution

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

# Largest number of non-degenerate selected items for the exact engine
EXACT_LIMIT = 18

# Bisection stops once the bracket is below VAR_TOLERANCE * max(1, span)
VAR_TOLERANCE = 1e-10

# Bound on the size of the (points x terms) work matrix
_CHUNK_CELLS = 1 << 20


class CostDistribution(object):
    """Distribution of the total cost c^T x of one solution

    shift is the summed lower bound of the selected items with positive
    width, widths their widths and const_total the summed cost of the
    selected items with fixed cost. Support is [lower, upper].
    """

    def __init__(self, shift, widths, const_total):
        widths = np.array(widths, dtype=float)
        if np.any(widths <= 0):
            raise ParameterError(_('Distribution widths must be positive'))
        widths.setflags(write=False)
        self.shift = float(shift)
        self.widths = widths
        self.const_total = float(const_total)
        self.lower = self.shift + self.const_total
        self.span = math.fsum(widths)
        self.upper = self.lower + self.span

        self._offsets = None
        self._coefficients = None
        self._norm = None
        if self.m <= EXACT_LIMIT:
            self._build_terms()

    @property
    def m(self):
        return len(self.widths)

    def is_point_mass(self):
        return self.m == 0

    def _build_terms(self):
        if self.m == 0:
            return

        unit = self.widths / self.span
        distinct, multiplicity = np.unique(unit, return_counts=True)

        offsets = np.zeros(1)
        coefficients = np.ones(1)
        for width, count in zip(distinct, multiplicity):
            c = np.arange(count + 1)
            signed = np.array([(-1) ** int(k) * math.comb(int(count), int(k)) for k in c], dtype=float)
            offsets = (offsets[:, None] + c[None, :] * width).ravel()
            coefficients = (coefficients[:, None] * signed[None, :]).ravel()

        order = np.argsort(offsets, kind='stable')
        self._offsets = offsets[order]
        self._coefficients = coefficients[order]
        self._norm = math.factorial(self.m) * float(np.prod(unit))
        logger.debug('Built %d inclusion-exclusion terms for m=%d', len(self._offsets), self.m)

    def _check_capability(self):
        if self.m > EXACT_LIMIT:
            raise CapabilityError(_('Exact evaluation supports at most %d uncertain items, got %d; '
                                    'use Monte Carlo evaluation (interval_owa_sampled) instead')
                                  % (EXACT_LIMIT, self.m), {'exact_limit': EXACT_LIMIT, 'm': self.m})

    def _unit_cdf(self, u):
        """CDF of the unit-scaled excess at an array of points u in [0, 1]"""
        folded = np.minimum(u, 1 - u)
        result = np.empty_like(folded)
        terms = len(self._offsets)
        rows = max(1, _CHUNK_CELLS // terms)
        for start in range(0, len(folded), rows):
            chunk = folded[start:start + rows]
            # Only offsets below the folded point contribute
            used = int(np.searchsorted(self._offsets, chunk.max(), side='left'))
            if used == 0:
                result[start:start + rows] = 0.0
                continue
            diff = chunk[:, None] - self._offsets[None, :used]
            np.maximum(diff, 0.0, out=diff)
            diff **= self.m
            diff *= self._coefficients[None, :used]
            result[start:start + rows] = diff.sum(axis=1) / self._norm

        np.clip(result, 0.0, 1.0, out=result)
        return np.where(u > 0.5, 1 - result, result)

    def excess_cdf(self, s):
        """P(c^T x - lower <= s) for an array of excesses s"""
        s = np.asarray(s, dtype=float)
        if self.m == 0:
            return np.where(s >= 0, 1.0, 0.0)
        self._check_capability()
        u = np.clip(s.ravel() / self.span, 0.0, 1.0)
        return self._unit_cdf(u).reshape(s.shape)

    def cdf(self, y):
        return self.excess_cdf(np.asarray(y, dtype=float) - self.lower)

    def excess_var(self, t):
        """VaR_t minus lower, for an array of probabilities t"""
        t = np.asarray(t, dtype=float)
        if np.any((t < 0) | (t > 1)):
            raise ParameterError(_('Probabilities must lie in [0, 1]'))
        if self.m == 0:
            return np.zeros_like(t)
        self._check_capability()

        flat = t.ravel()
        lo = np.zeros_like(flat)
        hi = np.ones_like(flat)
        inside = (flat > 0) & (flat < 1)
        target = flat[inside]
        if target.size:
            a, b = lo[inside], hi[inside]
            tolerance = VAR_TOLERANCE * max(1.0, self.span) / self.span
            iterations = max(0, math.ceil(math.log2(1 / tolerance)))
            for _i in range(iterations):
                mid = (a + b) / 2
                below = self._unit_cdf(mid) < target
                a = np.where(below, mid, a)
                b = np.where(below, b, mid)
            hi[inside] = (a + b) / 2

        excess = np.where(flat == 0, 0.0, hi) * self.span
        return excess.reshape(t.shape)

    def var(self, t):
        return self.lower + self.excess_var(t)

    def __repr__(self):
        return 'CostDistribution(lower=%r, upper=%r, m=%d)' % (self.lower, self.upper, self.m)


def build_distribution(instance, x):
    """Distribution of the total cost of x under independent uniform costs"""
    x = as_solution(x, instance.n)
    selected = np.asarray(x.indices, dtype=int)
    lo = instance.lo[selected]
    hi = instance.hi[selected]
    fixed = lo == hi
    return CostDistribution(math.fsum(lo[~fixed]), hi[~fixed] - lo[~fixed], math.fsum(lo[fixed]))


def exact_cdf(dist, y):
    """P(c^T x <= y), summed with correctly rounded floating point sums

    >>> from intervalowa.model import IntervalInstance, Selection
    >>> instance = IntervalInstance([(1, 5), (1, 5), (2, 10)], Selection(3, 2))
    >>> exact_cdf(build_distribution(instance, [1, 1, 0]), 6.0)
    0.5
    """
    y = float(y)
    if dist.m == 0:
        return 1.0 if y >= dist.lower else 0.0
    dist._check_capability()

    u = min(max((y - dist.lower) / dist.span, 0.0), 1.0)
    folded = min(u, 1 - u)
    used = int(np.searchsorted(dist._offsets, folded, side='left'))
    value = math.fsum(float(c) * (folded - float(o)) ** dist.m
                      for o, c in zip(dist._offsets[:used], dist._coefficients[:used])) / dist._norm
    value = min(max(value, 0.0), 1.0)
    return 1 - value if u > 0.5 else value


def exact_var(dist, t):
    """Value-at-Risk inf{y : F(y) >= t}; VaR_0 is the lower support bound"""
    t = float(t)
    if not 0 <= t <= 1:
        raise ParameterError(_('Probability must lie in [0, 1], got %r') % t)
    if t == 1:
        return dist.upper
    return float(dist.var(t))


def var_profile(dist, points=101):
    """Return (t, VaR_t) arrays on a uniform grid of points values in [0, 1]"""
    if points < 2:
        raise ParameterError(_('A VaR profile needs at least two points'))
    t = np.linspace(0.0, 1.0, int(points))
    values = dist.var(t)
    values[-1] = dist.upper
    return t, values


def owa_of_distribution(dist, w, tol=1e-6, method='quantile'):
    """Interval OWA value of a cost distribution

    method 'quantile' integrates w(t) * VaR_{1-t} over t; method 'tail'
    integrates W(1 - F(s)) over the excess s, which gives the same value.
    The result always lies in [lower, upper].
    """
    if dist.m == 0:
        return dist.lower
    dist._check_capability()

    if method == 'quantile':
        def integrand(t):
            return w(t) * dist.excess_var(1 - t)

        breakpoints = [0.0] + list(w.breakpoints) + [1.0]
    elif method == 'tail':
        def integrand(s):
            return w.antiderivative(1 - dist.excess_cdf(s))

        knots = dist.excess_var(1 - np.asarray(w.breakpoints, dtype=float)) if w.breakpoints else []
        breakpoints = [0.0] + [float(k) for k in knots] + [dist.span]
    else:
        raise ParameterError(_('Unknown OWA integration method: %r') % (method,))

    excess = quadrature.integrate(integrand, breakpoints, tol)
    return dist.lower + min(max(excess, 0.0), dist.span)


def interval_owa_exact(instance, w, x, tol=1e-6, method='quantile'):
    """Interval OWA of x: the integral of w(t) * VaR_{1-t}(c^T x) over [0, 1]"""
    return owa_of_distribution(build_distribution(instance, x), w, tol, method)


def cost_bounds(instance, x):
    """Best-case and worst-case total cost (a, b) of x"""
    x = as_solution(x, instance.n)
    selected = np.asarray(x.indices, dtype=int)
    return math.fsum(instance.lo[selected]), math.fsum(instance.hi[selected])


def hurwicz_value(instance, x, alpha_mix):
    """Closed-form Hurwicz criterion alpha_mix * b + (1 - alpha_mix) * a"""
    if not 0 <= alpha_mix <= 1:
        raise ParameterError(_('Hurwicz mix must lie in [0, 1], got %r') % alpha_mix)
    a, b = cost_bounds(instance, x)
    return alpha_mix * b + (1 - alpha_mix) * a


def yager_value(instance, x, lam):
    """Bound-based OWA lambda * b + (1 - lambda) * a"""
    return hurwicz_value(instance, x, lam)
