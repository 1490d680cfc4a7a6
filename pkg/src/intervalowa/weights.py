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
#  intervalowa.weights - Preference weight functions
#
#  A WeightDensity w on [0,1] weights the quantile VaR_{1-t} of the total
#  cost, so mass near t=0 expresses pessimism. A CumulativeWeight W is the
#  monotone quantifier of the bound-based OWA and only enters through
#  lambda = integral of W over [0,1].
#

import logging
import math

import numpy as np
from scipy import integrate

import intervalowa
from intervalowa import quadrature, registry
from intervalowa.errors import ParameterError, ParseError, ValidationError

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

NORMALIZATION_TOLERANCE = 1e-12
CUSTOM_NORMALIZATION_TOLERANCE = 1e-9
CUSTOM_TABLE_PANELS = 1024
CUSTOM_TABLE_TOLERANCE = 1e-10


def _vectorized(func):
    """Wrap func so that it maps arrays to float arrays and scalars to floats"""
    def wrapper(t):
        if np.ndim(t) == 0:
            return float(func(np.asarray(t, dtype=float)))
        return np.asarray(func(np.asarray(t, dtype=float)), dtype=float)
    return wrapper


class WeightDensity(object):
    """A normalized, bounded preference density on [0,1]

    kind is one of 'power', 'cvar', 'uniform', 'hurwicz', 'median' or
    'custom'; params holds the kind's parameters. breakpoints lists the
    interior points where the density may jump.
    """

    def __init__(self, evaluate, antiderivative, kind, params=(), breakpoints=(),
                 nonincreasing=False, tolerance=NORMALIZATION_TOLERANCE):
        self._evaluate = _vectorized(evaluate)
        self._antiderivative = _vectorized(antiderivative)
        self.kind = kind
        self.params = tuple(float(p) for p in params)
        self.breakpoints = tuple(sorted(float(b) for b in breakpoints if 0 < b < 1))
        self.nonincreasing = bool(nonincreasing)

        total = self._antiderivative(1.0) - self._antiderivative(0.0)
        if abs(total - 1) > tolerance:
            raise ValidationError(_('Weight density %s integrates to %r, not 1') % (self.spec, total))

    def __call__(self, t):
        return self._evaluate(t)

    def evaluate(self, t):
        return self._evaluate(t)

    def antiderivative(self, t):
        return self._antiderivative(t)

    @property
    def spec(self):
        """The weight spec string that parse_weight_spec() understands"""
        if self.kind == 'uniform':
            return 'uniform'
        if self.kind == 'custom':
            return 'custom'
        return ':'.join([self.kind] + ['%g' % p for p in self.params])

    def __repr__(self):
        return 'WeightDensity(%s)' % self.spec


def make_power_weight(alpha):
    """Density alpha * (1 - t)**(alpha - 1), the pessimistic family

    >>> w = make_power_weight(3)
    >>> w(0.0), w(1.0), w.antiderivative(0.5)
    (3.0, 0.0, 0.875)
    """
    alpha = float(alpha)
    if not alpha >= 1:
        raise ParameterError(_('Power weight needs alpha >= 1, got %r') % alpha)

    if alpha == 1:
        def evaluate(t):
            return np.ones_like(t)
    else:
        def evaluate(t):
            return alpha * (1 - t) ** (alpha - 1)

    def antiderivative(t):
        return 1 - (1 - t) ** alpha

    return WeightDensity(evaluate, antiderivative, 'power', (alpha,), nonincreasing=True)


def make_uniform_weight():
    """Constant density 1; the OWA becomes the expected cost"""
    return WeightDensity(np.ones_like, lambda t: t, 'uniform', nonincreasing=True)


def make_cvar_weight(alpha):
    """Density 1/alpha on [0, alpha): the alpha-CVaR of the cost

    >>> w = make_cvar_weight(0.5)
    >>> w(0.25), w(0.75)
    (2.0, 0.0)
    """
    alpha = float(alpha)
    if not 0 < alpha <= 1:
        raise ParameterError(_('CVaR weight needs 0 < alpha <= 1, got %r') % alpha)

    def evaluate(t):
        return np.where(t < alpha, 1 / alpha, 0.0)

    def antiderivative(t):
        return np.minimum(t, alpha) / alpha

    return WeightDensity(evaluate, antiderivative, 'cvar', (alpha,), (alpha,), nonincreasing=True)


def make_hurwicz_weight(alpha_mix, epsilon):
    """Mass alpha_mix on [0, epsilon) and 1 - alpha_mix on (1 - epsilon, 1]

    As epsilon goes to 0 the OWA tends to the Hurwicz mix of worst and
    best case; distribution.hurwicz_value() is that limit in closed form.
    """
    alpha_mix, epsilon = float(alpha_mix), float(epsilon)
    if not 0 <= alpha_mix <= 1:
        raise ParameterError(_('Hurwicz mix must lie in [0, 1], got %r') % alpha_mix)
    if not 0 < epsilon < 0.5:
        raise ParameterError(_('Hurwicz epsilon must lie in (0, 0.5), got %r') % epsilon)

    upper = 1 - epsilon

    def evaluate(t):
        return (np.where(t < epsilon, alpha_mix / epsilon, 0.0)
                + np.where(t > upper, (1 - alpha_mix) / epsilon, 0.0))

    def antiderivative(t):
        return (alpha_mix * np.minimum(t, epsilon) / epsilon
                + (1 - alpha_mix) * np.maximum(t - upper, 0.0) / epsilon)

    return WeightDensity(evaluate, antiderivative, 'hurwicz', (alpha_mix, epsilon), (epsilon, upper),
                         nonincreasing=alpha_mix == 1)


def make_median_weight(epsilon):
    """Density 1/(2 epsilon) on [0.5 - epsilon, 0.5 + epsilon)"""
    epsilon = float(epsilon)
    if not 0 < epsilon <= 0.5:
        raise ParameterError(_('Median epsilon must lie in (0, 0.5], got %r') % epsilon)

    start, stop = 0.5 - epsilon, 0.5 + epsilon

    def evaluate(t):
        return np.where((t >= start) & (t < stop), 1 / (2 * epsilon), 0.0)

    def antiderivative(t):
        return np.clip(t - start, 0.0, 2 * epsilon) / (2 * epsilon)

    return WeightDensity(evaluate, antiderivative, 'median', (epsilon,), (start, stop),
                         nonincreasing=epsilon == 0.5)


class _CumulativeTable(object):
    """Antiderivative of a density from a cached panel table

    Panel integrals come from adaptive Simpson; inside a panel the partial
    integral is a single Simpson step from the panel start.
    """

    def __init__(self, density, breakpoints):
        grid = np.union1d(np.linspace(0, 1, CUSTOM_TABLE_PANELS + 1), breakpoints)
        panels = quadrature.integrate_panels(density, grid, tol=CUSTOM_TABLE_TOLERANCE)
        self.grid = grid
        self.table = np.concatenate([[0.0], np.cumsum(panels)])
        self.density = density

    def __call__(self, t):
        t = np.clip(t, 0.0, 1.0)
        k = np.clip(np.searchsorted(self.grid, t, side='right') - 1, 0, len(self.grid) - 2)
        a = self.grid[k]
        m = (a + t) / 2
        partial = (t - a) / 6 * (self.density(a) + 4 * self.density(m) + self.density(t))
        return self.table[k] + partial


def make_custom_weight(func, antiderivative=None, breakpoints=(), nonincreasing=False):
    """Wrap a user density; without an antiderivative one is tabulated

    func must accept numpy arrays. Densities that do not integrate to 1
    within 1e-9 or take negative values are rejected.
    """
    evaluate = _vectorized(func)
    probes = np.linspace(0, 1, 1001)
    if np.any(evaluate(probes) < 0):
        raise ValidationError(_('Custom weight density takes negative values'))

    if antiderivative is None:
        table = _CumulativeTable(evaluate, [b for b in breakpoints if 0 < b < 1])
        logger.debug('Tabulated custom weight antiderivative on %d panels', len(table.grid) - 1)
        shifted = table
    else:
        origin = float(antiderivative(0.0))

        def shifted(t):
            return antiderivative(t) - origin

    return WeightDensity(evaluate, shifted, 'custom', (), breakpoints, nonincreasing,
                         tolerance=CUSTOM_NORMALIZATION_TOLERANCE)


class BinWeights(object):
    """Discrete OWA weights w'_1 >= ... for ranks 1..K (largest value first)"""

    def __init__(self, values):
        values = np.array(values, dtype=float)
        if values.ndim != 1 or len(values) < 1:
            raise ParameterError(_('Bin weights need at least one value'))
        if np.any(values < 0):
            raise ValidationError(_('Bin weights must be nonnegative'))
        total = math.fsum(values)
        if abs(total - 1) > NORMALIZATION_TOLERANCE:
            raise ValidationError(_('Bin weights sum to %r, not 1') % total)
        values.setflags(write=False)
        self.values = values

    @property
    def K(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def is_nonincreasing(self):
        return bool(np.all(np.diff(self.values) <= 0))

    def __repr__(self):
        return 'BinWeights(K=%d)' % self.K


def bin_integrals(w, K):
    """Integrals of w over the K bins of a uniform grid on [0,1]

    >>> bin_integrals(make_power_weight(2), 2).values.tolist()
    [0.75, 0.25]
    >>> bin_integrals(make_cvar_weight(0.5), 4).values.tolist()
    [0.5, 0.5, 0.0, 0.0]
    """
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ParameterError(_('Number of bins must be a positive integer, got %r') % (K,))
    K = int(K)

    if w.kind == 'power':
        alpha = w.params[0]
        if alpha == 1:
            values = np.full(K, 1 / K)
        else:
            # ((K-k+1)/K)^alpha - ((K-k)/K)^alpha; every power stays in [0, 1]
            powers = (np.arange(K + 1, dtype=float) / K) ** alpha
            values = np.diff(powers)[::-1]
    elif w.kind == 'uniform':
        values = np.full(K, 1 / K)
    elif w.kind == 'cvar':
        scaled = w.params[0] * K
        k = np.arange(1, K + 1, dtype=float)
        values = (np.minimum(k, scaled) - np.minimum(k - 1, scaled)) / scaled
    else:
        grid = np.arange(K + 1, dtype=float) / K
        values = np.maximum(np.diff(w.antiderivative(grid)), 0.0)

    return BinWeights(values)


def weight_profile(densities, points=101):
    """Return t and a (w(t), W(t)) pair per density on a uniform grid of points values in [0, 1]

    >>> t, [(w, W)] = weight_profile([make_power_weight(2)], 3)
    >>> t.tolist(), w.tolist(), W.tolist()
    ([0.0, 0.5, 1.0], [2.0, 1.0, 0.0], [0.0, 0.75, 1.0])
    """
    if isinstance(points, bool) or int(points) != points or points < 2:
        raise ParameterError(_('A weight profile needs at least two points'))
    t = np.linspace(0.0, 1.0, int(points))
    return t, [(w(t), w.antiderivative(t)) for w in densities]


class CumulativeWeight(object):
    """Monotone quantifier W on [0,1] with W(0) = 0 and W(1) = 1"""

    def __init__(self, evaluate, name='custom'):
        self._evaluate = evaluate
        self.name = name

    def __call__(self, y):
        return float(self._evaluate(y))

    evaluate = __call__

    def __repr__(self):
        return 'CumulativeWeight(%s)' % self.name


def cumulative_from_function(func, name='custom'):
    return CumulativeWeight(func, name)


def cumulative_power(alpha):
    """W(y) = 1 - (1 - y)**alpha, the counterpart of make_power_weight(alpha)"""
    alpha = float(alpha)
    if not alpha >= 1:
        raise ParameterError(_('Power weight needs alpha >= 1, got %r') % alpha)
    return CumulativeWeight(lambda y: 1 - (1 - y) ** alpha, 'power:%g' % alpha)


def cumulative_worst_case():
    """W(y) = 1 for y > 0: all weight on the upper bound"""
    return CumulativeWeight(lambda y: 1.0 if y > 0 else 0.0, 'worst')


def cumulative_hurwicz(alpha_mix):
    """W(y) = alpha_mix inside (0,1); its lambda is alpha_mix"""
    alpha_mix = float(alpha_mix)
    if not 0 <= alpha_mix <= 1:
        raise ParameterError(_('Hurwicz mix must lie in [0, 1], got %r') % alpha_mix)

    def evaluate(y):
        if y <= 0:
            return 0.0
        if y >= 1:
            return 1.0
        return alpha_mix

    return CumulativeWeight(evaluate, 'hurwicz:%g' % alpha_mix)


def cumulative_from_density(w):
    """W(y) = antiderivative of w at y"""
    return CumulativeWeight(w.antiderivative, w.spec)


def yager_lambda(W, quad_tol=1e-10):
    """Return lambda = integral of W over [0,1]

    W is probed on a grid and at every quadrature node; a decreasing W or
    one that misses W(0) = 0 or W(1) = 1 is rejected.

    >>> round(yager_lambda(cumulative_from_function(lambda y: y * y)), 12)
    0.333333333333
    """
    start, stop = W(0.0), W(1.0)
    if abs(start) > NORMALIZATION_TOLERANCE or abs(stop - 1) > NORMALIZATION_TOLERANCE:
        raise ValidationError(_('Cumulative weight must satisfy W(0) = 0 and W(1) = 1, got %r and %r')
                              % (start, stop))

    probes = {}

    def probed(y):
        value = W(y)
        probes[y] = value
        return value

    for y in np.linspace(0, 1, 101):
        probed(float(y))

    lam, error = integrate.quad(probed, 0.0, 1.0, epsabs=quad_tol, epsrel=quad_tol, limit=200)

    ys = sorted(probes)
    values = np.array([probes[y] for y in ys])
    if np.any(np.diff(values) < -NORMALIZATION_TOLERANCE):
        raise ValidationError(_('Cumulative weight %s is not monotone nondecreasing') % W.name)
    if np.any(values < -NORMALIZATION_TOLERANCE) or np.any(values > 1 + NORMALIZATION_TOLERANCE):
        raise ValidationError(_('Cumulative weight %s leaves [0, 1]') % W.name)

    logger.debug('yager_lambda(%s) = %r (error estimate %g)', W.name, lam, error)
    return min(max(lam, 0.0), 1.0)


def _parse_parameters(spec, prefix, count):
    """Split 'prefix:a:b' into count floats, or return None for other prefixes"""
    parts = spec.strip().split(':')
    if parts[0].lower() != prefix:
        return None
    if len(parts) != count + 1:
        raise ParseError(_('Weight spec %r needs %d parameter(s)') % (spec, count))
    try:
        return [float(p) for p in parts[1:]]
    except ValueError as e:
        raise ParseError(_('Invalid number in weight spec %r') % spec) from e


@registry.weight_spec.register
def power_spec(spec):
    params = _parse_parameters(spec, 'power', 1)
    return None if params is None else make_power_weight(*params)


@registry.weight_spec.register
def cvar_spec(spec):
    params = _parse_parameters(spec, 'cvar', 1)
    return None if params is None else make_cvar_weight(*params)


@registry.weight_spec.register
def uniform_spec(spec):
    params = _parse_parameters(spec, 'uniform', 0)
    return None if params is None else make_uniform_weight()


@registry.weight_spec.register
def hurwicz_spec(spec):
    params = _parse_parameters(spec, 'hurwicz', 2)
    return None if params is None else make_hurwicz_weight(*params)


@registry.weight_spec.register
def median_spec(spec):
    params = _parse_parameters(spec, 'median', 1)
    return None if params is None else make_median_weight(*params)


@registry.cumulative_spec.register
def power_cumulative_spec(spec):
    params = _parse_parameters(spec, 'power', 1)
    return None if params is None else cumulative_power(*params)


@registry.cumulative_spec.register
def hurwicz_cumulative_spec(spec):
    params = _parse_parameters(spec, 'hurwicz', 2)
    return None if params is None else cumulative_hurwicz(params[0])


@registry.cumulative_spec.register
def density_cumulative_spec(spec):
    # uniform, cvar and median map to the cumulative of their own density
    w = registry.weight_spec.resolve(spec, None)
    return None if w is None else cumulative_from_density(w)


def parse_weight_spec(spec):
    """Resolve a weight spec string such as 'power:5' or 'cvar:0.1'

    >>> parse_weight_spec('hurwicz:0.5:0.25')
    WeightDensity(hurwicz:0.5:0.25)
    """
    w = registry.weight_spec.resolve(spec, None)
    if w is None:
        raise ParseError(_('Unknown weight spec: %r') % spec)
    return w


def parse_cumulative_spec(spec):
    """Resolve a weight spec string to the matching CumulativeWeight"""
    W = registry.cumulative_spec.resolve(spec, None)
    if W is None:
        raise ParseError(_('Unknown weight spec: %r') % spec)
    return W
