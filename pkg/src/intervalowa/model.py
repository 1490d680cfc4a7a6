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
#  intervalowa.model - Core model classes: intervals, feasible sets, solutions
#
#  Item indices are 0-based here; file formats and CLI output use 1-based
#  indices. All objects are immutable after construction.
#

import collections
import itertools
import logging
import math

import numpy as np

import intervalowa
from intervalowa.errors import DimensionError, ValidationError

logger = logging.getLogger(__name__)

_ = intervalowa.gettext


class Interval(collections.namedtuple('Interval', 'lo hi')):
    """Cost interval [lo, hi] of one item; lo == hi is a fixed cost"""

    __slots__ = ()

    def __new__(cls, lo, hi):
        lo, hi = float(lo), float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValidationError(_('Interval bounds must be finite: [%r, %r]') % (lo, hi))
        if lo > hi:
            raise ValidationError(_('Interval lower bound exceeds upper bound: [%r, %r]') % (lo, hi))
        return super().__new__(cls, lo, hi)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def is_degenerate(self):
        return self.lo == self.hi


class Solution(object):
    """A 0/1 selection vector over the items of an instance

    >>> x = Solution([1, 1, 0])
    >>> x.indices, x.count, x.one_based()
    ((0, 1), 2, [1, 2])
    >>> Solution.from_indices(3, [2]) == Solution([0, 0, 1])
    True
    """

    __slots__ = ('_bits', '_indices')

    def __init__(self, selected):
        bits = np.asarray(selected)
        if bits.ndim != 1:
            raise DimensionError(1, bits.ndim, 'solution rank')
        if bits.size and not np.isin(bits, (0, 1)).all():
            raise ValidationError(_('Solution entries must be 0 or 1'))
        bits = bits.astype(bool)
        bits.setflags(write=False)
        self._bits = bits
        self._indices = tuple(int(i) for i in np.flatnonzero(bits))

    @classmethod
    def from_indices(cls, n, indices):
        bits = np.zeros(n, dtype=bool)
        for i in indices:
            if not 0 <= i < n:
                raise ValidationError(_('Item index %d out of range for n=%d') % (i + 1, n))
            bits[i] = True
        return cls(bits)

    @property
    def n(self):
        return len(self._bits)

    @property
    def bits(self):
        """Read-only boolean numpy array"""
        return self._bits

    @property
    def indices(self):
        """Selected 0-based item indices, ascending"""
        return self._indices

    @property
    def count(self):
        return len(self._indices)

    def one_based(self):
        return [i + 1 for i in self._indices]

    def __len__(self):
        return len(self._bits)

    def __iter__(self):
        return (int(b) for b in self._bits)

    def __eq__(self, other):
        if not isinstance(other, Solution):
            return NotImplemented
        return len(self) == len(other) and self._indices == other._indices

    def __hash__(self):
        return hash((len(self), self._indices))

    def __repr__(self):
        return 'Solution(%s)' % ''.join('1' if b else '0' for b in self._bits)


def as_solution(x, n=None):
    """Coerce x to a Solution, checking its length against n"""
    if not isinstance(x, Solution):
        x = Solution(x)
    if n is not None and len(x) != n:
        raise DimensionError(n, len(x), 'solution')
    return x


class FeasibleSet(object):
    """Base class of the feasibility structures X over n items"""

    # Whether the independence oracle and greedy solver apply
    is_matroid = False

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise ValidationError(_('Ground set must have at least one item'))
        self.n = n

    def is_feasible(self, x):
        raise NotImplementedError()

    def is_independent(self, indices):
        raise ValidationError(_('%s is not a matroid') % self.__class__.__name__)

    def bases(self):
        """Yield all feasible index tuples, smallest index tuple first"""
        raise NotImplementedError()

    def basis_count(self):
        """Number of tuples bases() yields (may be an upper bound)"""
        raise NotImplementedError()

    def as_dict(self):
        raise NotImplementedError()

    def __eq__(self, other):
        return type(self) is type(other) and self.as_dict() == other.as_dict() and self.n == other.n

    def __hash__(self):
        return hash((type(self).__name__, self.n))


class Selection(FeasibleSet):
    """Choose exactly p of n items (the uniform matroid of rank p)"""

    is_matroid = True

    def __init__(self, n, p):
        FeasibleSet.__init__(self, n)
        p = int(p)
        if not 0 <= p <= self.n:
            raise ValidationError(_('Selection size p=%d must lie in [0, n=%d]') % (p, self.n))
        self.p = p

    @property
    def rank(self):
        return self.p

    def is_feasible(self, x):
        x = as_solution(x, self.n)
        return x.count == self.p

    def is_independent(self, indices):
        return len(set(indices)) <= self.p

    def bases(self):
        return itertools.combinations(range(self.n), self.p)

    def basis_count(self):
        return math.comb(self.n, self.p)

    def as_dict(self):
        return {'type': 'selection', 'p': self.p}

    def __repr__(self):
        return 'Selection(n=%d, p=%d)' % (self.n, self.p)


class MatroidOracle(FeasibleSet):
    """A matroid given by an independence test on frozensets of indices

    The feasible solutions are the bases (maximal independent sets).
    """

    is_matroid = True

    def __init__(self, n, independent, rank=None):
        FeasibleSet.__init__(self, n)
        self._independent = independent
        if not independent(frozenset()):
            raise ValidationError(_('Independence oracle must accept the empty set'))
        self._rank = None if rank is None else int(rank)

    @property
    def rank(self):
        if self._rank is None:
            # Greedy over the ground set reaches a basis; all bases share its size
            basis = []
            for e in range(self.n):
                if self.is_independent(basis + [e]):
                    basis.append(e)
            self._rank = len(basis)
        return self._rank

    def is_independent(self, indices):
        return bool(self._independent(frozenset(indices)))

    def is_basis(self, indices):
        selected = frozenset(indices)
        if not self.is_independent(selected):
            return False
        return not any(self.is_independent(selected | {e})
                       for e in range(self.n) if e not in selected)

    def is_feasible(self, x):
        x = as_solution(x, self.n)
        return self.is_basis(x.indices)

    def bases(self):
        return (c for c in itertools.combinations(range(self.n), self.rank)
                if self.is_independent(c))

    def basis_count(self):
        return math.comb(self.n, self.rank)

    def as_dict(self):
        raise ValidationError(_('A general matroid oracle cannot be written to an instance file'))

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return 'MatroidOracle(n=%d)' % self.n


class UniformMatroid(MatroidOracle):
    """Matroid whose independent sets are all sets of at most rank items"""

    def __init__(self, n, rank):
        rank = int(rank)
        if not 0 <= rank <= int(n):
            raise ValidationError(_('Matroid rank %d must lie in [0, n=%d]') % (rank, int(n)))
        MatroidOracle.__init__(self, n, lambda s: len(s) <= rank, rank)

    def is_independent(self, indices):
        return len(set(indices)) <= self._rank

    def is_feasible(self, x):
        x = as_solution(x, self.n)
        return x.count == self._rank

    def bases(self):
        return itertools.combinations(range(self.n), self._rank)

    def as_dict(self):
        return {'type': 'uniform_matroid', 'rank': self._rank}

    def __eq__(self, other):
        return FeasibleSet.__eq__(self, other)

    def __hash__(self):
        return FeasibleSet.__hash__(self)

    def __repr__(self):
        return 'UniformMatroid(n=%d, rank=%d)' % (self.n, self._rank)


class ExplicitFeasibleSet(FeasibleSet):
    """A feasible set listed point by point

    Used for small sets that are neither selections nor matroids, such
    as {x : x1 - x2 = 0, x1 + x3 = 1} = {(1,1,0), (0,0,1)}.
    """

    def __init__(self, n, solutions):
        FeasibleSet.__init__(self, n)
        solutions = [as_solution(x, self.n) for x in solutions]
        if not solutions:
            raise ValidationError(_('An explicit feasible set needs at least one solution'))
        self._index_tuples = tuple(sorted(set(x.indices for x in solutions)))

    @property
    def solutions(self):
        return [Solution.from_indices(self.n, t) for t in self._index_tuples]

    def is_feasible(self, x):
        x = as_solution(x, self.n)
        return x.indices in self._index_tuples

    def bases(self):
        return iter(self._index_tuples)

    def basis_count(self):
        return len(self._index_tuples)

    def as_dict(self):
        return {'type': 'explicit', 'solutions': [[i + 1 for i in t] for t in self._index_tuples]}

    def __repr__(self):
        return 'ExplicitFeasibleSet(n=%d, %d solutions)' % (self.n, len(self._index_tuples))


class IntervalInstance(object):
    """Item cost intervals together with a feasibility structure"""

    def __init__(self, items, feasibility):
        items = list(items)
        if not items:
            raise ValidationError(_('An instance needs at least one item'))

        checked = []
        for index, item in enumerate(items, start=1):
            try:
                checked.append(item if isinstance(item, Interval) else Interval(*item))
            except ValidationError as e:
                raise ValidationError(_('Item %d: %s') % (index, e)) from e
            except TypeError as e:
                raise ValidationError(_('Item %d is not a [lo, hi] pair') % index) from e

        self.items = tuple(checked)
        if feasibility.n != len(self.items):
            raise DimensionError(len(self.items), feasibility.n, 'feasibility ground set')
        self.feasibility = feasibility

        self.lo = np.array([item.lo for item in self.items], dtype=float)
        self.hi = np.array([item.hi for item in self.items], dtype=float)
        self.lo.setflags(write=False)
        self.hi.setflags(write=False)

    @classmethod
    def from_bounds(cls, lo, hi, feasibility):
        if len(lo) != len(hi):
            raise DimensionError(len(lo), len(hi), 'upper bound vector')
        return cls(zip(lo, hi), feasibility)

    @property
    def n(self):
        return len(self.items)

    @property
    def widths(self):
        return self.hi - self.lo

    @property
    def midpoints(self):
        return (self.lo + self.hi) / 2

    def is_degenerate(self):
        return bool(np.all(self.lo == self.hi))

    def with_feasibility(self, feasibility):
        return IntervalInstance(self.items, feasibility)

    def __eq__(self, other):
        if not isinstance(other, IntervalInstance):
            return NotImplemented
        return self.items == other.items and self.feasibility == other.feasibility

    def __hash__(self):
        return hash(self.items)

    def __repr__(self):
        return 'IntervalInstance(n=%d, %r)' % (self.n, self.feasibility)


def is_feasible(instance, x):
    """Check x against the feasibility structure of instance

    Raises DimensionError when x has the wrong length.
    """
    x = as_solution(x, instance.n)
    return instance.feasibility.is_feasible(x)


def deterministic_cost(costs, x):
    """Return sum(costs[i] for selected i), correctly rounded

    >>> deterministic_cost([3, 3, 6], [1, 1, 0])
    6.0
    >>> deterministic_cost([2, 10], [1, 1])
    12.0
    """
    x = as_solution(x)
    if len(costs) != len(x):
        raise DimensionError(len(x), len(costs), 'cost vector')
    return math.fsum(float(costs[i]) for i in x.indices)
