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
#  instancefile.py -- Instance and solution file import/export
#

"""Instance and solution files

An instance file is a JSON object:

    {
      "n": 3,
      "intervals": [[1, 5], [1, 5], [2, 10]],
      "feasibility": {"type": "selection", "p": 1}
    }

The feasibility object is resolved through registry.feasibility; the
built-in types are "selection" (field "p"), "uniform_matroid" (field
"rank") and "explicit" (field "solutions", a list of 1-based index
lists). A solution file is {"selected": [1, 2]} with 1-based indices in
increasing order.
"""

import json
import logging
import numbers

import intervalowa
from intervalowa import registry, util
from intervalowa.errors import ParseError, ValidationError
from intervalowa.model import (ExplicitFeasibleSet, IntervalInstance, Selection,
                               Solution, UniformMatroid)

logger = logging.getLogger(__name__)

_ = intervalowa.gettext


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        lines = text.splitlines()
        context = lines[e.lineno - 1] if 0 < e.lineno <= len(lines) else None
        raise ParseError(e.msg, e.lineno, context) from e


def _count(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ParseError(_('"%s" must be an integer, got %r') % (name, value))
    return int(value)


def _number(value, what):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ParseError(_('%s must be a number, got %r') % (what, value))
    return float(value)


@registry.feasibility.register
def selection_from_dict(obj, n):
    if obj.get('type') != 'selection':
        return None
    p = _count(obj.get('p'), 'p')
    if p > n:
        raise ValidationError(_('Selection size p=%d exceeds n=%d') % (p, n))
    return Selection(n, p)


@registry.feasibility.register
def uniform_matroid_from_dict(obj, n):
    if obj.get('type') != 'uniform_matroid':
        return None
    return UniformMatroid(n, _count(obj.get('rank'), 'rank'))


@registry.feasibility.register
def explicit_from_dict(obj, n):
    if obj.get('type') != 'explicit':
        return None
    solutions = obj.get('solutions')
    if not isinstance(solutions, list):
        raise ParseError(_('"solutions" must be a list of index lists'))
    return ExplicitFeasibleSet(n, [solution_from_indices(indices, n) for indices in solutions])


def solution_from_indices(indices, n):
    """Build a Solution from strictly increasing 1-based indices"""
    if not isinstance(indices, list):
        raise ParseError(_('Selected indices must be a list, got %r') % (indices,))
    indices = [_count(i, 'selected') for i in indices]
    for previous, current in zip(indices, indices[1:]):
        if current <= previous:
            raise ValidationError(_('Selected indices must be strictly increasing: %r') % (indices,))
    for i in indices:
        if not 1 <= i <= n:
            raise ValidationError(_('Selected index %d out of range 1..%d') % (i, n))
    return Solution.from_indices(n, [i - 1 for i in indices])


def instance_from_dict(obj):
    if not isinstance(obj, dict):
        raise ParseError(_('Instance file must contain a JSON object'))

    for key in ('n', 'intervals', 'feasibility'):
        if key not in obj:
            raise ParseError(_('Missing field "%s"') % key)

    n = _count(obj['n'], 'n')
    intervals = obj['intervals']
    if not isinstance(intervals, list):
        raise ParseError(_('"intervals" must be a list of [lo, hi] pairs'))
    if n < 1:
        raise ValidationError(_('An instance needs n >= 1, got %d') % n)
    if len(intervals) != n:
        raise ValidationError(_('"n" is %d but %d intervals are given') % (n, len(intervals)))

    items = []
    for index, pair in enumerate(intervals, start=1):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(_('Item %d: expected a [lo, hi] pair, got %r') % (index, pair))
        lo = _number(pair[0], _('Item %d lower bound') % index)
        hi = _number(pair[1], _('Item %d upper bound') % index)
        if lo > hi:
            raise ValidationError(_('Item %d: lower bound %r exceeds upper bound %r') % (index, lo, hi))
        items.append((lo, hi))

    feasibility = obj['feasibility']
    if not isinstance(feasibility, dict):
        raise ParseError(_('"feasibility" must be an object'))
    feasible_set = registry.feasibility.resolve(feasibility, None, n)
    if feasible_set is None:
        raise ParseError(_('Unknown feasibility type: %r') % (feasibility.get('type'),))

    return IntervalInstance(items, feasible_set)


def parse_instance(text):
    """Parse instance file content into an IntervalInstance

    >>> instance = parse_instance('{"n": 1, "intervals": [[4, 4]], '
    ...                           '"feasibility": {"type": "selection", "p": 1}}')
    >>> instance.n, instance.items[0]
    (1, Interval(lo=4.0, hi=4.0))
    """
    return instance_from_dict(_load_json(text))


def serialize_instance(instance):
    """Return instance file text; parse_instance() reads it back exactly"""
    intervals = ',\n'.join('    [%s, %s]' % (util.format_number(item.lo), util.format_number(item.hi))
                           for item in instance.items)
    return ('{\n'
            '  "n": %d,\n'
            '  "intervals": [\n%s\n  ],\n'
            '  "feasibility": %s\n'
            '}\n') % (instance.n, intervals, json.dumps(instance.feasibility.as_dict()))


def parse_solution(text, n):
    obj = _load_json(text)
    if not isinstance(obj, dict) or 'selected' not in obj:
        raise ParseError(_('Solution file must contain an object with a "selected" list'))
    return solution_from_indices(obj['selected'], n)


def serialize_solution(x):
    """Return solution file text

    >>> serialize_solution(Solution([1, 1, 0]))
    '{"selected": [1, 2]}\\n'
    """
    return json.dumps({'selected': x.one_based()}) + '\n'


def load_instance(filename):
    logger.debug('Loading instance from %s', filename)
    with open(filename, encoding='utf-8') as fp:
        return parse_instance(fp.read())


def save_instance(instance, filename):
    logger.debug('Writing instance to %s', filename)
    util.write_text_atomically(filename, serialize_instance(instance))


def load_solution(filename, n):
    with open(filename, encoding='utf-8') as fp:
        return parse_solution(fp.read(), n)


def save_solution(x, filename):
    util.write_text_atomically(filename, serialize_solution(x))
