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
#  lpformat.py -- Writer and strict reader for CPLEX LP model files
#

"""Linear models in the CPLEX LP text format

Only the subset needed for the discrete OWA model is supported: one
linear objective, linear constraints with a constant right hand side,
free variables and binary variables. The writer emits a canonical form
and parse_lp() accepts exactly that form, so parse_lp(text).write()
reproduces text byte for byte:

    \\ comment
    Minimize
     obj: a1 + b1
    Subject To
     c1: a1 + b1 - 2.5 x1 >= 0
    Bounds
     a1 free
    Binaries
     x1
    End

Terms are written as "name" for coefficient 1, "- name" for -1 and
"2.5 name" otherwise. Long rows continue on lines indented by three
spaces.
"""

import logging
import re

import intervalowa
from intervalowa.errors import ParseError

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

# Rows are wrapped before they exceed this many characters
LINE_WIDTH = 200

SENSES = ('Minimize', 'Maximize')
OPERATORS = ('>=', '<=', '=')

_NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_.]*$')
_NUMBER = re.compile(r'^(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?$')


def format_coefficient(value):
    """Shortest text that reads back as the same float

    >>> format_coefficient(2.0), format_coefficient(0.1), format_coefficient(1e20)
    ('2', '0.1', '1e+20')
    """
    value = float(value)
    if value.is_integer() and abs(value) < 1e15:
        return '%d' % value
    return repr(value)


class LPModel(object):
    def __init__(self, comment=None, sense='Minimize'):
        if sense not in SENSES:
            raise ValueError('Unknown sense: %r' % sense)
        self.comment = comment
        self.sense = sense
        self.objective_name = 'obj'
        self.objective = []
        self.constraints = []
        self.free = []
        self.binaries = []

    def set_objective(self, name, terms):
        self.objective_name = name
        self.objective = [(float(c), v) for c, v in terms]

    def add_constraint(self, name, terms, operator, rhs):
        if operator not in OPERATORS:
            raise ValueError('Unknown operator: %r' % operator)
        self.constraints.append((name, [(float(c), v) for c, v in terms], operator, float(rhs)))

    def variables(self):
        """All variable names in order of first appearance"""
        seen = {}
        for _c, v in self.objective:
            seen.setdefault(v, None)
        for _name, terms, _op, _rhs in self.constraints:
            for _c, v in terms:
                seen.setdefault(v, None)
        for v in self.free + self.binaries:
            seen.setdefault(v, None)
        return list(seen)

    @staticmethod
    def _terms_tokens(terms):
        tokens = []
        for position, (coefficient, name) in enumerate(terms):
            sign = '-' if coefficient < 0 else '+'
            magnitude = abs(coefficient)
            text = name if magnitude == 1 else '%s %s' % (format_coefficient(magnitude), name)
            if position == 0:
                tokens.append(text if sign == '+' else '- ' + text)
            else:
                tokens.append('%s %s' % (sign, text))
        return tokens

    @staticmethod
    def _wrap(head, tokens):
        lines = []
        line = head
        for token in tokens:
            if len(line) + 1 + len(token) > LINE_WIDTH and line.strip():
                lines.append(line)
                line = '  '
            line += ' ' + token
        lines.append(line)
        return lines

    def write(self):
        lines = []
        if self.comment is not None:
            lines.append('\\ ' + self.comment)
        lines.append(self.sense)
        lines.extend(self._wrap(' %s:' % self.objective_name, self._terms_tokens(self.objective)))
        lines.append('Subject To')
        for name, terms, operator, rhs in self.constraints:
            tokens = self._terms_tokens(terms) + [operator, format_coefficient(rhs)]
            lines.extend(self._wrap(' %s:' % name, tokens))
        if self.free:
            lines.append('Bounds')
            lines.extend(' %s free' % name for name in self.free)
        if self.binaries:
            lines.append('Binaries')
            lines.extend(self._wrap('', self.binaries))
        lines.append('End')
        return '\n'.join(lines) + '\n'


def _parse_number(token, line):
    if not _NUMBER.match(token):
        raise ParseError(_('Expected a number'), line, token)
    return float(token)


def _parse_name(token, line):
    if not _NAME.match(token):
        raise ParseError(_('Invalid variable name'), line, token)
    return token


def _parse_terms(tokens, line, stop=()):
    """Parse canonical linear terms; return (terms, remaining tokens)"""
    terms = []
    position = 0
    while position < len(tokens) and tokens[position] not in stop:
        sign = 1.0
        if tokens[position] in ('+', '-'):
            if tokens[position] == '+' and not terms:
                raise ParseError(_('Leading "+" is not canonical'), line, tokens[position])
            sign = -1.0 if tokens[position] == '-' else 1.0
            position += 1
        elif terms:
            raise ParseError(_('Expected "+" or "-" between terms'), line, tokens[position])

        if position >= len(tokens):
            raise ParseError(_('Dangling sign'), line)

        coefficient = 1.0
        if _NUMBER.match(tokens[position]):
            coefficient = _parse_number(tokens[position], line)
            if coefficient == 1 or format_coefficient(coefficient) != tokens[position]:
                raise ParseError(_('Coefficient is not in canonical form'), line, tokens[position])
            position += 1
            if position >= len(tokens):
                raise ParseError(_('Coefficient without variable'), line)

        terms.append((sign * coefficient, _parse_name(tokens[position], line)))
        position += 1

    if not terms:
        raise ParseError(_('Empty linear expression'), line)
    return terms, tokens[position:]


def _logical_rows(lines, start, stop_keywords):
    """Join continuation lines; yield (line number, text) per row"""
    rows = []
    index = start
    while index < len(lines) and lines[index] not in stop_keywords:
        text = lines[index]
        if text.startswith('   '):
            if not rows:
                raise ParseError(_('Continuation line without a row'), index + 1, text)
            rows[-1] = (rows[-1][0], rows[-1][1] + ' ' + text.strip())
        elif text.startswith(' ') and not text.startswith('  '):
            rows.append((index + 1, text[1:]))
        else:
            raise ParseError(_('Unexpected line'), index + 1, text)
        index += 1
    return rows, index


def _split_label(row, line):
    label, sep, rest = row.partition(':')
    if not sep:
        raise ParseError(_('Missing row label'), line, row)
    return _parse_name(label, line), rest.split()


def parse_lp(text):
    """Parse canonical LP text written by LPModel.write()"""
    if not text.endswith('\n'):
        raise ParseError(_('LP text must end with a newline'))
    lines = text[:-1].split('\n')
    index = 0

    comment = None
    if lines and lines[0].startswith('\\ '):
        comment = lines[0][2:]
        index = 1

    if index >= len(lines) or lines[index] not in SENSES:
        raise ParseError(_('Expected "Minimize" or "Maximize"'), index + 1,
                         lines[index] if index < len(lines) else None)
    model = LPModel(comment, lines[index])
    index += 1

    rows, index = _logical_rows(lines, index, ('Subject To',))
    if len(rows) != 1:
        raise ParseError(_('Expected exactly one objective row'), index + 1)
    line, row = rows[0]
    name, tokens = _split_label(row, line)
    terms, rest = _parse_terms(tokens, line)
    model.set_objective(name, terms)

    if index >= len(lines):
        raise ParseError(_('Missing "Subject To" section'), index)
    index += 1

    rows, index = _logical_rows(lines, index, ('Bounds', 'Binaries', 'End'))
    names = set()
    for line, row in rows:
        name, tokens = _split_label(row, line)
        if name in names:
            raise ParseError(_('Duplicate constraint name'), line, name)
        names.add(name)
        terms, rest = _parse_terms(tokens, line, OPERATORS)
        if len(rest) != 2 or rest[0] not in OPERATORS:
            raise ParseError(_('Expected "<operator> <number>" after the terms'), line, row)
        rhs = rest[1]
        negative = rhs.startswith('-')
        value = _parse_number(rhs[1:] if negative else rhs, line)
        value = -value if negative else value
        if format_coefficient(value) != rhs:
            raise ParseError(_('Right hand side is not in canonical form'), line, rhs)
        model.add_constraint(name, terms, rest[0], value)

    if index < len(lines) and lines[index] == 'Bounds':
        index += 1
        while index < len(lines) and lines[index] not in ('Binaries', 'End'):
            parts = lines[index].split()
            if not lines[index].startswith(' ') or len(parts) != 2 or parts[1] != 'free':
                raise ParseError(_('Only "<name> free" bounds are supported'), index + 1, lines[index])
            model.free.append(_parse_name(parts[0], index + 1))
            index += 1

    if index < len(lines) and lines[index] == 'Binaries':
        index += 1
        while index < len(lines) and lines[index] != 'End':
            if not lines[index].startswith(' '):
                raise ParseError(_('Unexpected line'), index + 1, lines[index])
            model.binaries.extend(_parse_name(token, index + 1) for token in lines[index].split())
            index += 1

    if index != len(lines) - 1 or lines[index] != 'End':
        raise ParseError(_('Expected "End" as the last line'), index + 1)

    used = set(name for _c, name in model.objective)
    used.update(name for _n, terms, _o, _r in model.constraints for _c, name in terms)
    for v in model.free + model.binaries:
        if v not in used:
            raise ParseError(_('Declared variable %s does not appear in the model') % v)

    logger.debug('Parsed LP model: %d constraints, %d variables, %d binaries',
                 len(model.constraints), len(model.variables()), len(model.binaries))
    return model
