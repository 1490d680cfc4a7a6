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
# intervalowa.errors - Exceptions raised by the library
#


class IntervalOWAError(Exception):
    """Base class of all errors raised by intervalowa."""


class ExceptionWithData(IntervalOWAError):
    """Base exception with additional payload."""

    def __init__(self, message, data=None):
        IntervalOWAError.__init__(self, message)
        self.data = data

    def __str__(self):
        if self.data is None:
            return IntervalOWAError.__str__(self)
        return '%s: %s (%s)' % (self.__class__.__name__,
                IntervalOWAError.__str__(self), self.data)


# Malformed input
class ParseError(IntervalOWAError, ValueError):
    def __init__(self, message, line=None, text=None):
        if line is not None:
            message = 'line %d: %s' % (line, message)
            if text is not None:
                message = '%s: %r' % (message, text)
        super().__init__(message)
        self.line = line


class ValidationError(IntervalOWAError, ValueError):
    pass


class DimensionError(IntervalOWAError, ValueError):
    def __init__(self, expected, actual, what='vector'):
        super().__init__('%s has length %d, expected %d' % (what, actual, expected))
        self.expected = expected
        self.actual = actual


class ParameterError(IntervalOWAError, ValueError):
    pass


class ConfigError(IntervalOWAError, ValueError):
    pass


# Requests that exceed a hard capacity of the exact methods
class CapabilityError(ExceptionWithData):
    pass


class MatroidViolation(ExceptionWithData):
    pass
