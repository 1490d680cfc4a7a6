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
#  quadrature.py -- Adaptive Simpson quadrature over piecewise smooth integrands
#
#  All panels of one refinement level are evaluated in a single call of the
#  integrand, which must accept and return numpy arrays.
#

import logging
import math

import numpy as np

from intervalowa.errors import ParameterError

logger = logging.getLogger(__name__)

MAX_DEPTH = 30


def _simpson(a, b, fa, fm, fb):
    return (b - a) / 6 * (fa + 4 * fm + fb)


def integrate_panels(f, breakpoints, tol=1e-6, max_depth=MAX_DEPTH, min_depth=1):
    """Integrate f over each panel [breakpoints[k], breakpoints[k+1]]

    A panel is split in halves until the two-half Simpson estimate
    differs from the whole-panel estimate by at most 15 times its local
    tolerance, or max_depth halvings were made. The initial tolerance
    is tol * max(1, |first estimate|), shared among panels by length and
    halved on each split.

    Returns an array with one integral per panel.

    >>> integrate_panels(lambda t: 3 * t * t, [0, 0.5, 1]).round(12).tolist()
    [0.125, 0.875]
    """
    grid = np.unique(np.asarray(breakpoints, dtype=float))
    if len(grid) < 2:
        raise ParameterError('At least two distinct breakpoints are needed')
    if tol <= 0:
        raise ParameterError('Quadrature tolerance must be positive, got %r' % (tol,))

    a, b = grid[:-1], grid[1:]
    m = (a + b) / 2
    values = np.asarray(f(np.concatenate([a, m, b[-1:]])), dtype=float)
    count = len(a)
    fa = values[:count]
    fm = values[count:2 * count]
    fb = np.append(fa[1:], values[-1])
    whole = _simpson(a, b, fa, fm, fb)

    eps = tol * max(1.0, abs(math.fsum(whole))) * (b - a) / (grid[-1] - grid[0])
    origin = np.arange(count)
    accepted_origin = []
    accepted_value = []

    for depth in range(max_depth + 1):
        m = (a + b) / 2
        lm = (a + m) / 2
        rm = (m + b) / 2
        values = np.asarray(f(np.concatenate([lm, rm])), dtype=float)
        flm, frm = values[:len(a)], values[len(a):]
        left = _simpson(a, m, fa, flm, fm)
        right = _simpson(m, b, fm, frm, fb)
        delta = left + right - whole

        done = np.abs(delta) <= 15 * eps
        if depth < min_depth:
            done[:] = False
        if depth == max_depth:
            done[:] = True
        accepted_origin.append(origin[done])
        accepted_value.append((left + right + delta / 15)[done])

        todo = ~done
        if not todo.any():
            break

        a, m, b = a[todo], m[todo], b[todo]
        fa, flm, fm, frm, fb = fa[todo], flm[todo], fm[todo], frm[todo], fb[todo]
        left, right, eps, origin = left[todo], right[todo], eps[todo] / 2, origin[todo]

        # Left halves followed by right halves
        a, b = np.concatenate([a, m]), np.concatenate([m, b])
        fa, fm, fb = np.concatenate([fa, fm]), np.concatenate([flm, frm]), np.concatenate([fm, fb])
        whole = np.concatenate([left, right])
        eps = np.concatenate([eps, eps])
        origin = np.concatenate([origin, origin])

    if depth == max_depth:
        logger.debug('Adaptive Simpson reached max depth %d', max_depth)

    return np.bincount(np.concatenate(accepted_origin), weights=np.concatenate(accepted_value),
                       minlength=count)


def integrate(f, breakpoints, tol=1e-6, max_depth=MAX_DEPTH, min_depth=1):
    """Integrate f from breakpoints[0] to breakpoints[-1]

    Interior breakpoints mark points where f may jump or kink.

    >>> round(integrate(np.sqrt, [0, 1], tol=1e-10), 8)
    0.66666667
    """
    return math.fsum(integrate_panels(f, breakpoints, tol, max_depth, min_depth))
