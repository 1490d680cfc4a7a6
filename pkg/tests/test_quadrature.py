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

import math

import numpy as np
import pytest

from intervalowa import quadrature
from intervalowa.errors import ParameterError


def test_polynomials_are_exact():
    value = quadrature.integrate(lambda t: 4 * t ** 3, [0, 1])
    assert value == pytest.approx(1.0, abs=1e-15)


def test_jump_at_breakpoint():
    def step(t):
        return np.where(t < 0.3, 1.0, 0.0)

    assert quadrature.integrate(step, [0, 0.3, 1]) == pytest.approx(0.3, abs=1e-9)


def test_panels_follow_breakpoints():
    panels = quadrature.integrate_panels(lambda t: np.ones_like(t), [0, 0.25, 1])
    assert panels == pytest.approx([0.25, 0.75])


def test_unsorted_and_repeated_breakpoints():
    value = quadrature.integrate(lambda t: 2 * t, [1, 0, 0.5, 0.5])
    assert value == pytest.approx(1.0)


def test_square_root_singularity():
    value = quadrature.integrate(np.sqrt, [0, 1], tol=1e-10)
    assert value == pytest.approx(2 / 3, abs=1e-8)


def test_smooth_integrand():
    value = quadrature.integrate(np.exp, [0, 3], tol=1e-12)
    assert value == pytest.approx(math.exp(3) - 1, abs=1e-9)


def test_invalid_arguments():
    with pytest.raises(ParameterError):
        quadrature.integrate(np.sqrt, [0.5])
    with pytest.raises(ParameterError):
        quadrature.integrate(np.sqrt, [0, 1], tol=0)
