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
#  intervalowa.report - Solver results
#

import json
import logging

logger = logging.getLogger(__name__)


class SolveReport(object):
    """Outcome of one solver call

    reported_objective is measured by the solver's own criterion (the
    discrete OWA on its sample, the Yager value, the midpoint cost...),
    not by the common high-K evaluation.
    """

    def __init__(self, solution, reported_objective, solver, K=None, seed=None,
                 wall_time=0.0, params=None):
        self.solution = solution
        self.reported_objective = float(reported_objective)
        self.solver = solver
        self.K = K
        self.seed = seed
        self.wall_time = float(wall_time)
        self.params = dict(params or {})

    def replace(self, **kwargs):
        """Return a copy with some fields changed; params are merged"""
        fields = {
            'solution': self.solution,
            'reported_objective': self.reported_objective,
            'solver': self.solver,
            'K': self.K,
            'seed': self.seed,
            'wall_time': self.wall_time,
        }
        params = dict(self.params)
        params.update(kwargs.pop('params', {}))
        fields.update(kwargs)
        return SolveReport(params=params, **fields)

    def as_dict(self):
        return {
            'solver': self.solver,
            'selected': self.solution.one_based(),
            'objective': self.reported_objective,
            'K': self.K,
            'seed': self.seed,
            'wall_time_s': self.wall_time,
            'params': self.params,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + '\n'

    def __repr__(self):
        return 'SolveReport(%s, %r, objective=%r)' % (self.solver, self.solution, self.reported_objective)
