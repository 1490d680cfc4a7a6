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
#  config.py -- Experiment configuration (JSON backed)
#


import copy
import json
import logging
import math
import os
from functools import reduce

import intervalowa
from intervalowa import util
from intervalowa.errors import ConfigError

logger = logging.getLogger(__name__)

_ = intervalowa.gettext

defaults = {
    'experiment': {
        'number': 1,
        'instance_type': 'II',
        'n': 12,
        'p': 6,
        'instances': 20,
        'seed': 0,
    },

    # Power weight parameters alpha for w(t) = alpha (1 - t)^(alpha - 1)
    'weights': {
        'alphas': [1.5, 5.0],
    },

    'sampling': {
        'K_values': [10, 25, 50, 100],
        'K_eval': 100000,
        'greedy_K': 1000,
        'sampling_K': 100,
        'inner': 'exact',
        'max_iters': 1000,
        'enumeration_cap': 2000000,
        'use_cache': True,
    },

    # Methods compared in experiments 2 and 3
    'methods': {
        'comparison': ['greedy', 'yager', 'midpoint'],
    },

    'output': {
        'directory': 'results',
        # False leaves wall times empty so reruns produce identical files
        'timings': True,
    },

    'threads': {
        # 0 means INTERVAL_OWA_THREADS or the hardware parallelism
        'limit': 0,
    },
}

EXPERIMENTS = (1, 2, 3)
METHODS = ('sampling', 'greedy', 'yager', 'midpoint')
INNER_SOLVERS = ('exact', 'local')
INSTANCE_TYPES = ('I', 'II')


def string_to_config_value(new_value, old_value):
    """Convert a command line string to the type of old_value

    >>> string_to_config_value('10, 25', [1])
    [10, 25]
    >>> string_to_config_value('1.5,5', [1.5])
    [1.5, 5.0]
    >>> string_to_config_value('true', False), string_to_config_value('7', 3)
    (True, 7)
    """
    config_type = type(old_value)

    if config_type == list:
        items = [x.strip() for x in new_value.split(',') if x.strip()]
        item_type = type(old_value[0]) if old_value else str
        return [item_type(x) for x in items]
    elif config_type == bool:
        return util.parse_bool(new_value)
    else:
        return config_type(new_value)


class ConfigSubtree(object):
    def __init__(self, parent, name):
        self._parent = parent
        self._name = name

    def __repr__(self):
        return '<Subtree %r of Config>' % (self._name,)

    def __getattr__(self, name):
        if name.startswith('_'):
            raise AttributeError(name)
        return getattr(self._parent, '.'.join((self._name, name)))

    def __setattr__(self, name, value):
        if name.startswith('_'):
            object.__setattr__(self, name, value)
        else:
            self._parent.__setattr__('.'.join((self._name, name)), value)


class Config(object):
    """JSON experiment configuration with dotted attribute access

    >>> c = Config()
    >>> c.experiment.n, c.sampling.K_values
    (12, [10, 25, 50, 100])
    >>> c.update_field('sampling.K_values', '10,50')
    >>> c.sampling.K_values
    [10, 50]
    """

    _INDENT = 2

    def __init__(self, filename=None, data=None):
        self._filename = filename
        self._data = copy.deepcopy(defaults)
        if data is not None:
            self._restore(data)
        elif filename is not None:
            self.load()

    def _restore(self, text):
        try:
            loaded = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(_('Cannot parse configuration: %s (line %d)') % (e.msg, e.lineno)) from e
        if not isinstance(loaded, dict):
            raise ConfigError(_('Configuration must be a JSON object'))
        self._data = loaded
        return self._merge_keys(defaults)

    def _merge_keys(self, merge_source):
        """Merge default keys missing from the loaded data

        Return True if new keys were merged, False otherwise.
        """
        added_new_key = False
        work_queue = [(self._data, merge_source)]
        while work_queue:
            data, default = work_queue.pop()
            for key, value in default.items():
                if key not in data:
                    data[key] = copy.deepcopy(value)
                    added_new_key = True
                elif isinstance(value, dict):
                    if not isinstance(data[key], dict):
                        raise ConfigError(_('Configuration key "%s" must be an object') % key)
                    work_queue.append((data[key], value))
                elif isinstance(value, bool) or isinstance(data[key], bool):
                    continue
                elif isinstance(value, int) and isinstance(data[key], float) and data[key].is_integer():
                    # Convert float to int if default value is int
                    data[key] = int(data[key])

        return added_new_key

    def __repr__(self):
        return json.dumps(self._data, indent=self._INDENT, sort_keys=True)

    def _lookup(self, name):
        try:
            return reduce(lambda d, k: d[k], name.split('.'), self._data)
        except (KeyError, TypeError):
            raise ConfigError(_('Unknown configuration key: %s') % name)

    def __getattr__(self, name):
        if name.startswith('_'):
            raise AttributeError(name)
        value = self._lookup(name)
        if isinstance(value, dict):
            return ConfigSubtree(self, name)
        return value

    def __setattr__(self, name, value):
        if name.startswith('_'):
            object.__setattr__(self, name, value)
            return

        attrs = name.split('.')
        target = reduce(lambda d, k: d.setdefault(k, {}), attrs[:-1], self._data)
        old_value = target.get(attrs[-1], None)
        if old_value != value:
            logger.debug('%s: %s -> %s', name, old_value, value)
        target[attrs[-1]] = value

    def update_field(self, name, new_value):
        """Update a config field, converting strings to the right types."""
        old_value = self._lookup(name)
        if isinstance(old_value, dict):
            raise ConfigError(_('Configuration key %s is a section, not a value') % name)
        try:
            setattr(self, name, string_to_config_value(new_value, old_value))
        except ValueError as e:
            raise ConfigError(_('Invalid value for %s: %r') % (name, new_value)) from e

    def load(self, filename=None):
        if filename is not None:
            self._filename = filename

        logger.info('Loading configuration from %s', self._filename)
        with open(self._filename, 'rt', encoding='utf-8') as fp:
            if self._restore(fp.read()):
                logger.debug('Default keys added to %s', self._filename)

    def save(self, filename=None):
        if filename is None:
            filename = self._filename
        if filename is None:
            raise ConfigError(_('No configuration file name given'))

        logger.info('Writing configuration to %s', filename)
        try:
            util.write_text_atomically(filename, repr(self) + '\n')
        except OSError:
            logger.error('Cannot write configuration to %s', filename)
            raise

    def experiment_config(self):
        """Validate the settings and return an ExperimentConfig"""
        try:
            settings = dict(
                experiment=int(self.experiment.number),
                instance_type=str(self.experiment.instance_type),
                n=int(self.experiment.n),
                p=int(self.experiment.p),
                instances=int(self.experiment.instances),
                seed=int(self.experiment.seed),
                alphas=[float(a) for a in self.weights.alphas],
                K_values=[int(k) for k in self.sampling.K_values],
                K_eval=int(self.sampling.K_eval),
                greedy_K=int(self.sampling.greedy_K),
                sampling_K=int(self.sampling.sampling_K),
                inner=str(self.sampling.inner),
                max_iters=int(self.sampling.max_iters),
                enumeration_cap=int(self.sampling.enumeration_cap),
                use_cache=bool(self.sampling.use_cache),
                methods=list(self.methods.comparison),
                output=str(self.output.directory),
                timings=bool(self.output.timings),
                thread_limit=int(self.threads.limit),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(_('Invalid configuration value: %s') % e) from e

        return ExperimentConfig(**settings)


class ExperimentConfig(object):
    """Validated settings of one experiment run"""

    FIELDS = ('experiment', 'instance_type', 'n', 'p', 'instances', 'seed', 'alphas', 'K_values',
              'K_eval', 'greedy_K', 'sampling_K', 'inner', 'max_iters', 'enumeration_cap',
              'use_cache', 'methods', 'output', 'timings', 'thread_limit')

    def __init__(self, experiment=1, instance_type='II', n=12, p=6, instances=20, seed=0,
                 alphas=(1.5, 5.0), K_values=(10, 25, 50, 100), K_eval=100000, greedy_K=1000,
                 sampling_K=100, inner='exact', max_iters=1000, enumeration_cap=2000000,
                 use_cache=True, methods=('greedy', 'yager', 'midpoint'), output='results',
                 timings=True, thread_limit=0):
        self.experiment = experiment
        self.instance_type = instance_type
        self.n = n
        self.p = p
        self.instances = instances
        self.seed = seed
        self.alphas = tuple(alphas)
        self.K_values = tuple(K_values)
        self.K_eval = K_eval
        self.greedy_K = greedy_K
        self.sampling_K = sampling_K
        self.inner = inner
        self.max_iters = max_iters
        self.enumeration_cap = enumeration_cap
        self.use_cache = use_cache
        self.methods = tuple(methods)
        self.output = output
        self.timings = timings
        self.thread_limit = thread_limit
        self.validate()

    def validate(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(_('Unknown experiment %r (expected 1, 2 or 3)') % (self.experiment,))
        if self.instance_type not in INSTANCE_TYPES:
            raise ConfigError(_('Unknown instance type %r (expected I or II)') % (self.instance_type,))
        if self.n < 1 or not 0 <= self.p <= self.n:
            raise ConfigError(_('Need n >= 1 and 0 <= p <= n, got n=%d, p=%d') % (self.n, self.p))
        if self.instances < 1:
            raise ConfigError(_('Need at least one instance'))
        if self.seed < 0:
            raise ConfigError(_('The base seed must be nonnegative'))
        if not self.alphas or any(not a >= 1 for a in self.alphas):
            raise ConfigError(_('Weight alphas must be a nonempty list of values >= 1'))
        if not self.K_values:
            raise ConfigError(_('K values must be a nonempty list'))
        if any(k < 1 for k in self.K_values + (self.K_eval, self.greedy_K, self.sampling_K)):
            raise ConfigError(_('All K values must be at least 1'))
        if self.inner not in INNER_SOLVERS:
            raise ConfigError(_('Unknown inner solver %r') % (self.inner,))
        if self.max_iters < 0:
            raise ConfigError(_('max_iters must be nonnegative'))
        unknown = [m for m in self.methods if m not in METHODS]
        if unknown:
            raise ConfigError(_('Unknown methods: %s') % ', '.join(unknown))
        if self.experiment in (2, 3) and not self.methods:
            raise ConfigError(_('Experiments 2 and 3 need at least one comparison method'))

        uses_sampling = self.experiment == 1 or 'sampling' in self.methods
        if uses_sampling and self.inner == 'exact' and math.comb(self.n, self.p) > self.enumeration_cap:
            raise ConfigError(_('C(%d, %d) = %d bases exceed the enumeration cap %d; '
                                'use inner solver "local" or a smaller instance')
                              % (self.n, self.p, math.comb(self.n, self.p), self.enumeration_cap))

    def as_dict(self):
        return {field: getattr(self, field) for field in self.FIELDS}

    def __repr__(self):
        return 'ExperimentConfig(%s)' % ', '.join('%s=%r' % item for item in self.as_dict().items())


def load_config(filename, overrides=()):
    """Load filename (the defaults when it is None) and apply key=value overrides"""
    if filename is not None and not os.path.exists(filename):
        raise ConfigError(_('Configuration file not found: %s') % filename)
    config = Config(filename)
    for override in overrides:
        name, sep, value = override.partition('=')
        if not sep:
            raise ConfigError(_('Overrides must look like key=value, got %r') % override)
        config.update_field(name.strip(), value)
    return config
