#
# intervalowa.registry - Central hub for spec string resolvers
# Copyright (c) 2024, The intervalowa developers
#
# Permission to use, copy, modify, and/or distribute this software for any
# purpose with or without fee is hereby granted, provided that the above
# copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES WITH
# REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF MERCHANTABILITY
# AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY SPECIAL, DIRECT,
# INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES WHATSOEVER RESULTING FROM
# LOSS OF USE, DATA OR PROFITS, WHETHER IN AN ACTION OF CONTRACT, NEGLIGENCE OR
# OTHER TORTIOUS ACTION, ARISING OUT OF OR IN CONNECTION WITH THE USE OR
# PERFORMANCE OF THIS SOFTWARE.
#

import logging

logger = logging.getLogger(__name__)


class Resolver(object):
    """A chain of resolver functions for one kind of input

    Each resolver is called in registration order with the item to
    resolve (plus optional arguments) and returns None when it does not
    handle the item. The first non-None result wins.
    """

    def __init__(self, name, description):
        self.name = name
        self._description = description
        self._resolvers = []

    def resolve(self, item, default, *args):
        for resolver in self._resolvers:
            result = resolver(item, *args)
            if result is not None:
                logger.debug('%s resolved by %s: %r -> %r', self.name,
                             self._info(resolver), item, result)
                return result

        logger.debug('No %s resolver for %r (%s)', self.name, item, self._description)
        return default

    def register(self, func):
        logger.debug('Registering %s resolver: %s', self.name, func)
        self._resolvers.append(func)
        return func

    def _info(self, resolver):
        return '%s from %s' % (resolver.__name__ if hasattr(resolver, '__name__')
                               else resolver.__class__.__name__, resolver.__module__)


RESOLVER_NAMES = {
    'weight_spec': 'Turn a weight spec string (e.g. "power:5") into a WeightDensity',
    'cumulative_spec': 'Turn a weight spec string into the matching CumulativeWeight (or a fixed lambda)',
    'feasibility': 'Turn the "feasibility" object of an instance file into a FeasibleSet',
}

LOCALS = locals()

for name, description in RESOLVER_NAMES.items():
    LOCALS[name] = Resolver(name, description)
