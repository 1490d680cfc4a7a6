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

# This metadata block gets parsed by setup.py and pyproject.toml - use single quotes only
__tagline__ = 'Ordered weighted averaging for combinatorial problems with interval costs'
__author__ = 'The intervalowa developers'
__version__ = '0.4.1'
__date__ = '2024-11-08'
__copyright__ = '© 2024 The intervalowa developers'
__license__ = 'GNU General Public License, version 3 or later'
__url__ = 'https://github.com/intervalowa/intervalowa'

__version_info__ = tuple(int(x) for x in __version__.split('.'))

import gettext
import os
import sys

# Check if real hard dependencies are available
try:
    import numpy
except ImportError:
    print("""
  Error: Module "numpy" not found.
         intervalowa evaluates cost distributions and samples
         scenarios with numpy. Install it with "pip install numpy".
""", file=sys.stderr)
    sys.exit(1)
del numpy


# Is intervalowa running in verbose mode?
verbose = False
# Is intervalowa running in quiet mode?
quiet = False

# i18n setup (will result in "gettext" to be available)
# Use   _ = intervalowa.gettext   in modules to enable string translations
textdomain = 'intervalowa'

t = gettext.translation(textdomain, fallback=True)

gettext = t.gettext
ngettext = t.ngettext

del t

# Environment variables understood by the library and the CLI
ENV_THREADS = 'INTERVAL_OWA_THREADS'
ENV_LOG_DIR = 'INTERVALOWA_LOG_DIR'


def thread_limit():
    """Return the maximum number of worker threads to use.

    The limit is read from the INTERVAL_OWA_THREADS environment
    variable and defaults to the hardware parallelism. Invalid or
    non-positive values fall back to the default.
    """
    default = os.cpu_count() or 1
    value = os.environ.get(ENV_THREADS, None)
    if value is None:
        return default

    try:
        limit = int(value)
    except ValueError:
        print('Ignoring invalid %s=%r' % (ENV_THREADS, value), file=sys.stderr)
        return default

    if limit < 1:
        return default

    return limit
