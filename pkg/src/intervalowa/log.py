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

# intervalowa.log - Logging setup for the command line tools


import glob
import logging
import os
import sys
import time
import traceback

import intervalowa

logger = logging.getLogger(__name__)

# Keep logs around for 5 days
LOG_KEEP_DAYS = 5


def purge_old_logfiles(logging_directory, now=None):
    """Remove daily log files older than LOG_KEEP_DAYS days.

    Returns the list of files that were removed.
    """
    if now is None:
        now = time.time()

    purged = []
    for old_logfile in glob.glob(os.path.join(logging_directory, '*-*-*.log')):
        st = os.stat(old_logfile)
        if now - st.st_mtime > 60 * 60 * 24 * LOG_KEEP_DAYS:
            logger.info('Purging old logfile: %s', old_logfile)
            try:
                os.remove(old_logfile)
                purged.append(old_logfile)
            except OSError:
                logger.warning('Cannot purge logfile: %s', old_logfile, exc_info=True)

    return purged


def setup(verbose=True, quiet=False):
    # mark verbose mode
    intervalowa.verbose = verbose
    intervalowa.quiet = quiet and not verbose

    # Configure basic stdout logging
    STDOUT_FMT = '%(created)f [%(name)s] %(levelname)s: %(message)s'
    logging.basicConfig(format=STDOUT_FMT,
            level=logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING)

    # Replace except hook with a custom one that logs it as an error
    original_excepthook = sys.excepthook

    def on_uncaught_exception(exctype, value, tb):
        message = ''.join(traceback.format_exception(exctype, value, tb))
        logger.error('Uncaught exception: %s', message)
        original_excepthook(exctype, value, tb)
    sys.excepthook = on_uncaught_exception

    logging_directory = os.environ.get(intervalowa.ENV_LOG_DIR, None)
    if logging_directory:
        # Configure file based logging
        logging_directory = os.path.expanduser(logging_directory)
        if not os.path.isdir(logging_directory):
            try:
                os.makedirs(logging_directory)
            except OSError:
                logger.warning('Cannot create output directory: %s',
                        logging_directory)
                return False

        purge_old_logfiles(logging_directory)

        root = logging.getLogger()
        logfile = os.path.join(logging_directory, time.strftime('%Y-%m-%d.log'))
        file_handler = logging.FileHandler(logfile, 'a', 'utf-8')
        FILE_FMT = '%(asctime)s [%(name)s] %(levelname)s: %(message)s'
        file_handler.setFormatter(logging.Formatter(FILE_FMT))
        root.addHandler(file_handler)

    logger.debug('==== intervalowa %s starts up ===', intervalowa.__version__)

    return True
