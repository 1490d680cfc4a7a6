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
#  util.py -- Misc utility functions
#

"""Miscellaneous helper functions for intervalowa

This module provides helper and utility functions for the
file handling, formatting and threading needs of intervalowa.
"""

import logging
import os
import os.path
import threading

logger = logging.getLogger(__name__)


def make_directory(path):
    """Create a directory if it does not exist already.

    Returns True if the directory exists after the function
    call, False otherwise.
    """
    if os.path.isdir(path):
        return True

    try:
        os.makedirs(path)
    except FileExistsError:
        # Concurrent writers can create the directory first
        pass
    except OSError as err:
        logger.warning('Could not create directory %s: %s', path, err)
        return False

    return True


def delete_file(filename):
    """Delete a file from the filesystem.

    Errors (permissions errors or file not found)
    are silently ignored.
    """
    try:
        os.remove(filename)
    except OSError:
        pass


def atomic_rename(old_name, new_name):
    """Atomically rename/move a (temporary) file.

    This is usually used when updating a file safely by writing
    the new contents into a temporary file and then moving the
    temporary file over the original file to replace it.
    """
    os.replace(old_name, new_name)


def write_text_atomically(filename, text):
    """Write text to filename via a temporary file.

    Readers either see the old file or the complete new one.
    """
    directory = os.path.dirname(filename)
    if directory and not make_directory(directory):
        raise OSError('Cannot create directory for %s' % filename)

    tmp_filename = filename + '.tmp'
    try:
        with open(tmp_filename, 'w', encoding='utf-8', newline='') as fp:
            fp.write(text)
        atomic_rename(tmp_filename, filename)
    except Exception:
        delete_file(tmp_filename)
        raise


def format_number(value):
    """Format a float as the shortest decimal text that round-trips

    Integral values keep a trailing ".0" so that the text always
    parses back as a float, never as an int.

    >>> format_number(7.4)
    '7.4'
    >>> format_number(2)
    '2.0'
    >>> format_number(0.1 + 0.2)
    '0.30000000000000004'
    """
    return repr(float(value))


def parse_bool(text):
    """Parse a boolean from a configuration or command line string

    >>> parse_bool('true'), parse_bool('1'), parse_bool('No')
    (True, True, False)
    """
    return text.strip().lower() in ('1', 'true', 'yes', 'on')


def run_in_background(function, daemon=False):
    logger.debug('run_in_background: %s (%s)', function, str(daemon))
    thread = threading.Thread(target=function)
    thread.daemon = daemon
    thread.start()
    return thread
