#!/usr/bin/env python3

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

import os

from setuptools import setup

# setuptools depends on setup.py being executed from the same dir.
os.chdir(os.path.dirname(os.path.realpath(__file__)))


def info(message, item=None):
    print('=>', message, item if item is not None else '')


def find_data_files():
    for dirpath, dirnames, filenames in os.walk(os.path.join('share', 'intervalowa')):
        filenames = [os.path.join(dirpath, filename) for filename in filenames
                     if not filename.endswith('.tmp')]
        if filenames:
            yield (dirpath, filenames)


def find_packages():
    src_intervalowa = os.path.join('src', 'intervalowa')
    for dirpath, dirnames, filenames in os.walk(src_intervalowa):
        if '__init__.py' not in filenames:
            continue

        dirparts = dirpath.split(os.sep)
        dirparts.pop(0)
        yield '.'.join(dirparts)


def find_scripts():
    for dirpath, dirnames, filenames in os.walk('bin'):
        for filename in filenames:
            yield os.path.join(dirpath, filename)


packages = sorted(find_packages())
scripts = sorted(find_scripts())
data_files = sorted(find_data_files())
info('Packages:', packages)

setup(
    package_dir={'': 'src'},
    packages=packages,
    scripts=scripts,
    data_files=data_files,
)
