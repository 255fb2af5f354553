# -*- coding: utf-8 -*-
# Copyright (C) the PyTForcing developers (2026)
#
# This file is part of PyTForcing.
#
# PyTForcing is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# PyTForcing is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with PyTForcing.  If not, see <http://www.gnu.org/licenses/>.

"""Tests for tforcing.const
"""

import os
from importlib import reload
from pathlib import Path
from unittest import mock

from .. import const


def test_defaults():
    assert const.DIGITS == (0, 1, 2)
    assert const.FIXED_CODES[2] == 'F2'
    assert const.TFORCING_CONFIG_FILE.name == 'tforcing.ini'


def test_environment():
    env = {
        'TFORCING_DEPTH_LIMIT': '5',
        'TFORCING_VALUE_CAP': '3',
        'TFORCING_SEED': '11',
        'TFORCING_HOME': os.path.join(os.sep, 'tmp', 'tforcing-test'),
    }
    try:
        with mock.patch.dict(os.environ, env):
            reload(const)
            assert const.DEPTH_LIMIT == 5
            assert const.VALUE_CAP == 3
            assert const.SEED == 11
            assert const.TFORCING_CONFIG_FILE == Path(env['TFORCING_HOME']) / 'tforcing.ini'
    finally:
        reload(const)
