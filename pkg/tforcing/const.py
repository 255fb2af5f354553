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

"""Constants and environment defaults for PyTForcing
"""

import os
from pathlib import Path

# -- alphabet
DIGITS = (0, 1, 2)
BITS = (0, 1)

# -- rule codes used by the JSON schema
SPLIT_CODE = 'S'
FIXED_CODES = {0: 'F0', 1: 'F1', 2: 'F2'}

# -- brute-force oracle limits
DEPTH_LIMIT = int(os.getenv('TFORCING_DEPTH_LIMIT', 20))
VALUE_CAP = int(os.getenv('TFORCING_VALUE_CAP', 8))

# -- randomised demos and sampling
SEED = int(os.getenv('TFORCING_SEED', 7))

# -- configuration directory
TFORCING_HOME = Path(os.getenv('TFORCING_HOME', Path.home() / '.tforcing'))
TFORCING_CONFIG_FILE = TFORCING_HOME / 'tforcing.ini'
