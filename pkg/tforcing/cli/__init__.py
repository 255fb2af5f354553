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

"""Command-line interfaces for PyTForcing

The modules contained within this subpackage are all rendered as
console_script entry points.
"""

__author__ = 'the PyTForcing developers'
