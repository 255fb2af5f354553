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

"""Utilities for PyTForcing tests
"""

import json
import sys
from contextlib import contextmanager
from io import StringIO

import numpy
import pytest


@contextmanager
def capture(command, *args, **kwargs):
    out, sys.stdout = sys.stdout, StringIO()
    try:
        status = command(*args, **kwargs)
        sys.stdout.seek(0)
        yield status, sys.stdout.read()
    finally:
        sys.stdout = out


def run_json(command, *args, **kwargs):
    """Run a command-line ``main`` and decode its JSON output
    """
    with capture(command, *args, **kwargs) as (status, text):
        return status, json.loads(text)


@pytest.fixture
def rng():
    return numpy.random.default_rng(7)
