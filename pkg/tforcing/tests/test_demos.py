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

"""Tests for tforcing.demos
"""

import pytest

from .. import demos

LIMITS = {'maxstem': 3, 'maxtable': 3, 'maxtail': 3}


def test_antichain(rng):
    result = demos.antichain(rng, pairs=20, horizon=30)
    assert result['all_incompatible']
    assert len(result['conflict_levels']) == 20
    assert all(level % 2 == 1 for level in result['conflict_levels'])
    assert result['brute_force_disjoint'] == result['brute_force_checked']


def test_cohen_extension(rng):
    result = demos.cohen_extension(rng, (0, 1, 1, 0), samples=5, limits=LIMITS)
    assert result['ok']
    assert len(result['runs']) == 5
    assert all(r['decided_q'].endswith('0110') for r in result['runs'])


@pytest.mark.parametrize('n', [0, 3])
def test_ideal_separation(rng, n):
    result = demos.ideal_separation(rng, n=n, samples=3, selectors=10, limits=LIMITS)
    assert result['ok']


@pytest.mark.parametrize('oracle', ['identity', 'next-split-0', 'stem-lengthener'])
def test_axiom_a(rng, oracle):
    result = demos.axiom_a(rng, k=1, oracle=oracle, samples=2, probes=10, limits=LIMITS)
    assert result['ok']
    assert all(r['witnesses'] == 9 for r in result['runs'])


def test_iso_roundtrip(rng):
    result = demos.iso_roundtrip(rng, samples=50, maxlen=8)
    assert result['ok']
    assert result['forward'] == 50


def test_registry():
    assert set(demos.DEMO_ALIASES.values()) <= set(demos.DEMOS)
