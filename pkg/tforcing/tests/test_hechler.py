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

"""Tests for tforcing.hechler
"""

from itertools import product

import pytest

from .. import sampling
from ..coding import check_coding_pair
from ..errors import (DepthLimitError, ForcingError)
from ..hechler import (HECHLER_MOD2, DCondition, EventualFn, d_leq, d_member,
                       d_nodes_at_depth, mod2_phi_star, realize_mod2)
from ..periodic import is_prefix

CAP = 5


def test_eventual_fn():
    f = EventualFn((4, 1), 2)
    assert [f(n) for n in range(4)] == [4, 1, 2, 2]
    assert f.horizon == 2
    assert EventualFn.constant(3)(10) == 3
    with pytest.raises(ForcingError):
        EventualFn((), -1)


def test_d_member():
    p = DCondition((1, 0), EventualFn.constant(3))
    assert d_member(p, p.stem)
    assert d_member(p, (1,))
    assert d_member(p, (1, 0, 3, 7))
    assert not d_member(p, (1, 0, 2))
    assert not d_member(p, (0, 0, 5))


def test_d_member_enumeration(rng):
    for _ in range(50):
        p = sampling.random_dcondition(rng, cap=CAP)
        depth = len(p.stem) + 3
        nodes = d_nodes_at_depth(p, depth, cap=CAP)
        for t in product(range(CAP + 1), repeat=3):
            assert d_member(p, p.stem + t) == (p.stem + t in nodes)
        other = sampling.random_dword(rng, cap=CAP)
        if len(other) <= depth:
            assert d_member(p, other) == any(is_prefix(other, t) for t in nodes)


def test_d_leq_examples():
    p = DCondition((2,), EventualFn((1, 5), 3))
    assert d_leq(p, p)
    assert d_leq(DCondition((2,), EventualFn((1, 5), 4)), p)
    assert not d_leq(DCondition((2,), EventualFn((1, 4), 3)), p)
    assert d_leq(DCondition((2, 5, 3), EventualFn.constant(3)), p)
    assert not d_leq(DCondition((2, 0), EventualFn.constant(9)), p)
    assert not d_leq(DCondition((), EventualFn.constant(9)), p)


def _brute_leq(q, p):
    stop = max(len(q.stem), len(p.stem), q.floor.horizon, p.floor.horizon) + 1
    for depth in range(stop + 1):
        if not d_nodes_at_depth(q, depth, cap=CAP) <= d_nodes_at_depth(p, depth, cap=CAP):
            return False
    return True


def test_d_leq_brute_force(rng):
    for _ in range(100):
        p = sampling.random_dcondition(rng, cap=CAP)
        if rng.integers(0, 2):
            q = sampling.random_dcondition(rng, cap=CAP)
        else:
            stem = p.stem + tuple(p.floor(len(p.stem) + i) for i in range(int(rng.integers(0, 3))))
            q = DCondition(stem, EventualFn(
                tuple(p.floor(n) + int(rng.integers(0, 2)) for n in range(4)),
                p.floor(10)))
        assert d_leq(q, p) == _brute_leq(q, p)


def test_d_leq_transitive(rng):
    for _ in range(100):
        p, q, r = (sampling.random_dcondition(rng, cap=CAP) for _ in range(3))
        assert d_leq(p, p)
        if d_leq(r, q) and d_leq(q, p):
            assert d_leq(r, p)


def test_d_nodes_depth_limit():
    p = DCondition((), EventualFn.constant(0))
    assert d_nodes_at_depth(p, 0) == frozenset([()])
    with pytest.raises(DepthLimitError):
        d_nodes_at_depth(p, 5, limit=4)


# -- mod-2 coding -------------------------------------------------------------

def test_mod2_phi_star():
    assert mod2_phi_star(()) == ()
    assert mod2_phi_star((3, 4, 7)) == (1, 0, 1)


def test_realize_mod2_examples():
    q = DCondition((5,), EventualFn.constant(3))
    assert realize_mod2(q, ()) == (5,)
    assert realize_mod2(q, (0,)) == (5, 4)
    assert realize_mod2(q, (1, 1)) == (5, 3, 3)


def test_realize_mod2(rng):
    for _ in range(200):
        q = sampling.random_dcondition(rng)
        s = sampling.random_word2(rng, 5)
        node = realize_mod2(q, s)
        assert d_member(q, node)
        assert mod2_phi_star(node) == mod2_phi_star(q.stem) + s


def test_check_coding_pair_hechler(rng):
    report = check_coding_pair(HECHLER_MOD2, sampling.hechler_coding_samples(rng, 200))
    assert report.ok, report.counterexamples[:3]
    assert report.checked == {'monotone': 200, 'alignment': 200, 'realize': 200}
