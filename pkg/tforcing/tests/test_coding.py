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

"""Tests for tforcing.coding
"""

from dataclasses import replace
from itertools import product

import pytest
from hypothesis import (given, settings, strategies as st)

from .. import (coding, sampling, tree)
from ..coding import (CodingSamples, T_PARITY, check_coding_pair, iso_b,
                      iso_b_inv, iso_phi_inv, iso_phi_prefix, parity_digit,
                      phi_star_T, realize_T, two_position)
from ..errors import (CodingError, ForcingError, NotInHError)
from ..periodic import (EventualReal, is_prefix)
from ..tree import (OddLevelSet, TCondition)

ALL_TWOS = EventualReal.constant(2)


# -- reals --------------------------------------------------------------------

def test_two_position():
    assert [two_position(ALL_TWOS, k) for k in range(4)] == [0, 1, 2, 3]
    z = EventualReal("0212", "2")
    assert two_position(z, 0) == 1
    assert two_position(z, 1) == 3
    assert two_position(z, 2) == 4
    z = EventualReal("1", "0220")
    assert [two_position(z, k) for k in range(4)] == [2, 3, 6, 7]


def test_two_position_errors():
    with pytest.raises(NotInHError):
        two_position(EventualReal("2", "0"), 0)
    with pytest.raises(ForcingError):
        two_position(ALL_TWOS, -1)


def test_two_position_increasing(rng):
    for _ in range(50):
        z = sampling.random_real_in_h(rng)
        positions = [two_position(z, k) for k in range(51)]
        assert all(a < b for a, b in zip(positions, positions[1:]))
        assert all(z[i] == 2 for i in positions)


@pytest.mark.parametrize("prefix, tail, k, digit", [
    ("", "2", 0, 0),
    ("2112", "2", 0, 0),
    ("212", "2", 0, 1),
    ("212", "2", 1, 0),
    ("", "12", 5, 1),
])
def test_parity_digit(prefix, tail, k, digit):
    assert parity_digit(EventualReal(prefix, tail), k) == digit


def test_parity_tail_analysis():
    analysis = coding.parity_tail_analysis(ALL_TWOS)
    assert analysis.transient == ()
    assert analysis.period == (0,)
    analysis = coding.parity_tail_analysis(EventualReal("", "12"))
    assert set(analysis.period) == {1}
    analysis = coding.parity_tail_analysis(EventualReal("212", "2112"))
    assert analysis.transient == (1, 0)
    assert analysis.period == (0, 0)
    assert analysis.digit(0) == 1
    assert analysis.digit(7) == 0
    with pytest.raises(NotInHError):
        coding.parity_tail_analysis(EventualReal("2", "1"))


def test_parity_tail_analysis_agrees(rng):
    for _ in range(200):
        z = sampling.random_real_in_h(rng)
        analysis = coding.parity_tail_analysis(z)
        assert [analysis.digit(k) for k in range(60)] == [
            parity_digit(z, k) for k in range(60)]


def test_code_real():
    code = coding.code_real(EventualReal("21", "12"))
    assert code.take(4) == tuple(parity_digit(EventualReal("21", "12"), k) for k in range(4))


def test_check_alignment(rng):
    z = EventualReal("21212", "2")
    assert coding.check_alignment(z, 0)
    assert coding.check_alignment(z, 2)
    assert phi_star_T(z.take(two_position(z, 2) + 1)) == (1, 1)
    for _ in range(50):
        z = sampling.random_real_in_h(rng)
        assert all(coding.check_alignment(z, i) for i in range(21))


# -- finite words -------------------------------------------------------------

@pytest.mark.parametrize("word, code", [
    ("", ()),
    ("2", ()),
    ("2112", (0,)),
    ("212", (1,)),
    ("0212012", (1, 1)),
    ("2122", (1, 0)),
])
def test_phi_star_T(word, code):
    assert phi_star_T(tuple(int(c) for c in word)) == code


def test_phi_star_T_monotone(rng):
    for _ in range(200):
        t = sampling.random_word3(rng, 10)
        longer = t + sampling.random_word3(rng, 6)
        assert is_prefix(phi_star_T(t), phi_star_T(longer))


def test_realize_T_examples():
    full = TCondition.full()
    assert realize_T(full, ()) == ()
    sigma = realize_T(full, (1,))
    assert tree.member(full, sigma)
    assert phi_star_T(sigma) == (1,)
    odds = tree.build_antichain_condition(OddLevelSet((), (1,)))
    sigma = realize_T(odds, (0,))
    assert sigma == (2, 1, 0, 1, 2)
    assert phi_star_T(sigma) == (0,)


def test_realize_T_lenient():
    # a fixed 2 right after a chosen 2 closes an empty block
    p = TCondition((2,), tree.LevelSchedule(('S', 'S', 'F2'), ('S',)))
    assert realize_T(p, (0, 0)) == (2, 0, 2, 2)
    sigma = realize_T(p, (0, 1))
    assert tree.member(p, sigma)
    assert phi_star_T(sigma) == (0, 1)
    # the first splitting level must skip the 2
    p = TCondition((), tree.LevelSchedule(('S', 'F2'), ('S',)))
    sigma = realize_T(p, (1,))
    assert tree.member(p, sigma)
    assert phi_star_T(sigma) == (1,)


def test_realize_T_lenient_unreachable():
    p = TCondition((2,), tree.LevelSchedule(('S', 'F2', 'F2'), ('S',)))
    assert realize_T(p, (1, 0)) == (2, 1, 2, 2)
    for s in ((1, 1), (0, 1)):
        with pytest.raises(CodingError):
            realize_T(p, s)


def test_realize_T_lenient_random(rng):
    for _ in range(200):
        q = sampling.random_condition(rng, strict=False)
        node = sampling.random_refinement(rng, q).stem
        s = phi_star_T(node)[len(phi_star_T(q.stem)):]
        sigma = realize_T(q, s)
        assert tree.member(q, sigma)
        assert is_prefix(q.stem, sigma)
        assert phi_star_T(sigma) == phi_star_T(q.stem) + s


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_realize_T_post(seed):
    rng = sampling.get_rng(seed)
    q = sampling.random_condition(rng)
    s = sampling.random_word2(rng, 5)
    sigma = realize_T(q, s)
    assert tree.member(q, sigma)
    assert is_prefix(q.stem, sigma)
    assert phi_star_T(sigma) == phi_star_T(q.stem) + s


# -- bijections ---------------------------------------------------------------

@pytest.mark.parametrize("word, index", [
    ("", 0),
    ("0", 1),
    ("1", 2),
    ("00", 3),
    ("11", 6),
])
def test_iso_b(word, index):
    word = tuple(int(c) for c in word)
    assert iso_b(word) == index
    assert iso_b_inv(index) == word


def test_iso_b_bijective_and_monotone():
    words = [w for n in range(11) for w in product((0, 1), repeat=n)]
    assert sorted(iso_b(w) for w in words) == list(range(len(words)))
    assert all(iso_b(w[:i]) <= iso_b(w) for w in words for i in range(len(w)))
    with pytest.raises(CodingError):
        iso_b_inv(-1)


@pytest.mark.parametrize("word, incr", [
    ("2", (0,)),
    ("222", (0, 1, 2)),
    ("1202", (2, 4)),
])
def test_iso_phi(word, incr):
    word = tuple(int(c) for c in word)
    assert iso_phi_prefix(word) == incr
    assert iso_phi_inv(incr) == word


def test_iso_phi_errors():
    with pytest.raises(CodingError):
        iso_phi_prefix((0, 1))
    with pytest.raises(CodingError):
        iso_phi_prefix((2, 0))
    with pytest.raises(CodingError):
        iso_phi_inv((1, 1))


def test_iso_phi_roundtrip(rng):
    for _ in range(300):
        x = sampling.random_block_word(rng)
        image = iso_phi_prefix(x)
        assert all(a < b for a, b in zip(image, image[1:]))
        assert iso_phi_inv(image) == x
        s = sampling.random_increasing(rng) or (0,)
        assert iso_phi_prefix(iso_phi_inv(s)) == s


def test_iso_phi_real():
    z = EventualReal("1", "02")
    assert coding.iso_phi_real(z, 0) == ()
    assert coding.iso_phi_real(z, 3) == iso_phi_prefix((1, 0, 2, 0, 2, 0, 2))


# -- coding pairs -------------------------------------------------------------

@pytest.fixture
def t_samples(rng):
    return sampling.t_coding_samples(rng, 200)


def test_check_coding_pair_T(t_samples):
    report = check_coding_pair(T_PARITY, t_samples)
    assert report.ok, report.counterexamples[:3]
    assert report.checked == {'monotone': 200, 'alignment': 200, 'realize': 200}


def test_mutation_truncated_phi_star(t_samples):
    mutant = replace(T_PARITY, phi_star=lambda t: phi_star_T(t)[:-1])
    report = check_coding_pair(mutant, t_samples)
    assert not report.ok
    assert 'alignment' in report.laws_broken()


def test_mutation_parity_truncation_breaks_monotonicity():
    def phi(t):
        code = phi_star_T(t)
        return code[:-1] if len(t) % 2 else code
    samples = CodingSamples(extensions=[((2, 1, 2, 2), (2, 1, 2, 2, 0))])
    report = check_coding_pair(replace(T_PARITY, phi_star=phi), samples)
    assert report.laws_broken() == ['monotone']


def test_mutation_shifted_alignment(t_samples):
    mutant = replace(T_PARITY, align=lambda x, i: two_position(x, i))
    report = check_coding_pair(mutant, t_samples)
    assert report.laws_broken() == ['alignment']


def test_mutation_flipped_realizer(t_samples):
    mutant = replace(T_PARITY, realize=lambda q, s: realize_T(q, tuple(1 - b for b in s)))
    report = check_coding_pair(mutant, t_samples)
    assert report.laws_broken() == ['realize']
