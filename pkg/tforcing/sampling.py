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

"""Seedable random generators for conditions, reals and words

Every function takes a `numpy.random.Generator` as its first argument;
`get_rng` builds one from a seed (default `tforcing.const.SEED`), so the
same seed always reproduces the same samples.
"""

import numpy

from . import const
from .coding import CodingSamples
from .forcing import fix_level
from .hechler import (DCondition, EventualFn, EventualNat)
from .periodic import EventualReal
from .tree import (FIXED, SPLIT, BranchSelector, LevelSchedule, OddLevelSet,
                   normalize, restrict, splitting_levels)

__author__ = 'the PyTForcing developers'

STRICT_RULES = (SPLIT, FIXED[0], FIXED[1])
LENIENT_RULES = STRICT_RULES + (FIXED[2],)


def get_rng(seed=None):
    if seed is None:
        seed = const.SEED
    return numpy.random.default_rng(seed)


def _size(rng, low, high):
    return int(rng.integers(low, high + 1))


def random_word(rng, length, alphabet):
    return tuple(int(d) for d in rng.integers(0, alphabet, size=length))


def random_word2(rng, maxlen=5):
    return random_word(rng, _size(rng, 0, maxlen), 2)


def random_word3(rng, maxlen=8):
    return random_word(rng, _size(rng, 0, maxlen), 3)


def random_schedule(rng, maxtable=4, maxtail=4, strict=True):
    """Return a random `LevelSchedule` whose tail has a splitting rule
    """
    choices = STRICT_RULES if strict else LENIENT_RULES

    def _rules(n):
        return tuple(choices[int(i)] for i in rng.integers(0, len(choices), size=n))

    table = _rules(_size(rng, 0, maxtable))
    tail = list(_rules(_size(rng, 1, maxtail)))
    tail[int(rng.integers(0, len(tail)))] = SPLIT
    return LevelSchedule(table, tuple(tail))


def random_condition(rng, maxstem=4, maxtable=4, maxtail=4, strict=True):
    """Return a random normalized condition

    With ``strict=False`` the schedule may hold ``Fixed(2)`` rules, but
    the result is not guaranteed to be lenient.
    """
    stem = random_word(rng, _size(rng, 0, maxstem), 3)
    return normalize(stem, random_schedule(rng, maxtable, maxtail, strict=strict))


def random_real_in_h(rng, maxprefix=6, maxtail=5):
    """Return a random eventually periodic real with a 2 in its tail
    """
    prefix = random_word(rng, _size(rng, 0, maxprefix), 3)
    tail = list(random_word(rng, _size(rng, 1, maxtail), 3))
    tail[int(rng.integers(0, len(tail)))] = 2
    return EventualReal(prefix, tuple(tail))


def random_selector(rng, maxprefix=4, maxtail=3, in_h=False):
    """Return a random selector; with ``in_h=True`` its tail holds a 2
    """
    tail = list(random_word(rng, _size(rng, 1, maxtail), 3))
    if in_h:
        tail[int(rng.integers(0, len(tail)))] = 2
    return BranchSelector(random_word(rng, _size(rng, 0, maxprefix), 3), tuple(tail))


def random_odd_predicate(rng, maxtable=6, maxtail=4):
    return OddLevelSet(random_word(rng, _size(rng, 0, maxtable), 2),
                       random_word(rng, _size(rng, 1, maxtail), 2))


def random_dcondition(rng, maxstem=3, maxtable=3, cap=None):
    """Return a random Hechler condition with floors below ``cap - 1``
    """
    if cap is None:
        cap = const.VALUE_CAP
    stem = tuple(int(v) for v in rng.integers(0, cap + 1, size=_size(rng, 0, maxstem)))
    table = tuple(int(v) for v in rng.integers(0, cap - 1, size=_size(rng, 0, maxtable)))
    return DCondition(stem, EventualFn(table, int(rng.integers(0, cap - 1))))


def random_dword(rng, maxlen=6, cap=None):
    if cap is None:
        cap = const.VALUE_CAP
    return tuple(int(v) for v in rng.integers(0, cap + 1, size=_size(rng, 0, maxlen)))


def random_dreal(rng, maxprefix=4, maxtail=3, cap=None):
    if cap is None:
        cap = const.VALUE_CAP
    return EventualNat(random_dword(rng, maxprefix, cap),
                       tuple(int(v) for v in rng.integers(0, cap + 1, size=_size(rng, 1, maxtail))))


def random_increasing(rng, maxlen=8, maxgap=6):
    """Return a random strictly increasing sequence of naturals
    """
    gaps = rng.integers(1, maxgap + 1, size=_size(rng, 0, maxlen))
    return tuple(int(v) - 1 for v in numpy.cumsum(gaps))


def _extension_pairs(rng, words, alphabet_word):
    return [(w, w + alphabet_word(rng)) for w in words]


def t_coding_samples(rng, count=200, maxsigma=5, depth=20):
    """Samples for checking the parity coding on the tree forcing
    """
    words3 = [random_word3(rng, 10) for _ in range(count)]
    return CodingSamples(
        conditions=[random_condition(rng) for _ in range(max(1, count // 10))],
        words=[random_word2(rng, maxsigma) for _ in range(10)],
        extensions=_extension_pairs(rng, words3, lambda r: random_word3(r, 6)),
        points=[random_real_in_h(rng) for _ in range(count)],
        depth=depth,
    )


def hechler_coding_samples(rng, count=200, maxsigma=5, depth=20, cap=None):
    """Samples for checking the mod-2 coding on the Hechler forcing
    """
    words = [random_dword(rng, cap=cap) for _ in range(count)]
    return CodingSamples(
        conditions=[random_dcondition(rng, cap=cap) for _ in range(max(1, count // 10))],
        words=[random_word2(rng, maxsigma) for _ in range(10)],
        extensions=_extension_pairs(rng, words, lambda r: random_dword(r, 4, cap=cap)),
        points=[random_dreal(rng, cap=cap) for _ in range(count)],
        depth=depth,
    )


def random_refinement(rng, q, maxdepth=6):
    """Return a random condition below ``q``

    The stem is pushed up along random digits, then one splitting level
    above the new stem is frozen to 0 or 1.
    """
    node = list(q.stem)
    for _ in range(_size(rng, 0, maxdepth)):
        allowed = q.rule_at(len(node)).allowed
        node.append(allowed[int(rng.integers(0, len(allowed)))])
    r = restrict(q, node)
    split = splitting_levels(r, 3)[int(rng.integers(1, 3))]
    return fix_level(r, split, int(rng.integers(0, 2)))


def random_block_word(rng, maxblocks=8, maxsegment=6):
    """Return a ternary word ``sigma_0 2 sigma_1 2 ...`` ending in 2
    """
    word = []
    for _ in range(_size(rng, 1, maxblocks)):
        word.extend(random_word(rng, _size(rng, 0, maxsegment), 2))
        word.append(2)
    return tuple(word)
