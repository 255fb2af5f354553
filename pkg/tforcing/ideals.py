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

"""Witness sets separating the nowhere-dense and meager ideals

``N_n`` collects the reals with no 2 from position ``n`` on, ``M_n`` the
reals in ``H`` whose code is 0 from digit ``n`` on.  Each single set is
avoided below any condition (`nn_witness`, `mn_witness`), while their
unions meet every condition (`non2_branch`, `all_zero_branch`).
"""

from dataclasses import dataclass

from .coding import parity_tail_analysis
from .errors import (ForcingError, StrictnessError)
from .forcing import (decided_cohen_prefix, extend_for_cohen)
from .tree import (BranchSelector, branch, restrict, unfold_branch)

__author__ = 'the PyTForcing developers'

NN = 'Nn'
MN = 'Mn'


@dataclass(frozen=True)
class IdealSetSpec:
    """Names one of the sets ``N_n`` or ``M_n``
    """
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in (NN, MN):
            raise ForcingError(f"unknown set kind {self.kind!r}")
        if self.n < 0:
            raise ForcingError(f"set index must be non-negative, not {self.n}")

    def contains(self, z):
        if self.kind == NN:
            return member_Nn(z, self.n)
        return member_Mn(z, self.n)

    def witness(self, p):
        """A refinement of ``p`` whose branches all avoid this set
        """
        if self.kind == NN:
            return nn_witness(p, self.n)
        return mn_witness(p, self.n)


def _require_strict(p):
    if not p.is_strict:
        raise StrictnessError("this construction needs a strict condition")


def member_H(z):
    return z.in_h


def member_Nn(z, n):
    """Return `True` if no digit 2 occurs in ``z`` at a position ``>= n``
    """
    return 2 not in z.prefix[n:] and 2 not in z.tail


def member_Mn(z, n):
    """Return `True` if ``z`` is in ``H`` and its code is 0 from digit ``n`` on
    """
    if not z.in_h:
        return False
    analysis = parity_tail_analysis(z)
    return not any(analysis.transient[n:]) and not any(analysis.period)


def nn_witness(p, n):
    """Return ``q <= p`` whose stem has a 2 at a position ``>= n``

    The stem is extended by fixed values up to the first splitting level
    at or above ``n``, which takes a 2.
    """
    node = list(p.stem)
    while True:
        rule = p.rule_at(len(node))
        if rule.is_split and len(node) >= n:
            node.append(2)
            break
        node.append(rule.value if not rule.is_split else 0)
    return restrict(p, node)


def non2_branch(p):
    """Return the branch of ``p`` taking 0 at every splitting level

    It has no 2 beyond the stem, so lies in ``N_m`` for ``m = len(p.stem)``.

    Raises
    ------
    StrictnessError
        for lenient ``p`` (a fixed 2 above the stem)
    """
    _require_strict(p)
    return branch(p, BranchSelector.constant(0))


def mn_witness(p, n):
    """Return ``q <= p`` deciding a code digit 1 at some index ``>= n``
    """
    _require_strict(p)
    decided = len(decided_cohen_prefix(p))
    zeros = max(0, n - decided)
    return extend_for_cohen(p, (0,) * zeros + (1,))


def all_zero_branch(p):
    """Return a branch ``z`` of ``p`` in ``H`` whose code is 0 past the decided part

    Every block is closed with an even number of 1s: at the first
    splitting level after a 2 the value in ``{0, 1}`` making the count even
    at the next splitting level is chosen, and that level takes the 2.
    A stem without a 2 first puts one at its next splitting level.
    """
    _require_strict(p)

    def ones_until_split(level):
        count = 0
        level += 1
        while not p.rule_at(level).is_split:
            count += p.rule_at(level).value == 1
            level += 1
        return count

    def policy(level, rule, state):
        opened, parity, closing = state
        if not rule.is_split:
            return rule.value, (opened, (parity + (rule.value == 1)) % 2, closing)
        if closing or not opened:
            return 2, (True, 0, False)
        choice = (parity + ones_until_split(level)) % 2
        return choice, (True, (parity + choice) % 2, True)

    if 2 in p.stem:
        last = len(p.stem) - 1 - p.stem[::-1].index(2)
        parity = sum(1 for d in p.stem[last + 1:] if d == 1) % 2
        state = (True, parity, False)
    else:
        state = (False, 0, False)
    return unfold_branch(p, policy, state)

