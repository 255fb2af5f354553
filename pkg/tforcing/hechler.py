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

"""A small Hechler-style forcing on ``omega^<omega`` with the mod-2 coding

A condition is a stem together with a floor function; its nodes are the
extensions of the stem lying on or above the floor.  Reading every entry
modulo 2 gives a second `~tforcing.coding.CodingPair`, aligned with
the identity.
"""

from dataclasses import dataclass

from . import const
from .coding import (CodingPair, PosetKind)
from .errors import (DepthLimitError, ForcingError)
from .periodic import (EventualSequence, as_word, is_prefix)

__author__ = 'the PyTForcing developers'


@dataclass(frozen=True)
class EventualFn:
    """A function on the naturals, given by a table then a constant
    """
    table: tuple
    tail_value: int

    def __post_init__(self):
        object.__setattr__(self, 'table', as_word(self.table))
        if self.tail_value < 0:
            raise ForcingError(f"negative floor value {self.tail_value}")

    def __call__(self, n):
        if n < len(self.table):
            return self.table[n]
        return self.tail_value

    @property
    def horizon(self):
        return len(self.table)

    @classmethod
    def constant(cls, value):
        return cls((), value)


@dataclass(frozen=True)
class DCondition:
    """Stem over the naturals plus the floor the extensions must respect
    """
    stem: tuple
    floor: EventualFn

    def __post_init__(self):
        object.__setattr__(self, 'stem', as_word(self.stem))


class EventualNat(EventualSequence):
    """An eventually periodic element of ``omega^omega``
    """


def d_member(p, t):
    """Return `True` if ``t`` is a node of ``p``
    """
    t = as_word(t)
    if len(t) <= len(p.stem):
        return is_prefix(t, p.stem)
    return (is_prefix(p.stem, t)
            and all(t[n] >= p.floor(n) for n in range(len(p.stem), len(t))))


def d_leq(q, p):
    """Return `True` if every node of ``q`` is a node of ``p``

    Past both table horizons the floors are constant, so one extra level
    decides the comparison.
    """
    if not (is_prefix(p.stem, q.stem) and d_member(p, q.stem)):
        return False
    stop = max(len(q.stem), q.floor.horizon, p.floor.horizon) + 1
    return all(q.floor(n) >= p.floor(n) for n in range(len(q.stem), stop))


def d_nodes_at_depth(p, depth, cap=None, limit=None):
    """Return the nodes of ``p`` of length ``depth`` with entries at most ``cap``

    Raises
    ------
    DepthLimitError
        if ``depth`` exceeds ``limit`` (default `tforcing.const.DEPTH_LIMIT`)
    """
    if cap is None:
        cap = const.VALUE_CAP
    if limit is None:
        limit = const.DEPTH_LIMIT
    if depth > limit:
        raise DepthLimitError(f"depth {depth} exceeds the oracle limit {limit}",
                              depth=depth, limit=limit)
    if depth <= len(p.stem):
        return frozenset([p.stem[:depth]])
    nodes = [p.stem]
    for n in range(len(p.stem), depth):
        nodes = [t + (v,) for t in nodes for v in range(p.floor(n), cap + 1)]
    return frozenset(nodes)


def mod2_phi_star(t):
    """Return ``t`` read modulo 2
    """
    return tuple(v % 2 for v in as_word(t))


def realize_mod2(q, s):
    """Return a node of ``q`` whose mod-2 image is that of the stem followed by ``s``

    Each new entry is ``floor(n)`` or ``floor(n) + 1``, whichever has the
    required parity.
    """
    node = list(q.stem)
    for bit in as_word(s, 2):
        low = q.floor(len(node))
        node.append(low if low % 2 == bit else low + 1)
    return tuple(node)


def _mod2_digit(x, i):
    return x[i] % 2


HECHLER_MOD2 = CodingPair(
    kind=PosetKind.HECHLER_OMEGA,
    phi_star=mod2_phi_star,
    align=lambda x, i: i,
    realize=realize_mod2,
    member=d_member,
    digit=_mod2_digit,
)
