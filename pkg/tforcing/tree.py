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

"""Conditions of the ternary Mathias-variant tree forcing

A condition is a perfect tree ``p`` inside ``3^<omega`` that, at every
level above its stem, either splits fully (every node gets all three
successors) or takes one uniform value.  Such a tree is stored
intensionally as its stem plus an eventually periodic `LevelSchedule`
of `LevelRule` entries, which makes inclusion, meets and splitting-level
queries decidable.

Levels below the stem behave like ``Fixed(stem digit)`` rules, so every
condition also has an *absolute* rule sequence, see `TCondition.rule_at`.
The tree is exactly the set of words whose every letter is allowed by the
rule of its level.

Conditions whose schedule contains ``Fixed(2)`` are *lenient*: they are
produced by the amalgamation steps of `tforcing.forcing` but sit outside
the literal class (no value 2 at a non-splitting level above the stem).
"""

from dataclasses import dataclass
from itertools import (islice, product)
from math import lcm
from typing import Optional

from . import const
from .errors import (DepthLimitError, ForcingError, NotAMemberError,
                     ScheduleError)
from .periodic import (EventualReal, EventualSequence, as_word, unfold,
                       word_str)

__author__ = 'the PyTForcing developers'


# -- level rules ----------------------------------------------------------------

@dataclass(frozen=True)
class LevelRule:
    """Behaviour of a condition at one level: split, or fixed ``value``
    """
    value: Optional[int] = None

    def __post_init__(self):
        if self.value is not None and self.value not in const.DIGITS:
            raise ScheduleError(f"invalid fixed value {self.value!r}")

    @property
    def is_split(self):
        return self.value is None

    @property
    def allowed(self):
        """The digits a node may take at this level
        """
        if self.value is None:
            return const.DIGITS
        return (self.value,)

    def allows(self, digit):
        return self.value is None or self.value == digit

    def within(self, other):
        """`True` if every digit allowed here is allowed by ``other``
        """
        return other.value is None or other.value == self.value

    def meet(self, other):
        """Level-wise intersection, or `None` when the fixed values conflict
        """
        if self.value is None:
            return other
        if other.value is None or other.value == self.value:
            return self
        return None

    @property
    def code(self):
        if self.value is None:
            return const.SPLIT_CODE
        return const.FIXED_CODES[self.value]

    @classmethod
    def from_code(cls, code):
        if isinstance(code, cls):
            return code
        if code == const.SPLIT_CODE:
            return SPLIT
        for value, fcode in const.FIXED_CODES.items():
            if code == fcode:
                return FIXED[value]
        raise ScheduleError(f"unknown rule code {code!r}")

    def __str__(self):
        return self.code


SPLIT = LevelRule()
FIXED = {value: LevelRule(value) for value in const.DIGITS}


@dataclass(frozen=True)
class LevelSchedule:
    """Rules for the levels above a stem: a finite table, then a periodic tail
    """
    table: tuple
    tail: tuple

    def __post_init__(self):
        object.__setattr__(self, 'table', tuple(map(LevelRule.from_code, self.table)))
        object.__setattr__(self, 'tail', tuple(map(LevelRule.from_code, self.tail)))
        if not self.tail:
            raise ScheduleError("the periodic tail of a schedule must be nonempty")

    def rule(self, offset):
        """Rule for the level ``offset`` places above the stem
        """
        if offset < len(self.table):
            return self.table[offset]
        return self.tail[(offset - len(self.table)) % len(self.tail)]

    @property
    def has_split_tail(self):
        return any(rule.is_split for rule in self.tail)

    @property
    def rules(self):
        return self.table + self.tail

    def shifted(self, offset):
        """The schedule seen from ``offset`` levels higher up
        """
        if offset <= len(self.table):
            return type(self)(self.table[offset:], self.tail)
        rot = (offset - len(self.table)) % len(self.tail)
        return type(self)((), self.tail[rot:] + self.tail[:rot])

    @classmethod
    def periodic(cls, *codes):
        return cls((), codes)

    def __str__(self):
        return "[{}]({})".format(','.join(map(str, self.table)), ','.join(map(str, self.tail)))


# -- conditions -----------------------------------------------------------------

@dataclass(frozen=True)
class TCondition:
    """A condition: ``stem`` word over ``{0, 1, 2}`` plus a `LevelSchedule`

    Instances built directly are not checked for canonical form, use
    `normalize` (or `validate`) for that.
    """
    stem: tuple
    schedule: LevelSchedule

    def __post_init__(self):
        object.__setattr__(self, 'stem', as_word(self.stem, 3))

    def rule_at(self, level):
        """The absolute rule at ``level`` (stem levels are fixed)
        """
        if level < len(self.stem):
            return FIXED[self.stem[level]]
        return self.schedule.rule(level - len(self.stem))

    def rules(self, count):
        return tuple(self.rule_at(i) for i in range(count))

    @property
    def horizon(self):
        """First level from which the absolute rule sequence is periodic
        """
        return len(self.stem) + len(self.schedule.table)

    @property
    def period(self):
        return len(self.schedule.tail)

    @property
    def is_strict(self):
        return all(rule.value != 2 for rule in self.schedule.rules)

    @classmethod
    def from_rules(cls, prefix, tail):
        """Build the canonical condition with the given absolute rules

        ``prefix`` holds the rules of levels ``0 .. len(prefix)-1``, and
        ``tail`` repeats from there on.
        """
        prefix = tuple(map(LevelRule.from_code, prefix))
        stem = []
        for rule in prefix:
            if rule.is_split:
                break
            stem.append(rule.value)
        return normalize(stem, LevelSchedule(prefix[len(stem):], tail))

    @classmethod
    def full(cls, stem=()):
        """The full-splitting condition above ``stem``
        """
        return cls(stem, LevelSchedule.periodic(SPLIT))

    def __str__(self):
        return f"stem={word_str(self.stem)!r} schedule={self.schedule}"


@dataclass(frozen=True)
class Incompatible:
    """Result of `meet` for conditions with no common extension
    """
    level: Optional[int]
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of `validate`, with one diagnostic per violated clause
    """
    valid: bool
    strict: bool
    diagnostics: tuple = ()

    def __bool__(self):
        return self.valid


class OddLevelSet(EventualSequence):
    """A periodic subset of the odd levels: entry ``m`` is level ``2m + 1``
    """
    alphabet = 2

    def contains(self, level):
        return level % 2 == 1 and bool(self[level // 2])


class BranchSelector(EventualSequence):
    """Digits consumed, in order, at the splitting levels of a condition
    """
    alphabet = 3

    @classmethod
    def constant(cls, digit):
        return cls((), (digit,))


# -- operations -----------------------------------------------------------------

def normalize(stem, schedule):
    """Absorb leading fixed rules into the stem

    Parameters
    ----------
    stem : `tuple`, `str`
        the stem word
    schedule : `LevelSchedule`
        rules for the levels from ``len(stem)`` upward; its tail must
        contain a splitting rule

    Returns
    -------
    condition : `TCondition`
        the same tree, with a splitting rule directly above the stem

    Raises
    ------
    ScheduleError
        if the schedule tail has no splitting rule (the tree is not perfect)
    """
    if not schedule.has_split_tail:
        raise ScheduleError(
            "schedule tail has no splitting level, the tree is not perfect",
            tail=[r.code for r in schedule.tail])
    stem = list(as_word(stem, 3))
    table = list(schedule.table)
    tail = schedule.tail
    while True:
        if not table:
            if tail[0].is_split:
                break
            # unroll one period
            table = list(tail)
        if table[0].is_split:
            break
        stem.append(table.pop(0).value)
    return TCondition(tuple(stem), LevelSchedule(tuple(table), tail))


def member(p, t):
    """Return `True` if the word ``t`` is a node of ``p``
    """
    return all(p.rule_at(i).allows(d) for i, d in enumerate(t))


def restrict(p, t):
    """Return ``p`` restricted to the nodes compatible with ``t``

    Raises
    ------
    NotAMemberError
        if ``t`` is not a node of ``p``
    """
    t = as_word(t, 3)
    if not member(p, t):
        raise NotAMemberError(f"{word_str(t)!r} is not a node of the condition",
                              node=word_str(t))
    if len(t) <= len(p.stem):
        return p
    return normalize(t, p.schedule.shifted(len(t) - len(p.stem)))


def _span(*conditions):
    """Number of levels that decide a level-wise comparison
    """
    return (max(c.horizon for c in conditions)
            + lcm(*(c.period for c in conditions)))


def leq(q, p):
    """Return `True` if ``q <= p``, i.e. the tree ``q`` is a subset of ``p``

    Both absolute rule sequences are periodic beyond the larger horizon with
    period dividing the lcm of the two tail lengths, so one such window
    decides the comparison.
    """
    return all(q.rule_at(i).within(p.rule_at(i)) for i in range(_span(q, p)))


def iter_splitting_levels(p):
    """Yield the splitting levels of ``p`` in increasing order (forever)
    """
    if not p.schedule.has_split_tail:
        raise ScheduleError("schedule tail has no splitting level")
    level = len(p.stem)
    while True:
        if p.rule_at(level).is_split:
            yield level
        level += 1


def splitting_levels(p, m):
    """Return the first ``m`` splitting levels of ``p``
    """
    if m < 0:
        raise ForcingError(f"cannot take {m} splitting levels")
    return tuple(islice(iter_splitting_levels(p), m))


def leq_n(q, p, n):
    """Return `True` if ``q <= p`` and both agree on the first ``n+1`` splitting levels
    """
    return leq(q, p) and splitting_levels(q, n + 1) == splitting_levels(p, n + 1)


def meet(p, q):
    """Return the greatest common extension of ``p`` and ``q``

    Returns
    -------
    meet : `TCondition` or `Incompatible`
        `Incompatible` records the first level where the fixed values
        conflict, or that the merged schedule stops splitting
    """
    horizon = max(p.horizon, q.horizon)
    rules = []
    for level in range(_span(p, q)):
        rule = p.rule_at(level).meet(q.rule_at(level))
        if rule is None:
            return Incompatible(level, f"conflicting fixed values at level {level}")
        rules.append(rule)
    tail = rules[horizon:]
    if not any(rule.is_split for rule in tail):
        return Incompatible(None, "no common splitting tail")
    return TCondition.from_rules(rules[:horizon], tail)


def build_antichain_condition(a):
    """Return the condition that splits on even levels and codes ``a`` on odd ones

    Parameters
    ----------
    a : `OddLevelSet`
        the odd levels where the condition takes value 1 (0 elsewhere)

    Returns
    -------
    condition : `TCondition`
        a strict condition with empty stem; distinct sets give
        incompatible conditions
    """
    def _interleave(bits):
        return tuple(rule for bit in bits for rule in (SPLIT, FIXED[bit]))
    return normalize((), LevelSchedule(_interleave(a.prefix), _interleave(a.tail)))


def unfold_branch(p, policy, state):
    """Build a branch of ``p`` from a finite-state choice policy

    ``policy(level, rule, state)`` returns ``(digit, next_state)``; ``level``
    is reduced modulo the schedule period beyond the horizon, so the policy
    must only depend on it through ``p.rule_at``.  The result is exact since
    the pair (level phase, policy state) eventually repeats.
    """
    horizon, period = p.horizon, p.period

    def step(current):
        level, inner = current
        rule = p.rule_at(level)
        digit, inner = policy(level, rule, inner)
        if not rule.allows(digit):
            raise ForcingError(f"digit {digit} not allowed at level {level}")
        level += 1
        if level >= horizon + period:
            level -= period
        return digit, (level, inner)

    prefix, tail = unfold(step, (len(p.stem), state), head=p.stem)
    return EventualReal(prefix, tail)


def branch(p, sel):
    """Return the branch of ``p`` chosen by ``sel`` at the splitting levels
    """
    end = sel.horizon + sel.period

    def policy(level, rule, index):
        # index of the next unused choice, kept below ``end``
        if not rule.is_split:
            return rule.value, index
        following = index + 1
        if following >= end:
            following -= sel.period
        return sel[index], following

    return unfold_branch(p, policy, 0)


def iter_nodes(p, depth):
    """Yield every node of ``p`` of length ``depth`` (no size guard)
    """
    for node in product(*(p.rule_at(i).allowed for i in range(depth))):
        yield node


def nodes_at_depth(p, depth, limit=None):
    """Return the set of nodes of ``p`` with length ``depth``

    Raises
    ------
    DepthLimitError
        if ``depth`` exceeds ``limit`` (default `tforcing.const.DEPTH_LIMIT`)
    """
    if limit is None:
        limit = const.DEPTH_LIMIT
    if depth > limit:
        raise DepthLimitError(f"depth {depth} exceeds the oracle limit {limit}",
                              depth=depth, limit=limit)
    return frozenset(iter_nodes(p, depth))


def validate(p, strict=False):
    """Check ``p`` against the definition of the forcing

    Parameters
    ----------
    p : `TCondition`
    strict : `bool`, optional
        also reject fixed value 2 above the stem

    Returns
    -------
    report : `ValidationReport`
    """
    diagnostics = []
    if not p.schedule.has_split_tail:
        diagnostics.append(
            "not perfect: the periodic tail has no splitting level")
    if not p.rule_at(len(p.stem)).is_split:
        diagnostics.append(
            f"stem is not maximal: level {len(p.stem)} is {p.rule_at(len(p.stem))}, "
            "so the node of that length is not a splitting node")
    if strict:
        for offset, rule in enumerate(p.schedule.rules):
            if rule.value == 2:
                diagnostics.append(
                    f"value 2 forced at non-splitting level {len(p.stem) + offset} "
                    "above the stem")
                break
    return ValidationReport(not diagnostics, p.is_strict, tuple(diagnostics))


def is_strict(p):
    return p.is_strict


def split_order(p, t):
    """Return the number of splitting nodes strictly below the node ``t``
    """
    if not member(p, t):
        raise NotAMemberError(f"{word_str(t)!r} is not a node of the condition")
    return sum(1 for i in range(len(p.stem), len(t)) if p.rule_at(i).is_split)


def successors(p, t):
    """Return the digits ``i`` with ``t + (i,)`` a node of ``p``
    """
    if not member(p, t):
        raise NotAMemberError(f"{word_str(t)!r} is not a node of the condition")
    return p.rule_at(len(t)).allowed
