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

"""Parity coding of ternary reals into binary ones

A real ``z`` with infinitely many 2s is cut into blocks by its 2s; the
``k``-th binary digit of its code is the parity of the number of 1s
between the ``k``-th and ``(k+1)``-th occurrence of 2 (0-indexed).  The
finite-word version `phi_star_T` is monotone and aligned with the full
code, and any condition can realise any binary continuation of the code
of its stem; these three laws make up the `CodingPair` contract checked by
`check_coding_pair`.

This module also holds the bijection between ``H`` and the strictly
increasing sequences, built on the length-lexicographic enumeration
`iso_b` of binary words.
"""

import enum
from collections import deque
from dataclasses import (dataclass, field)
from typing import Callable

from .errors import (CodingError, ForcingError, NotInHError)
from .periodic import (EventualSequence, as_word, is_prefix, word_str)
from .tree import member as t_member

__author__ = 'the PyTForcing developers'


class EventualBits(EventualSequence):
    """An eventually periodic element of ``2^omega``
    """
    alphabet = 2


@dataclass(frozen=True)
class ParityAnalysis:
    """The code of an eventually periodic real, as transient plus period
    """
    transient: tuple
    period: tuple

    def digit(self, k):
        if k < len(self.transient):
            return self.transient[k]
        return self.period[(k - len(self.transient)) % len(self.period)]

    def as_sequence(self):
        return EventualBits(self.transient, self.period)


# -- reals ----------------------------------------------------------------------

def _require_h(z):
    if not z.in_h:
        raise NotInHError(f"real {z} has only finitely many 2s", real=str(z))


def two_position(z, k):
    """Return the position of the ``(k+1)``-th digit 2 in ``z``

    Raises
    ------
    NotInHError
        if ``z`` has only finitely many 2s
    """
    _require_h(z)
    if k < 0:
        raise ForcingError(f"negative block index {k}")
    head = [i for i, d in enumerate(z.prefix) if d == 2]
    if k < len(head):
        return head[k]
    cycle = [i for i, d in enumerate(z.tail) if d == 2]
    turns, index = divmod(k - len(head), len(cycle))
    return z.horizon + turns * z.period + cycle[index]


def parity_digit(z, k):
    """Return digit ``k`` of the code of ``z``

    Counts the 1s in ``[two_position(z, k), two_position(z, k+1))``; the
    left end holds a 2, so this is also the count strictly between the
    two 2s.
    """
    start, stop = two_position(z, k), two_position(z, k + 1)
    return sum(1 for i in range(start, stop) if z[i] == 1) % 2


def parity_tail_analysis(z):
    """Return the code of ``z`` as a `ParityAnalysis`

    Every block starting inside the periodic tail repeats after as many
    blocks as the tail has 2s, so the blocks starting in the prefix form
    the transient and the next cycle of blocks forms the period.
    """
    _require_h(z)
    nhead = z.prefix.count(2)
    ncycle = z.tail.count(2)
    return ParityAnalysis(
        tuple(parity_digit(z, k) for k in range(nhead)),
        tuple(parity_digit(z, k) for k in range(nhead, nhead + ncycle)),
    )


def code_real(z):
    """Return the full code of ``z`` as an `EventualBits`
    """
    return parity_tail_analysis(z).as_sequence()


def check_alignment(z, i):
    """Check that the prefix of ``z`` through its ``(i+1)``-th 2 codes the first ``i`` digits
    """
    level = two_position(z, i) + 1
    return phi_star_T(z.take(level)) == tuple(parity_digit(z, k) for k in range(i))


# -- finite words ---------------------------------------------------------------

def phi_star_T(t):
    """Return the binary code of the ternary word ``t``

    Digit ``i`` is the parity of the 1s strictly between the ``(i+1)``-th
    and ``(i+2)``-th 2 of ``t``; words with fewer than two 2s code to the
    empty word.
    """
    twos = [i for i, d in enumerate(t) if d == 2]
    return tuple(
        sum(1 for d in t[a + 1:b] if d == 1) % 2
        for a, b in zip(twos, twos[1:])
    )


def _last_digit(t):
    """Code digit of the block closed by the final 2 of ``t``
    """
    before = [i for i, d in enumerate(t[:-1]) if d == 2][-1]
    return sum(1 for d in t[before + 1:-1] if d == 1) % 2


def open_block(p, node):
    """Extend ``node`` inside ``p`` until it contains a 2

    Fixed levels are copied; the first splitting level gets a 2.
    """
    node = list(node)
    while 2 not in node:
        rule = p.rule_at(len(node))
        node.append(2 if rule.is_split else rule.value)
    return tuple(node)


def parity_round(p, node, choice):
    """Extend ``node`` inside ``p`` through the next 2

    At the first splitting level reached, ``choice`` (0 or 1) is taken; the
    next splitting level gets a 2.  A fixed 2 met on the way ends the
    round early.
    """
    node = list(node)
    chosen = False
    while True:
        rule = p.rule_at(len(node))
        if rule.is_split:
            if chosen:
                node.append(2)
                return tuple(node)
            node.append(choice)
            chosen = True
        else:
            node.append(rule.value)
            if rule.value == 2:
                return tuple(node)


def close_block(p, node, bit):
    """Extend ``node`` (which contains a 2) so the next code digit is ``bit``

    Exactly one of the two choices at the first splitting level gives the
    required parity.

    Raises
    ------
    CodingError
        if a fixed 2 closes the block before any splitting level and with
        the wrong parity
    """
    for choice in (0, 1):
        candidate = parity_round(p, node, choice)
        if _last_digit(candidate) == bit:
            return candidate
    raise CodingError(
        f"a forced 2 above node {word_str(node)!r} fixes the next digit to {1 - bit}",
        node=word_str(node))


def find_node(q, target, accept):
    """Breadth-first search for a node of ``q`` above its stem

    Only nodes whose code stays a prefix of ``target`` are explored.  A
    node is summarised by its level phase, the number of digits it codes
    and the state of its open block; ``accept`` must depend on the node
    only through that summary, and the search is then finite.

    Raises
    ------
    CodingError
        if no node passes ``accept``
    """
    target = tuple(target)
    horizon, period = q.horizon, q.period
    stem = q.stem
    twos = [i for i, d in enumerate(stem) if d == 2]
    opened = bool(twos)
    parity = sum(1 for d in stem[twos[-1] + 1:] if d == 1) % 2 if opened else 0
    done = len(phi_star_T(stem))
    queue = deque([(stem, done, opened, parity)])
    seen = set()
    while queue:
        node, done, opened, parity = queue.popleft()
        level = len(node)
        phase = level if level < horizon else horizon + (level - horizon) % period
        if (phase, done, opened, parity) in seen:
            continue
        seen.add((phase, done, opened, parity))
        if accept(node):
            return node
        for digit in q.rule_at(level).allowed:
            if digit == 2 and opened:
                if done >= len(target) or target[done] != parity:
                    continue
                queue.append((node + (2,), done + 1, True, 0))
            elif digit == 2:
                queue.append((node + (2,), done, True, 0))
            else:
                flip = digit == 1 and opened
                queue.append((node + (digit,), done, opened, parity ^ flip))
    raise CodingError(
        f"no node above stem {word_str(stem)!r} codes {word_str(target)!r}",
        node=word_str(stem))


def realize_T(q, s):
    """Return a node ``sigma`` of ``q`` whose code is the code of the stem followed by ``s``

    Parameters
    ----------
    q : `~tforcing.tree.TCondition`
        any condition (lenient accepted)
    s : `tuple` of `int`
        the binary continuation to realise

    Returns
    -------
    sigma : `tuple` of `int`
        a node of ``q`` extending its stem with
        ``phi_star_T(sigma) == phi_star_T(q.stem) + s``

    Raises
    ------
    CodingError
        for lenient conditions whose forced 2s make ``s`` unreachable
    """
    s = as_word(s, 2)
    node = q.stem
    if not s:
        return node
    try:
        node = open_block(q, node)
        for bit in s:
            node = close_block(q, node, bit)
        return node
    except CodingError:
        if q.is_strict:
            raise
    # forced 2s: the first splitting level may have to skip the 2
    target = phi_star_T(q.stem) + s
    return find_node(q, target, lambda t: phi_star_T(t) == target)


# -- the H <-> increasing sequences bijection -----------------------------------

def iso_b(s):
    """Length-lexicographic index of the binary word ``s``

    ``iso_b(()) == 0`` and ``s`` a prefix of ``t`` implies
    ``iso_b(s) <= iso_b(t)``.
    """
    s = as_word(s, 2)
    return int('1' + word_str(s), 2) - 1


def iso_b_inv(n):
    """Inverse of `iso_b`
    """
    if n < 0:
        raise CodingError(f"no binary word has index {n}")
    return tuple(int(c) for c in bin(n + 1)[3:])


def iso_phi_prefix(x):
    """Map a ternary word ending in 2 to a strictly increasing sequence

    With ``x = sigma_0 2 sigma_1 2 ... sigma_{m-1} 2``, entry ``n`` is
    ``sum(iso_b(sigma_i) for i <= n) + n``.

    Raises
    ------
    CodingError
        if ``x`` has no 2 or does not end with one
    """
    x = as_word(x, 3)
    if not x or x[-1] != 2:
        raise CodingError(f"{word_str(x)!r} does not end with a 2")
    out = []
    total = 0
    segment = []
    for digit in x:
        if digit == 2:
            total += iso_b(segment)
            out.append(total + len(out))
            segment = []
        else:
            segment.append(digit)
    return tuple(out)


def iso_phi_inv(s):
    """Inverse of `iso_phi_prefix`

    Raises
    ------
    CodingError
        if ``s`` is not strictly increasing (or starts below zero)
    """
    s = tuple(int(n) for n in s)
    x = []
    previous = -1
    for n in s:
        if n <= previous:
            raise CodingError(f"sequence {list(s)} is not strictly increasing")
        x.extend(iso_b_inv(n - previous - 1))
        x.append(2)
        previous = n
    return tuple(x)


def iso_phi_real(x, m):
    """First ``m`` entries of the image of the real ``x`` (in ``H``)
    """
    if m == 0:
        return ()
    return iso_phi_prefix(x.take(two_position(x, m - 1) + 1))


# -- the coding-pair contract ---------------------------------------------------

class PosetKind(enum.Enum):
    T = 'T'
    HECHLER_OMEGA = 'HechlerOmega'


@dataclass(frozen=True)
class CodingPair:
    """A finite-word coding ``phi_star`` together with its companions

    Attributes
    ----------
    kind : `PosetKind`
    phi_star : `callable`
        word over the poset alphabet -> binary word
    align : `callable`
        ``(x, i) -> n`` such that ``phi_star(x[:n])`` settles digit ``i - 1``
    realize : `callable`
        ``(q, s) -> sigma`` with ``phi_star(sigma)`` extending
        ``phi_star(stem(q)) + s``
    member : `callable`
        ``(q, t) -> bool`` node membership in the poset
    digit : `callable`
        ``(x, i) -> bit``, the full code of a real
    """
    kind: PosetKind
    phi_star: Callable
    align: Callable
    realize: Callable
    member: Callable
    digit: Callable


@dataclass
class CodingSamples:
    """Inputs for `check_coding_pair`
    """
    conditions: list = field(default_factory=list)
    words: list = field(default_factory=list)
    extensions: list = field(default_factory=list)
    points: list = field(default_factory=list)
    depth: int = 20


@dataclass(frozen=True)
class Counterexample:
    law: str
    detail: dict


@dataclass
class CodingReport:
    kind: PosetKind
    checked: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples

    def laws_broken(self):
        return sorted({c.law for c in self.counterexamples})


def check_coding_pair(cp, samples):
    """Verify monotonicity, alignment and realizability on samples

    Parameters
    ----------
    cp : `CodingPair`
    samples : `CodingSamples`

    Returns
    -------
    report : `CodingReport`
        lists every counterexample found, per law
    """
    report = CodingReport(cp.kind)
    bad = report.counterexamples

    # a) monotone under extension
    for short, long in samples.extensions:
        if not is_prefix(cp.phi_star(short), cp.phi_star(long)):
            bad.append(Counterexample('monotone', {
                'word': list(short), 'extension': list(long)}))
    report.checked['monotone'] = len(samples.extensions)

    # b) aligned with the full code
    for x in samples.points:
        for i in range(samples.depth + 1):
            code = cp.phi_star(x.take(cp.align(x, i)))
            expected = tuple(cp.digit(x, j) for j in range(i))
            if len(code) < i or code[:i] != expected:
                bad.append(Counterexample('alignment', {'real': str(x), 'index': i}))
                break
    report.checked['alignment'] = len(samples.points)

    # c) realizable below every condition
    count = 0
    for q in samples.conditions:
        target_head = cp.phi_star(q.stem)
        for s in samples.words:
            count += 1
            detail = {'condition': str(q), 'word2': word_str(s)}
            try:
                sigma = cp.realize(q, s)
            except ForcingError as exc:
                detail['error'] = str(exc)
                bad.append(Counterexample('realize', detail))
                continue
            if not (cp.member(q, sigma) and is_prefix(q.stem, sigma)
                    and is_prefix(target_head + tuple(s), cp.phi_star(sigma))):
                detail['sigma'] = list(sigma)
                bad.append(Counterexample('realize', detail))
    report.checked['realize'] = count
    return report


def _t_align(x, i):
    return two_position(x, i) + 1


T_PARITY = CodingPair(
    kind=PosetKind.T,
    phi_star=phi_star_T,
    align=_t_align,
    realize=realize_T,
    member=t_member,
    digit=parity_digit,
)

