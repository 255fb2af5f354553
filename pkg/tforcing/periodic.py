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

"""Eventually periodic sequences and finite words

Finite words are plain `tuple` of `int`; an infinite sequence is stored
as a finite ``prefix`` followed by a nonempty ``tail`` repeated forever.
"""

from dataclasses import dataclass
from math import lcm

from .errors import ForcingError

__author__ = 'the PyTForcing developers'


def as_word(value, alphabet=None):
    """Coerce a `str` of digits, or a sequence of `int`, into a word

    Parameters
    ----------
    value : `str`, `list`, `tuple`
        e.g. ``"021"`` or ``[0, 2, 1]``
    alphabet : `int`, optional
        if given, every letter must satisfy ``0 <= letter < alphabet``

    Returns
    -------
    word : `tuple` of `int`

    Raises
    ------
    ForcingError
        if a letter is negative or outside the alphabet
    """
    word = tuple(int(c) for c in value)
    for letter in word:
        if letter < 0 or (alphabet is not None and letter >= alphabet):
            raise ForcingError(
                f"letter {letter} outside alphabet of size {alphabet}")
    return word


def word_str(word):
    """Format a word over a finite alphabet as a digit string
    """
    return ''.join(map(str, word))


def is_prefix(short, long):
    """Return `True` if ``short`` is an initial segment of ``long``
    """
    return len(short) <= len(long) and tuple(long[:len(short)]) == tuple(short)


def compatible(s, t):
    """Return `True` if one of ``s`` and ``t`` extends the other
    """
    n = min(len(s), len(t))
    return tuple(s[:n]) == tuple(t[:n])


def unfold(step, state, head=()):
    """Unfold a finite-state process into prefix and period

    ``step(state)`` must return ``(letter, next_state)`` with hashable
    states; since only finitely many states are reachable, the process is
    eventually periodic and the first repeated state closes the period.

    Returns
    -------
    prefix, tail : `tuple`
    """
    seen = {}
    letters = list(head)
    while state not in seen:
        seen[state] = len(letters)
        letter, state = step(state)
        letters.append(letter)
    start = seen[state]
    return tuple(letters[:start]), tuple(letters[start:])


@dataclass(frozen=True)
class EventualSequence:
    """An eventually periodic sequence ``prefix + tail + tail + ...``
    """
    prefix: tuple
    tail: tuple

    alphabet = None

    def __post_init__(self):
        object.__setattr__(self, 'prefix', as_word(self.prefix, self.alphabet))
        object.__setattr__(self, 'tail', as_word(self.tail, self.alphabet))
        if not self.tail:
            raise ForcingError("the periodic tail must be nonempty")

    def __getitem__(self, index):
        if isinstance(index, slice):
            if index.stop is None:
                raise ForcingError("cannot slice an infinite sequence without a stop")
            return tuple(self[i] for i in range(index.stop)[index])
        if index < 0:
            raise IndexError("negative index into an infinite sequence")
        if index < len(self.prefix):
            return self.prefix[index]
        return self.tail[(index - len(self.prefix)) % len(self.tail)]

    def take(self, n):
        """Return the first ``n`` letters as a word
        """
        return self[:n]

    @property
    def horizon(self):
        return len(self.prefix)

    @property
    def period(self):
        return len(self.tail)

    def same_as(self, other):
        """Letter-wise equality, independent of representation
        """
        span = max(self.horizon, other.horizon) + lcm(self.period, other.period)
        return self.take(span) == other.take(span)

    def __str__(self):
        return f"{word_str(self.prefix)}({word_str(self.tail)})"


@dataclass(frozen=True)
class EventualReal(EventualSequence):
    """An eventually periodic element of ``3^omega``
    """
    alphabet = 3

    @property
    def in_h(self):
        """`True` if the digit 2 occurs infinitely often
        """
        return 2 in self.tail

    @classmethod
    def constant(cls, digit):
        return cls((), (digit,))
