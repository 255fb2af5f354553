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

"""Refinement drivers: Cohen extension, pure-decision failure and fusion

Dense sets are never materialised; a `DenseOracle` is a callback that
returns a stronger condition, and every driver checks that contract on
each call.  The amalgamation step (`graft_one`) copies one condition
above every node of a fixed level of another; when the copied pattern has
a 2 at a non-splitting level the result is lenient, which is logged.
"""

from dataclasses import dataclass
from typing import (Callable, NamedTuple, Optional)

from . import log
from .coding import (find_node, open_block, parity_round, phi_star_T,
                     realize_T)
from .errors import (CodingError, ForcingError, NotAMemberError,
                     OracleContractError, StrictnessError)
from .periodic import (as_word, word_str)
from .tree import (FIXED, TCondition, iter_nodes, leq, leq_n, member,
                   restrict, splitting_levels)

__author__ = 'the PyTForcing developers'

logger = log.get_logger('tforcing.forcing')


# -- decided code ---------------------------------------------------------------

def decided_cohen_prefix(p):
    """Return the part of the code decided by ``p``

    The level directly above the stem splits.  If the stem holds a 2,
    picking 0 or 1 there flips the open block, so nothing beyond the code
    of the stem is decided.  Otherwise the only branching before the next
    splitting level is whether that level takes the first 2, and the
    decided part is the common prefix of the two resulting codes (only
    lenient schedules, with fixed 2s, make this nonempty).
    """
    head = phi_star_T(p.stem)
    if 2 in p.stem or p.is_strict:
        return head
    level = len(p.stem) + 1
    forced = []
    while not p.rule_at(level).is_split:
        forced.append(p.rule_at(level).value)
        level += 1
    took_two = phi_star_T(p.stem + (2,) + tuple(forced))
    skipped = phi_star_T(p.stem + (0,) + tuple(forced))
    common = []
    for a, b in zip(took_two, skipped):
        if a != b:
            break
        common.append(a)
    return tuple(common)


def extend_for_cohen(p, sigma):
    """Return ``q <= p`` deciding ``decided_cohen_prefix(p) + sigma``

    Each digit of ``sigma`` costs one round through two splitting levels:
    the first takes the one value in ``{0, 1}`` giving the block the right
    parity, the second takes a 2.

    For lenient ``p`` the rounds can be cut short by forced 2s; the nodes
    of ``p`` are then searched for one deciding exactly the target.

    Raises
    ------
    CodingError
        for lenient ``p`` whose forced 2s fix a digit of ``sigma`` differently
    """
    sigma = as_word(sigma, 2)
    if not sigma:
        return p
    target = decided_cohen_prefix(p) + sigma

    def decides(node):
        return decided_cohen_prefix(restrict(p, node)) == target

    try:
        node = realize_T(p, sigma)
    except CodingError:
        node = None
    if node is None or not decides(node):
        node = find_node(p, target, decides)
    q = restrict(p, node)
    logger.debug(f"extended stem {word_str(p.stem)!r} -> {word_str(q.stem)!r} "
                 f"for sigma {word_str(sigma)!r}")
    return q


@dataclass(frozen=True)
class DecisionPair:
    """Two refinements deciding code digit ``k`` in opposite ways
    """
    k: int
    q0: TCondition
    q1: TCondition

    @property
    def digits(self):
        return (decided_cohen_prefix(self.q0)[self.k],
                decided_cohen_prefix(self.q1)[self.k])


def refute_pure_decision(q):
    """Return two extensions of ``q`` deciding the next code digit oppositely

    The digit index is ``k = len(decided_cohen_prefix(q))``.  Both
    extensions pass the first two splitting levels above the open block,
    taking 0 (for ``q0``) or 1 (for ``q1``) at the first and 2 at the
    second.  When the stem holds no 2 yet, the first splitting level is
    spent opening the block.

    Raises
    ------
    StrictnessError
        if ``q`` is lenient
    """
    if not q.is_strict:
        raise StrictnessError("pure-decision refutation needs a strict condition")
    k = len(decided_cohen_prefix(q))
    node = open_block(q, q.stem)
    pair = DecisionPair(k, restrict(q, parity_round(q, node, 0)),
                        restrict(q, parity_round(q, node, 1)))
    logger.debug(f"digit {k} decided as {pair.digits} by stems "
                 f"{word_str(pair.q0.stem)!r}, {word_str(pair.q1.stem)!r}")
    return pair


# -- amalgamation ---------------------------------------------------------------

def graft_above(q, cut, pattern):
    """Keep the levels of ``q`` below ``cut`` and copy ``pattern`` from there on
    """
    horizon = max(cut, pattern.horizon)
    prefix = [q.rule_at(i) if i < cut else pattern.rule_at(i) for i in range(horizon)]
    tail = [pattern.rule_at(horizon + i) for i in range(pattern.period)]
    result = TCondition.from_rules(prefix, tail)
    if q.is_strict and not result.is_strict:
        logger.warning(f"graft above level {cut} forces a 2 at a non-splitting "
                       "level, the result is lenient")
    return result


def graft_one(q, k, p_j):
    """Copy ``p_j`` above every node of ``q`` of length ``n_k + 1``

    ``n_k`` is the ``(k+1)``-th splitting level of ``q``.

    Raises
    ------
    NotAMemberError
        unless ``p_j <= q`` restricted to some node of length ``n_k + 1``
    """
    cut = splitting_levels(q, k + 1)[k] + 1
    node = p_j.stem[:cut]
    if len(node) < cut or not member(q, node) or not leq(p_j, restrict(q, node)):
        raise NotAMemberError(
            f"condition is not below a restriction of q to a node of length {cut}",
            level=cut)
    return graft_above(q, cut, p_j)


def fusion_nodes(p, k):
    """The ``3^(k+1)`` nodes of ``p`` of length ``n_k + 1``, sorted
    """
    cut = splitting_levels(p, k + 1)[k] + 1
    return sorted(iter_nodes(p, cut))


# -- dense oracles --------------------------------------------------------------

@dataclass(frozen=True)
class DenseOracle:
    """Executable stand-in for a dense set of conditions

    ``refine(r)`` must return a condition below ``r``; the optional
    ``stem_preserving(r, t)`` returns a member below ``r`` with stem
    exactly ``t``, or `None` when there is none.
    """
    name: str
    refine: Callable
    stem_preserving: Optional[Callable] = None

    def call(self, r):
        out = self.refine(r)
        if not leq(out, r):
            raise OracleContractError(
                f"oracle {self.name!r} returned a condition not below its input")
        return out

    def call_with_stem(self, r, t):
        if self.stem_preserving is None:
            raise OracleContractError(f"oracle {self.name!r} has no stem-preserving variant")
        out = self.stem_preserving(r, t)
        if out is None:
            return None
        if out.stem != tuple(t):
            raise OracleContractError(
                f"oracle {self.name!r} returned stem {word_str(out.stem)!r}, "
                f"expected {word_str(t)!r}")
        if not leq(out, r):
            raise OracleContractError(
                f"oracle {self.name!r} returned a condition not below its input")
        return out


def fix_level(p, level, value):
    """Return ``p`` with the rule at ``level`` replaced by ``Fixed(value)``
    """
    horizon = max(level + 1, p.horizon)
    prefix = list(p.rules(horizon))
    prefix[level] = FIXED[value]
    return TCondition.from_rules(prefix, [p.rule_at(horizon + i) for i in range(p.period)])


def _thin_above(r, t):
    s = restrict(r, t)
    return fix_level(s, splitting_levels(s, 2)[1], 0)


BUILTIN_ORACLES = {
    'identity': DenseOracle(
        'identity',
        refine=lambda r: r,
        stem_preserving=lambda r, t: restrict(r, t),
    ),
    'next-split-0': DenseOracle(
        'next-split-0',
        refine=lambda r: restrict(r, r.stem + (0,)),
        stem_preserving=_thin_above,
    ),
    'stem-lengthener': DenseOracle(
        'stem-lengthener',
        refine=lambda r: restrict(r, parity_round(r, r.stem, 1)),
        stem_preserving=lambda r, t: None,
    ),
}


def get_oracle(name):
    try:
        return BUILTIN_ORACLES[name]
    except KeyError:
        raise ForcingError(f"unknown oracle {name!r}, choose from {sorted(BUILTIN_ORACLES)}")


# -- fusion drivers -------------------------------------------------------------

class AxiomARefinement(NamedTuple):
    condition: TCondition
    witnesses: tuple


def axiomA_refine(p, k, oracle):
    """Return ``q <=_k p`` and a finite set of oracle answers predense below ``q``

    Parameters
    ----------
    p : `~tforcing.tree.TCondition`
    k : `int`
        number of splitting levels (beyond the first) to keep
    oracle : `DenseOracle`

    Returns
    -------
    condition : `~tforcing.tree.TCondition`
        ``q``, with ``q`` restricted to the ``j``-th node of
        `fusion_nodes` ``(p, k)`` below the ``j``-th witness
    witnesses : `tuple` of `~tforcing.tree.TCondition`
        one oracle answer per node, ``3^(k+1)`` in all
    """
    q = p
    witnesses = []
    for j, node in enumerate(fusion_nodes(p, k)):
        p_j = oracle.call(restrict(q, node))
        witnesses.append(p_j)
        q = graft_one(q, k, p_j)
        logger.debug(f"axiom A round {j}: grafted above {word_str(node)!r}")
    return AxiomARefinement(q, tuple(witnesses))


def predensity_witness(r, q, k, witnesses):
    """Return ``j`` with ``r`` restricted to node ``t_j`` below ``witnesses[j]``

    ``r`` must be below ``q``; the node used is the leftmost node of ``r``
    of length ``n_k + 1``.  Returns `None` if the restriction is not below
    the corresponding witness.
    """
    nodes = fusion_nodes(q, k)
    node = min(iter_nodes(r, len(nodes[0])))
    j = nodes.index(node)
    if leq(restrict(r, node), witnesses[j]):
        return j
    return None


class QuasiPureRefinement(NamedTuple):
    condition: TCondition
    witnesses: dict
    stages: tuple


def quasi_pure_refine(p, stages, oracle):
    """Run ``stages`` fusion stages of the quasi pure decision construction

    At stage ``k`` every node ``t`` of length ``n_k`` is offered to the
    oracle's stem-preserving variant; when it answers with ``p'`` (stem
    ``t``), ``p'`` is copied above level ``n_k`` so that the condition
    restricted to ``t`` is ``p'``.

    Returns
    -------
    condition : `~tforcing.tree.TCondition`
        ``q`` with ``q <=_0 p``; it is also ``<=_k p`` for every ``k < stages``
        when no answer freezes a splitting level.  Only level-preserving
        oracles such as ``identity`` guarantee that; an answer that fixes
        a later splitting level of ``p`` breaks ``<=_k`` from there on
    witnesses : `dict`
        node -> answer, for every node where the oracle answered
    stages : `tuple`
        the fusion sequence ``q_0 = p, q_1, ...``
    """
    q = p
    history = [p]
    witnesses = {}
    for k in range(stages):
        level = splitting_levels(q, k + 1)[k]
        for node in sorted(iter_nodes(q, level)):
            answer = oracle.call_with_stem(q, node)
            if answer is None:
                continue
            witnesses[node] = answer
            q = graft_above(q, level + 1, answer)
        logger.debug(f"quasi pure stage {k}: {len(witnesses)} witnesses so far")
        history.append(q)
    return QuasiPureRefinement(q, witnesses, tuple(history))


def is_fusion_sequence(conditions):
    """Return `True` if ``conditions[k+1] <=_k conditions[k]`` for every ``k``
    """
    return all(leq_n(conditions[k + 1], conditions[k], k)
               for k in range(len(conditions) - 1))


def fusion_prefix(conditions):
    """Return the last condition of a certified finite fusion sequence
    """
    if not conditions:
        raise ForcingError("empty fusion sequence")
    if not is_fusion_sequence(conditions):
        raise ForcingError("not a fusion sequence")
    return conditions[-1]
