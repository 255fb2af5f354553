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

"""Scripted end-to-end scenarios for the command-line ``demo`` mode

Each demo draws its inputs from a seeded `numpy.random.Generator`, runs
the library operations, and returns a JSON-ready `dict` summarising the
checks it made.  ``limits``, where accepted, are passed on to
`tforcing.sampling.random_condition`.
"""

from itertools import product

from . import (log, sampling)
from .coding import (iso_b, iso_phi_inv, iso_phi_prefix)
from .forcing import (axiomA_refine, decided_cohen_prefix, extend_for_cohen,
                      fusion_nodes, get_oracle, predensity_witness)
from .ideals import (all_zero_branch, member_H, member_Mn, member_Nn,
                     mn_witness, nn_witness, non2_branch)
from .io import to_json
from .periodic import word_str
from .tree import (branch, build_antichain_condition, leq, leq_n, meet,
                   nodes_at_depth, restrict)

__author__ = 'the PyTForcing developers'

logger = log.get_logger('tforcing.demos')


def antichain(rng, pairs=50, horizon=40, depth=8):
    """Check that conditions coding distinct odd-level sets are incompatible

    For each pair, ``meet`` must report a conflict; when the conflict sits
    below ``depth`` the node sets at the conflicting level are also
    compared by brute force.
    """
    levels = []
    brute = disjoint = 0
    incompatible = 0
    for _ in range(pairs):
        a = sampling.random_odd_predicate(rng)
        b = sampling.random_odd_predicate(rng)
        while a.take(horizon) == b.take(horizon):
            b = sampling.random_odd_predicate(rng)
        p, q = build_antichain_condition(a), build_antichain_condition(b)
        result = meet(p, q)
        if result:
            continue
        incompatible += 1
        levels.append(result.level)
        if result.level is not None and result.level < depth:
            brute += 1
            width = result.level + 1
            disjoint += not (nodes_at_depth(p, width) & nodes_at_depth(q, width))
    logger.info(f"{incompatible}/{pairs} pairs incompatible")
    return {
        'pairs': pairs,
        'incompatible': incompatible,
        'all_incompatible': incompatible == pairs,
        'conflict_levels': levels,
        'brute_force_checked': brute,
        'brute_force_disjoint': disjoint,
    }


def cohen_extension(rng, sigma, samples=1, limits=None):
    """Extend random strict conditions to decide ``sigma`` after their code
    """
    runs = []
    for _ in range(samples):
        p = sampling.random_condition(rng, **(limits or {}))
        q = extend_for_cohen(p, sigma)
        before, after = decided_cohen_prefix(p), decided_cohen_prefix(q)
        runs.append({
            'p': to_json(p),
            'q': to_json(q),
            'decided_p': word_str(before),
            'decided_q': word_str(after),
            'leq': leq(q, p),
            'prefix_equal': after == before + tuple(sigma),
        })
    return {
        'sigma': word_str(sigma),
        'runs': runs,
        'ok': all(r['leq'] and r['prefix_equal'] for r in runs),
    }


def ideal_separation(rng, n=3, samples=1, selectors=20, limits=None):
    """Avoid ``M_n`` and ``N_n`` below random conditions, and meet their unions
    """
    runs = []
    for _ in range(samples):
        p = sampling.random_condition(rng, **(limits or {}))
        q = mn_witness(p, n)
        avoided = []
        for _ in range(selectors):
            z = branch(q, sampling.random_selector(rng, in_h=True))
            avoided.append(member_H(z) and not member_Mn(z, n))
        zero = all_zero_branch(p)
        qn = nn_witness(p, n)
        plain = non2_branch(p)
        runs.append({
            'p': to_json(p),
            'mn_witness': to_json(q),
            'mn_avoided': all(avoided),
            'all_zero_branch': to_json(zero),
            'all_zero_in_union': member_Mn(zero, len(decided_cohen_prefix(p))),
            'nn_witness': to_json(qn),
            'nn_avoided': all(not member_Nn(
                branch(qn, sampling.random_selector(rng)), n) for _ in range(selectors)),
            'non2_branch': to_json(plain),
            'non2_in_union': member_Nn(plain, len(p.stem)),
        })
    keys = ('mn_avoided', 'all_zero_in_union', 'nn_avoided', 'non2_in_union')
    return {'n': n, 'runs': runs, 'ok': all(r[k] for r in runs for k in keys)}


def axiom_a(rng, k=1, oracle='next-split-0', samples=1, probes=20, limits=None):
    """Run the Axiom A refinement and replay its postconditions
    """
    dense = get_oracle(oracle)
    runs = []
    for _ in range(samples):
        p = sampling.random_condition(rng, **(limits or {}))
        q, witnesses = axiomA_refine(p, k, dense)
        nodes = fusion_nodes(p, k)
        below = all(leq(restrict(q, t), w) for t, w in zip(nodes, witnesses))
        hits = sum(predensity_witness(sampling.random_refinement(rng, q), q, k, witnesses)
                   is not None for _ in range(probes))
        runs.append({
            'p': to_json(p),
            'q': to_json(q),
            'leq_k': leq_n(q, p, k),
            'witnesses': len(witnesses),
            'expected_witnesses': 3 ** (k + 1),
            'below_witnesses': below,
            'predense': hits == probes,
            'strict': q.is_strict,
        })
        if not q.is_strict:
            logger.warning("axiom A refinement left the strict class")
    return {
        'k': k,
        'oracle': oracle,
        'runs': runs,
        'ok': all(r['leq_k'] and r['below_witnesses'] and r['predense']
                  and r['witnesses'] == r['expected_witnesses'] for r in runs),
    }


def iso_roundtrip(rng, samples=300, maxlen=10):
    """Round-trip the ``H`` <-> increasing-sequence bijection on random inputs
    """
    forward = backward = increasing = 0
    for _ in range(samples):
        x = sampling.random_block_word(rng)
        image = iso_phi_prefix(x)
        forward += iso_phi_inv(image) == x
        increasing += all(a < b for a, b in zip(image, image[1:]))
        s = sampling.random_increasing(rng) or (0,)
        backward += iso_phi_prefix(iso_phi_inv(s)) == s
    words = [w for n in range(maxlen + 1) for w in product((0, 1), repeat=n)]
    values = sorted(iso_b(w) for w in words)
    monotone = all(iso_b(w[:i]) <= iso_b(w) for w in words for i in range(len(w)))
    return {
        'samples': samples,
        'forward': forward,
        'backward': backward,
        'increasing': increasing,
        'iso_b_bijective': values == list(range(len(words))),
        'iso_b_monotone': monotone,
        'ok': (forward == backward == increasing == samples
               and values == list(range(len(words))) and monotone),
    }


DEMOS = {
    'antichain': antichain,
    'cohen-extension': cohen_extension,
    'ideal-separation': ideal_separation,
    'axiom-a': axiom_a,
    'iso-roundtrip': iso_roundtrip,
}

# alternative names accepted on the command line
DEMO_ALIASES = {
    'lemma23': 'cohen-extension',
    'lemma24': 'ideal-separation',
}
