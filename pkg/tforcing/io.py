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

"""JSON input/output for conditions, reals, words and reports

Decoders accept the parsed JSON object; `read_json` accepts either a path
to a JSON file or the JSON text itself.  `dump` writes canonical JSON
(sorted keys, compact separators) so equal values give equal bytes.
"""

import json
import os.path
from functools import (singledispatch, wraps)

from .coding import (CodingReport, ParityAnalysis)
from .errors import (ForcingError, InputFormatError)
from .forcing import (DecisionPair, QuasiPureRefinement, AxiomARefinement)
from .hechler import (DCondition, EventualFn, EventualNat)
from .periodic import (EventualReal, EventualSequence, as_word, word_str)
from .tree import (BranchSelector, Incompatible, LevelSchedule, OddLevelSet,
                   TCondition, ValidationReport)

__author__ = 'the PyTForcing developers'


def read_json(source):
    """Parse ``source``, a file path or inline JSON text

    Raises
    ------
    InputFormatError
        if ``source`` is neither a readable file nor valid JSON
    """
    if isinstance(source, (dict, list)):
        return source
    text = str(source)
    if os.path.isfile(text):
        with open(text, 'r') as fobj:
            text = fobj.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"cannot parse JSON from {str(source)[:60]!r}: {exc}")


def dump(obj):
    """Return the canonical JSON text for ``obj``
    """
    return json.dumps(to_json(obj), sort_keys=True, separators=(',', ':'))


def _decoding(kind):
    """Wrap a decoder so schema problems become `InputFormatError`

    Domain errors (`ForcingError`) from the constructors pass through.
    """
    def decorator(func):
        @wraps(func)
        def decode(obj):
            obj = read_json(obj)
            try:
                return func(obj)
            except ForcingError:
                raise
            except (KeyError, TypeError, ValueError, AttributeError) as exc:
                raise InputFormatError(f"invalid {kind} document: {exc!r}")
        return decode
    return decorator


# -- decoders -------------------------------------------------------------------

@_decoding('condition')
def read_condition(obj):
    """Decode ``{"stem": "021", "schedule": {"table": [...], "tail": [...]}}``
    """
    schedule = obj['schedule']
    return TCondition(obj['stem'], LevelSchedule(tuple(schedule['table']),
                                                 tuple(schedule['tail'])))


@_decoding('real')
def read_real(obj):
    """Decode ``{"prefix": "012", "tail": "2"}``
    """
    return EventualReal(obj['prefix'], obj['tail'])


@_decoding('selector')
def read_selector(obj):
    return BranchSelector(obj['choices'], obj['tail'])


@_decoding('odd-level set')
def read_odd_set(obj):
    return OddLevelSet(obj['table'], obj['tail'])


@_decoding('word2')
def read_word2(obj):
    return as_word(obj['word2'], 2)


@_decoding('increasing sequence')
def read_incr(obj):
    return tuple(int(n) for n in obj['incr'])


@_decoding('Hechler condition')
def read_dcondition(obj):
    """Decode ``{"stem": [2, 5], "floor": {"table": [3, 3, 4], "tail": 4}}``
    """
    floor = obj['floor']
    return DCondition(tuple(obj['stem']), EventualFn(tuple(floor['table']), int(floor['tail'])))


@_decoding('natural sequence')
def read_dreal(obj):
    return EventualNat(tuple(obj['prefix']), tuple(obj['tail']))


# -- encoders -------------------------------------------------------------------

@singledispatch
def to_json(obj):
    """Return a JSON-ready representation of ``obj``
    """
    if isinstance(obj, (str, int, float)) or obj is None:
        return obj
    raise TypeError(f"cannot encode {type(obj).__name__} as JSON")


@to_json.register
def _(obj: dict):
    return {str(k): to_json(v) for k, v in obj.items()}


@to_json.register
def _(obj: tuple):
    return [to_json(x) for x in obj]


@to_json.register
def _(obj: list):
    return [to_json(x) for x in obj]


@to_json.register
def _(obj: TCondition):
    return {
        'stem': word_str(obj.stem),
        'schedule': {
            'table': [r.code for r in obj.schedule.table],
            'tail': [r.code for r in obj.schedule.tail],
        },
    }


@to_json.register
def _(obj: EventualSequence):
    return {'prefix': word_str(obj.prefix), 'tail': word_str(obj.tail)}


@to_json.register
def _(obj: EventualNat):
    return {'prefix': list(obj.prefix), 'tail': list(obj.tail)}


@to_json.register
def _(obj: BranchSelector):
    return {'choices': word_str(obj.prefix), 'tail': word_str(obj.tail)}


@to_json.register
def _(obj: OddLevelSet):
    return {'table': word_str(obj.prefix), 'tail': word_str(obj.tail)}


@to_json.register
def _(obj: ParityAnalysis):
    return {'transient': word_str(obj.transient), 'period': word_str(obj.period)}


@to_json.register
def _(obj: DCondition):
    return {
        'stem': list(obj.stem),
        'floor': {'table': list(obj.floor.table), 'tail': obj.floor.tail_value},
    }


@to_json.register
def _(obj: DecisionPair):
    return {'k': obj.k, 'q0': to_json(obj.q0), 'q1': to_json(obj.q1),
            'digits': list(obj.digits)}


@to_json.register
def _(obj: ValidationReport):
    return {'valid': obj.valid, 'strict': obj.strict,
            'diagnostics': list(obj.diagnostics)}


@to_json.register
def _(obj: Incompatible):
    return {'incompatible': True, 'level': obj.level, 'reason': obj.reason}


@to_json.register
def _(obj: AxiomARefinement):
    return {'condition': to_json(obj.condition),
            'strict': obj.condition.is_strict,
            'witnesses': to_json(obj.witnesses)}


@to_json.register
def _(obj: QuasiPureRefinement):
    return {
        'condition': to_json(obj.condition),
        'strict': obj.condition.is_strict,
        'witnesses': {word_str(node): to_json(p) for node, p in sorted(obj.witnesses.items())},
        'stages': to_json(obj.stages),
    }


@to_json.register
def _(obj: CodingReport):
    return {
        'kind': obj.kind.value,
        'ok': obj.ok,
        'checked': dict(obj.checked),
        'counterexamples': [{'law': c.law, 'detail': to_json(c.detail)}
                            for c in obj.counterexamples],
    }


def word2_json(word):
    return {'word2': word_str(word)}


def incr_json(seq):
    return {'incr': list(seq)}
