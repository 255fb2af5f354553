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

"""Exceptions raised by PyTForcing

Every exception carries a short machine-readable ``code`` that the
command-line interface reports as ``{"error": code, "detail": ...}``.
"""

__author__ = 'the PyTForcing developers'


class ForcingError(ValueError):
    """Base class for domain errors (bad input to a tree operation)
    """
    code = 'domain-error'

    def __init__(self, message, **detail):
        super().__init__(message)
        self.detail = detail

    def to_dict(self):
        out = {'error': self.code, 'detail': str(self)}
        out.update(self.detail)
        return out


class ScheduleError(ForcingError):
    """A level schedule is malformed or has no splitting tail
    """
    code = 'bad-schedule'


class NotAMemberError(ForcingError):
    """A node is not a member of the condition it was applied to
    """
    code = 'not-a-member'


class NotInHError(ForcingError):
    """A real has only finitely many occurrences of the digit 2
    """
    code = 'not-in-h'


class DepthLimitError(ForcingError):
    """A brute-force enumeration was requested beyond the configured limit
    """
    code = 'depth-limit'


class StrictnessError(ForcingError):
    """An operation that needs a strict condition received a lenient one
    """
    code = 'not-strict'


class CodingError(ForcingError):
    """A coding target cannot be reached, or a coding input is invalid
    """
    code = 'coding'


class OracleContractError(RuntimeError):
    """A dense-set oracle returned a condition violating its contract
    """
    code = 'oracle-contract'

    def to_dict(self):
        return {'error': self.code, 'detail': str(self)}


class InputFormatError(ValueError):
    """A JSON document or command-line value does not match its schema
    """
    code = 'parse-error'

    def to_dict(self):
        return {'error': self.code, 'detail': str(self)}
