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

"""Tests for tforcing.log
"""

import logging
import re

from .. import log


def test_bold():
    assert log.bold('TEST') == '\x1b[1mTEST\x1b[0m'


def test_color_text():
    assert log.color_text('TEST', 'blue') == '\x1b[1;34mTEST\x1b[0m'
    assert log.color_text(3, 31) == '\x1b[1;31m3\x1b[0m'


def test_logger():
    logger = log.Logger('TEST')
    record = logger.makeRecord(logger.name, logging.DEBUG, 'FILE', 0,
                               'test message', (), None, 'FUNC', None)
    outhandler = logger.handlers[0]
    assert re.match(r'.*TEST.*\d+\].*DEBUG.*FILE:0: test message',
                    outhandler.format(record))
    # the shared record keeps its plain level name
    assert record.levelname == 'DEBUG'


def test_max_level_filter():
    logger = log.Logger('TEST')
    chat, problem = logger.handlers
    warning = logger.makeRecord(logger.name, logging.WARNING, 'FILE', 0,
                                'careful', (), None)
    info = logger.makeRecord(logger.name, logging.INFO, 'FILE', 0,
                             'hello', (), None)
    assert not chat.filter(warning)
    assert chat.filter(info)
    assert problem.level == logging.WARNING


def test_get_logger():
    logger = log.get_logger('tforcing.test')
    assert isinstance(logger, log.Logger)
    assert log.get_logger('tforcing.test') is logger


def test_set_verbosity():
    logger = log.get_logger('tforcing.test')
    try:
        assert log.set_verbosity(1) == logging.INFO
        assert log.set_verbosity(5) == logging.DEBUG
        assert logger.level == logging.DEBUG
    finally:
        log.set_verbosity(0)
    assert logger.level == logging.WARNING


def test_log_to_file(tmp_path):
    logger = log.get_logger('tforcing.test')
    path = tmp_path / 'logs' / 'run.log'
    handler = log.log_to_file(path)
    try:
        logger.warning('written to file')
        handler.flush()
        text = path.read_text()
    finally:
        for each in log._LOGGERS.values():
            each.removeHandler(handler)
        handler.close()
    assert 'written to file' in text
    assert '\x1b[' not in text.split('] ', 1)[1]


def test_add_file_handler(tmp_path):
    logger = log.Logger('TEST')
    logger.add_file_handler(tmp_path / 'test.log')
    logger.error('kept on disk')
    for handler in logger.handlers[2:]:
        handler.close()
    assert 'kept on disk' in (tmp_path / 'test.log').read_text()
