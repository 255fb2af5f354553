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

"""Read/write PyTForcing parameters files

Parameters files are either INI files or flat files with one
``SECTION KEY value`` entry per line.
"""

import configparser
from collections import OrderedDict
from datetime import datetime
from getpass import getuser

from . import const

__author__ = 'the PyTForcing developers'


class ForcingParameters(configparser.ConfigParser):
    """Custom `configparser.ConfigParser` for PyTForcing parameters files
    """
    DEFAULTS = OrderedDict([
        ('ORACLE', {
            'DEPTHLIMIT': const.DEPTH_LIMIT,
        }),
        ('HECHLER', {
            'VALUECAP': const.VALUE_CAP,
        }),
        ('SAMPLING', {
            'SEED': const.SEED,
            'SAMPLES': 200,
            'MAXSIGMA': 5,
            'MAXTABLE': 4,
            'MAXTAIL': 4,
            'MAXSTEM': 4,
        }),
        ('DEMO', {
            'PAIRS': 50,
            'HORIZON': 40,
            'SIGMA': (0, 1, 1, 0),
        }),
    ])

    def __init__(self, defaults=dict(), **kwargs):
        configparser.ConfigParser.__init__(self, defaults=defaults, **kwargs)
        self._set_defaults()

    def _set_defaults(self):
        """Set basic defaults for each config section
        """
        for section, params in self.DEFAULTS.items():
            try:
                self.add_section(section)
            except configparser.DuplicateSectionError:
                pass
            for key, val in params.items():
                if isinstance(val, tuple):
                    self.set(section, key, ' '.join(map(str, val)))
                else:
                    self.set(section, key, str(val))

    # -- better option accessors ----------------

    def getlist(self, section, option):
        raw = self.get(section, option)
        return raw.split()

    def getints(self, section, option):
        return list(map(int, self.getlist(section, option)))

    def optionxform(self, optionstr):
        return optionstr.upper()

    # -- input/output ---------------------------

    def _read(self, fp, fpname):
        """Read a file either using INI or flat formatting
        """
        if fpname.endswith('.ini'):
            return configparser.ConfigParser._read(self, fp, fpname)
        for line in fp:
            if isinstance(line, bytes):
                line = line.decode()
            if not line.strip() or line[0] in '#;':  # blank
                continue
            sec, key, val = line.rstrip().split(None, 2)
            if not self.has_section(sec.upper()):
                self.add_section(sec.upper())
            self.set(sec.upper(), key, val)

    def write(self, fp):
        if getattr(fp, 'name', '').endswith('.ini'):
            return configparser.ConfigParser.write(self, fp)

        print('# PyTForcing parameter file', file=fp)
        print('# Written by %s at %s' % (getuser(), datetime.now()), file=fp)

        for sec in self.sections():
            print("", file=fp)
            for key, val in self.items(sec):
                print('{0: <10}'.format(sec.upper()),
                      '{0: <12}'.format(key.upper()),
                      val, file=fp, sep=' ')
    write.__doc__ = configparser.ConfigParser.write.__doc__

    @classmethod
    def from_file(cls, path):
        """Read `ForcingParameters` from ``path``, on top of the defaults
        """
        new = cls()
        with open(path, 'r') as fp:
            new.read_file(fp, source=str(path))
        return new

    # -- utilities ------------------------------

    def validate(self):
        """Validate the oracle limits and sampling sizes

        Raises
        ------
        AssertionError
            if any of the parameters is out of range
        """
        depth = self.getint('ORACLE', 'DEPTHLIMIT')
        cap = self.getint('HECHLER', 'VALUECAP')
        assert depth > 0, "Oracle depth limit must be positive"
        assert cap >= 2, "Hechler value cap must be at least 2"
        for key in ('SAMPLES', 'MAXSIGMA', 'MAXTABLE', 'MAXSTEM'):
            assert self.getint('SAMPLING', key) >= 0, (
                "SAMPLING %s cannot be negative" % key)
        assert self.getint('SAMPLING', 'MAXTAIL') >= 1, (
            "Schedule tails need at least one level")
        assert self.getint('DEMO', 'PAIRS') >= 0, "DEMO PAIRS cannot be negative"
        assert self.getint('DEMO', 'HORIZON') >= 1, "DEMO HORIZON must be positive"
        assert set(self.getints('DEMO', 'SIGMA')) <= {0, 1}, (
            "DEMO SIGMA must be a list of binary digits")

    def sampling_kwargs(self):
        """Size limits for `tforcing.sampling.random_condition`
        """
        return {
            'maxstem': self.getint('SAMPLING', 'MAXSTEM'),
            'maxtable': self.getint('SAMPLING', 'MAXTABLE'),
            'maxtail': self.getint('SAMPLING', 'MAXTAIL'),
        }
