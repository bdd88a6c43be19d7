#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: fixtures.py
#
# Copyright 2026 Costas Tyfoxylos
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Golden fixtures: the published key-avoidance counts and a handful of reference matrices.

The counts ship as ``data/key_avoidance_tables.json``. A row of a table may list several pattern sets that share the
same counts; every one of them is expanded into its own :class:`FixtureRow`.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .asm import Asm, Permutation, Position
from .patterns import PatternSet

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


# This is the main prefix used for logging
LOGGER_BASENAME = '''asmkey.fixtures'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

TABLES_FILE_PATH = Path(__file__).parent / 'data' / 'key_avoidance_tables.json'
TABLE_NUMBERS = (1, 2, 3)


@dataclass(frozen=True)
class FixtureRow:
    """The published counts of one pattern set, for the sizes of its table."""

    table: int
    pattern_set: PatternSet
    counts: Tuple[int, ...]
    known: str
    oeis: Optional[str] = None

    @property
    def label(self):
        """The label of the pattern set."""
        return self.pattern_set.label

    @property
    def sizes(self):
        """The sizes the table prints, starting at 1."""
        return range(1, len(self.counts) + 1)

    def expected(self, n):
        """The published count for size n, None when the table stops before n."""
        return self.counts[n - 1] if 1 <= n <= len(self.counts) else None


@lru_cache(maxsize=None)
def load_tables() -> Tuple[FixtureRow, ...]:
    """Reads every row of the three tables from the fixture file, alternatives expanded, in file order."""
    LOGGER.debug('Loading fixtures from %s.', TABLES_FILE_PATH)
    data = json.loads(TABLES_FILE_PATH.read_text())
    rows = []
    for table in data['tables']:
        for row in table['rows']:
            for patterns in row['pattern_sets']:
                rows.append(FixtureRow(table=table['number'],
                                       pattern_set=PatternSet.of(*patterns),
                                       counts=tuple(row['counts']),
                                       known=row['known'],
                                       oeis=row['oeis']))
    LOGGER.debug('Loaded %s fixture rows.', len(rows))
    return tuple(rows)


def table_rows(table) -> List[FixtureRow]:
    """The rows of one table.

    Raises:
        ValueError: If the table is not one of 1, 2, 3.

    """
    if table not in TABLE_NUMBERS:
        raise ValueError(f'There is no table {table}, expected one of {TABLE_NUMBERS}.')
    return [row for row in load_tables() if row.table == table]


def expected_counts() -> Dict[PatternSet, FixtureRow]:
    """Every fixture row keyed by its pattern set."""
    return {row.pattern_set: row for row in load_tables()}


def expected_count(pattern_set, n) -> Optional[int]:
    """The published key-avoidance count of the pattern set for size n, None when nothing is published."""
    row = expected_counts().get(pattern_set)
    return row.expected(n) if row else None


@dataclass(frozen=True)
class KeyFixture:
    """A reference matrix with its known key and, optionally, a known first removal."""

    name: str
    asm: Asm
    key: Permutation
    removal: Optional[Position] = None
    staircase: Tuple[Position, ...] = ()
    created: Tuple[Position, ...] = ()
    after_removal: Optional[Asm] = None


def _asm(*rows):
    return Asm(tuple(tuple(row) for row in rows))


def _positions(*pairs):
    return tuple(Position(*pair) for pair in pairs)


CHAINED_KEY_ASM = _asm((0, 0, 1, 0, 0),
                       (0, 1, -1, 1, 0),
                       (1, 0, 0, -1, 1),
                       (0, 0, 1, 0, 0),
                       (0, 0, 0, 1, 0))

GAPPED_ASM = _asm((0, 0, 0, 1, 0),
                  (0, 1, 0, -1, 1),
                  (0, 0, 0, 1, 0),
                  (1, -1, 1, 0, 0),
                  (0, 1, 0, 0, 0))

GAPLESS_ASM = _asm((0, 1, 0, 0, 0),
                   (1, -1, 1, 0, 0),
                   (0, 0, 0, 1, 0),
                   (0, 1, 0, -1, 1),
                   (0, 0, 0, 1, 0))

KEY_FIXTURES = (
    KeyFixture(name='two chained removals',
               asm=CHAINED_KEY_ASM,
               key=Permutation.from_string('34512'),
               removal=Position(3, 4),
               staircase=_positions((3, 1), (4, 3), (5, 4)),
               created=_positions((4, 1), (5, 3)),
               after_removal=_asm((0, 0, 1, 0, 0),
                                  (0, 1, -1, 1, 0),
                                  (0, 0, 0, 0, 1),
                                  (1, 0, 0, 0, 0),
                                  (0, 0, 1, 0, 0))),
    KeyFixture(name='gapped triangle',
               asm=GAPPED_ASM,
               key=Permutation.from_string('45231')),
    KeyFixture(name='gapless triangle',
               asm=GAPLESS_ASM,
               key=Permutation.from_string('23451')),
    KeyFixture(name='increasing staircase',
               asm=_asm((0, 0, 0, 1, 0),
                        (1, 0, 0, -1, 1),
                        (0, 0, 1, 0, 0),
                        (0, 0, 0, 1, 0),
                        (0, 1, 0, 0, 0)),
               key=Permutation.from_string('45132'),
               removal=Position(2, 4),
               staircase=_positions((2, 1), (3, 3), (4, 4)),
               created=_positions((3, 1), (4, 3)),
               after_removal=_asm((0, 0, 0, 1, 0),
                                  (0, 0, 0, 0, 1),
                                  (1, 0, 0, 0, 0),
                                  (0, 0, 1, 0, 0),
                                  (0, 1, 0, 0, 0))),
    KeyFixture(name='replaced smallest entry',
               asm=_asm((0, 0, 0, 0, 1),
                        (0, 0, 1, 0, 0),
                        (1, 0, -1, 1, 0),
                        (0, 1, 0, 0, 0),
                        (0, 0, 1, 0, 0)),
               key=Permutation.from_string('53412'),
               removal=Position(3, 3),
               staircase=_positions((3, 1), (4, 2), (5, 3)),
               created=_positions((4, 1), (5, 2)),
               after_removal=_asm((0, 0, 0, 0, 1),
                                  (0, 0, 1, 0, 0),
                                  (0, 0, 0, 1, 0),
                                  (1, 0, 0, 0, 0),
                                  (0, 1, 0, 0, 0))),
)
