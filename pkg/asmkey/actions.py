#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: actions.py
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
actions package.

Rendering of results and the bodies of the longer running commands.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""

import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional

import click
from art import text2art
from rich.console import Console
from rich.table import Table
from rich.text import Text

from .enumeration import KEY_MODE, avoidance_census, count_tables
from .fixtures import KEY_FIXTURES, expected_count, load_tables
from .keyprocess import remove_minus_one, sw_key
from .triangles import UP

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def show_header():
    """Shows the project header on an interactive standard error."""
    if not sys.stderr.isatty():
        return
    console = Console(stderr=True)
    text = Text("Southwest keys of alternating sign matrices")
    text.stylize("bold magenta")
    console.print(text2art('ASM KEY'))
    console.print(text)


@dataclass(frozen=True)
class ReportRecord:
    """One count of a sweep, with the published value when there is one."""

    mode: str
    patterns: str
    n: int
    count: int
    expected: Optional[int] = None
    known: Optional[str] = None
    oeis: Optional[str] = None

    @property
    def match(self):
        """True when a published value exists and equals the count."""
        return self.expected is not None and self.expected == self.count

    @property
    def mismatch(self):
        """True when a published value exists and differs from the count."""
        return self.expected is not None and self.expected != self.count

    def as_dict(self):
        """The record fields, match flag included."""
        return {**asdict(self), 'match': self.match}


RECORD_FIELDS = ('mode', 'patterns', 'n', 'count', 'expected', 'match')
FIXTURE_FIELDS = RECORD_FIELDS + ('known', 'oeis')


def records_from_tables(tables) -> List[ReportRecord]:
    """Flattens count tables into records, attaching the published key-avoidance counts."""
    records = []
    for table in tables:
        for n, count in table.items():
            expected = expected_count(table.pattern_set, n) if table.mode == KEY_MODE else None
            records.append(ReportRecord(mode=table.mode, patterns=table.label, n=n, count=count, expected=expected))
    return records


def render_rows(header, rows, output_format, title=None):
    """Renders rows as json, csv or a rich table.

    Json and csv are returned as text so that they can be written byte for byte; the text format returns a rich
    Table.
    """
    if output_format == 'json':
        return json.dumps({'records': [dict(zip(header, row)) for row in rows]}, indent=2) + '\n'
    if output_format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(['' if value is None else value for value in row] for row in rows)
        return buffer.getvalue()
    table = Table(title=title)
    for name in header:
        table.add_column(name, justify='right' if name in ('n', 'count', 'expected', 'predicted') else 'left')
    for row in rows:
        table.add_row(*('' if value is None else str(value) for value in row))
    return table


def emit(rendered, console=None):
    """Writes what render_rows produced to standard output."""
    if isinstance(rendered, str):
        click.echo(rendered, nl=False)
    else:
        (console or Console()).print(rendered)


def render_records(records, output_format, fields=RECORD_FIELDS, title='Avoidance counts'):
    """Renders records in the requested format, one column per field."""
    rows = [[record.as_dict()[field] for field in fields] for record in records]
    return render_rows(fields, rows, output_format, title=title)


def run_sweep(pattern_sets, min_n, max_n, mode, shards, allow_large, console):
    """Counts the avoiders of the pattern sets for every size of the range.

    Args:
        pattern_sets (list): PatternSet instances.
        min_n (int): The smallest size.
        max_n (int): The largest size.
        mode (str): The avoidance mode.
        shards (int): The number of processes.
        allow_large (bool): Lifts the size guard.
        console: The console provided by rich, used for the status line.

    Returns:
        records (list): One ReportRecord per pattern set and size.

    """
    with console.status(f'[bold green]Counting avoiders for sizes {min_n} to {max_n} in {mode} mode'):
        tables = count_tables(pattern_sets, min_n, max_n, mode=mode, shards=shards, allow_large=allow_large)
    return records_from_tables(tables)


def check_key_fixtures():
    """Checks the keys and first removals of the reference matrices.

    Returns:
        failures (list): Descriptions of the reference matrices that disagree.

    """
    failures = []
    for fixture in KEY_FIXTURES:
        key = sw_key(fixture.asm)
        if key != fixture.key:
            failures.append(f'{fixture.name}: key {key.one_line()} instead of {fixture.key.one_line()}')
        if fixture.removal is None:
            continue
        after, trace = remove_minus_one(fixture.asm, fixture.removal)
        if (after, trace.staircase, trace.created) != (fixture.after_removal, fixture.staircase, fixture.created):
            failures.append(f'{fixture.name}: removal at {fixture.removal} gave {trace}')
    return failures


def check_table_fixtures(tables, max_n, shards, allow_large, console):
    """Recounts the published rows of the tables up to max_n with one key census per size.

    Returns:
        records (list): One ReportRecord per fixture row and size.

    """
    rows = [row for row in load_tables() if row.table in tables]
    records = []
    for n in range(1, max_n + 1):
        published = [row for row in rows if row.expected(n) is not None]
        if not published:
            continue
        with console.status(f'[bold green]Recounting published rows for size {n}'):
            counts = avoidance_census(n, [row.pattern_set for row in published], shards=shards,
                                      allow_large=allow_large)
        records.extend(ReportRecord(mode=KEY_MODE,
                                    patterns=row.label,
                                    n=n,
                                    count=counts[row.pattern_set],
                                    expected=row.expected(n),
                                    known=row.known,
                                    oeis=row.oeis)
                       for row in published)
    return records


def render_dyck_path(word):
    """Draws the word as a mountain range of slashes, one text line per height."""
    height = 0
    cells = []
    for step in word.steps:
        if step == UP:
            cells.append((height, '/'))
            height += 1
        else:
            height -= 1
            cells.append((height, '\\'))
    top = max(level for level, _ in cells)
    lines = []
    for level in range(top, -1, -1):
        lines.append(''.join(symbol if cell_level == level else ' ' for cell_level, symbol in cells).rstrip())
    return '\n'.join(lines)
