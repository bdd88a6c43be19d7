#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: validators.py
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
validation package.

Parsing of matrices from text and the click callbacks validating options.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""

import click

from .asm import validate_asm
from .asmkeyexceptions import InvalidAsm, InvalidInversionSequence, InvalidPattern, ParseError
from .fixtures import TABLE_NUMBERS
from .patterns import PatternSet
from .triangles import InversionSequence

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def _parse_row(line, line_number):
    values = []
    for column, token in enumerate(line.split(), 1):
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f'Token "{token}" at line {line_number}, column {column} is not an integer.',
                             line=line_number,
                             column=column) from None
    return values


def parse_asm(text, first_line=1):
    """Parses one matrix written one row per line, entries separated by whitespace.

    Args:
        text (str): The rows of the matrix.
        first_line (int): The line number of the first row, used in error messages.

    Returns:
        asm (Asm): The validated matrix.

    Raises:
        ParseError: On an empty text, a token that is not an integer or rows of different lengths.
        InvalidAsm: If the parsed entries do not form an alternating sign matrix.

    """
    numbered = [(number, line) for number, line in enumerate(text.splitlines(), first_line) if line.strip()]
    if not numbered:
        raise ParseError('No matrix given.', line=first_line)
    rows = [_parse_row(line, number) for number, line in numbered]
    width = len(rows[0])
    for (number, _), row in zip(numbered, rows):
        if len(row) != width:
            raise ParseError(f'Line {number} has {len(row)} entries while the first row has {width}.',
                             line=number,
                             column=min(len(row), width) + 1)
    if len(rows) != width:
        raise ParseError(f'Got {len(rows)} rows of {width} entries, a square matrix is needed.',
                         line=numbered[-1][0])
    try:
        return validate_asm(width, rows)
    except InvalidAsm as msg:
        start = numbered[0][0]
        line = numbered[msg.row - 1][0] if msg.row else start
        raise type(msg)(f'Matrix starting at line {start}: {msg}', row=msg.row, col=msg.col, line=line) from None


def parse_asms(text):
    """Parses every blank-line separated matrix of the text, in order.

    Raises:
        ParseError: If the text holds no matrix or one of them does not parse.
        InvalidAsm: If one of them is not an alternating sign matrix.

    """
    blocks = []
    current = []
    start = 1
    for number, line in enumerate(text.splitlines(), 1):
        if line.strip():
            if not current:
                start = number
            current.append(line)
        elif current:
            blocks.append((start, current))
            current = []
    if current:
        blocks.append((start, current))
    if not blocks:
        raise ParseError('No matrix given.', line=1)
    return [parse_asm('\n'.join(lines), first_line=first) for first, lines in blocks]


def validate_pattern_sets(ctx, param, value):  # pylint: disable=unused-argument
    """Validates pattern set options such as "312" or "312+321"."""
    try:
        return [PatternSet.from_string(text) for text in value]
    except InvalidPattern as msg:
        raise click.BadParameter(str(msg))


def validate_tables(ctx, param, value):  # pylint: disable=unused-argument
    """Validates table numbers."""
    for table in value:
        if table not in TABLE_NUMBERS:
            raise click.BadParameter(f'There is no table {table}, expected one of {TABLE_NUMBERS}.')
    return value


def validate_shards(ctx, param, value):  # pylint: disable=unused-argument
    """Validates the number of shards."""
    if value < 1:
        raise click.BadParameter(f'At least one shard is needed, got {value}.')
    return value


def validate_inversion_sequence(ctx, param, value):  # pylint: disable=unused-argument
    """Validates an inversion sequence option such as "00113" or "0,0,1,1,3"."""
    if value is None:
        return value
    try:
        return InversionSequence.from_string(value)
    except InvalidInversionSequence as msg:
        raise click.BadParameter(str(msg))
