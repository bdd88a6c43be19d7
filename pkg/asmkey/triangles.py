#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: triangles.py
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
Monotone triangles and the bijections built on them.

Row i of the triangle of an ASM lists the columns whose partial sum over rows 1..i equals 1. Column j of a triangle
is read from row j down to the bottom row.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .asm import Asm, Position
from .asmkeyexceptions import (Contains10,
                               InvalidDyckWord,
                               InvalidInversionSequence,
                               InvalidTriangle,
                               NotInBijectionDomain)

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
LOGGER_BASENAME = '''asmkey.triangles'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

UP = 'U'
DOWN = 'D'


@dataclass(frozen=True)
class MonotoneTriangle:
    """A monotone triangle, rows from the top; build it through :func:`validate_triangle` from outside data."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(tuple(int(value) for value in row) for row in self.rows))

    @property
    def order(self):
        """The number of rows."""
        return len(self.rows)

    def column(self, index):
        """The values of the 1-based column index, from its top entry (row index) to the bottom row."""
        return tuple(row[index - 1] for row in self.rows[index - 1:])

    def columns(self):
        """All columns, left to right."""
        return [self.column(index) for index in range(1, self.order + 1)]

    def __str__(self):
        return '\n'.join(' '.join(str(value) for value in row) for row in self.rows)


def validate_triangle(rows):
    """Validates rows against the four conditions of a monotone triangle.

    Raises:
        InvalidTriangle: On the first violated condition.

    """
    rows = tuple(tuple(int(value) for value in row) for row in rows)
    order = len(rows)
    if not order:
        raise InvalidTriangle('A monotone triangle needs at least one row.')
    for index, row in enumerate(rows, 1):
        if len(row) != index:
            raise InvalidTriangle(f'Row {index} has {len(row)} entries instead of {index}.')
        if any(left >= right for left, right in zip(row, row[1:])):
            raise InvalidTriangle(f'Row {index} is not strictly increasing.')
    if rows[-1] != tuple(range(1, order + 1)):
        raise InvalidTriangle(f'The bottom row is not 1..{order}.')
    for index in range(order - 1):
        upper, lower = rows[index], rows[index + 1]
        for position, value in enumerate(upper):
            if not lower[position] <= value <= lower[position + 1]:
                raise InvalidTriangle(f'Entry {value} of row {index + 1} breaks the interlacing with row {index + 2}.')
    return MonotoneTriangle(rows)


@dataclass(frozen=True)
class InversionSequence:
    """A sequence e_1..e_n of nonnegative integers with e_i < i."""

    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(value) for value in self.values)
        if not values:
            raise InvalidInversionSequence('An inversion sequence needs at least one entry.')
        for index, value in enumerate(values, 1):
            if not 0 <= value < index:
                raise InvalidInversionSequence(f'Entry {index} is {value}, it must lie in 0..{index - 1}.')
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_string(cls, text):
        """Parses "00113" or "0,0,1,1,3"."""
        tokens = text.replace(',', ' ').split()
        if len(tokens) == 1:
            tokens = list(tokens[0])
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError:
            raise InvalidInversionSequence(f'"{text}" is not a sequence of integers.') from None

    @property
    def size(self):
        """The length n of the sequence."""
        return len(self.values)

    @property
    def is_weakly_increasing(self):
        """True when the sequence avoids the pattern 10."""
        return all(left <= right for left, right in zip(self.values, self.values[1:]))

    def __str__(self):
        return ','.join(str(value) for value in self.values)


@dataclass(frozen=True)
class DyckWord:
    """A balanced word over U and D whose prefixes never hold more D than U steps."""

    steps: str

    def __post_init__(self):
        steps = ''.join(self.steps.split()).upper()
        if not steps or set(steps) - {UP, DOWN}:
            raise InvalidDyckWord(f'"{self.steps}" is not a non-empty word over {UP} and {DOWN}.')
        height = 0
        for index, step in enumerate(steps, 1):
            height += 1 if step == UP else -1
            if height < 0:
                raise InvalidDyckWord(f'Step {index} of "{steps}" goes below the axis.')
        if height:
            raise InvalidDyckWord(f'"{steps}" does not return to the axis.')
        object.__setattr__(self, 'steps', steps)

    @property
    def semilength(self):
        """Half the number of steps."""
        return len(self.steps) // 2

    def __str__(self):
        return ' '.join(self.steps)


@dataclass(frozen=True)
class BadMinusOne:
    """A -1 obstructing gaplessness, with the nearest 1 west of it and the witness below."""

    minus_one: Position
    west_one: Position
    witness: Position

    def __str__(self):
        return f'-1 at {self.minus_one} is bad: west 1 at {self.west_one}, witness {self.witness}'


def triangle_from_asm(asm) -> MonotoneTriangle:
    """Records, row by row, the columns where the partial column sums of the matrix equal 1."""
    partial_sums = np.cumsum(asm.array, axis=0)
    return MonotoneTriangle(tuple(tuple(int(col) + 1 for col in np.flatnonzero(row == 1)) for row in partial_sums))


def asm_from_triangle(triangle) -> Asm:
    """Recovers the matrix from the rows of its partial column sums.

    Raises:
        InvalidTriangle: If the rows do not give back an alternating sign matrix.

    """
    order = triangle.order
    partial_sums = np.zeros((order, order), dtype=np.int8)
    for index, row in enumerate(triangle.rows):
        partial_sums[index, [value - 1 for value in row]] = 1
    matrix = np.diff(partial_sums, axis=0, prepend=0)
    prefixes = np.cumsum(matrix, axis=1)
    if prefixes.min() < 0 or prefixes.max() > 1 or (matrix.sum(axis=1) != 1).any():
        raise InvalidTriangle(f'The rows\n{triangle}\ndo not give back an alternating sign matrix.')
    return Asm(tuple(map(tuple, matrix.tolist())))


def is_gapless(triangle):
    """True when the values of every column form an interval of integers."""
    for column in triangle.columns():
        values = set(column)
        if max(values) - min(values) + 1 != len(values):
            return False
    return True


def max_two_values_per_column(triangle):
    """True when no column holds more than two distinct values."""
    return all(len(set(column)) <= 2 for column in triangle.columns())


def in_catalan_domain(triangle):
    """True when the triangle is gapless with at most two distinct values in every column."""
    return is_gapless(triangle) and max_two_values_per_column(triangle)


def bad_minus_ones(asm) -> List[BadMinusOne]:
    """The bad -1s of the matrix, each with its topmost, then westmost, witness.

    A -1 at (i, j) with its nearest 1 to the west at (i, j0) is bad when some column j' with j0 < j' < j has its
    first nonzero entry below row i equal to 1; that entry is a witness.
    """
    entries = asm.entries
    size = asm.n
    bad = []
    for minus_one in asm.minus_ones():
        row, col = minus_one.row, minus_one.col
        line = entries[row - 1]
        west = max(index for index in range(1, col) if line[index - 1] == 1)
        witnesses = []
        for column in range(west + 1, col):
            below = next(((index, entries[index - 1][column - 1])
                          for index in range(row + 1, size + 1)
                          if entries[index - 1][column - 1]), None)
            if below and below[1] == 1:
                witnesses.append(Position(below[0], column))
        if witnesses:
            bad.append(BadMinusOne(minus_one=minus_one,
                                   west_one=Position(row, west),
                                   witness=min(witnesses)))
    return bad


def invseq_from_triangle(triangle) -> InversionSequence:
    """Maps a gapless triangle with at most two values per column to a weakly increasing inversion sequence.

    Entry i is one less than the number of times n + 1 - i appears in column n + 1 - i.

    Raises:
        NotInBijectionDomain: If the triangle is not gapless or has a column with three values or more.

    """
    if not in_catalan_domain(triangle):
        raise NotInBijectionDomain(f'The triangle\n{triangle}\nis not gapless with at most two values per column.')
    order = triangle.order
    return InversionSequence(tuple(triangle.column(order + 1 - index).count(order + 1 - index) - 1
                                   for index in range(1, order + 1)))


def _require_weakly_increasing(sequence):
    if not sequence.is_weakly_increasing:
        raise Contains10(f'The inversion sequence {sequence} contains the pattern 10.')


def triangle_from_invseq(sequence) -> MonotoneTriangle:
    """The triangle whose column i holds i in its bottom 1 + e_(n+1-i) entries and i + 1 above them.

    Raises:
        Contains10: If the sequence is not weakly increasing.

    """
    _require_weakly_increasing(sequence)
    order = sequence.size
    values = sequence.values
    return MonotoneTriangle(tuple(tuple(column if row >= order - values[order - column] else column + 1
                                        for column in range(1, row + 1))
                                  for row in range(1, order + 1)))


def dyck_from_invseq(sequence) -> DyckWord:
    """Encodes a weakly increasing inversion sequence as a Dyck word.

    With e_(n+1) = n, step i is one U followed by e_(i+1) - e_i D steps.

    Raises:
        Contains10: If the sequence is not weakly increasing.

    """
    _require_weakly_increasing(sequence)
    extended = sequence.values + (sequence.size,)
    return DyckWord(''.join(UP + DOWN * (extended[index + 1] - extended[index]) for index in range(sequence.size)))


def invseq_from_dyck(word) -> InversionSequence:
    """Decodes a Dyck word: entry i counts the D steps met before the i-th U."""
    values = []
    downs = 0
    for step in word.steps:
        if step == UP:
            values.append(downs)
        else:
            downs += 1
    return InversionSequence(tuple(values))
