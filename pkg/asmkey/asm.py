#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: asm.py
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
Alternating sign matrices and permutations.

Every interface speaks 1-based (row, column) positions, row 1 at the top and column 1 at the left. The permutation
matrix of a permutation has a 1 at (i, p(i)) for each row i.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .asmkeyexceptions import (BadShape,
                               BadEntry,
                               BadLineSum,
                               BadAlternation,
                               InvalidPermutation)

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
LOGGER_BASENAME = '''asmkey.asm'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

VALID_ENTRIES = (-1, 0, 1)


@dataclass(frozen=True, order=True)
class Position:
    """A 1-based (row, column) position in a square matrix."""

    row: int
    col: int

    def __str__(self):
        return f'({self.row},{self.col})'


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of 1..n in one-line notation.

    Ordering of permutations is lexicographic on the one-line notation.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(image) for image in self.images)
        if not images:
            raise InvalidPermutation('A permutation needs at least one element.')
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f'{images} is not a permutation of 1..{len(images)}.')
        object.__setattr__(self, 'images', images)

    @classmethod
    def from_string(cls, text):
        """Parses the compact ("312") or the separated ("3,1,2" or "3 1 2") one-line notation.

        Args:
            text (str): The notation to parse.

        Returns:
            permutation (Permutation): The parsed permutation.

        Raises:
            InvalidPermutation: If the text does not hold a permutation.

        """
        text = text.strip()
        if not text:
            raise InvalidPermutation('Empty permutation given.')
        tokens = text.replace(',', ' ').split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError:
            raise InvalidPermutation(f'"{text}" is not written in one-line notation.') from None

    @classmethod
    def identity(cls, size):
        """The increasing permutation 12...n."""
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self):
        """The size n of the permutation."""
        return len(self.images)

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __call__(self, index):
        """The image of the 1-based index."""
        return self.images[index - 1]

    def __str__(self):
        if self.size <= 9:
            return ''.join(str(image) for image in self.images)
        return ','.join(str(image) for image in self.images)

    def one_line(self):
        """The space separated one-line notation."""
        return ' '.join(str(image) for image in self.images)

    def inverse(self):
        """The inverse permutation."""
        inverse = [0] * self.size
        for index, image in enumerate(self.images, 1):
            inverse[image - 1] = index
        return Permutation(tuple(inverse))

    def reverse(self):
        """The permutation read from right to left."""
        return Permutation(self.images[::-1])

    @property
    def is_identity(self):
        """True for the increasing permutation."""
        return self.images == tuple(range(1, self.size + 1))


@dataclass(frozen=True)
class Asm:
    """An n x n alternating sign matrix.

    Instances are built through :func:`validate_asm` when the entries come from outside; the constructors of this
    package that provably yield ASMs build them directly.
    """

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(tuple(int(value) for value in row) for row in self.entries))

    @property
    def n(self):
        """The side length of the matrix."""
        return len(self.entries)

    def __getitem__(self, position):
        row, col = position
        return self.entries[row - 1][col - 1]

    @property
    def array(self):
        """A fresh numpy copy of the entries."""
        return np.array(self.entries, dtype=np.int8).reshape(self.n, self.n)

    def positions_of(self, value):
        """Positions holding value, ordered by (row, column)."""
        return [Position(row, col)
                for row, line in enumerate(self.entries, 1)
                for col, entry in enumerate(line, 1)
                if entry == value]

    def minus_ones(self):
        """Positions of the -1 entries."""
        return self.positions_of(-1)

    def ones(self):
        """Positions of the +1 entries."""
        return self.positions_of(1)

    @property
    def is_permutation_matrix(self):
        """True when the matrix has no -1 entry."""
        return all(entry != -1 for line in self.entries for entry in line)

    def __str__(self):
        return '\n'.join(' '.join(f'{entry:>2}' for entry in line) for line in self.entries)


def _first_offending(mask):
    row, col = np.argwhere(mask)[0]
    return int(row) + 1, int(col) + 1


def validate_asm(n, entries):
    """Validates a square integer array against the three conditions of an alternating sign matrix.

    Line sums are checked before alternation so that a line summing to something other than 1 is reported as such.

    Args:
        n (int): The expected side length, at least 1.
        entries: An n x n nested sequence (or numpy array) of integers.

    Returns:
        asm (Asm): The validated matrix.

    Raises:
        BadShape: If the entries are not an n x n array with n at least 1.
        BadEntry: If some entry is not one of -1, 0, 1.
        BadLineSum: If some row or column does not sum to 1.
        BadAlternation: If the nonzero entries of some line do not alternate starting and ending with 1.

    """
    if n < 1:
        raise BadShape(f'Size must be at least 1, got {n}.')
    try:
        matrix = np.array(entries, dtype=np.int64)
    except (ValueError, TypeError):
        raise BadShape('Entries do not form a rectangular integer array.') from None
    if matrix.shape != (n, n):
        raise BadShape(f'Expected a {n}x{n} matrix, got shape {matrix.shape}.')
    outside = ~np.isin(matrix, VALID_ENTRIES)
    if outside.any():
        row, col = _first_offending(outside)
        raise BadEntry(f'Entry {matrix[row - 1, col - 1]} at ({row},{col}) is not one of -1, 0, 1.', row, col)
    for axis, line_name in ((1, 'row'), (0, 'column')):
        sums = matrix.sum(axis=axis)
        wrong = np.flatnonzero(sums != 1)
        if wrong.size:
            index = int(wrong[0]) + 1
            location = {'row': index} if line_name == 'row' else {'col': index}
            raise BadLineSum(f'The {line_name} {index} sums to {int(sums[index - 1])} instead of 1.', **location)
    for axis, line_name in ((1, 'row'), (0, 'column')):
        prefixes = np.cumsum(matrix, axis=axis)
        broken = (prefixes < 0) | (prefixes > 1)
        if broken.any():
            row, col = _first_offending(broken)
            index = row if line_name == 'row' else col
            raise BadAlternation(f'The nonzero entries of {line_name} {index} do not alternate in sign starting '
                                 f'with 1, first broken at ({row},{col}).', row, col)
    return Asm(tuple(map(tuple, matrix.tolist())))


def asm_from_permutation(permutation):
    """The permutation matrix with a 1 at (i, p(i)) for every row i."""
    size = permutation.size
    return Asm(tuple(tuple(1 if col == image else 0 for col in range(1, size + 1))
                     for image in permutation.images))


def permutation_of_asm(asm) -> Optional[Permutation]:
    """The permutation of a matrix without -1 entries, None when the matrix holds a -1."""
    if not asm.is_permutation_matrix:
        return None
    return Permutation(tuple(line.index(1) + 1 for line in asm.entries))


def _as_array(operand):
    if isinstance(operand, Permutation):
        operand = asm_from_permutation(operand)
    return operand.array


def _combine(first, second, blocks):
    matrix = np.block(blocks)
    result = Asm(tuple(map(tuple, matrix.tolist())))
    if isinstance(first, Permutation) and isinstance(second, Permutation):
        return permutation_of_asm(result)
    return result


def direct_sum(first: Union[Asm, Permutation], second: Union[Asm, Permutation]):
    """The block-diagonal matrix with first at the top left and second at the bottom right.

    Two permutations give a permutation, any other combination gives an Asm.
    """
    top, bottom = _as_array(first), _as_array(second)
    size_top, size_bottom = top.shape[0], bottom.shape[0]
    return _combine(first, second, [[top, np.zeros((size_top, size_bottom), dtype=top.dtype)],
                                    [np.zeros((size_bottom, size_top), dtype=top.dtype), bottom]])


def skew_sum(first: Union[Asm, Permutation], second: Union[Asm, Permutation]):
    """The block-antidiagonal matrix with first at the top right and second at the bottom left.

    Two permutations give a permutation, any other combination gives an Asm.
    """
    top, bottom = _as_array(first), _as_array(second)
    size_top, size_bottom = top.shape[0], bottom.shape[0]
    return _combine(first, second, [[np.zeros((size_top, size_bottom), dtype=top.dtype), top],
                                    [bottom, np.zeros((size_bottom, size_top), dtype=top.dtype)]])


def w(size):
    """The permutation 23...n1, the skew sum of the increasing permutation of size n - 1 and 1."""
    if size < 1:
        raise InvalidPermutation(f'Size must be at least 1, got {size}.')
    return Permutation(tuple(range(2, size + 1)) + (1,))


def southwest_records(permutation):
    """The 1 entries of the permutation matrix with no 1 strictly to their southwest, by increasing column."""
    records = []
    smallest_below = permutation.size + 1
    for row in range(permutation.size, 0, -1):
        image = permutation(row)
        if image < smallest_below:
            records.append(Position(row, image))
            smallest_below = image
    return sorted(records, key=lambda position: position.col)


def reflect_antidiagonal(asm):
    """Reflects the matrix along its northeast-southwest diagonal: entry (i, j) becomes entry (n+1-j, n+1-i)."""
    matrix = asm.array[::-1, ::-1].T
    return Asm(tuple(map(tuple, matrix.tolist())))


def standardize(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct values."""
    ranks = {value: rank for rank, value in enumerate(sorted(values), 1)}
    return Permutation(tuple(ranks[value] for value in values))
