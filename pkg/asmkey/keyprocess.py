#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: keyprocess.py
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
The southwest key process.

A -1 is removable when no other -1 sits weakly to its southwest. Its neighboring 1s are the 1s weakly to its
southwest that no other such 1 dominates from the northeast. Geometrically the removal works on the Ferrers shape
with the -1 as northeast corner, the nearest 1 west of it as northwest corner, the nearest 1 south of it as
southeast corner and the other neighboring 1s as inner corners: the south-most 1 is replaced by a 0 and, moving east
to west, every other 1 drops into the row of the previously replaced one.

That bookkeeping is applied here in its closed form: with s_0, ..., s_m the neighboring 1s from top to bottom, all of
them and the -1 become 0 and new 1s appear at (row of s_k, column of s_(k-1)) for k = 1..m.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .asm import Asm, Permutation, Position
from .asmkeyexceptions import InvalidPermutation, NotRemovable, RemovalInvariantBroken

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
LOGGER_BASENAME = '''asmkey.keyprocess'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class RemovalTrace:
    """What a single removal of the key process touched.

    Attributes:
        minus_one (Position): The removed -1.
        staircase (tuple): The neighboring 1s that were moved, top to bottom.
        created (tuple): The new 1s, created[k] at (staircase[k + 1].row, staircase[k].col).

    """

    minus_one: Position
    staircase: Tuple[Position, ...]
    created: Tuple[Position, ...]

    @property
    def simple(self):
        """True when the Ferrers shape of the removal has no inner corner."""
        return len(self.staircase) == 2

    def __str__(self):
        staircase = ' '.join(str(position) for position in self.staircase)
        created = ' '.join(str(position) for position in self.created)
        kind = 'simple' if self.simple else 'staircase'
        return f'removed -1 at {self.minus_one}, {kind} {staircase} -> {created}'


def _minus_ones(rows):
    return [(row, col)
            for row, line in enumerate(rows, 1)
            for col, entry in enumerate(line, 1)
            if entry == -1]


def _is_removable(candidate, minus_ones):
    row, col = candidate
    return not any(other != candidate and other[0] >= row and other[1] <= col for other in minus_ones)


def _staircase(rows, minus_one):
    row, col = minus_one
    region = [(line_index, column)
              for line_index in range(row, len(rows) + 1)
              for column in range(1, col + 1)
              if rows[line_index - 1][column - 1] == 1]
    neighbors = sorted(one for one in region
                       if not any(other != one and other[0] <= one[0] and other[1] >= one[1] for other in region))
    if len(neighbors) < 2 or neighbors[0][0] != row or neighbors[-1][1] != col:
        raise RemovalInvariantBroken(f'The neighboring 1s {neighbors} of the -1 at ({row},{col}) do not run from its '
                                     f'row to its column.')
    return neighbors


def _rewrite(rows, minus_one, staircase):
    """Applies a removal in place and returns the created 1s."""
    created = [(staircase[index + 1][0], staircase[index][1]) for index in range(len(staircase) - 1)]
    for row, col in staircase:
        rows[row - 1][col - 1] = 0
    rows[minus_one[0] - 1][minus_one[1] - 1] = 0
    for row, col in created:
        rows[row - 1][col - 1] = 1
    touched_rows = {row for row, _ in staircase}
    touched_cols = {col for _, col in staircase}
    for row in touched_rows:
        if sum(rows[row - 1]) != 1:
            raise RemovalInvariantBroken(f'Row {row} no longer sums to 1 after removing the -1 at {minus_one}.')
    for col in touched_cols:
        if sum(line[col - 1] for line in rows) != 1:
            raise RemovalInvariantBroken(f'Column {col} no longer sums to 1 after removing the -1 at {minus_one}.')
    return created


def _next_removal(minus_ones):
    """The removable -1 with the largest row, ties broken by the smallest column."""
    removable = [candidate for candidate in minus_ones if _is_removable(candidate, minus_ones)]
    return min(removable, key=lambda position: (-position[0], position[1]))


def _check_removable(asm, minus_one):
    position = (minus_one.row, minus_one.col)
    if not (1 <= minus_one.row <= asm.n and 1 <= minus_one.col <= asm.n) or asm[position] != -1:
        raise NotRemovable(f'There is no -1 at {minus_one}.', minus_one)
    if not _is_removable(position, _minus_ones(asm.entries)):
        raise NotRemovable(f'The -1 at {minus_one} has another -1 weakly to its southwest.', minus_one)
    return position


def removable_positions(asm) -> List[Position]:
    """The -1 entries with no other -1 weakly to their southwest, ordered by (row, column)."""
    minus_ones = _minus_ones(asm.entries)
    return [Position(*candidate) for candidate in minus_ones if _is_removable(candidate, minus_ones)]


def neighboring_ones(asm, minus_one) -> List[Position]:
    """The neighboring 1s of a removable -1, top to bottom.

    Args:
        asm (Asm): The matrix.
        minus_one (Position): The position of a removable -1.

    Returns:
        positions (list): The undominated 1s weakly southwest of the -1; the first shares its row, the last its
            column, rows and columns strictly increase in between.

    Raises:
        NotRemovable: If there is no removable -1 at the position.

    """
    position = _check_removable(asm, minus_one)
    return [Position(*one) for one in _staircase(asm.entries, position)]


def remove_minus_one(asm, minus_one) -> Tuple[Asm, RemovalTrace]:
    """Removes a removable -1 and reports what moved.

    Args:
        asm (Asm): The matrix.
        minus_one (Position): The position of a removable -1.

    Returns:
        (asm, trace): The matrix after the removal, with one -1 and one 1 less, and the trace of the removal.

    Raises:
        NotRemovable: If there is no removable -1 at the position.
        RemovalInvariantBroken: If a row or column sum breaks, which would contradict the closed form.

    """
    position = _check_removable(asm, minus_one)
    rows = [list(line) for line in asm.entries]
    staircase = _staircase(rows, position)
    created = _rewrite(rows, position, staircase)
    trace = RemovalTrace(minus_one=Position(*position),
                         staircase=tuple(Position(*one) for one in staircase),
                         created=tuple(Position(*one) for one in created))
    return Asm(tuple(map(tuple, rows))), trace


def sw_key(asm) -> Permutation:
    """The southwest key of an alternating sign matrix.

    Removes the south-most removable -1 (west-most on ties) until none is left; the key does not depend on the
    order of removals.
    """
    rows = [list(line) for line in asm.entries]
    minus_ones = _minus_ones(rows)
    while minus_ones:
        candidate = _next_removal(minus_ones)
        _rewrite(rows, candidate, _staircase(rows, candidate))
        minus_ones.remove(candidate)
    return Permutation(tuple(line.index(1) + 1 for line in rows))


def key_trace(asm) -> List[Tuple[Asm, Optional[RemovalTrace]]]:
    """The chain of matrices met while computing the key.

    The first element is the matrix itself with no trace, every following one is paired with the removal that
    produced it. The last matrix is the permutation matrix of the key.
    """
    chain = [(asm, None)]
    current = asm
    minus_ones = _minus_ones(current.entries)
    while minus_ones:
        candidate = Position(*_next_removal(minus_ones))
        current, trace = remove_minus_one(current, candidate)
        LOGGER.debug(trace)
        chain.append((current, trace))
        minus_ones = _minus_ones(current.entries)
    return chain


def count_asms_with_key(n, permutation, allow_large=False):
    """Counts the n x n ASMs whose southwest key is the permutation, by exhaustive generation.

    Args:
        n (int): The size of the matrices.
        permutation (Permutation): The key, of size n.
        allow_large (bool): Lifts the default size guard of generation.

    Returns:
        count (int): At least 1, the permutation matrix itself has the permutation as key.

    Raises:
        InvalidPermutation: If the permutation does not have size n.
        SizeTooLarge: If n is beyond the generation guard.

    """
    from .enumeration import generate_asms  # pylint: disable=import-outside-toplevel
    if permutation.size != n:
        raise InvalidPermutation(f'The key {permutation} does not have size {n}.')
    return sum(1 for asm in generate_asms(n, allow_large=allow_large) if sw_key(asm) == permutation)
