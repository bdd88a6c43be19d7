#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: enumeration.py
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
Exhaustive generation, avoidance censuses, compositions and Catalan identities.

Censuses can be split in shards. A shard (index, count) owns the triangles whose row next to the bottom is the
index-th choice modulo count, so shards are disjoint, cover everything and are merged by plain addition.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, prod
from typing import Dict, List, NamedTuple, Tuple

from .asm import Asm, Permutation, asm_from_permutation, w
from .asmkeyexceptions import InvalidComposition, NotIn312321AvoidingClass, SizeTooLarge
from .keyprocess import sw_key
from .patterns import PatternSet
from .triangles import DOWN, UP, DyckWord, InversionSequence, MonotoneTriangle, asm_from_triangle

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
LOGGER_BASENAME = '''asmkey.enumeration'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

MAXIMUM_SWEEP_SIZE = 7
MAXIMUM_GENERATION_SIZE = 8
MAXIMUM_IDENTITY_SIZE = 14
MAXIMUM_CATALAN_INDEX = 30

KEY_MODE = 'key'
CLASSICAL_MODE = 'classical'
PERMUTATION_MODE = 'permutation'
MODES = (KEY_MODE, CLASSICAL_MODE, PERMUTATION_MODE)

SINGLE_SHARD = (0, 1)

STRICT_PATTERNS = PatternSet.of('312', '321')


def size_guard(n, allow_large=False):
    """Checks that an exhaustive run over n x n matrices is within reach.

    Raises:
        SizeTooLarge: If n is not positive or beyond the guard, which allow_large lifts from 7 to 8.

    """
    limit = MAXIMUM_GENERATION_SIZE if allow_large else MAXIMUM_SWEEP_SIZE
    if not 1 <= n <= limit:
        hint = '' if allow_large else f', allow large sizes to go up to {MAXIMUM_GENERATION_SIZE}'
        raise SizeTooLarge(f'Size {n} is outside 1..{limit}{hint}.')
    return n


@lru_cache(maxsize=None)
def _rows_above(lower):
    """The strictly increasing rows interlacing lower from above, in lexicographic order."""
    rows = []
    prefix = []

    def extend():
        index = len(prefix)
        if index == len(lower) - 1:
            rows.append(tuple(prefix))
            return
        start = max(lower[index], prefix[-1] + 1) if prefix else lower[index]
        for value in range(start, lower[index + 1] + 1):
            prefix.append(value)
            extend()
            prefix.pop()

    extend()
    return tuple(rows)


def _triangles_over(stack):
    if len(stack[-1]) == 1:
        yield MonotoneTriangle(tuple(reversed(stack)))
        return
    for upper in _rows_above(stack[-1]):
        stack.append(upper)
        yield from _triangles_over(stack)
        stack.pop()


def generate_triangles(n, allow_large=False, shard=SINGLE_SHARD):
    """Yields every monotone triangle of order n exactly once.

    Rows are chosen from the bottom up, each row in lexicographic order, so the top row varies fastest.

    Args:
        n (int): The order of the triangles.
        allow_large (bool): Lifts the size guard to 8.
        shard (tuple): (index, count), restricts the stream to one of count disjoint shards.

    Raises:
        SizeTooLarge: If n is outside the guard.

    """
    size_guard(n, allow_large)
    index, count = shard
    bottom = tuple(range(1, n + 1))
    if n == 1:
        if index == 0:
            yield MonotoneTriangle((bottom,))
        return
    for position, upper in enumerate(_rows_above(bottom)):
        if position % count == index:
            yield from _triangles_over([bottom, upper])


def generate_asms(n, allow_large=False, shard=SINGLE_SHARD):
    """Yields every n x n alternating sign matrix exactly once, in the order of their triangles."""
    for triangle in generate_triangles(n, allow_large=allow_large, shard=shard):
        yield asm_from_triangle(triangle)


def generate_asms_by_rows(n, allow_large=False):
    """Yields every n x n alternating sign matrix by filling entries row by row.

    An entry is admissible when the running sums of its row and of its column both stay in {0, 1}; a row is
    complete when its sum is 1. This shares nothing with the triangle generator and serves as its cross-check.
    """
    size_guard(n, allow_large)
    matrix = [[0] * n for _ in range(n)]
    partial = [0] * n

    def fill(row, col, running):
        if col == n:
            if running == 1:
                if row == n - 1:
                    yield Asm(tuple(map(tuple, matrix)))
                else:
                    yield from fill(row + 1, 0, 0)
            return
        for value in (-1, 0, 1):
            if 0 <= running + value <= 1 and 0 <= partial[col] + value <= 1:
                matrix[row][col] = value
                partial[col] += value
                yield from fill(row, col + 1, running + value)
                partial[col] -= value
        matrix[row][col] = 0

    yield from fill(0, 0, 0)


def generate_weakly_increasing_invseqs(n):
    """Yields the weakly increasing inversion sequences of size n in lexicographic order."""
    if n < 1:
        return
    values = [0]

    def extend():
        if len(values) == n:
            yield InversionSequence(tuple(values))
            return
        for value in range(values[-1], len(values) + 1):
            values.append(value)
            yield from extend()
            values.pop()

    yield from extend()


def generate_dyck_words(n):
    """Yields the Dyck words of semilength n, U before D at every branching."""
    if n < 1:
        return
    steps = []

    def extend(ups, downs):
        if downs == n:
            yield DyckWord(''.join(steps))
            return
        if ups < n:
            steps.append(UP)
            yield from extend(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append(DOWN)
            yield from extend(ups, downs + 1)
            steps.pop()

    yield from extend(0, 0)


@dataclass(frozen=True)
class CountTable:
    """Avoidance counts of one pattern set in one mode, for consecutive sizes starting at start."""

    pattern_set: PatternSet
    mode: str
    counts: Tuple[int, ...]
    start: int = 1

    @property
    def label(self):
        """The label of the pattern set."""
        return self.pattern_set.label

    @property
    def sizes(self):
        """The sizes the counts are for."""
        return range(self.start, self.start + len(self.counts))

    def __getitem__(self, n):
        if n not in self.sizes:
            raise KeyError(n)
        return self.counts[n - self.start]

    def items(self):
        """Pairs of size and count."""
        return list(zip(self.sizes, self.counts))


def _key_census_shard(n, shard, allow_large):
    LOGGER.debug('Counting keys of size %s in shard %s of %s.', n, shard[0] + 1, shard[1])
    census = Counter(sw_key(asm) for asm in generate_asms(n, allow_large=allow_large, shard=shard))
    LOGGER.debug('Shard %s of %s done with %s matrices.', shard[0] + 1, shard[1], sum(census.values()))
    return census


def _classical_census_shard(n, shard, allow_large, pattern_sets):
    LOGGER.debug('Checking classical avoidance of size %s in shard %s of %s.', n, shard[0] + 1, shard[1])
    census = Counter()
    for asm in generate_asms(n, allow_large=allow_large, shard=shard):
        census.update(pattern_set for pattern_set in pattern_sets if pattern_set.classically_avoided_by(asm))
    return census


def _run_sharded(worker, n, shards, *args):
    """Runs worker over every shard and adds up the resulting counters, in shard order."""
    shards = max(1, int(shards))
    if shards == 1:
        return worker(n, SINGLE_SHARD, *args)
    total = Counter()
    with ProcessPoolExecutor(max_workers=shards) as executor:
        futures = [executor.submit(worker, n, (index, shards), *args) for index in range(shards)]
        for future in futures:
            total.update(future.result())
    return total


def avoidance_census(n, pattern_sets, mode=KEY_MODE, shards=1, allow_large=False):
    """Counts the avoiders of several pattern sets in a single pass over the n x n matrices.

    In key mode every matrix gets its key computed once, the keys are tallied and each distinct key is checked
    against the pattern sets. In classical mode every matrix is checked directly. In permutation mode only the
    permutation matrices are counted.

    Args:
        n (int): The size of the matrices.
        pattern_sets (iterable): PatternSet instances.
        mode (str): One of "key", "classical" or "permutation".
        shards (int): The number of processes to split the pass over.
        allow_large (bool): Lifts the size guard to 8.

    Returns:
        counts (dict): The number of avoiders per pattern set, in the order given.

    Raises:
        SizeTooLarge: If n is outside the guard.
        ValueError: On an unknown mode.

    """
    pattern_sets = list(dict.fromkeys(pattern_sets))
    size_guard(n, allow_large)
    if mode == KEY_MODE:
        keys = _run_sharded(_key_census_shard, n, shards, allow_large)
        counts = {pattern_set: sum(count for key, count in keys.items() if pattern_set.avoided_by(key))
                  for pattern_set in pattern_sets}
    elif mode == CLASSICAL_MODE:
        census = _run_sharded(_classical_census_shard, n, shards, allow_large, tuple(pattern_sets))
        counts = {pattern_set: census[pattern_set] for pattern_set in pattern_sets}
    elif mode == PERMUTATION_MODE:
        everything = [Permutation(images) for images in permutations(range(1, n + 1))]
        counts = {pattern_set: sum(1 for permutation in everything if pattern_set.avoided_by(permutation))
                  for pattern_set in pattern_sets}
    else:
        raise ValueError(f'Unknown mode "{mode}", expected one of {", ".join(MODES)}.')
    LOGGER.info('Size %s, %s mode: %s', n, mode,
                ', '.join(f'{pattern_set.label}={count}' for pattern_set, count in counts.items()))
    return counts


def count_avoiders(n, pattern_set, mode=KEY_MODE, shards=1, allow_large=False):
    """The number of n x n matrices avoiding the pattern set in the given mode."""
    return avoidance_census(n, [pattern_set], mode=mode, shards=shards, allow_large=allow_large)[pattern_set]


def count_tables(pattern_sets, min_n, max_n, mode=KEY_MODE, shards=1, allow_large=False) -> List[CountTable]:
    """One CountTable per pattern set, covering the sizes min_n..max_n with one census per size."""
    pattern_sets = list(dict.fromkeys(pattern_sets))
    for n in (min_n, max_n):
        size_guard(n, allow_large)
    columns = [avoidance_census(n, pattern_sets, mode=mode, shards=shards, allow_large=allow_large)
               for n in range(min_n, max_n + 1)]
    return [CountTable(pattern_set=pattern_set,
                       mode=mode,
                       counts=tuple(column[pattern_set] for column in columns),
                       start=min_n)
            for pattern_set in pattern_sets]


def counts_by_key(n, shards=1, allow_large=False) -> Dict[Permutation, int]:
    """The number of n x n matrices per southwest key, ordered by the one-line notation of the keys."""
    size_guard(n, allow_large)
    keys = _run_sharded(_key_census_shard, n, shards, allow_large)
    return dict(sorted(keys.items()))


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of parts; strict compositions have no zero part."""

    parts: Tuple[int, ...]
    strict: bool = False

    def __post_init__(self):
        parts = tuple(int(part) for part in self.parts)
        if not parts:
            raise InvalidComposition('A composition needs at least one part.')
        if min(parts) < (1 if self.strict else 0):
            raise InvalidComposition(f'{parts} has a part below {1 if self.strict else 0}.')
        object.__setattr__(self, 'parts', parts)

    @property
    def total(self):
        """The sum of the parts."""
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return f"({','.join(str(part) for part in self.parts)})"


def _check_composition_arguments(total, k):
    if total < 0 or k < 1:
        raise InvalidComposition(f'Compositions of {total} into {k} parts need total >= 0 and at least one part.')


def weak_compositions(total, k):
    """The compositions of total into k nonnegative parts."""
    _check_composition_arguments(total, k)
    compositions = set()
    for bars in combinations(range(total + k - 1), k - 1):
        edges = (-1,) + bars + (total + k - 1,)
        compositions.add(Composition(tuple(edges[index + 1] - edges[index] - 1 for index in range(k))))
    return compositions


def strict_compositions(total, k):
    """The compositions of total into k positive parts."""
    _check_composition_arguments(total, k)
    if k > total:
        return set()
    compositions = set()
    for cuts in combinations(range(1, total), k - 1):
        edges = (0,) + cuts + (total,)
        compositions.add(Composition(tuple(edges[index + 1] - edges[index] for index in range(k)), strict=True))
    return compositions


def composition_of(permutation) -> Composition:
    """The block sizes of the decomposition of a 312 and 321 avoiding permutation into a direct sum of w's.

    Raises:
        NotIn312321AvoidingClass: If the permutation contains 312 or 321.

    """
    if not STRICT_PATTERNS.avoided_by(permutation):
        raise NotIn312321AvoidingClass(f'{permutation} contains 312 or 321.')
    parts = []
    start = 0
    highest = 0
    for index, image in enumerate(permutation.images, 1):
        highest = max(highest, image)
        if highest == index:
            parts.append(index - start)
            start = index
    return Composition(tuple(parts), strict=True)


def perm_from_composition(composition) -> Permutation:
    """The direct sum of the w's of the parts of a strict composition.

    Raises:
        InvalidComposition: If some part is 0.

    """
    if min(composition.parts) < 1:
        raise InvalidComposition(f'{composition} has a zero part.')
    images = []
    for part in composition.parts:
        offset = len(images)
        images.extend(offset + image for image in w(part).images)
    return Permutation(tuple(images))


def avoiders_312_321(n) -> List[Permutation]:
    """The 2^(n-1) permutations of size n avoiding 312 and 321, in lexicographic order."""
    if n < 1:
        return []
    return sorted(perm_from_composition(composition)
                  for k in range(1, n + 1)
                  for composition in strict_compositions(n, k))


def catalan(n):
    """The n-th Catalan number.

    Raises:
        SizeTooLarge: If n is outside 0..30.

    """
    if not 0 <= n <= MAXIMUM_CATALAN_INDEX:
        raise SizeTooLarge(f'Catalan index {n} is outside 0..{MAXIMUM_CATALAN_INDEX}.')
    return comb(2 * n, n) // (n + 1)


def predicted_count_for_key(permutation):
    """The product of C_(m - 1) over the block sizes m of the permutation.

    Raises:
        NotIn312321AvoidingClass: If the permutation contains 312 or 321.

    """
    return _catalan_product(composition_of(permutation))


def _catalan_product(composition):
    return prod(catalan(part - 1) for part in composition.parts)


class BreakdownEntry(NamedTuple):
    """The share of one permutation in the Catalan sum over 312 and 321 avoiders."""

    permutation: Permutation
    composition: Composition
    count: int


class IdentityCheck(NamedTuple):
    """Both sides of the Catalan identities for one n."""

    n: int
    lhs: int
    rhs1: int
    rhs2: int
    breakdown: Tuple[BreakdownEntry, ...]

    @property
    def holds(self):
        """True when the three values agree."""
        return self.lhs == self.rhs1 == self.rhs2


def catalan_identity_check(n) -> IdentityCheck:
    """Evaluates C_n, its sum over 312 and 321 avoiders and its sum over weak compositions.

    Raises:
        SizeTooLarge: If n is outside 1..14.

    """
    if not 1 <= n <= MAXIMUM_IDENTITY_SIZE:
        raise SizeTooLarge(f'Identity size {n} is outside 1..{MAXIMUM_IDENTITY_SIZE}.')
    entries = (BreakdownEntry(perm_from_composition(composition), composition, _catalan_product(composition))
               for k in range(1, n + 1)
               for composition in strict_compositions(n, k))
    breakdown = tuple(sorted(entries, key=lambda entry: entry.permutation))
    rhs2 = sum(prod(catalan(part) for part in composition.parts)
               for k in range(1, n + 1)
               for composition in weak_compositions(n - k, k))
    return IdentityCheck(n=n,
                         lhs=catalan(n),
                         rhs1=sum(entry.count for entry in breakdown),
                         rhs2=rhs2,
                         breakdown=breakdown)


def permutation_matrices(n):
    """The n! permutation matrices of size n, in lexicographic order of their permutations."""
    return [asm_from_permutation(Permutation(images)) for images in permutations(range(1, n + 1))]
