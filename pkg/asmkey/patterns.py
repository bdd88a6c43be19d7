#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: patterns.py
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
Permutation patterns, classical avoidance on ASMs and key-avoidance.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
from dataclasses import dataclass
from typing import FrozenSet

from .asm import Permutation
from .asmkeyexceptions import InvalidPattern, InvalidPermutation, UnknownPattern
from .keyprocess import sw_key

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
LOGGER_BASENAME = '''asmkey.patterns'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

PATTERN_SET_SEPARATOR = '+'


def _sign(value):
    return (value > 0) - (value < 0)


def _contains_points(points, pattern):
    """Backtracks over points sorted by row for an occurrence of the pattern.

    An occurrence uses points with strictly increasing rows and pairwise distinct columns whose columns are
    order-isomorphic to the pattern.
    """
    length = pattern.size
    images = pattern.images
    chosen = []

    def extend(start):
        depth = len(chosen)
        if depth == length:
            return True
        for index in range(start, len(points) - (length - depth) + 1):
            row, col = points[index]
            if chosen and row == chosen[-1][0]:
                continue
            if all(_sign(col - previous[1]) == _sign(images[depth] - images[position])
                   for position, previous in enumerate(chosen)):
                chosen.append((row, col))
                if extend(index + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def perm_contains(sigma, pi):
    """True when some subsequence of sigma is order-isomorphic to pi."""
    if pi.size > sigma.size:
        return False
    return _contains_points(list(enumerate(sigma.images, 1)), pi)


def perm_avoids(sigma, pi):
    """True when sigma does not contain pi."""
    return not perm_contains(sigma, pi)


def classical_contains(asm, pi):
    """True when the 1 entries of the matrix, with -1s read as 0s, hold an occurrence of pi.

    An occurrence is a set of pi.size 1 entries in distinct rows and columns realizing the relative order of pi.
    """
    return _contains_points([(one.row, one.col) for one in asm.ones()], pi)


def conjugate(pi):
    """The reverse of the inverse of the reverse, the image of pi under the antidiagonal reflection."""
    return pi.reverse().inverse().reverse()


@dataclass(frozen=True)
class PatternSet:
    """A non-empty set of permutation patterns; avoiding the set means avoiding each of them."""

    patterns: FrozenSet[Permutation]

    def __post_init__(self):
        patterns = frozenset(self.patterns)
        if not patterns:
            raise InvalidPattern('A pattern set needs at least one pattern.')
        if not all(isinstance(pattern, Permutation) for pattern in patterns):
            raise InvalidPattern('Patterns must be permutations.')
        object.__setattr__(self, 'patterns', patterns)

    @classmethod
    def of(cls, *patterns):
        """Builds a set from permutations or their one-line notations."""
        try:
            return cls(frozenset(pattern if isinstance(pattern, Permutation) else Permutation.from_string(pattern)
                                 for pattern in patterns))
        except InvalidPermutation as msg:
            raise UnknownPattern(str(msg)) from None

    @classmethod
    def from_string(cls, text):
        """Parses patterns joined by "+", for example "312+321" or "1,2,3,4,5,6,7,8,9,10+21"."""
        return cls.of(*[token for token in text.split(PATTERN_SET_SEPARATOR) if token.strip()])

    @property
    def sorted_patterns(self):
        """The patterns ordered by size, then lexicographically."""
        return sorted(self.patterns, key=lambda pattern: (pattern.size, pattern.images))

    @property
    def label(self):
        """A stable label such as "312+321"."""
        return PATTERN_SET_SEPARATOR.join(str(pattern) for pattern in self.sorted_patterns)

    def __str__(self):
        return self.label

    def avoided_by(self, permutation):
        """True when the permutation avoids every pattern of the set."""
        return not any(perm_contains(permutation, pattern) for pattern in self.patterns)

    def classically_avoided_by(self, asm):
        """True when the matrix classically avoids every pattern of the set."""
        return not any(classical_contains(asm, pattern) for pattern in self.patterns)

    def conjugate(self):
        """The set of the conjugates of the patterns."""
        return PatternSet(frozenset(conjugate(pattern) for pattern in self.patterns))


def key_avoids(asm, pattern_set):
    """True when the southwest key of the matrix avoids every pattern of the set."""
    return pattern_set.avoided_by(sw_key(asm))
