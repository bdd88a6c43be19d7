#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_keyprocess.py
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
test_keyprocess
----------------------------------
Tests for `keyprocess` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

from asmkey.asm import Permutation, Position, asm_from_permutation, reflect_antidiagonal
from asmkey.asmkeyexceptions import InvalidPermutation, NotRemovable
from asmkey.enumeration import generate_asms
from asmkey.fixtures import CHAINED_KEY_ASM, KEY_FIXTURES
from asmkey.keyprocess import (count_asms_with_key,
                               key_trace,
                               neighboring_ones,
                               remove_minus_one,
                               removable_positions,
                               sw_key)
from asmkey.patterns import PatternSet, classical_contains, conjugate, perm_contains

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

PATTERN_231 = Permutation.from_string('231')
PATTERN_312 = Permutation.from_string('312')
PATTERN_321 = Permutation.from_string('321')


def keys_of_all_orders(asm):
    """The keys reached by every possible sequence of removals."""
    positions = removable_positions(asm)
    if not positions:
        return {sw_key(asm)}
    keys = set()
    for position in positions:
        keys |= keys_of_all_orders(remove_minus_one(asm, position)[0])
    return keys


def line_sums(asm):
    rows = tuple(sum(line) for line in asm.entries)
    columns = tuple(sum(column) for column in zip(*asm.entries))
    return rows, columns


class TestRemoval(unittest.TestCase):

    def test_reference_matrices(self):
        for fixture in KEY_FIXTURES:
            self.assertEqual(sw_key(fixture.asm), fixture.key, fixture.name)
            if fixture.removal is None:
                continue
            after, trace = remove_minus_one(fixture.asm, fixture.removal)
            self.assertEqual(after, fixture.after_removal, fixture.name)
            self.assertEqual(trace.staircase, fixture.staircase, fixture.name)
            self.assertEqual(trace.created, fixture.created, fixture.name)
            self.assertEqual(neighboring_ones(fixture.asm, fixture.removal), list(fixture.staircase))

    def test_removable_positions(self):
        self.assertEqual(removable_positions(CHAINED_KEY_ASM), [Position(2, 3), Position(3, 4)])
        self.assertEqual(removable_positions(asm_from_permutation(Permutation.identity(3))), [])

    def test_removing_what_is_not_removable(self):
        with self.assertRaises(NotRemovable) as context:
            remove_minus_one(CHAINED_KEY_ASM, Position(1, 1))
        self.assertEqual(context.exception.position, Position(1, 1))
        with self.assertRaises(NotRemovable):
            remove_minus_one(CHAINED_KEY_ASM, Position(6, 1))
        blocked = [asm for asm in generate_asms(5)
                   if len(asm.minus_ones()) > len(removable_positions(asm))][0]
        position = next(minus_one for minus_one in blocked.minus_ones()
                        if minus_one not in removable_positions(blocked))
        with self.assertRaises(NotRemovable):
            neighboring_ones(blocked, position)

    def test_chained_trace(self):
        chain = key_trace(CHAINED_KEY_ASM)
        self.assertEqual(len(chain), 3)
        self.assertIsNone(chain[0][1])
        self.assertEqual([trace.minus_one for _, trace in chain[1:]], [Position(3, 4), Position(2, 3)])
        self.assertEqual(chain[-1][0], asm_from_permutation(Permutation.from_string('34512')))
        self.assertFalse(chain[1][1].simple)

    def test_permutation_matrices_are_their_own_key(self):
        for images in ((1,), (2, 1), (3, 1, 2), (2, 4, 1, 3)):
            permutation = Permutation(images)
            self.assertEqual(sw_key(asm_from_permutation(permutation)), permutation)
            self.assertEqual(key_trace(asm_from_permutation(permutation))[-1][1], None)

    def test_count_asms_with_key(self):
        for n in range(1, 7):
            self.assertEqual(count_asms_with_key(n, Permutation.identity(n)), 1)
        self.assertEqual(count_asms_with_key(3, Permutation.from_string('231')), 2)
        with self.assertRaises(InvalidPermutation):
            count_asms_with_key(3, Permutation.identity(4))


class TestKeyProperties(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.asms = {n: list(generate_asms(n)) for n in range(1, 7)}

    def test_removal_order_does_not_matter(self):
        for n in range(1, 6):
            for asm in self.asms[n]:
                self.assertEqual(keys_of_all_orders(asm), {sw_key(asm)}, asm)

    def test_staircase_shape_and_conservation(self):
        for n in range(1, 7):
            for asm in self.asms[n]:
                chain = key_trace(asm)
                for (before, _), (after, trace) in zip(chain, chain[1:]):
                    staircase = trace.staircase
                    self.assertEqual(staircase[0].row, trace.minus_one.row)
                    self.assertEqual(staircase[-1].col, trace.minus_one.col)
                    for upper, lower in zip(staircase, staircase[1:]):
                        self.assertLess(upper.row, lower.row)
                        self.assertLess(upper.col, lower.col)
                    self.assertEqual(trace.created,
                                     tuple(Position(staircase[index + 1].row, staircase[index].col)
                                           for index in range(len(staircase) - 1)))
                    self.assertEqual(trace.simple, len(staircase) == 2)
                    self.assertEqual(line_sums(after), line_sums(before))
                    self.assertEqual(len(after.ones()), len(before.ones()) - 1)
                    self.assertEqual(len(after.minus_ones()), len(before.minus_ones()) - 1)

    def test_every_minus_one_gives_a_231_key(self):
        for n in range(1, 7):
            for asm in self.asms[n]:
                if asm.minus_ones():
                    self.assertTrue(perm_contains(sw_key(asm), PATTERN_231), asm)

    def test_231_key_avoiders_are_permutation_matrices(self):
        avoiders = PatternSet.of('231')
        for n in range(1, 7):
            for asm in self.asms[n]:
                if avoiders.avoided_by(sw_key(asm)):
                    self.assertTrue(asm.is_permutation_matrix)

    def test_classical_321_avoidance_survives_the_trace(self):
        for n in range(1, 6):
            for asm in self.asms[n]:
                if classical_contains(asm, PATTERN_321):
                    continue
                for matrix, _ in key_trace(asm):
                    self.assertFalse(classical_contains(matrix, PATTERN_321), asm)
                self.assertFalse(perm_contains(sw_key(asm), PATTERN_321))

    def test_321_is_kept_by_312_avoiding_keys(self):
        for n in range(1, 6):
            for asm in self.asms[n]:
                key = sw_key(asm)
                if not perm_contains(key, PATTERN_312) and classical_contains(asm, PATTERN_321):
                    self.assertTrue(perm_contains(key, PATTERN_321), asm)

    def test_reflection_conjugates_the_key(self):
        for n in range(1, 6):
            for asm in self.asms[n]:
                self.assertEqual(sw_key(reflect_antidiagonal(asm)), conjugate(sw_key(asm)), asm)
