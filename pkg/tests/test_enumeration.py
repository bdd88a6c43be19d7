#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_enumeration.py
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
test_enumeration
----------------------------------
Tests for `enumeration` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import time
import unittest
from math import comb

from asmkey.asm import Permutation, w
from asmkey.asmkeyexceptions import InvalidComposition, NotIn312321AvoidingClass, SizeTooLarge
from asmkey.enumeration import (CLASSICAL_MODE,
                                KEY_MODE,
                                PERMUTATION_MODE,
                                STRICT_PATTERNS,
                                Composition,
                                CountTable,
                                avoidance_census,
                                avoiders_312_321,
                                catalan,
                                catalan_identity_check,
                                composition_of,
                                count_avoiders,
                                count_tables,
                                counts_by_key,
                                generate_asms,
                                generate_asms_by_rows,
                                generate_triangles,
                                perm_from_composition,
                                predicted_count_for_key,
                                size_guard,
                                strict_compositions,
                                weak_compositions)
from asmkey.fixtures import load_tables, table_rows
from asmkey.patterns import PatternSet
from asmkey.triangles import is_gapless

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

ASM_TOTALS = (1, 2, 7, 42, 429, 7436, 218348)


class TestGeneration(unittest.TestCase):

    def test_size_guard(self):
        self.assertEqual(size_guard(7), 7)
        self.assertEqual(size_guard(8, allow_large=True), 8)
        for n, allow_large in ((0, False), (8, False), (9, True), (-1, True)):
            with self.assertRaises(SizeTooLarge):
                size_guard(n, allow_large)
        with self.assertRaises(SizeTooLarge):
            next(generate_asms(8))

    def test_totals_agree_between_strategies(self):
        for n, total in enumerate(ASM_TOTALS, 1):
            self.assertEqual(sum(1 for _ in generate_triangles(n)), total)
            self.assertEqual(sum(1 for _ in generate_asms_by_rows(n)), total)

    def test_strategies_yield_the_same_matrices(self):
        for n in range(1, 6):
            by_triangles = list(generate_asms(n))
            self.assertEqual(len(set(by_triangles)), len(by_triangles))
            self.assertEqual(set(by_triangles), set(generate_asms_by_rows(n)))

    def test_shards_partition_the_stream(self):
        everything = list(generate_triangles(5))
        shards = [list(generate_triangles(5, shard=(index, 3))) for index in range(3)]
        self.assertEqual(sum(len(shard) for shard in shards), len(everything))
        self.assertEqual(set().union(*shards), set(everything))
        self.assertEqual(list(generate_triangles(1, shard=(1, 2))), [])


class TestCensus(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.keys = {n: counts_by_key(n) for n in range(1, 8)}

    def count(self, pattern_set, n):
        return sum(count for key, count in self.keys[n].items() if pattern_set.avoided_by(key))

    def test_published_tables(self):
        rows = load_tables()
        self.assertEqual(len(rows), 45)
        for row in rows:
            for n in row.sizes:
                self.assertEqual(self.count(row.pattern_set, n), row.expected(n), (row.label, n))

    def test_table_sizes(self):
        self.assertEqual(len(table_rows(1)), 6)
        self.assertEqual(len(table_rows(2)), 15)
        self.assertEqual(len(table_rows(3)), 24)
        self.assertEqual(max(row.sizes[-1] for row in table_rows(3)), 6)
        with self.assertRaises(ValueError):
            table_rows(4)

    def test_conjugate_sets_share_counts(self):
        for row in load_tables():
            conjugate = row.pattern_set.conjugate()
            for n in range(1, 7):
                self.assertEqual(self.count(row.pattern_set, n), self.count(conjugate, n), row.label)

    def test_closed_forms(self):
        for n in range(1, 8):
            self.assertEqual(self.count(PatternSet.of('231'), n), catalan(n))
            self.assertEqual(self.count(PatternSet.of('123', '231'), n), comb(n, 2) + 1)
            for pair in (('132', '231'), ('213', '231'), ('231', '312'), ('231', '321')):
                self.assertEqual(self.count(PatternSet.of(*pair), n), 2 ** (n - 1))
            self.assertEqual(self.count(STRICT_PATTERNS, n), catalan(n))

    def test_312_key_avoiders_are_gapless_triangles(self):
        for n in range(1, 8):
            gapless = sum(1 for monotone_triangle in generate_triangles(n) if is_gapless(monotone_triangle))
            self.assertEqual(self.count(PatternSet.of('312'), n), gapless)

    def test_counts_per_key(self):
        for n in range(1, 7):
            counts = self.keys[n]
            self.assertEqual(sum(counts.values()), ASM_TOTALS[n - 1])
            self.assertEqual(list(counts), sorted(counts))
            for permutation in avoiders_312_321(n):
                self.assertEqual(counts[permutation], predicted_count_for_key(permutation), permutation)

    def test_census_matches_the_key_counts(self):
        pattern_sets = [PatternSet.of('312'), PatternSet.of('321'), STRICT_PATTERNS]
        census = avoidance_census(5, pattern_sets)
        self.assertEqual(list(census), pattern_sets)
        for pattern_set in pattern_sets:
            self.assertEqual(census[pattern_set], self.count(pattern_set, 5))
        self.assertEqual(count_avoiders(4, PatternSet.of('2341')), 37)

    def test_sharded_census_is_the_same(self):
        pattern_sets = [PatternSet.of('312'), PatternSet.of('132', '213')]
        for mode in (KEY_MODE, CLASSICAL_MODE):
            self.assertEqual(avoidance_census(5, pattern_sets, mode=mode, shards=3),
                             avoidance_census(5, pattern_sets, mode=mode))
        self.assertEqual(counts_by_key(5, shards=2), self.keys[5])


class TestModes(unittest.TestCase):

    def test_permutation_mode(self):
        for n in range(1, 7):
            self.assertEqual(count_avoiders(n, PatternSet.of('312'), mode=PERMUTATION_MODE), catalan(n))
            self.assertEqual(count_avoiders(n, STRICT_PATTERNS, mode=PERMUTATION_MODE), 2 ** (n - 1))

    def test_key_mode_agrees_with_permutation_mode_when_avoiding_231(self):
        for pattern_set in (PatternSet.of('231'), PatternSet.of('231', '312'), PatternSet.of('1234', '231')):
            for n in range(1, 6):
                self.assertEqual(count_avoiders(n, pattern_set), count_avoiders(n, pattern_set, mode=PERMUTATION_MODE))

    def test_classical_mode(self):
        self.assertEqual(count_avoiders(3, PatternSet.of('321'), mode=CLASSICAL_MODE), 6)
        for n in range(1, 6):
            self.assertLessEqual(count_avoiders(n, PatternSet.of('321'), mode=CLASSICAL_MODE),
                                 count_avoiders(n, PatternSet.of('321')))

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            avoidance_census(3, [STRICT_PATTERNS], mode='northwest')

    def test_count_tables(self):
        tables = count_tables([PatternSet.of('231'), STRICT_PATTERNS, PatternSet.of('231')], 2, 5)
        self.assertEqual(len(tables), 2)
        self.assertIsInstance(tables[0], CountTable)
        self.assertEqual(tables[0].label, '231')
        self.assertEqual(tables[0].items(), [(2, 2), (3, 5), (4, 14), (5, 42)])
        self.assertEqual(tables[1][5], 42)
        with self.assertRaises(KeyError):
            tables[1][1]
        with self.assertRaises(SizeTooLarge):
            count_tables([STRICT_PATTERNS], 1, 8)


class TestCompositions(unittest.TestCase):

    def test_composition(self):
        composition = Composition((2, 1, 1), strict=True)
        self.assertEqual(composition.total, 4)
        self.assertEqual(len(composition), 3)
        self.assertEqual(str(composition), '(2,1,1)')
        with self.assertRaises(InvalidComposition):
            Composition((2, 0), strict=True)
        with self.assertRaises(InvalidComposition):
            Composition(())

    def test_counting_compositions(self):
        self.assertEqual(weak_compositions(2, 2), {Composition((2, 0)), Composition((1, 1)), Composition((0, 2))})
        self.assertEqual(strict_compositions(2, 3), set())
        for total in range(0, 7):
            for parts in range(1, 5):
                self.assertEqual(len(weak_compositions(total, parts)), comb(total + parts - 1, parts - 1))
                if total:
                    self.assertEqual(len(strict_compositions(total, parts)), comb(total - 1, parts - 1))
        with self.assertRaises(InvalidComposition):
            weak_compositions(-1, 2)
        with self.assertRaises(InvalidComposition):
            strict_compositions(3, 0)

    def test_composition_of(self):
        self.assertEqual(composition_of(Permutation.from_string('2314')).parts, (3, 1))
        self.assertEqual(composition_of(Permutation.identity(3)).parts, (1, 1, 1))
        self.assertEqual(composition_of(w(5)).parts, (5,))
        with self.assertRaises(NotIn312321AvoidingClass):
            composition_of(Permutation.from_string('312'))

    def test_compositions_and_avoiders_are_in_bijection(self):
        for n in range(1, 9):
            avoiders = avoiders_312_321(n)
            self.assertEqual(len(avoiders), 2 ** (n - 1))
            self.assertTrue(all(STRICT_PATTERNS.avoided_by(permutation) for permutation in avoiders))
            compositions = {composition
                            for parts in range(1, n + 1)
                            for composition in strict_compositions(n, parts)}
            self.assertEqual({composition_of(permutation) for permutation in avoiders}, compositions)
            for permutation in avoiders:
                self.assertEqual(perm_from_composition(composition_of(permutation)), permutation)
        self.assertEqual(avoiders_312_321(0), [])


class TestCatalan(unittest.TestCase):

    def test_catalan(self):
        self.assertEqual([catalan(n) for n in range(8)], [1, 1, 2, 5, 14, 42, 132, 429])
        self.assertEqual(catalan(14), 2674440)
        with self.assertRaises(SizeTooLarge):
            catalan(31)
        with self.assertRaises(SizeTooLarge):
            catalan(-1)

    def test_predicted_counts(self):
        self.assertEqual(predicted_count_for_key(Permutation.identity(6)), 1)
        self.assertEqual(predicted_count_for_key(w(4)), 5)
        self.assertEqual(predicted_count_for_key(Permutation.from_string('2314')), 2)

    def test_identities(self):
        for n in range(1, 15):
            check = catalan_identity_check(n)
            self.assertTrue(check.holds, n)
            self.assertEqual(check.lhs, catalan(n))
            self.assertEqual(len(check.breakdown), 2 ** (n - 1))
        check = catalan_identity_check(7)
        self.assertEqual((check.lhs, check.rhs1, check.rhs2), (429, 429, 429))
        self.assertEqual(tuple(catalan_identity_check(1))[:4], (1, 1, 1, 1))
        for n in (0, 15):
            with self.assertRaises(SizeTooLarge):
                catalan_identity_check(n)

    def test_identity_breakdown_matches_class_checks(self):
        for n in range(1, 8):
            breakdown = catalan_identity_check(n).breakdown
            self.assertEqual([entry.permutation for entry in breakdown], avoiders_312_321(n))
            for entry in breakdown:
                self.assertEqual(entry.composition, composition_of(entry.permutation))
                self.assertEqual(entry.count, predicted_count_for_key(entry.permutation))

    def test_identities_are_fast(self):
        start = time.perf_counter()
        check = catalan_identity_check(14)
        self.assertTrue(check.holds)
        self.assertLess(time.perf_counter() - start, 1.0)
