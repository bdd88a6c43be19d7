#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: asmkeyexceptions.py
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
Custom exception code for asmkey.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class AsmKeyError(Exception):
    """Base of every error raised by asmkey."""


class InvalidAsm(AsmKeyError):
    """The matrix provided is not an alternating sign matrix."""

    def __init__(self, message, row=None, col=None, line=None):
        super().__init__(message)
        self.row = row
        self.col = col
        self.line = line


class BadShape(InvalidAsm):
    """The matrix is empty, ragged or not square."""


class BadEntry(InvalidAsm):
    """An entry is not one of -1, 0, 1."""


class BadLineSum(InvalidAsm):
    """A row or a column does not sum to 1."""


class BadAlternation(InvalidAsm):
    """The nonzero entries of a row or a column do not alternate starting and ending with 1."""


class InvalidPermutation(AsmKeyError):
    """The sequence provided is not a permutation of 1..n."""


class InvalidPattern(AsmKeyError):
    """A pattern or a set of patterns could not be understood."""


class UnknownPattern(InvalidPattern):
    """A pattern given on the command line is not a permutation."""


class InvalidTriangle(AsmKeyError):
    """The rows provided do not form a monotone triangle."""


class InvalidInversionSequence(AsmKeyError):
    """The sequence provided is not an inversion sequence."""


class Contains10(InvalidInversionSequence):
    """The inversion sequence is not weakly increasing."""


class InvalidDyckWord(AsmKeyError):
    """The word provided is not a Dyck word."""


class InvalidComposition(AsmKeyError):
    """The parts provided do not form the requested kind of composition."""


class NotRemovable(AsmKeyError):
    """The position does not hold a removable -1."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class RemovalInvariantBroken(AsmKeyError):
    """A removal of the key process produced a matrix with a broken line sum."""


class NotInBijectionDomain(AsmKeyError):
    """The triangle is not gapless with at most two values per column."""


class NotIn312321AvoidingClass(AsmKeyError):
    """The permutation contains 312 or 321."""


class SizeTooLarge(AsmKeyError):
    """The size requested is beyond the guard of the operation."""


class ParseError(AsmKeyError):
    """The text could not be parsed."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
