#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: options.py
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
options package.

Import all parts from options here

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""

import functools

import click
from click_option_group import MutuallyExclusiveOptionGroup

from .enumeration import KEY_MODE, MAXIMUM_SWEEP_SIZE, MODES
from .validators import validate_shards

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

OUTPUT_FORMATS = ('text', 'json', 'csv')

source_argument = click.argument('source',
                                 type=click.File('r'),
                                 default='-')

format_option = click.option('-f',
                             '--format',
                             'output_format',
                             type=click.Choice(OUTPUT_FORMATS),
                             default='text',
                             envvar='ASM_KEY_FORMAT',
                             show_default=True,
                             help='The output format, can read from "ASM_KEY_FORMAT" environment variable.')

shards_option = click.option('-s',
                             '--shards',
                             'shards',
                             type=int,
                             default=1,
                             envvar='ASM_KEY_SHARDS',
                             callback=validate_shards,
                             show_default=True,
                             help='The number of processes to split enumeration over, can read from "ASM_KEY_SHARDS" '
                                  'environment variable.')

allow_large_option = click.option('--allow-large',
                                  'allow_large',
                                  is_flag=True,
                                  help=f'Lifts the size guard of exhaustive runs from {MAXIMUM_SWEEP_SIZE} to 8.')

mode_option = click.option('-m',
                           '--mode',
                           'mode',
                           type=click.Choice(MODES),
                           default=KEY_MODE,
                           show_default=True,
                           help='Key-avoidance, classical avoidance or avoidance among permutation matrices only.')


def common_options(function):
    """Options common to all commands."""
    logging_options = MutuallyExclusiveOptionGroup('Logging options',
                                                   help='Sets the level of logging interactively or accepts a '
                                                        'configuration file.')
    options = [logging_options.option('-L',
                                      '--log-config',
                                      'log_config',
                                      type=click.File(),
                                      help='A config file for logging, mutually exclusive with setting the logging '
                                           'level interactively.'),
               logging_options.option('-l',
                                      '--log-level',
                                      'log_level',
                                      type=click.Choice(['debug', 'info', 'warning', 'error']),
                                      default='info',
                                      help='Provide the log level. Defaults to info. Mutually exclusive with providing '
                                           'a logging configuration file.')]
    return functools.reduce(lambda x, option: option(x), options, function)


def enumeration_options(function):
    """Options common to the commands running exhaustive enumeration."""
    options = [shards_option, allow_large_option, format_option]
    return functools.reduce(lambda x, option: option(x), options, function)
