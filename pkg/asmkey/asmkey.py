#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: asmkey.py
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
Main code for asmkey.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import logging
import logging.config

import click
import coloredlogs
from rich.console import Console

from .actions import (FIXTURE_FIELDS,
                      show_header,
                      check_key_fixtures,
                      check_table_fixtures,
                      emit,
                      render_dyck_path,
                      render_records,
                      render_rows,
                      run_sweep)
from .asmkeyexceptions import AsmKeyError
from .enumeration import (MAXIMUM_SWEEP_SIZE,
                          STRICT_PATTERNS,
                          catalan_identity_check,
                          counts_by_key,
                          predicted_count_for_key)
from .fixtures import TABLE_NUMBERS, table_rows
from .keyprocess import key_trace, sw_key
from .options import (common_options,
                      enumeration_options,
                      format_option,
                      mode_option,
                      shards_option,
                      source_argument)
from .triangles import (bad_minus_ones,
                        dyck_from_invseq,
                        invseq_from_triangle,
                        is_gapless,
                        max_two_values_per_column,
                        triangle_from_asm)
from .validators import (parse_asms,
                         validate_inversion_sequence,
                         validate_pattern_sets,
                         validate_tables)

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
LOGGER_BASENAME = '''asmkey'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

EXIT_SUCCESS = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2


def setup_logging(options):
    """
    Sets up the logging.

    Needs the args to get the log level supplied

    Args:
        options: The options provided through the cli.


    """
    show_header()
    config_file = options.pop('log_config')
    log_level = options.pop('log_level')
    # This will configure the logging, if the user has set a config file.
    # If there's no config file, logging will default to stderr.
    if config_file:
        try:
            configuration = json.loads(config_file.read())
            logging.config.dictConfig(configuration)
        except ValueError:
            click.echo(f'File "{config_file.name}" is not a valid logging configuration, cannot continue.', err=True)
            raise SystemExit(EXIT_INPUT_ERROR)
    else:
        coloredlogs.install(level=log_level.upper())


def read_asms(options):
    """Parses every matrix of the source option."""
    return parse_asms(options.pop('source').read())


def yes_no(value):
    """Renders a boolean for humans."""
    return 'yes' if value else 'no'


@click.group()
def asm_key():
    """Southwest keys, monotone triangles and key-avoidance counts of alternating sign matrices."""


@asm_key.command()
@common_options
@source_argument
@click.option('-t',
              '--trace',
              'trace',
              is_flag=True,
              help='Print every intermediate matrix with the removal that produced it.')
def key(**options):
    """Print the southwest key of every matrix in SOURCE, a file or "-" for standard input."""
    setup_logging(options)
    try:
        asms = read_asms(options)
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to read matrices: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    for index, asm in enumerate(asms):
        if options.get('trace'):
            if index:
                click.echo()
            for matrix, trace in key_trace(asm):
                if trace:
                    click.echo(str(trace))
                click.echo(str(matrix))
                click.echo()
        click.echo(sw_key(asm).one_line())
    raise SystemExit(EXIT_SUCCESS)


@asm_key.command()
@common_options
@source_argument
def triangle(**options):
    """Print the monotone triangle of every matrix in SOURCE."""
    setup_logging(options)
    try:
        asms = read_asms(options)
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to read matrices: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    click.echo('\n\n'.join(str(triangle_from_asm(asm)) for asm in asms))
    raise SystemExit(EXIT_SUCCESS)


@asm_key.command()
@common_options
@source_argument
def gapless(**options):
    """Tell whether the triangle of every matrix in SOURCE is gapless and list its bad -1s."""
    setup_logging(options)
    try:
        asms = read_asms(options)
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to read matrices: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    reports = []
    for asm in asms:
        monotone_triangle = triangle_from_asm(asm)
        lines = [f'gapless: {yes_no(is_gapless(monotone_triangle))}',
                 f'at most two values per column: {yes_no(max_two_values_per_column(monotone_triangle))}']
        lines.extend(str(bad) for bad in bad_minus_ones(asm))
        reports.append('\n'.join(lines))
    click.echo('\n\n'.join(reports))
    raise SystemExit(EXIT_SUCCESS)


@asm_key.command()
@common_options
@source_argument
def invseq(**options):
    """Print the weakly increasing inversion sequence of every matrix in SOURCE."""
    setup_logging(options)
    try:
        sequences = [invseq_from_triangle(triangle_from_asm(asm)) for asm in read_asms(options)]
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to compute inversion sequences: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    click.echo('\n'.join(str(sequence) for sequence in sequences))
    raise SystemExit(EXIT_SUCCESS)


@asm_key.command()
@common_options
@click.argument('source', type=click.File('r'), required=False)
@click.option('-e',
              '--sequence',
              'sequence',
              type=str,
              callback=validate_inversion_sequence,
              help='A weakly increasing inversion sequence to encode instead of reading matrices, e.g. "00113".')
def dyck(**options):
    """Print the Dyck word, and its path, of every matrix in SOURCE or of a given inversion sequence."""
    setup_logging(options)
    sequence = options.get('sequence')
    try:
        if sequence is not None:
            sequences = [sequence]
        else:
            source = options.pop('source') or click.get_text_stream('stdin')
            sequences = [invseq_from_triangle(triangle_from_asm(asm)) for asm in parse_asms(source.read())]
        words = [dyck_from_invseq(item) for item in sequences]
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to compute Dyck words: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    click.echo('\n\n'.join(f'{word}\n{render_dyck_path(word)}' for word in words))
    raise SystemExit(EXIT_SUCCESS)


@asm_key.command()
@common_options
@enumeration_options
@mode_option
@click.option('--min-n',
              'min_n',
              type=int,
              default=1,
              show_default=True,
              help='The smallest size to count.')
@click.option('--max-n',
              'max_n',
              type=int,
              default=6,
              show_default=True,
              help=f'The largest size to count, at most {MAXIMUM_SWEEP_SIZE} unless large sizes are allowed.')
@click.option('-p',
              '--patterns',
              'pattern_sets',
              multiple=True,
              callback=validate_pattern_sets,
              help='A pattern set to count avoiders of, patterns joined with "+" as in "312+321". Repeatable.')
@click.option('-t',
              '--table',
              'tables',
              type=int,
              multiple=True,
              callback=validate_tables,
              help=f'Count every pattern set of a published table, one of {TABLE_NUMBERS}. Repeatable.')
def sweep(**options):
    """Count avoiders of pattern sets over a range of sizes and compare with the published counts."""
    setup_logging(options)
    pattern_sets = list(options.get('pattern_sets'))
    for table in options.get('tables'):
        pattern_sets.extend(row.pattern_set for row in table_rows(table))
    if not pattern_sets:
        raise click.UsageError('Provide at least one pattern set or table.')
    min_n, max_n = options.get('min_n'), options.get('max_n')
    if min_n > max_n:
        raise click.UsageError(f'The smallest size {min_n} is larger than the largest size {max_n}.')
    console = Console(stderr=True)
    try:
        records = run_sweep(pattern_sets,
                            min_n,
                            max_n,
                            options.get('mode'),
                            options.get('shards'),
                            options.get('allow_large'),
                            console)
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to sweep: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    emit(render_records(records, options.get('output_format')))
    mismatches = [record for record in records if record.mismatch]
    for record in mismatches:
        LOGGER.error(f'{record.patterns} at size {record.n}: counted {record.count}, published {record.expected}.')
    raise SystemExit(EXIT_MISMATCH if mismatches else EXIT_SUCCESS)


@asm_key.command()
@common_options
@enumeration_options
@click.option('-n',
              '--size',
              'size',
              type=int,
              required=True,
              help='The size of the matrices.')
def per_key(**options):
    """Count the matrices per southwest key and compare 312 and 321 avoiding keys with their Catalan products."""
    setup_logging(options)
    console = Console(stderr=True)
    size = options.get('size')
    try:
        with console.status(f'[bold green]Counting keys of size {size}'):
            counts = counts_by_key(size, shards=options.get('shards'), allow_large=options.get('allow_large'))
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to count keys: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    rows = []
    mismatches = 0
    for permutation, count in counts.items():
        predicted = predicted_count_for_key(permutation) if STRICT_PATTERNS.avoided_by(permutation) else None
        if predicted is not None and predicted != count:
            LOGGER.error(f'Key {permutation.one_line()}: counted {count}, predicted {predicted}.')
            mismatches += 1
        rows.append([permutation.one_line(), count, predicted])
    LOGGER.info(f'{sum(counts.values())} matrices of size {size} over {len(counts)} keys.')
    emit(render_rows(('key', 'count', 'predicted'), rows, options.get('output_format'), title=f'Keys of size {size}'))
    raise SystemExit(EXIT_MISMATCH if mismatches else EXIT_SUCCESS)


@asm_key.command()
@common_options
@click.argument('size', type=int)
def identity(**options):
    """Evaluate both Catalan sums for SIZE and print the share of every 312 and 321 avoiding permutation."""
    setup_logging(options)
    try:
        check = catalan_identity_check(options.get('size'))
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to check the identities: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    click.echo(f'{check.lhs} = {check.rhs1} = {check.rhs2}')
    for entry in check.breakdown:
        click.echo(f'{entry.permutation.one_line()}  {entry.composition}  {entry.count}')
    if not check.holds:
        LOGGER.error(f'The identities do not hold for size {check.n}.')
    raise SystemExit(EXIT_SUCCESS if check.holds else EXIT_MISMATCH)


@asm_key.group()
def fixtures():
    """Work with the shipped golden fixtures."""


@fixtures.command()
@common_options
@shards_option
@format_option
@click.option('--max-n',
              'max_n',
              type=int,
              default=MAXIMUM_SWEEP_SIZE,
              show_default=True,
              help='The largest size to recount.')
@click.option('-t',
              '--table',
              'tables',
              type=int,
              multiple=True,
              callback=validate_tables,
              help='Restrict the check to a table. Repeatable, defaults to all tables.')
def check(**options):
    """Recount the published tables and the reference matrices and report every difference."""
    setup_logging(options)
    failures = check_key_fixtures()
    for failure in failures:
        LOGGER.error(failure)
    console = Console(stderr=True)
    try:
        records = check_table_fixtures(options.get('tables') or TABLE_NUMBERS,
                                       options.get('max_n'),
                                       options.get('shards'),
                                       False,
                                       console)
    except AsmKeyError as msg:
        LOGGER.error(f'Unable to check fixtures: {msg}')
        raise SystemExit(EXIT_INPUT_ERROR)
    emit(render_records(records, options.get('output_format'), fields=FIXTURE_FIELDS, title='Published counts'))
    mismatches = [record for record in records if record.mismatch]
    for record in mismatches:
        LOGGER.error(f'{record.patterns} at size {record.n}: counted {record.count}, published {record.expected}.')
    raise SystemExit(EXIT_MISMATCH if failures or mismatches else EXIT_SUCCESS)
