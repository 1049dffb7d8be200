"""Utility functions: parameter strings, run configuration, JSON reports and the worker pool."""

from ast import literal_eval
from collections import namedtuple
from fractions import Fraction
import json
from multiprocessing import Pool, cpu_count
import os
import sys

import numpy as np

NUMERIC_MODES = ('exact', 'float')
OUTPUT_FORMATS = ('json', 'table')

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3

_DEFAULT_FLOAT_CUTOFF = 64


class CapExceededError(ValueError):
    """Raised when a requested enumeration or search is larger than the configured cap."""


RunConfig = namedtuple('RunConfig', ('numeric_mode', 'float_cutoff', 'max_n', 'tree_max_n', 'corpus_max_n',
                                     'pair_max_n', 'max_set_size', 'max_non_edges', 'output_format', 'seed',
                                     'num_workers', 'num_random_graphs', 'num_random_chains'))


def create_run_config(numeric_mode='exact', float_cutoff=_DEFAULT_FLOAT_CUTOFF, max_n=5, tree_max_n=8, corpus_max_n=6,
                      pair_max_n=5, max_set_size=2, max_non_edges=20, output_format='json', seed=0, num_workers=None,
                      num_random_graphs=200, num_random_chains=100):
    """Return a validated RunConfig. If num_workers is None, it's read from the environment (see get_num_workers)."""
    if numeric_mode not in NUMERIC_MODES:
        raise ValueError('Unknown numeric mode %s (valid values: %s)' % (numeric_mode, ', '.join(NUMERIC_MODES)))
    if output_format not in OUTPUT_FORMATS:
        raise ValueError('Unknown output format %s (valid values: %s)' % (output_format, ', '.join(OUTPUT_FORMATS)))
    for name, value, minimum in [('float_cutoff', float_cutoff, 1), ('max_n', max_n, 1), ('tree_max_n', tree_max_n, 1),
                                 ('corpus_max_n', corpus_max_n, 1), ('pair_max_n', pair_max_n, 1),
                                 ('max_set_size', max_set_size, 1), ('max_non_edges', max_non_edges, 0),
                                 ('num_random_graphs', num_random_graphs, 0),
                                 ('num_random_chains', num_random_chains, 0)]:
        if int(value) < minimum:
            raise ValueError('%s must be at least %s (got %s)' % (name, minimum, value))
    return RunConfig(numeric_mode=numeric_mode, float_cutoff=int(float_cutoff), max_n=int(max_n),
                     tree_max_n=int(tree_max_n), corpus_max_n=int(corpus_max_n), pair_max_n=int(pair_max_n),
                     max_set_size=int(max_set_size), max_non_edges=int(max_non_edges), output_format=output_format,
                     seed=int(seed), num_workers=get_num_workers() if num_workers is None else int(num_workers),
                     num_random_graphs=int(num_random_graphs), num_random_chains=int(num_random_chains))


def parse_param_str(param_str):
    """Parse a parameter string (colon-separated list of equals-separated key-value pairs) into a dict.

    All keys are assumed to be strings, while values are evaluated as Python literals.
    """
    param_kwargs = {}
    if param_str:
        for pair in param_str.split(':'):
            try:
                key, value = pair.split('=')
            except ValueError:
                raise ValueError('Malformed parameter %r (expected key=value)' % pair)
            try:
                param_kwargs[key] = literal_eval(value)
            except (SyntaxError, ValueError):
                param_kwargs[key] = value
    return param_kwargs


def parse_edge_str(edge_str):
    """Parse a comma-separated list of dash-separated vertex pairs (e.g., "0-2,4-6") into a list of tuples."""
    edges = []
    if edge_str:
        for pair in str(edge_str).split(','):
            pair = pair.strip()
            if not pair:
                continue
            try:
                u, v = (int(token) for token in pair.split('-'))
            except ValueError:
                raise ValueError('Malformed edge %r (expected <u>-<v> with non-negative integers)' % pair)
            edges.append((u, v))
    return edges


def format_rational(value):
    """Return the "p/q" string of an exact value, or None for a floating point value."""
    if isinstance(value, Fraction):
        return '%d/%d' % (value.numerator, value.denominator)
    if isinstance(value, (int, np.integer)):
        return '%d/1' % value
    return None


def add_number(report, key, value):
    """Store value in report under key ("p/q" string) and key_float (float approximation)."""
    report[key] = format_rational(value)
    report['%s_float' % key] = float(value)
    return report


def number_fields(value):
    """Return {"exact": "p/q", "float": <float>} for value."""
    return {'exact': format_rational(value), 'float': float(value)}


def to_json(report):
    """Serialise a report deterministically (sorted keys, fixed indentation)."""
    return json.dumps(report, sort_keys=True, indent=2, separators=(',', ': '))


def to_table(report, prefix=''):
    """Flatten a report into tab-separated "key value" lines. There's no stability guarantee for this format."""
    lines = []
    if isinstance(report, dict):
        for key in sorted(report):
            lines.extend(to_table(report[key], '%s%s.' % (prefix, key) if prefix or key else ''))
    elif isinstance(report, (list, tuple)):
        for i, value in enumerate(report):
            lines.extend(to_table(value, '%s%d.' % (prefix, i)))
    else:
        lines.append('%s\t%s' % (prefix.rstrip('.'), report))
    return lines


def format_report(report, output_format='json'):
    if output_format == 'table':
        return '\n'.join(to_table(report))
    return to_json(report)


def print_progress(message):
    """Print a progress message to standard error, keeping standard output for reports."""
    print(message, file=sys.stderr)
    sys.stderr.flush()


def emit_report(build_report, output_format='json', out=None):
    """Run build_report() and print its report, returning the process exit code.

    build_report must return a (report, exit_code) pair. Cap violations are mapped to EXIT_CAP_EXCEEDED, and any
    other ValueError (parse errors, disconnected graphs, bad parameters) to EXIT_INPUT_ERROR.
    """
    out = out or sys.stdout
    try:
        report, exit_code = build_report()
    except CapExceededError as e:
        print('Cap exceeded: %s' % e, file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except ValueError as e:
        print('%s' % e, file=sys.stderr)
        return EXIT_INPUT_ERROR
    out.write(format_report(report, output_format))
    out.write('\n')
    out.flush()
    return exit_code


def get_num_workers():
    """Return the number of worker processes: the KEMENY_THREADS environment variable, or the CPU count."""
    value = os.environ.get('KEMENY_THREADS')
    if value is None:
        return cpu_count()
    try:
        num_workers = int(value)
    except ValueError:
        raise ValueError('KEMENY_THREADS must be an integer (got %r)' % value)
    if num_workers < 1:
        raise ValueError('KEMENY_THREADS must be positive (got %s)' % num_workers)
    return num_workers


def parallel_map(func, jobs, num_workers=1):
    """Map func over jobs, in a process pool if num_workers > 1. Results are always in job order."""
    jobs = list(jobs)
    if num_workers <= 1 or len(jobs) <= 1:
        return [func(job) for job in jobs]
    pool = Pool(min(num_workers, len(jobs)))
    try:
        return pool.map(func, jobs)
    finally:
        pool.close()
        pool.join()
