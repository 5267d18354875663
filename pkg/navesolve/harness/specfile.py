#!/usr/bin/env python3
"""
Line-oriented experiment configuration files

Blocks of `key=value` lines are separated by blank lines,
'#' starts a comment. Example::

    label=r3 b1
    problem=r3:b1
    methods=theta1,theta2
    tol=1e-10

Author: navesolve developers
"""
from ..base.errors import ConfigError
from .experiments import ExperimentSpec

SPEC_KEYS = {'label': str, 'problem': str, 'methods': str, 'tol': float,
             'max_iter': int, 'eps': float, 'seed': int, 'repetitions': int}
RIDGE_KEYS = {'lam': float, 'mu': float, 'm': int, 'd': int}


def read_blocks(fname):
    '''Parse a file into a list of dicts of raw string values'''
    blocks, current = [], {}
    with open(fname, 'r') as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                if current:
                    blocks.append(current)
                    current = {}
                continue
            key, sep, value = line.partition('=')
            if not sep or not key.strip():
                raise ConfigError("%s:%d: expected key=value, got %r"
                                  % (fname, lineno, line))
            key = key.strip()
            if key in current:
                raise ConfigError("%s:%d: duplicate key %r"
                                  % (fname, lineno, key))
            current[key] = (value.strip(), lineno)
    if current:
        blocks.append(current)
    return blocks


def _convert(fname, block, keys):
    out = {}
    for key, (value, lineno) in block.items():
        if key not in keys:
            raise ConfigError("%s:%d: unknown key %r, expected one of %s"
                              % (fname, lineno, key, sorted(keys)))
        try:
            out[key] = keys[key](value)
        except ValueError:
            raise ConfigError("%s:%d: %r is not a valid %s for %r"
                              % (fname, lineno, value, keys[key].__name__,
                                 key))
    return out


def parse_spec_file(fname):
    '''Read ExperimentSpec blocks
       --------------------------
       Parameters
       ----------
       fname : string

       Returns
       -------
       specs : list of ExperimentSpec
           Validated; any error raises ConfigError before a
           single solve can start
    '''
    specs = []
    for block in read_blocks(fname):
        values = _convert(fname, block, SPEC_KEYS)
        if 'problem' not in values:
            raise ConfigError("%s: block without 'problem' key" % fname)
        values['problem_id'] = values.pop('problem')
        specs.append(ExperimentSpec(**values).validate())
    return specs


def parse_ridge_grid(fname):
    '''Read a ridge grid: blocks with lam, mu, m, d

       Returns
       -------
       grid : list of ((lam, mu), (m, d))
    '''
    grid = []
    for block in read_blocks(fname):
        values = _convert(fname, block, RIDGE_KEYS)
        missing = set(RIDGE_KEYS) - set(values)
        if missing:
            raise ConfigError("%s: ridge block misses %s"
                              % (fname, sorted(missing)))
        grid.append(((values['lam'], values['mu']),
                     (values['m'], values['d'])))
    return grid
