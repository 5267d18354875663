#!/usr/bin/env python3
"""
Matrix and vector text input/output
Author: navesolve developers

File format: the first line is `dims: r c` for a matrix
or `dims: d` for a vector, followed by whitespace-separated
rows of numbers. Lines starting with '#' are ignored.
"""
import os
import numpy as np

from .core import as_matrix, as_vector
from .errors import InvalidInput


def _parse_dims(line, fname):
    key, _, rest = line.partition(':')
    if key.strip().lower() != 'dims':
        raise InvalidInput("%s: expected a 'dims:' header, got %r"
                           % (fname, line))
    try:
        dims = tuple(int(tok) for tok in rest.split())
    except ValueError:
        raise InvalidInput("%s: malformed dims header %r" % (fname, line))
    if len(dims) not in (1, 2) or min(dims) < 1:
        raise InvalidInput("%s: dims must be 'd' or 'r c' with positive "
                           "entries, got %r" % (fname, line))
    return dims


def read_matrix(fname, verbose=False):
    '''Read a matrix or vector from a text file
       ----------------------------------------
       Parameters
       ----------
       fname : string
           Path to a file in the `dims:` text format
       verbose : bool
           If `True` print the shape that was read

       Returns
       -------
       arr : np.array
           2-D array for `dims: r c`, 1-D array for `dims: d`
    '''
    with open(fname, 'r') as fh:
        lines = [ln.strip() for ln in fh
                 if ln.strip() and not ln.lstrip().startswith('#')]
    if not lines:
        raise InvalidInput("%s: empty file" % fname)
    dims = _parse_dims(lines[0], fname)
    try:
        values = np.array([float(tok) for ln in lines[1:] for tok in ln.split()])
    except ValueError as err:
        raise InvalidInput("%s: %s" % (fname, err))
    if values.size != int(np.prod(dims)):
        raise InvalidInput("%s: header announces %s but %d entries follow"
                           % (fname, dims, values.size))
    if len(dims) == 1:
        arr = as_vector(values, os.path.basename(fname))
    else:
        arr = as_matrix(values.reshape(dims), os.path.basename(fname))
    if verbose:
        print("Read array of shape %s from %s" % (arr.shape, fname))
    return arr


def write_matrix(arr, fname, fmt='%.17g'):
    '''Write a matrix or vector in the `dims:` text format

       Parameters
       ----------
       arr : array-like
           1-D or 2-D array
       fname : string
           Output path
       fmt : string
           Number format, full double precision by default
    '''
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim == 1:
        header = "dims: %d" % arr.size
        rows = [arr]
    elif arr.ndim == 2:
        header = "dims: %d %d" % arr.shape
        rows = arr
    else:
        raise InvalidInput("only vectors and matrices can be written")
    with open(fname, 'w') as fh:
        fh.write(header + '\n')
        for row in rows:
            fh.write(' '.join(fmt % v for v in row) + '\n')
