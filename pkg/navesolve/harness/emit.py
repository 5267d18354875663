#!/usr/bin/env python3
"""
CSV / Markdown emission and re-ingestion of result tables
and plot-ready data files
Author: navesolve developers
"""
import os

import numpy as np
import pandas as pd

from ..base.errors import ConfigError
from .experiments import ConvergenceStudy, TableRow

CSV_COLUMNS = ['label', 'method', 'error', 'iterations', 'time_ms', 'status']


def rows_to_frame(rows):
    '''Long-format DataFrame with the CSV columns'''
    return pd.DataFrame([[getattr(r, c) for c in CSV_COLUMNS] for r in rows],
                        columns=CSV_COLUMNS)


def rows_to_markdown(rows):
    '''Wide table: one line per label, Error / Iterations /
       Time (x1e-2 s) column groups with one column per method'''
    df = rows_to_frame(rows)
    if df.empty:
        return ''
    df['time'] = df['time_ms'] / 10.0
    labels = list(dict.fromkeys(df['label']))
    methods = list(dict.fromkeys(df['method']))
    wide = df.pivot(index='label', columns='method',
                    values=['error', 'iterations', 'time'])
    wide = wide.reindex(index=labels)
    out = pd.DataFrame(index=wide.index)
    for group, name, fmt in (('error', 'Error', '%.2e'),
                             ('iterations', 'Iterations', '%d'),
                             ('time', 'Time (x1e-2 s)', '%.2f')):
        for m in methods:
            out['%s %s' % (name, m)] = [
                'NaN' if not np.isfinite(v) else fmt % v
                for v in wide[(group, m)]]
    return out.to_markdown()


def _write(path, text):
    try:
        with open(path, 'w') as fh:
            fh.write(text)
    except OSError as err:
        raise OSError("cannot write %s: %s" % (path, err)) from err


def emit(obj, fmt, path):
    '''Write a table, a convergence study or plot data
       -----------------------------------------------
       Parameters
       ----------
       obj : list of TableRow, ConvergenceStudy or DataFrame
           Tables are written with the columns
           label,method,error,iterations,time_ms,status (csv)
           or as a wide Markdown table (md); studies as `h,error`;
           DataFrames (coefficient paths, timings) as they are
       fmt : string
           'csv' or 'md'
       path : string
           Output file

       Returns
       -------
       path : string
    '''
    if fmt not in ('csv', 'md'):
        raise ConfigError("format must be 'csv' or 'md', got %r" % fmt)
    if isinstance(obj, ConvergenceStudy):
        df = obj.to_frame()
        text = df.to_csv(index=False) if fmt == 'csv' else \
            df.to_markdown(index=False)
    elif isinstance(obj, pd.DataFrame):
        keep_index = obj.index.name is not None
        text = obj.to_csv(index=keep_index, na_rep='NaN') if fmt == 'csv' \
            else obj.to_markdown(index=keep_index)
    else:
        rows = list(obj)
        if fmt == 'csv':
            text = rows_to_frame(rows).to_csv(index=False, na_rep='NaN')
        else:
            text = rows_to_markdown(rows)
    _write(path, text if text.endswith('\n') else text + '\n')
    return path


def ingest(path):
    '''Read a CSV written by `emit` back into TableRow values'''
    if not os.path.exists(path):
        raise OSError("no such results file: %s" % path)
    df = pd.read_csv(path, float_precision='round_trip',
                     na_values=['NaN'], keep_default_na=False)
    missing = set(CSV_COLUMNS) - set(df.columns)
    if missing:
        raise ConfigError("%s: missing columns %s" % (path, sorted(missing)))
    return [TableRow(label=str(r.label), method=str(r.method),
                     error=float(r.error), iterations=int(r.iterations),
                     time_ms=float(r.time_ms), status=str(r.status))
            for r in df.itertuples(index=False)]
