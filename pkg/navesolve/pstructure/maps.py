#!/usr/bin/env python3
"""
Sampled P0-map verification of NAVE preconditions
Author: navesolve developers
"""
import logging
from enum import Enum

import numpy as np

from .matrices import P0Kind, P0Verdict, is_p0_matrix_exact

logger = logging.getLogger(__name__)


class Shift(Enum):
    '''Which shifted Jacobian is tested'''
    FminusI = 'FminusI'
    negFplusI = 'negFplusI'


def shifted_jacobian(p, x, shift):
    J = p.jacobian(x)
    eye = np.eye(p.dim)
    if Shift(shift) is Shift.FminusI:
        return J - eye
    return -J - eye


def p0_map_sample_check(p, shift, box=(-1.0, 1.0), samples=100, seed=None):
    '''Sampled P0-map check of F - I or -(F + I)
       -----------------------------------------
       A differentiable map is P0 when its Jacobian is a P0-matrix
       everywhere. The Jacobian of the shifted map is tested by
       exact minor enumeration at uniform samples from a box.

       Parameters
       ----------
       p : NaveProblem
           Problem with dim <= 16
       shift : Shift or string
           'FminusI' tests grad F - I, 'negFplusI' tests -grad F - I
       box : tuple
           (lo, hi) bounds applied to every coordinate
       samples : int
       seed : int (optional)

       Returns
       -------
       verdict : P0Verdict
           RefutedP0 with the violating index set and the sample
           point, otherwise ProbablyP0
    '''
    shift = Shift(shift)
    lo, hi = box
    rng = np.random.default_rng(seed)
    checked = 0
    for _ in range(samples):
        x = rng.uniform(lo, hi, p.dim)
        verdict = is_p0_matrix_exact(shifted_jacobian(p, x, shift))
        checked += verdict.minors_checked
        if verdict.kind is P0Kind.ExactNotP0:
            logger.info("%s: %s is not P0 at sample %s", p.label,
                        shift.value, x)
            return P0Verdict(P0Kind.RefutedP0,
                             certificate=verdict.certificate,
                             minors_checked=checked, witness_point=x)
    return P0Verdict(P0Kind.ProbablyP0, minors_checked=checked)
