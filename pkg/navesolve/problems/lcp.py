#!/usr/bin/env python3
"""
Affine NAVE instances and conversions between absolute
value equations and linear complementarity problems
Author: navesolve developers
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg as la

from ..base.core import NaveProblem, as_matrix, as_vector, is_invertible
from ..base.errors import ConversionImpossible


@dataclass
class LcpConversion:
    '''LCP forms of the AVE Ax - |x| = b

       With x = y - z, a solution satisfies z = M y + q and,
       mirrored, y = M_mirror z + q_mirror. A form is `None`
       when its inverse does not exist.
    '''
    M: Optional[np.ndarray]
    q: Optional[np.ndarray]
    M_mirror: Optional[np.ndarray]
    q_mirror: Optional[np.ndarray]

    @property
    def has_direct(self):
        return self.M is not None

    @property
    def has_mirror(self):
        return self.M_mirror is not None


def make_affine(A, b=None, label='affine', exact_solution=None):
    '''NAVE with F(x) = Ax, i.e. the AVE Ax - |x| = b'''
    A = as_matrix(A, square=True)
    return NaveProblem(dim=A.shape[0], f_eval=lambda x: A @ x,
                       jac_eval=lambda x: A, rhs=b, label=label,
                       exact_solution=exact_solution, meta={'A': A})


def ave_to_lcp(A, b):
    '''Convert the AVE Ax - |x| = b into an LCP
       ----------------------------------------
       Parameters
       ----------
       A : array-like
           Square d x d matrix
       b : array-like
           Right-hand side

       Returns
       -------
       conv : LcpConversion
           M = (A+I)^-1 (A-I), q = -(A+I)^-1 b and the mirror
           M~ = (A-I)^-1 (A+I), q~ = (A-I)^-1 b
    '''
    A = as_matrix(A, square=True)
    b = as_vector(b, 'b', A.shape[0])
    eye = np.eye(A.shape[0])
    M = q = M_mirror = q_mirror = None
    if is_invertible(A + eye):
        lu = la.lu_factor(A + eye)
        M = la.lu_solve(lu, A - eye)
        q = -la.lu_solve(lu, b)
    if is_invertible(A - eye):
        lu = la.lu_factor(A - eye)
        M_mirror = la.lu_solve(lu, A + eye)
        q_mirror = la.lu_solve(lu, b)
    if M is None and M_mirror is None:
        raise ConversionImpossible("both A + I and A - I are singular")
    return LcpConversion(M, q, M_mirror, q_mirror)


def lcp_to_nave(M, q, label='lcp'):
    '''Write the LCP z = My + q, y, z >= 0, yz = 0 as a NAVE
       -----------------------------------------------------
       With y = (x + |x|)/2 and z = (|x| - x)/2 the LCP becomes
       F(x) - |x| = 0 for F(x) = (I - M)^-1 ((I + M) x + 2q).

       Parameters
       ----------
       M : array-like
           Square matrix with I - M invertible
       q : array-like

       Returns
       -------
       p : NaveProblem
    '''
    M = as_matrix(M, 'M', square=True)
    d = M.shape[0]
    q = as_vector(q, 'q', d)
    eye = np.eye(d)
    if not is_invertible(eye - M):
        raise ConversionImpossible("I - M is singular")
    lu = la.lu_factor(eye - M)
    J = la.lu_solve(lu, eye + M)
    c = la.lu_solve(lu, 2 * q)
    return NaveProblem(dim=d, f_eval=lambda x: J @ x + c,
                       jac_eval=lambda x: J, label=label,
                       meta={'M': M, 'q': q})
