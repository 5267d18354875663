#!/usr/bin/env python3
"""
Exception hierarchy shared by all navesolve sub-packages
Author: navesolve developers
"""


class NaveError(Exception):
    '''Base class of every error raised by navesolve'''


class InvalidInput(NaveError, ValueError):
    '''Non-finite or mis-shaped vector / matrix input'''


class EvaluationFailure(NaveError, ArithmeticError):
    '''F or its Jacobian returned the wrong shape or non-finite values'''


class DomainError(NaveError, ValueError):
    '''Argument outside the domain of a smoothing kernel function'''


class DegenerateDerivative(NaveError, ArithmeticError):
    '''Vanishing denominator in the partial derivatives of G_r'''


class SizeLimit(NaveError, ValueError):
    '''Matrix too large for exhaustive minor enumeration'''


class ProbeDegenerate(NaveError, ArithmeticError):
    '''A refutation certificate cannot drive the constructive probe'''


class ConversionImpossible(NaveError, ValueError):
    '''Neither A + I nor A - I is invertible'''


class InvalidSpec(NaveError, ValueError):
    '''Malformed problem specification or problem id'''


class ConfigError(NaveError, ValueError):
    '''Invalid solver, baseline or experiment configuration'''


class StudyAborted(NaveError, RuntimeError):
    '''A convergence study hit a non-converged solve

       Attributes
       ----------
       h : float
           Mesh width of the offending solve
       report : SolveReport
           The report of the failed solve
    '''
    def __init__(self, message, h=None, report=None):
        super().__init__(message)
        self.h = h
        self.report = report
