#!/usr/bin/env python3
from .core import NaveProblem, SplitPair, split, merge
from .core import nave_residual, fd_jacobian, as_vector, as_matrix
from .core import is_invertible, is_singular, singular_values
from .utils import read_matrix, write_matrix
from .errors import NaveError, InvalidInput, EvaluationFailure
from .errors import DomainError, DegenerateDerivative, SizeLimit
from .errors import ProbeDegenerate, ConversionImpossible, InvalidSpec
from .errors import ConfigError, StudyAborted

__all__ = ['NaveProblem',
           'SplitPair',
           'split',
           'merge',
           'nave_residual',
           'fd_jacobian',
           'as_vector',
           'as_matrix',
           'is_invertible',
           'is_singular',
           'singular_values',
           'read_matrix',
           'write_matrix',
           # errors
           'NaveError',
           'InvalidInput',
           'EvaluationFailure',
           'DomainError',
           'DegenerateDerivative',
           'SizeLimit',
           'ProbeDegenerate',
           'ConversionImpossible',
           'InvalidSpec',
           'ConfigError',
           'StudyAborted']
