#!/usr/bin/env python3
import numpy as np
import pytest

from navesolve.base import NaveProblem
from navesolve.problems import make_affine, make_example_r3


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def r3_b1():
    return make_example_r3('b1')


@pytest.fixture
def affine_2d():
    '''2x2 AVE with solution x* = (1, -2)'''
    A = np.array([[4.0, -1.0], [-1.0, 4.0]])
    x_star = np.array([1.0, -2.0])
    b = A @ x_star - np.abs(x_star)
    return make_affine(A, b, label='affine-2d', exact_solution=x_star)


@pytest.fixture
def cubic_1d():
    '''F(x) = x^3 + 3x in one dimension, no analytic Jacobian'''
    return NaveProblem(dim=1, f_eval=lambda x: x**3 + 3 * x, rhs=[2.0],
                       label='cubic')
