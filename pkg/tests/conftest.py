"""Shared fixtures: the bundled demonstration functions, built from scratch.

Every fixture rebuilds its function through the public constructors rather
than loading the shipped manifests, so manifest parsing stays an independent
test subject.
"""

from fractions import Fraction as F

import pytest

from tropicalc.curves import TropicalPolynomialMap, curve
from tropicalc.polyseg import piecewise


@pytest.fixture(scope="session")
def showcase():
    """Five-segment cubic demo with singularities of orders 1..3 at -2..2."""
    return piecewise(
        [-2, -1, 1, 2],
        [[-40, -46, -17, -2], [4, 6, 2], [1, 2, 1], [5, -1], [3, 18, -15, 3]],
    )


@pytest.fixture(scope="session")
def sign_square():
    """sgn(x) * x^2: smooth at the origin despite the sign flip."""
    return piecewise([0], [[0, 0, -1], [0, 0, 1]])


@pytest.fixture(scope="session")
def parabola_train():
    """Concatenated unit arches: x(2m+1-x) shifted, downward on the right."""
    segs = []
    for m in range(-8, 8):
        if m >= 0:
            segs.append([-m * (m + 1), 2 * m + 1, -1])
        else:
            segs.append([m * (m + 1), -(2 * m + 1), 1])
    return piecewise(list(range(-7, 8)), segs)


def _staircase_odd(k_max):
    bps = [2 * k - 1 for k in range(1, k_max + 1)]
    segs = [[0]] + [[-(2 * k * k - 1), 2 * k - 1] for k in range(1, k_max + 1)]
    return piecewise(bps, segs)


def _staircase_even(k_max):
    bps = [2 * k for k in range(1, k_max + 1)]
    segs = [[0]] + [[-2 * k * (k + 1), 2 * k] for k in range(1, k_max + 1)]
    return piecewise(bps, segs)


def _staircase_envelope(k_max):
    bps = [2 * k for k in range(0, k_max + 1)]
    segs = [[F(-1, 2)]] + [
        [-2 * k * (2 * k + 2) - F(1, 2), 4 * k + 2] for k in range(0, k_max + 1)
    ]
    return piecewise(bps, segs)


@pytest.fixture(scope="session")
def staircase_odd():
    return _staircase_odd(21)


@pytest.fixture(scope="session")
def staircase_even():
    return _staircase_even(21)


@pytest.fixture(scope="session")
def envelope_component():
    return _staircase_envelope(5)


@pytest.fixture(scope="session")
def mirror_curve(sign_square):
    from tropicalc.polyseg import scale

    return curve([sign_square, scale(sign_square, -1)])


@pytest.fixture(scope="session")
def envelope_curve(sign_square, envelope_component):
    return curve([sign_square, envelope_component])


@pytest.fixture(scope="session")
def max_of_two():
    """The degree-1 map (x0, x1) -> x0 (+) x1 with zero coefficients."""
    return TropicalPolynomialMap((((1, 0), 0), ((0, 1), 0)), 1)
