"""Seeded generators of random piecewise-polynomial data.

Everything is driven by a ``random.Random`` instance so that test corpora and
CLI sweeps are reproducible from a single integer seed.  The generators build
functions by jump construction: pick breakpoints, pick a leftmost segment,
then cross each breakpoint by adding a random jump polynomial vanishing to
order zero there — continuity holds by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .curves import TropicalCurve
from .poly import Polynomial
from .polyseg import PiecewiseFunction, piecewise
from .singular import entire_decomposition


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(
    rnd: random.Random, lo: int = -4, hi: int = 4, den: int = 4
) -> Fraction:
    """Uniform fraction p/q with p/q in [lo, hi] and q in 1..den."""
    q = rnd.randint(1, den)
    return Fraction(rnd.randint(lo * q, hi * q), q)


def _distinct_rationals(
    rnd: random.Random, count: int, lo: int = -4, hi: int = 4, den: int = 4
) -> list[Fraction]:
    seen: set[Fraction] = set()
    while len(seen) < count:
        seen.add(random_rational(rnd, lo, hi, den))
    return sorted(seen)


def random_function(
    rnd: random.Random,
    degree: int = 3,
    max_breaks: int = 5,
    window: tuple[int, int] = (-4, 4),
) -> PiecewiseFunction:
    """Continuous piecewise polynomial with random jumps at random breakpoints."""
    k = rnd.randint(0, max_breaks)
    bps = _distinct_rationals(rnd, k, window[0], window[1])
    segs = [[random_rational(rnd) for _ in range(degree + 1)]]
    for bp in bps:
        jump = Polynomial.zero()
        for j in range(1, degree + 1):
            t = random_rational(rnd, -2, 2)
            if t:
                jump = jump + Polynomial.from_coeffs((t,)) * Polynomial.from_coeffs(
                    (-bp, 1)
                ) ** j
        prev = Polynomial.from_coeffs(segs[-1])
        segs.append(list((prev + jump).coeffs) or [Fraction(0)])
    return piecewise(bps, segs)


def random_entire(
    rnd: random.Random,
    degree: int = 3,
    max_breaks: int = 4,
    window: tuple[int, int] = (-4, 4),
) -> PiecewiseFunction:
    """Pole-free function: the pole-compensated half of a random split."""
    f = random_function(rnd, degree, max_breaks, window)
    h, _ = entire_decomposition(f)
    return h


def random_gauge(rnd: random.Random, degree: int = 3) -> PiecewiseFunction:
    """Singularity-free global polynomial: constant plus odd powers."""
    coeffs = [random_rational(rnd)]
    for j in range(1, degree + 1):
        coeffs.append(random_rational(rnd) if j % 2 == 1 else Fraction(0))
    return piecewise([], [coeffs])


def random_well_defined(
    rnd: random.Random,
    degree: int = 3,
    max_breaks: int = 4,
    window: tuple[int, int] = (-4, 4),
) -> PiecewiseFunction:
    """Continuous function whose segments are single monomials plus constants."""
    k = rnd.randint(1, max_breaks)
    bps = _distinct_rationals(rnd, k, window[0], window[1])
    a = random_rational(rnd)
    p = rnd.randint(1, degree)
    c = random_rational(rnd)
    segs = [[c] + [Fraction(0)] * (p - 1) + [a]]
    for bp in bps:
        prev_val = Polynomial.from_coeffs(segs[-1])(bp)
        a = random_rational(rnd)
        p = rnd.randint(1, degree)
        c = prev_val - a * bp**p
        segs.append([c] + [Fraction(0)] * (p - 1) + [a])
    return piecewise(bps, segs)


def random_linear_curve(
    rnd: random.Random,
    arity: int = 2,
    max_roots: int = 6,
    window: tuple[int, int] = (-4, 4),
) -> TropicalCurve:
    """Curve of convex piecewise-linear components (each root a slope jump)."""
    comps = []
    for _ in range(arity):
        k = rnd.randint(1, max_roots)
        bps = _distinct_rationals(rnd, k, window[0], window[1])
        slope = random_rational(rnd, -3, 0)
        intercept = random_rational(rnd)
        segs = [[intercept, slope]]
        for bp in bps:
            prev = Polynomial.from_coeffs(segs[-1])
            slope = slope + abs(random_rational(rnd, 0, 2)) + Fraction(1, 4)
            segs.append([prev(bp) - slope * bp, slope])
        comps.append(piecewise(bps, segs))
    return TropicalCurve(tuple(comps))


def random_radius(rnd: random.Random, lo=Fraction(1, 2), hi=Fraction(6)) -> Fraction:
    span = hi - lo
    return lo + span * Fraction(rnd.randint(0, 64), 64)


def random_interior_point(rnd: random.Random, f: PiecewiseFunction, r) -> Fraction:
    """A rational point strictly inside (-r, r), biased toward breakpoints."""
    r = Fraction(r)
    choices = [bp for bp in f.breakpoints if isinstance(bp, Fraction) and -r < bp < r]
    choices += [Fraction(0), r / 2, -r / 3]
    x = rnd.choice(choices)
    return x if -r < x < r else Fraction(0)
