"""Jump analysis of piecewise-polynomial functions.

At a point x, the order-j jump weight is

    omega_j(x) = [sgn(x+)^(j+1) * f^(j)(x+) - sgn(x-)^(j+1) * f^(j)(x-)] / j!

with the convention sgn(0+) = +1, sgn(0-) = -1, so away from the origin
omega_j = sgn(x)^(j+1) * tau_j where tau_j is the plain one-sided jet jump,
while at the origin even orders probe the *sum* of the one-sided derivatives.
A positive omega_j marks an order-j root, a negative one an order-j pole,
and |omega_j| is its multiplicity.  The origin is always probed: a function
can be smooth there and still carry an even-order root or pole (e.g. the
global parabola -x^2 hides an order-2 pole of multiplicity 2 at 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptyWindow
from .numeric import (
    AlgebraicNumber,
    RootValue,
    Scalar,
    compare,
    scalar_eq,
    scalar_sign,
    sort_scalars,
    value_sign,
)
from .poly import Polynomial, frac
from .polyseg import (
    MINUS,
    PLUS,
    PiecewiseFunction,
    evaluate_jet,
    linear_combine,
    piecewise,
)

ROOT = "root"
POLE = "pole"


@dataclass(frozen=True)
class JumpProfile:
    """Order-indexed jump data at one point; entry k is order j = k+1."""

    location: Scalar
    omega: tuple
    tau: tuple

    @property
    def max_order(self) -> int:
        return len(self.omega)

    def omega_of(self, j: int):
        return self.omega[j - 1] if j <= len(self.omega) else Fraction(0)

    def tau_of(self, j: int):
        return self.tau[j - 1] if j <= len(self.tau) else Fraction(0)

    def entries(self) -> list[tuple[int, object]]:
        """(order, omega) for every nonzero omega, ascending order."""
        return [
            (j, w) for j, w in enumerate(self.omega, start=1) if value_sign(w) != 0
        ]

    @property
    def is_singular(self) -> bool:
        return bool(self.entries())


def omega_at(
    f: PiecewiseFunction, x, max_order: int | None = None
) -> JumpProfile:
    """Jump profile of f at x for orders 1..max_order (default: degree bound)."""
    from .polyseg import _as_scalar

    x = _as_scalar(x)
    n = max_order if max_order is not None else max(1, f.degree_bound)
    jet_plus = evaluate_jet(f, x, PLUS, n)
    jet_minus = evaluate_jet(f, x, MINUS, n)
    s = scalar_sign(x)
    sgn_plus = s if s != 0 else 1
    sgn_minus = s if s != 0 else -1
    def collapse(v):
        if isinstance(v, RootValue) and v.is_rational:
            return v.as_fraction()
        return v

    omega = []
    tau = []
    for j in range(1, n + 1):
        tau.append(collapse(jet_plus[j] - jet_minus[j]))
        omega.append(
            collapse(
                sgn_plus ** (j + 1) * jet_plus[j]
                - sgn_minus ** (j + 1) * jet_minus[j]
            )
        )
    return JumpProfile(x, tuple(omega), tuple(tau))


# ---------------------------------------------------------------------------
# singularity tables


@dataclass(frozen=True)
class Singularity:
    location: Scalar
    order: int
    kind: str
    multiplicity: object  # positive Fraction or RootValue

    def as_row(self) -> tuple[str, int, str, str]:
        return (
            _format_scalar(self.location),
            self.order,
            self.kind,
            _format_value(self.multiplicity),
        )


def _format_scalar(s) -> str:
    if isinstance(s, AlgebraicNumber):
        return "~" + s.decimal(12)
    return str(s)


def _format_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return "~" + _decimal_of_value(v)


def _decimal_of_value(v) -> str:
    from .numeric import decimal_string, value_enclosure

    lo, hi = value_enclosure(v, Fraction(1, 10**15))
    return decimal_string((lo + hi) / 2, 12)


@dataclass(frozen=True)
class SingularityTable:
    rows: tuple[Singularity, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def select(self, order: int | None = None, kind: str | None = None):
        return [
            s
            for s in self.rows
            if (order is None or s.order == order) and (kind is None or s.kind == kind)
        ]

    def poles(self, order: int | None = None):
        return self.select(order, POLE)

    def roots(self, order: int | None = None):
        return self.select(order, ROOT)

    def max_order(self) -> int:
        return max((s.order for s in self.rows), default=0)

    def to_csv(self) -> str:
        lines = ["location,order,kind,multiplicity"]
        for s in self.rows:
            loc, order, kind, mult = s.as_row()
            lines.append(f"{loc},{order},{kind},{mult}")
        return "\n".join(lines) + "\n"

    def to_json_grid(self) -> dict:
        """Grid shaped like a singularity summary table: rows = (order, kind)."""
        locations: list[Scalar] = []
        for s in self.rows:
            if not any(scalar_eq(s.location, seen) for seen in locations):
                locations.append(s.location)
        locations = sort_scalars(locations)
        row_keys = sorted({(s.order, s.kind) for s in self.rows})
        grid_rows = []
        for order, kind in row_keys:
            cells: list[str | None] = [None] * len(locations)
            for s in self.select(order, kind):
                for idx, loc in enumerate(locations):
                    if scalar_eq(loc, s.location):
                        cells[idx] = _format_value(s.multiplicity)
                        break
            grid_rows.append({"order": order, "kind": kind, "cells": cells})
        return {
            "locations": [_format_scalar(x) for x in locations],
            "rows": grid_rows,
        }


def _candidate_points(f: PiecewiseFunction) -> list[Scalar]:
    candidates: list[Scalar] = list(f.breakpoints)
    if not any(scalar_sign(bp) == 0 for bp in candidates):
        candidates.append(Fraction(0))  # the origin is always singularity-eligible
    return sort_scalars(candidates)


def scan(
    f: PiecewiseFunction,
    window: tuple | None = None,
    *,
    closed_left: bool = False,
    closed_right: bool = False,
) -> SingularityTable:
    """All singularities of f (inside the window, open by default)."""
    candidates = _candidate_points(f)
    if window is not None:
        from .polyseg import _as_scalar

        lo, hi = _as_scalar(window[0]), _as_scalar(window[1])
        if compare(lo, hi) >= 0:
            raise EmptyWindow(f"scan window ({lo}, {hi}) is empty")
        kept = []
        for x in candidates:
            cl = compare(lo, x)
            ch = compare(x, hi)
            if (cl < 0 or (cl == 0 and closed_left)) and (
                ch < 0 or (ch == 0 and closed_right)
            ):
                kept.append(x)
        candidates = kept
    rows: list[Singularity] = []
    for x in candidates:
        profile = omega_at(f, x)
        for order, w in profile.entries():
            sign = value_sign(w)
            rows.append(
                Singularity(x, order, ROOT if sign > 0 else POLE, abs(w))
            )
    return SingularityTable(tuple(rows))


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    entire: bool
    nowhere_vanishing_entire: bool
    well_defined: bool


def _segment_well_defined(p: Polynomial) -> bool:
    if p.degree <= 1:
        return True  # any affine piece passes
    nonzero = [(k, c) for k, c in enumerate(p.coeffs) if k >= 1 and c != 0]
    parities = {k % 2 for k, _ in nonzero}
    signs = {1 if c > 0 else -1 for _, c in nonzero}
    return len(parities) <= 1 and len(signs) <= 1


def classify(f: PiecewiseFunction) -> Classification:
    table = scan(f)
    entire = not table.poles()
    nowhere = entire and not table.roots()
    well = all(_segment_well_defined(p) for p in f.segments)
    return Classification(entire, nowhere, well)


# ---------------------------------------------------------------------------
# jump matrices


@dataclass(frozen=True)
class JumpMatrix:
    """Rows/columns indexed by orders 1..n; entries[j-1][k-1] = (j,k) entry."""

    n: int
    variant: str
    entries: tuple[tuple[Fraction, ...], ...]

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.n:
            raise ValueError(f"vector of length {len(vec)} against order {self.n}")
        return [
            sum((row[k] * frac(vec[k]) for k in range(self.n)), Fraction(0))
            for row in self.entries
        ]

    def solve(self, vec: Sequence[Fraction]) -> list[Fraction]:
        """Solve M y = vec by back substitution (M is upper triangular, ±1 diagonal)."""
        if len(vec) != self.n:
            raise ValueError(f"vector of length {len(vec)} against order {self.n}")
        y = [Fraction(0)] * self.n
        for j in range(self.n - 1, -1, -1):
            acc = frac(vec[j])
            for k in range(j + 1, self.n):
                acc -= self.entries[j][k] * y[k]
            y[j] = acc / self.entries[j][j]
        return y


def jump_matrix(x0, n: int, variant: str = "C") -> JumpMatrix:
    """C_n(x0), or its sign-modified variants D_n(x0^+)/D_n(x0^-).

    C maps origin-basis coefficients (a_1..a_n) to scaled one-sided jets
    (p^(j)(x0)/j!)_j; the D variants scale row j by sgn(x0^+-)^(j+1).
    """
    if n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n}")
    if variant not in ("C", "D_plus", "D_minus"):
        raise ValueError(f"unknown variant {variant!r}")
    x0 = frac(x0)
    rows = []
    s = (x0 > 0) - (x0 < 0)
    for j in range(1, n + 1):
        if variant == "C":
            row_sign = 1
        else:
            side = s if s != 0 else (1 if variant == "D_plus" else -1)
            row_sign = side ** (j + 1)
        rows.append(
            tuple(
                Fraction(row_sign * math.comb(k, j)) * x0 ** (k - j) if k >= j else Fraction(0)
                for k in range(1, n + 1)
            )
        )
    return JumpMatrix(n, variant, tuple(rows))


# ---------------------------------------------------------------------------
# the constructive pole-killing decomposition


def entire_decomposition(
    f: PiecewiseFunction, seed: Sequence | None = None
) -> tuple[PiecewiseFunction, PiecewiseFunction]:
    """Split f = h (-) g with h, g entire and g's roots exactly at f's poles.

    g is built outward from the origin: its first positive segment is the seed
    polynomial (default zero), each pole of f is crossed by adding the unique
    coefficient jump that plants the compensating root, and the negative side
    starts from the origin mirror rule b(-1,j) = (-1)^(j+1) (b(1,j) - w_j(0)).
    Returns (h, g) with h = f + g pointwise, so f = h - g exactly.

    Only rational breakpoints are supported (the recursion solves rational
    triangular systems); raises ValueError otherwise.
    """
    if any(isinstance(bp, AlgebraicNumber) for bp in f.breakpoints):
        raise ValueError("decomposition requires rational breakpoints")
    n = max(1, f.degree_bound)
    if seed is None:
        seed_coeffs = [Fraction(0)] * (n + 1)
    else:
        seed_coeffs = [frac(c) for c in seed]
        if len(seed_coeffs) < n + 1:
            seed_coeffs += [Fraction(0)] * (n + 1 - len(seed_coeffs))
        elif len(seed_coeffs) > n + 1:
            raise ValueError(
                f"seed has {len(seed_coeffs)} coefficients, function order is {n}"
            )

    def compensation(x) -> list[Fraction] | None:
        w = omega_at(f, x, n).omega
        comp = [(-wj if wj < 0 else Fraction(0)) for wj in w]
        return comp if any(comp) else None

    points = _candidate_points(f)  # rational, sorted, includes 0
    positive = [x for x in points if x > 0]
    negative = [x for x in points if x < 0]

    def with_constant(high: list[Fraction], const: Fraction) -> Polynomial:
        return Polynomial.from_coeffs([const, *high])

    # positive side, origin outward
    pos_segs = [with_constant(seed_coeffs[1:], seed_coeffs[0])]
    pos_bps: list[Fraction] = []
    cur = seed_coeffs[1:]
    for x in positive:
        comp = compensation(x)
        if comp is None:
            continue
        jump = jump_matrix(x, n, "C").solve(comp)
        nxt = [c + d for c, d in zip(cur, jump)]
        const = pos_segs[-1](x) - sum(
            (c * x**k for k, c in enumerate(nxt, start=1)), Fraction(0)
        )
        pos_bps.append(x)
        pos_segs.append(with_constant(nxt, const))
        cur = nxt

    # cross the origin
    w0 = omega_at(f, Fraction(0), n).omega
    comp0 = [(-wj if wj < 0 else Fraction(0)) for wj in w0]
    left_high = [
        Fraction(-1) ** (j + 1) * (seed_coeffs[j] - comp0[j - 1])
        for j in range(1, n + 1)
    ]
    left_const = seed_coeffs[0]

    # negative side, origin outward (rightmost negative pole first)
    neg_segs = [with_constant(left_high, left_const)]
    neg_bps: list[Fraction] = []
    cur = left_high
    for x in reversed(negative):
        comp = compensation(x)
        if comp is None:
            continue
        jump = jump_matrix(x, n, "D_minus").solve(comp)
        # crossing leftward: left coefficients = right coefficients - jump
        nxt = [c - d for c, d in zip(cur, jump)]
        const = neg_segs[0](x) - sum(
            (c * x**k for k, c in enumerate(nxt, start=1)), Fraction(0)
        )
        neg_bps.insert(0, x)
        neg_segs.insert(0, with_constant(nxt, const))
        cur = nxt

    g = piecewise([*neg_bps, Fraction(0), *pos_bps], [*neg_segs, *pos_segs])
    h = linear_combine(f, g, 1, 1)
    return h, g
