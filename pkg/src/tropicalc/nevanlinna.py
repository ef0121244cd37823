"""Value-distribution functionals for piecewise-polynomial functions.

For a function of degree bound n and a radius r > 0:

* proximity       m(r, f)    = (max(f(r), 0) + max(f(-r), 0)) / 2
* counting        N_j(r, f)  = 1/2 * sum |omega_j(z)| * (r - |z|)^j over the
                               order-j poles z inside (-r, r)
* characteristic  T(r, f)    = m(r, f) + sum_{j=1..n} N_j(r, f)

plus the reconstruction identities tying them together: the Jensen formula
(boundary mean minus root sum plus pole sum recovers f(0)) and the full
disk-interior Poisson-Jensen reconstruction of f(x).  Everything is exact:
rational inputs give rational outputs and identically-zero residuals; data
with algebraic breakpoints produces exact symbolic sums that can be enclosed
to any requested width.

Radius profiles represent m, N_j, and T as closed-form piecewise polynomials
in r, enabling exact shape checks (non-negative / non-decreasing / convex).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadWindow,
    NonPositiveRadius,
    NonPositiveValues,
    NotWellDefined,
    PointOutsideDisk,
    RadiusBelowThreshold,
    WindowOutOfRange,
    ZeroShift,
)
from .numeric import (
    AlgebraicNumber,
    ExactValue,
    RootValue,
    Scalar,
    compare,
    exact_sum,
    poly_sign_at,
    real_roots_in,
    root_value,
    scalar_abs,
    scalar_eq,
    scalar_sign,
    separators,
    sign_of,
    value_enclosure,
    value_float,
    value_sign,
)
from .poly import Polynomial, frac
from .polyseg import (
    MINUS,
    PLUS,
    PiecewiseFunction,
    _index_left_of,
    evaluate,
    evaluate_jet,
    governing_segment,
    linear_combine,
    piecewise,
    plus_part,
    reflect,
    scale,
    shift,
)
from .singular import POLE, ROOT, classify, omega_at, scan

POLES_OF_F = "poles_of_f"
POLES_OF_NEG_F = "poles_of_neg_f"

RIGHT_TO_R = "right"
LEFT_TO_MINUS_R = "left"


def _positive_radius(r) -> Fraction:
    r = frac(r)
    if r <= 0:
        raise NonPositiveRadius(f"radius must be > 0, got {r}")
    return r


def _half(v):
    if isinstance(v, Fraction):
        return v / 2
    if isinstance(v, ExactValue):
        return v.scale(Fraction(1, 2))
    raise TypeError(f"cannot halve {v!r}")


def _clamp_nonneg(v: Fraction) -> Fraction:
    return v if v > 0 else Fraction(0)


# ---------------------------------------------------------------------------
# pointwise functionals


def proximity(f: PiecewiseFunction, r):
    """(f+(r) + f+(-r)) / 2 where f+ = max(f, 0)."""
    r = _positive_radius(r)
    return (_clamp_nonneg(evaluate(f, r)) + _clamp_nonneg(evaluate(f, -r))) / 2


def _disk_term(z: Scalar, weight, j: int, r: Fraction):
    """weight * (r - |z|)^j, exactly, for a rational or algebraic location."""
    if isinstance(z, Fraction):
        base = (r - abs(z)) ** j
        if isinstance(weight, Fraction):
            return weight * base
        return weight * base  # RootValue * Fraction
    s = scalar_sign(z)
    arm = Polynomial.from_coeffs((r, -1)) if s > 0 else Polynomial.from_coeffs((r, 1))
    rv = root_value(arm**j, z)
    return weight * rv if isinstance(weight, RootValue) else rv * weight


def counting(
    f: PiecewiseFunction,
    j: int,
    r,
    sub: tuple | None = None,
    sign: str = POLES_OF_F,
):
    """1/2 * sum |omega_j(z)| (r - |z|)^j over order-j poles of f (or of -f).

    `sub` restricts to a window (lo, hi[, closed_lo, closed_hi]) that must sit
    inside [-r, r]; the default window is the open disk (-r, r).
    """
    r = _positive_radius(r)
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"order j must be an integer >= 1, got {j!r}")
    if sign not in (POLES_OF_F, POLES_OF_NEG_F):
        raise ValueError(f"unknown sign selector {sign!r}")
    if sub is None:
        lo, hi = -r, r
        closed_lo = closed_hi = False
    else:
        lo, hi = sub[0], sub[1]
        closed_lo = bool(sub[2]) if len(sub) > 2 else False
        closed_hi = bool(sub[3]) if len(sub) > 3 else False
        if compare(lo, -r) < 0 or compare(hi, r) > 0:
            raise WindowOutOfRange(
                f"window [{lo}, {hi}] is not contained in [-{r}, {r}]"
            )
    table = scan(f, (lo, hi), closed_left=closed_lo, closed_right=closed_hi)
    rows = table.poles(j) if sign == POLES_OF_F else table.roots(j)
    terms = [_disk_term(s.location, s.multiplicity, j, r) for s in rows]
    return _half(exact_sum(terms))


def counting_oracle(
    f: PiecewiseFunction,
    j: int,
    r,
    mesh,
    sub: tuple | None = None,
    sign: str = POLES_OF_F,
) -> Fraction:
    """Riemann-sum rendition of the iterated-integral counting definition.

    The j-fold integral of the unintegrated counting function n_j over the
    simplex collapses to 1/2 * integral_0^r n_j(u) * j*(r-u)^(j-1) du; this
    evaluates that with a left-rule Riemann sum of the given mesh, entirely
    in exact rational arithmetic, and converges to `counting` as mesh -> 0.
    """
    r = _positive_radius(r)
    mesh = frac(mesh)
    if mesh <= 0:
        raise ValueError(f"mesh must be > 0, got {mesh}")
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"order j must be an integer >= 1, got {j!r}")
    if sub is None:
        window = (-r, r)
        flags = {}
    else:
        if compare(sub[0], -r) < 0 or compare(sub[1], r) > 0:
            raise WindowOutOfRange(
                f"window [{sub[0]}, {sub[1]}] is not contained in [-{r}, {r}]"
            )
        window = (sub[0], sub[1])
        flags = {
            "closed_left": bool(sub[2]) if len(sub) > 2 else False,
            "closed_right": bool(sub[3]) if len(sub) > 3 else False,
        }
    table = scan(f, window, **flags)
    rows = table.poles(j) if sign == POLES_OF_F else table.roots(j)
    thresholds: list[tuple[Fraction, Fraction]] = []
    for s in rows:
        z, w = s.location, s.multiplicity
        if isinstance(z, Fraction):
            magnitude = abs(z)
        else:
            lo_, hi_ = scalar_abs(z).refine_to(mesh / 8)
            magnitude = (lo_ + hi_) / 2
        if not isinstance(w, Fraction):
            lo_, hi_ = w.enclosure(mesh / 8)
            w = (lo_ + hi_) / 2
        thresholds.append((magnitude, w))
    thresholds.sort(key=lambda t: t[0])
    total = Fraction(0)
    cumulative = Fraction(0)
    pointer = 0
    steps = int(r / mesh) + (0 if (r / mesh).denominator == 1 else 1)
    for i in range(steps):
        u = i * mesh
        while pointer < len(thresholds) and thresholds[pointer][0] < u:
            cumulative += thresholds[pointer][1]
            pointer += 1
        if cumulative:
            total += cumulative * j * (r - u) ** (j - 1) * mesh
    return total / 2


def characteristic(f: PiecewiseFunction, r):
    """T(r, f) = m(r, f) + sum over orders of N_j(r, f)."""
    r = _positive_radius(r)
    n = max(1, f.degree_bound)
    return exact_sum(
        [proximity(f, r), *(counting(f, j, r) for j in range(1, n + 1))]
    )


def jensen_balance(f: PiecewiseFunction, r):
    """T(r, f) - T(r, -f) - f(0); exactly zero by the Jensen identity."""
    r = _positive_radius(r)
    neg = scale(f, -1)
    return exact_sum(
        [characteristic(f, r), _negated(characteristic(neg, r)), -evaluate(f, 0)]
    )


def _negated(v):
    if isinstance(v, Fraction):
        return -v
    return -v


def counting_difference(h: PiecewiseFunction, r) -> tuple:
    """(sum_j N_j(r, -h) - sum_j N_j(r, h),  (h(r)+h(-r))/2 - h(0)).

    The two entries agree exactly for every h and r; this is the exact
    residual bookkeeping behind the homogeneous band check.
    """
    r = _positive_radius(r)
    n = max(1, h.degree_bound)
    lhs = exact_sum(
        [
            *(counting(h, j, r, sign=POLES_OF_NEG_F) for j in range(1, n + 1)),
            *(_negated(counting(h, j, r)) for j in range(1, n + 1)),
        ]
    )
    rhs = exact_sum(
        [_half(exact_sum([evaluate(h, r), evaluate(h, -r)])), -evaluate(h, 0)]
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# Jensen report


@dataclass(frozen=True)
class JensenReport:
    r: Fraction
    boundary_mean: object
    root_sum: object
    pole_sum: object
    reconstructed: object
    reference: object
    residual: object

    def passed(self) -> bool:
        if isinstance(self.residual, Fraction):
            return self.residual == 0
        lo, hi = value_enclosure(self.residual, Fraction(1, 10**12))
        return lo <= 0 <= hi

    def to_json(self) -> dict:
        return {
            "r": str(self.r),
            "boundary_mean": _value_json(self.boundary_mean),
            "root_sum": _value_json(self.root_sum),
            "pole_sum": _value_json(self.pole_sum),
            "reconstructed": _value_json(self.reconstructed),
            "reference": _value_json(self.reference),
            "residual": _value_json(self.residual),
            "passed": self.passed(),
        }


def _value_json(v):
    if isinstance(v, Fraction):
        return str(v)
    lo, hi = value_enclosure(v, Fraction(1, 10**15))
    from .numeric import decimal_string

    return "~" + decimal_string((lo + hi) / 2, 12)


def jensen_report(f: PiecewiseFunction, r) -> JensenReport:
    """Reconstruct f(0) = boundary mean - root sum + pole sum, itemized."""
    r = _positive_radius(r)
    n = max(1, f.degree_bound)
    boundary = _half(exact_sum([evaluate(f, r), evaluate(f, -r)]))
    roots = exact_sum(
        [counting(f, j, r, sign=POLES_OF_NEG_F) for j in range(1, n + 1)]
    )
    poles = exact_sum([counting(f, j, r) for j in range(1, n + 1)])
    reconstructed = exact_sum([boundary, _negated(roots), poles])
    reference = evaluate(f, 0)
    residual = exact_sum([reconstructed, -reference])
    return JensenReport(r, boundary, roots, poles, reconstructed, reference, residual)


# ---------------------------------------------------------------------------
# radius profiles


@dataclass(frozen=True)
class RadiusProfile:
    kind: str  # "m", "N", or "T"
    order: int | None
    r_max: Fraction
    profile: PiecewiseFunction

    def __call__(self, r):
        r = _positive_radius(r)
        if r > self.r_max:
            raise ValueError(f"profile only valid on (0, {self.r_max}], got r={r}")
        return evaluate(self.profile, r)


@dataclass(frozen=True)
class ProfileFlags:
    non_negative: bool
    non_decreasing: bool
    convex: bool


def _tail_from_zero(f: PiecewiseFunction) -> PiecewiseFunction:
    """Restrict a piecewise function to (0, +inf) (drop breakpoints <= 0)."""
    lt, on = _index_left_of(f, Fraction(0))
    idx = lt + 1 if on else lt
    keep = lt + (1 if on else 0)
    return PiecewiseFunction(f.breakpoints[keep:], f.segments[idx:])


def proximity_profile(f: PiecewiseFunction, r_max) -> RadiusProfile:
    r_max = _positive_radius(r_max)
    fp = plus_part(f)
    prof = linear_combine(fp, reflect(fp), Fraction(1, 2), Fraction(1, 2))
    return RadiusProfile("m", None, r_max, _tail_from_zero(prof))


def counting_profile(
    f: PiecewiseFunction, j: int, r_max, sign: str = POLES_OF_F
) -> RadiusProfile:
    """Closed-form piecewise polynomial r -> N_j(r, f) on (0, r_max]."""
    r_max = _positive_radius(r_max)
    table = scan(f)
    rows = table.poles(j) if sign == POLES_OF_F else table.roots(j)
    entries: list[tuple[Fraction, Fraction]] = []
    for s in rows:
        if not isinstance(s.location, Fraction) or not isinstance(
            s.multiplicity, Fraction
        ):
            raise ValueError(
                "counting profiles need rational singularity data; "
                f"got an algebraic entry at {s.location!r}"
            )
        m = abs(s.location)
        if m < r_max:
            entries.append((m, s.multiplicity))
    entries.sort(key=lambda t: t[0])
    magnitudes: list[Fraction] = []
    for m, _ in entries:
        if not magnitudes or magnitudes[-1] != m:
            magnitudes.append(m)
    acc = Polynomial.zero()
    segs = [acc]
    bps: list[Fraction] = []
    for m in magnitudes:
        weight = sum(w for mm, w in entries if mm == m)
        term = Polynomial.from_coeffs((-m, 1)) ** j
        acc = acc + term.scale(weight / 2)
        if m == 0:
            segs[-1] = acc  # a pole at the origin counts for every r > 0
        else:
            bps.append(m)
            segs.append(acc)
    return RadiusProfile("N", j, r_max, PiecewiseFunction(tuple(bps), tuple(segs)))


def characteristic_profile(f: PiecewiseFunction, r_max) -> RadiusProfile:
    r_max = _positive_radius(r_max)
    n = max(1, f.degree_bound)
    total = proximity_profile(f, r_max).profile
    for j in range(1, n + 1):
        total = linear_combine(total, counting_profile(f, j, r_max).profile, 1, 1)
    return RadiusProfile("T", None, r_max, total)


def profile_bundle(f: PiecewiseFunction, r_max) -> dict[str, RadiusProfile]:
    """All functional profiles keyed 'm', 'N1'.., 'T' (shared degree bound)."""
    r_max = _positive_radius(r_max)
    n = max(1, f.degree_bound)
    out = {"m": proximity_profile(f, r_max)}
    for j in range(1, n + 1):
        out[f"N{j}"] = counting_profile(f, j, r_max)
    out["T"] = characteristic_profile(f, r_max)
    return out


def _nonneg_on_scalars(p: Polynomial, lo: Scalar | None, hi: Scalar | None) -> bool:
    """Exact p >= 0 on [lo, hi] with possibly-algebraic (or open-ended) bounds."""
    if p.is_zero:
        return True
    if lo is not None and poly_sign_at(p, lo) < 0:
        return False
    if hi is not None and poly_sign_at(p, hi) < 0:
        return False
    from .numeric import refine

    wlo = None if lo is None else refine(lo, Fraction(1))[0] - 1
    whi = None if hi is None else refine(hi, Fraction(1))[1] + 1
    interior = [
        z
        for z in real_roots_in(p, wlo, whi)
        if (lo is None or compare(lo, z) < 0) and (hi is None or compare(z, hi) < 0)
    ]
    markers: list[Scalar] = []
    if lo is not None:
        markers.append(lo)
    markers.extend(interior)
    if hi is not None:
        markers.append(hi)
    if len(markers) < 2:
        return poly_sign_at(p, markers[0] if markers else Fraction(0)) >= 0
    samples = separators(markers)
    return all(sign_of(p(u)) >= 0 for u in samples)


def profile_flags(rp: RadiusProfile) -> ProfileFlags:
    """Exact shape flags of the profile on (0, r_max]."""
    prof = rp.profile
    bounds: list[Scalar | None] = [Fraction(0), *prof.breakpoints, None]
    nonneg = nondecr = convex = True
    for k, seg in enumerate(prof.segments):
        lo = bounds[k]
        hi = bounds[k + 1]
        if hi is not None and compare(hi, Fraction(0)) <= 0:
            continue  # segment entirely left of the domain
        if lo is not None and compare(lo, rp.r_max) >= 0:
            continue  # segment entirely beyond r_max
        clip_lo = lo if (lo is not None and compare(lo, Fraction(0)) > 0) else Fraction(0)
        clip_hi = hi if (hi is not None and compare(hi, rp.r_max) < 0) else rp.r_max
        nonneg = nonneg and _nonneg_on_scalars(seg, clip_lo, clip_hi)
        nondecr = nondecr and _nonneg_on_scalars(seg.derivative(), clip_lo, clip_hi)
        convex = convex and _nonneg_on_scalars(seg.derivative(2), clip_lo, clip_hi)
    for k, bp in enumerate(prof.breakpoints):
        if compare(bp, Fraction(0)) <= 0 or compare(bp, rp.r_max) >= 0:
            continue
        jump = prof.segments[k + 1].derivative() - prof.segments[k].derivative()
        convex = convex and poly_sign_at(jump, bp) >= 0
    return ProfileFlags(nonneg, nondecr, convex)


def profile_json(rp: RadiusProfile) -> dict:
    from .singular import _format_scalar

    # display only the segments the (0, r_max]-gated profile can ever use
    cut = len(rp.profile.breakpoints)
    for k, bp in enumerate(rp.profile.breakpoints):
        if compare(bp, rp.r_max) >= 0:
            cut = k
            break
    return {
        "kind": rp.kind if rp.order is None else f"{rp.kind}{rp.order}",
        "r_max": str(rp.r_max),
        "breakpoints": [_format_scalar(b) for b in rp.profile.breakpoints[:cut]],
        "segments": [
            [str(c) for c in s.coeffs] for s in rp.profile.segments[: cut + 1]
        ],
    }


# ---------------------------------------------------------------------------
# telescoping sums (disk-boundary reconstruction, one side at a time)


def lemma31_sum(f: PiecewiseFunction, x, r, side: str):
    """Jet-plus-jump telescoping sum from x to r (right) or -r to x (left).

    Right side equals f(r) - f(x) exactly; left side equals f(x) - f(-r).
    """
    r = _positive_radius(r)
    x = frac(x)
    if not (-r < x < r):
        raise PointOutsideDisk(f"need -r < x < r, got x={x}, r={r}")
    n = max(1, f.degree_bound)
    if side == RIGHT_TO_R:
        jets = evaluate_jet(f, x, PLUS, n)
        window = (x, r)
    elif side == LEFT_TO_MINUS_R:
        jets = evaluate_jet(f, x, MINUS, n)
        window = (-r, x)
    else:
        raise ValueError(f"side must be {RIGHT_TO_R!r} or {LEFT_TO_MINUS_R!r}")
    candidates = [
        bp
        for bp in f.breakpoints
        if compare(window[0], bp) < 0 and compare(bp, window[1]) < 0
    ]
    terms = []
    for j in range(1, n + 1):
        if side == RIGHT_TO_R:
            terms.append(jets[j] * (r - x) ** j)
        else:
            terms.append(Fraction(-1) ** (j + 1) * jets[j] * (r + x) ** j)
    for y in candidates:
        profile = omega_at(f, y, n)
        for j in range(1, n + 1):
            tau = profile.tau_of(j)
            if value_sign(tau) == 0:
                continue
            if side == RIGHT_TO_R:
                terms.append(_mul_power(tau, y, r, j, minus=True))
            else:
                terms.append(
                    _scale_value(_mul_power(tau, y, r, j, minus=False), Fraction(-1) ** j)
                )
    return exact_sum(terms)


def _mul_power(weight, y: Scalar, r: Fraction, j: int, minus: bool):
    """weight * (r - y)^j (minus=True) or weight * (r + y)^j."""
    if isinstance(y, Fraction):
        base = (r - y) ** j if minus else (r + y) ** j
        return weight * base
    arm = Polynomial.from_coeffs((r, -1) if minus else (r, 1)) ** j
    rv = root_value(arm, y)
    return weight * rv if isinstance(weight, RootValue) else rv * weight


def _scale_value(v, c: Fraction):
    if isinstance(v, Fraction):
        return v * c
    if isinstance(v, RootValue):
        return v * c
    return v.scale(c)


# ---------------------------------------------------------------------------
# Poisson-Jensen


_REGIONS = ("F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9")


def _region_of(y: Scalar, x: Fraction) -> str:
    sy = scalar_sign(y)
    rel = compare(y, x)
    if sy < 0:
        if rel == 0:
            return "F9"
        if rel < 0:
            return "F1"  # y < min(0, x): y < x and y < 0
        return "F5"  # x < y < 0
    if sy == 0:
        if x == 0:
            return "F3"
        return "F6" if x < 0 else "F7"
    # y > 0
    if rel == 0:
        return "F8"
    if rel > 0:
        return "F2"  # y > max(0, x)
    return "F4"  # 0 < y < x


def _omega_factor_B(region: str, j: int) -> int:
    return 1 if region in ("F1", "F2", "F3", "F6", "F8") else (-1) ** (j + 1)


def _left_factor_B(region: str, j: int) -> int:
    if region in ("F6",):
        return (-1) ** (j + 1) - 1
    if region in ("F7", "F8", "F9"):
        return 1 - (-1) ** (j + 1)
    return 0


def _omega_factor_D(region: str, j: int) -> int:
    if region == "F1":
        return -1
    if region in ("F2", "F3", "F6", "F8"):
        return 1
    if region in ("F4", "F7"):
        return (-1) ** j
    return (-1) ** (j + 1)  # F5, F9


def _left_factor_D(region: str, j: int) -> int:
    if region == "F3":
        return 2 * (-1) ** (j + 1)
    if region in ("F6", "F7"):
        return (-1) ** (j + 1) - 1
    if region in ("F8", "F9"):
        return 1 - (-1) ** j
    return 0


def _direct_weight(region: str, j: int, jet_plus, jet_minus, y: Scalar, which: str):
    """Ω/Γ at y straight from one-sided jets (no omega bookkeeping)."""
    sy = scalar_sign(y)
    sp = sy if sy != 0 else 1
    sm = sy if sy != 0 else -1
    omega = sp ** (j + 1) * jet_plus - sm ** (j + 1) * jet_minus
    tau = jet_plus - jet_minus
    both = jet_plus + jet_minus
    if which == "B":
        table = {
            "F1": omega,
            "F2": omega,
            "F3": omega,
            "F4": (-1) ** (j + 1) * omega,
            "F5": (-1) ** (j + 1) * omega,
            "F6": tau,
            "F7": (-1) ** (j + 1) * tau,
            "F8": tau if j % 2 == 1 else both,
            "F9": tau if j % 2 == 1 else both,
        }
    else:
        table = {
            "F1": -omega,
            "F2": omega,
            "F3": jet_plus + (-1) ** (j + 1) * jet_minus,
            "F4": (-1) ** j * omega,
            "F5": (-1) ** (j + 1) * omega,
            "F6": tau,
            "F7": (-1) ** j * tau,
            "F8": tau if j % 2 == 0 else both,
            "F9": tau if j % 2 == 0 else both,
        }
    return table[region]


@dataclass(frozen=True)
class SingularityContribution:
    location: Scalar
    order: int
    region: str
    omega: object
    energy: object  # E(r, x, y)^j
    b_term: object
    d_term: object
    omega_weight: object  # Ω per the region decomposition
    gamma_weight: object  # Γ per the region decomposition


@dataclass(frozen=True)
class PoissonJensenReport:
    x: Fraction
    r: Fraction
    n: int
    boundary_mean: object
    slope_term: object
    b_sum: object
    d_sum: object
    correction_x: object
    correction_zero: object
    contributions: tuple[SingularityContribution, ...]
    reconstructed: object
    reference: object
    residual: object

    def passed(self) -> bool:
        if isinstance(self.residual, Fraction):
            return self.residual == 0
        lo, hi = value_enclosure(self.residual, Fraction(1, 10**12))
        return lo <= 0 <= hi

    def to_json(self) -> dict:
        from .singular import _format_scalar

        return {
            "x": str(self.x),
            "r": str(self.r),
            "order_bound": self.n,
            "boundary_mean": _value_json(self.boundary_mean),
            "slope_term": _value_json(self.slope_term),
            "singular_B_sum": _value_json(self.b_sum),
            "singular_D_sum": _value_json(self.d_sum),
            "correction_x": _value_json(self.correction_x),
            "correction_zero": _value_json(self.correction_zero),
            "contributions": [
                {
                    "location": _format_scalar(c.location),
                    "order": c.order,
                    "region": c.region,
                    "omega": _value_json(c.omega),
                    "energy_power": _value_json(c.energy),
                    "b_term": _value_json(c.b_term),
                    "d_term": _value_json(c.d_term),
                    "omega_weight": _value_json(c.omega_weight),
                    "gamma_weight": _value_json(c.gamma_weight),
                }
                for c in self.contributions
            ],
            "reconstructed": _value_json(self.reconstructed),
            "reference": _value_json(self.reference),
            "residual": _value_json(self.residual),
            "passed": self.passed(),
        }


def _b_aux(r: Fraction, x: Fraction, k: int) -> Fraction:
    return ((r + x) ** k + (r - x) ** k) / 2


def _d_aux(r: Fraction, x: Fraction, k: int) -> Fraction:
    return ((r + x) ** k - (r - x) ** k) / 2


def _energy_power(r: Fraction, x: Fraction, y: Scalar, j: int):
    """E(r, x, y)^j with E = r^2 - |x - y|*r - x*y, exact for algebraic y."""
    if isinstance(y, Fraction):
        return (r * r - abs(x - y) * r - x * y) ** j
    s = compare(Fraction(x), y)  # sign of (x - y); never 0 for algebraic y vs rational x
    # E as a polynomial in y: r^2 - s*(x - y)*r - x*y
    p = Polynomial.from_coeffs((r * r - s * x * r, s * r - x))
    return root_value(p**j, y)


def poisson_jensen(f: PiecewiseFunction, x, r) -> PoissonJensenReport:
    """Reconstruct f(x) from boundary data plus singular sums, itemized.

    Exact: rational breakpoints give a literal zero residual; algebraic
    singularities give an exact symbolic residual whose enclosure straddles 0.
    """
    r = _positive_radius(r)
    x = frac(x)
    if not (-r < x < r):
        raise PointOutsideDisk(f"need -r < x < r, got x={x}, r={r}")
    n = max(1, f.degree_bound)
    f_r = evaluate(f, r)
    f_mr = evaluate(f, -r)
    f_x = evaluate(f, x)
    f_0 = evaluate(f, 0)
    b_n = _b_aux(r, x, n)
    boundary_mean = (f_r + f_mr) / 2
    slope_term = _d_aux(r, x, n) / (2 * b_n) * (f_r - f_mr)

    contributions: list[SingularityContribution] = []
    b_terms = []
    d_terms = []
    for y in _singular_points(f, -r, r):
        profile = omega_at(f, y, n)
        jets_plus = evaluate_jet(f, y, PLUS, n)
        jets_minus = evaluate_jet(f, y, MINUS, n)
        region = _region_of(y, x)
        for j in range(1, n + 1):
            w = profile.omega_of(j)
            left_jet = jets_minus[j]
            omega_weight = exact_sum(
                [
                    _scale_value(w, Fraction(_omega_factor_B(region, j))),
                    _scale_value(left_jet, Fraction(_left_factor_B(region, j))),
                ]
            )
            gamma_weight = exact_sum(
                [
                    _scale_value(w, Fraction(_omega_factor_D(region, j))),
                    _scale_value(left_jet, Fraction(_left_factor_D(region, j))),
                ]
            )
            direct_b = _direct_weight(region, j, jets_plus[j], jets_minus[j], y, "B")
            direct_d = _direct_weight(region, j, jets_plus[j], jets_minus[j], y, "D")
            _assert_same(omega_weight, direct_b, y, j, "B")
            _assert_same(gamma_weight, direct_d, y, j, "D")
            if value_sign(w) == 0:
                continue
            energy = _energy_power(r, x, y, j)
            sb = Fraction(_omega_factor_B(region, j)) * _b_aux(r, x, n - j) / (2 * b_n)
            sd = Fraction(_omega_factor_D(region, j)) * _d_aux(r, x, n - j) / (2 * b_n)
            b_term = _scale_value(_mul_values(w, energy), sb)
            d_term = _scale_value(_mul_values(w, energy), sd)
            b_terms.append(b_term)
            d_terms.append(d_term)
            contributions.append(
                SingularityContribution(
                    y, j, region, w, energy, b_term, d_term, omega_weight, gamma_weight
                )
            )
    b_sum = exact_sum(b_terms)
    d_sum = exact_sum(d_terms)

    left_at_x = governing_segment(f, x, MINUS)
    left_at_zero = governing_segment(f, Fraction(0), MINUS)
    correction_x = (
        (r + x) ** n * (left_at_x(r) - f_x) + (r - x) ** n * (left_at_x(-r) - f_x)
    ) / (2 * b_n)
    sgn_x_minus = 1 if x > 0 else -1
    correction_zero = (
        sgn_x_minus
        * (r - abs(x)) ** n
        * (left_at_zero(r) + left_at_zero(-r) - 2 * f_0)
        / (2 * b_n)
    )
    reconstructed = exact_sum(
        [
            boundary_mean,
            slope_term,
            _negated(b_sum),
            _negated(d_sum),
            -correction_x,
            -correction_zero,
        ]
    )
    residual = exact_sum([reconstructed, -f_x])
    return PoissonJensenReport(
        x,
        r,
        n,
        boundary_mean,
        slope_term,
        b_sum,
        d_sum,
        correction_x,
        correction_zero,
        tuple(contributions),
        reconstructed,
        f_x,
        residual,
    )


def _mul_values(a, b):
    """Product of Fraction/RootValue values living at one shared root."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    return a * b


def _assert_same(a, b, y, j, tag) -> None:
    diff = exact_sum([a, _negate_any(b)])
    if isinstance(diff, Fraction):
        ok = diff == 0
    else:
        lo, hi = diff.enclosure(Fraction(1, 10**20))
        ok = lo <= 0 <= hi
    if not ok:
        raise RuntimeError(
            f"internal weight mismatch ({tag}) at y={y!r}, order {j}: {a!r} vs {b!r}"
        )


def _negate_any(v):
    if isinstance(v, Fraction):
        return -v
    return -v


def _singular_points(f: PiecewiseFunction, lo, hi) -> list[Scalar]:
    pts = [bp for bp in f.breakpoints if compare(lo, bp) < 0 and compare(bp, hi) < 0]
    zero_inside = compare(lo, Fraction(0)) < 0 and compare(Fraction(0), hi) < 0
    if zero_inside and not any(scalar_sign(p) == 0 for p in pts):
        pts.append(Fraction(0))
    from .numeric import sort_scalars

    return sort_scalars(pts)


# ---------------------------------------------------------------------------
# log-difference diagnostics


def log_difference(f: PiecewiseFunction, c, delta: int, r):
    """f(delta*r + c) - f(delta*r)."""
    c = frac(c)
    if c == 0:
        raise ZeroShift("shift c must be nonzero")
    if delta not in (1, -1):
        raise ValueError(f"delta must be +1 or -1, got {delta!r}")
    r = _positive_radius(r)
    base = delta * r
    return evaluate(f, base + c) - evaluate(f, base)


@dataclass(frozen=True)
class Lemma44Report:
    c: Fraction
    alpha: Fraction
    r: Fraction
    threshold: Fraction
    lhs_plus: Fraction
    lhs_minus: Fraction
    rhs: Fraction
    passed: bool

    def to_json(self) -> dict:
        return {
            "c": str(self.c),
            "alpha": str(self.alpha),
            "r": str(self.r),
            "threshold": str(self.threshold),
            "lhs_plus": str(self.lhs_plus),
            "lhs_minus": str(self.lhs_minus),
            "rhs": str(self.rhs),
            "passed": self.passed,
        }


def lemma44_check(f: PiecewiseFunction, c, alpha, r) -> Lemma44Report:
    """Check |f(dr+c) - f(dr)| <= 32|c|/((a-1)(r+|c|)) * (T(a(r+|c|)) + |f(0)|/2)."""
    c = frac(c)
    if c == 0:
        raise ZeroShift("shift c must be nonzero")
    alpha = frac(alpha)
    if alpha <= 1:
        raise ValueError(f"alpha must be > 1, got {alpha}")
    r = _positive_radius(r)
    flags = classify(f)
    if not flags.well_defined:
        raise NotWellDefined("the shape test fails on at least one segment")
    threshold = max(2 * abs(c), (3 - alpha) / (alpha - 1) * abs(c))
    if r <= threshold:
        raise RadiusBelowThreshold(r, threshold)
    lhs_plus = abs(log_difference(f, c, 1, r))
    lhs_minus = abs(log_difference(f, c, -1, r))
    big_t = characteristic(f, alpha * (r + abs(c)))
    if not isinstance(big_t, Fraction):
        lo, hi = value_enclosure(big_t, Fraction(1, 10**12))
        big_t = hi  # upper bound keeps the check sound
    rhs = (
        32 * abs(c) / ((alpha - 1) * (r + abs(c))) * (big_t + abs(evaluate(f, 0)) / 2)
    )
    passed = max(lhs_plus, lhs_minus) <= rhs
    return Lemma44Report(c, alpha, r, threshold, lhs_plus, lhs_minus, rhs, passed)


# ---------------------------------------------------------------------------
# the hyper-exponential family


def _eulerian_row(n: int) -> list[int]:
    """Eulerian numbers <n, 0..n-1> (n >= 1)."""
    row = [1]
    for m in range(2, n + 1):
        new = [0] * m
        for k in range(m):
            left = row[k] if k < len(row) else 0
            up = row[k - 1] if k - 1 >= 0 else 0
            new[k] = (k + 1) * left + (m - k) * up
        row = new
    return row


def _power_sum_series(n: int, q: Fraction) -> Fraction:
    """sum_{t>=1} t^n q^t for 0 < q < 1, exactly (Eulerian closed form)."""
    if not 0 < q < 1:
        raise ValueError("series needs 0 < q < 1")
    row = _eulerian_row(n)
    numerator = sum(row[k] * q ** (k + 1) for k in range(n))
    return numerator / (1 - q) ** (n + 1)


@dataclass(frozen=True)
class HyperexpResult:
    function: PiecewiseFunction
    tail_bound: Fraction  # exact dropped-tail constant (uniform shift)
    n: int
    alpha: Fraction
    cutoff: int
    window: tuple[int, int]


def hyperexp(n: int, alpha, window: tuple, tail_cutoff: int) -> HyperexpResult:
    """Degree-n, base-alpha hyper-exponential staircase on an integer window.

    Segment on [m, m+1) is s_m * alpha^m * (x^n - m^n) + C_m with
    s_m = 1 for m >= 0 and (-1)^(n+1) otherwise; constants accumulate segment
    increments starting at the cutoff -K.  The dropped lower tail
    sum_{t>K} alpha^(-t) (t^n - (t-1)^n) is returned exactly: the constructed
    function is the ideal one minus that constant, so all jump data is exact.
    """
    if not isinstance(n, int) or n < 1:
        raise BadWindow(f"degree n must be an integer >= 1, got {n!r}")
    alpha = frac(alpha)
    if alpha <= 1:
        raise ValueError(f"alpha must be > 1, got {alpha}")
    lo, hi = window
    lo, hi = frac(lo), frac(hi)
    if lo.denominator != 1 or hi.denominator != 1 or not (lo < 0 < hi):
        raise BadWindow(
            f"window must be integer bounds straddling 0, got ({lo}, {hi})"
        )
    m_min, m_max = int(lo), int(hi)
    if not isinstance(tail_cutoff, int) or tail_cutoff < -m_min or tail_cutoff < 1:
        raise BadWindow(
            f"tail cutoff must be an integer >= max(1, {-m_min}), got {tail_cutoff!r}"
        )
    k = tail_cutoff

    def seg_sign(m: int) -> int:
        return 1 if m >= 0 else (-1) ** (n + 1)

    def increment(m: int) -> Fraction:
        return seg_sign(m) * alpha**m * Fraction((m + 1) ** n - m**n)

    # constant at the left edge of the constructed window
    const = sum((increment(i) for i in range(-k, m_min)), Fraction(0))
    segs: list[Polynomial] = []
    for m in range(m_min, m_max):
        base = Polynomial.from_coeffs(
            [-Fraction(m**n), *([0] * (n - 1)), 1]
        ).scale(seg_sign(m) * alpha**m)
        segs.append(base + Polynomial.constant(const))
        const += increment(m)
    # interior integers are the breakpoints; the first/last segments extend to
    # -inf/+inf as polynomial tails, so trust values on the window only
    bps = [Fraction(m) for m in range(m_min + 1, m_max)]
    tail = _exact_tail(n, 1 / alpha, k)
    fn = piecewise(bps, segs)
    return HyperexpResult(fn, tail, n, alpha, k, (m_min, m_max))


def _exact_tail(n: int, q: Fraction, k: int) -> Fraction:
    """sum_{t >= k+1} q^t (t^n - (t-1)^n), exactly."""
    full = (1 - q) * _power_sum_series(n, q)  # sum_{t>=1} q^t (t^n - (t-1)^n)
    head = sum(
        (q**t * Fraction(t**n - (t - 1) ** n) for t in range(1, k + 1)), Fraction(0)
    )
    return full - head


# ---------------------------------------------------------------------------
# growth-scale diagnostics


@dataclass(frozen=True)
class GrowthEstimates:
    grid: tuple[Fraction, ...]
    order_estimates: tuple[float, ...]
    hyper_order_estimates: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "grid": [str(r) for r in self.grid],
            "order_estimates": list(self.order_estimates),
            "hyper_order_estimates": list(self.hyper_order_estimates),
        }


def growth_estimates(profile: RadiusProfile, grid: Sequence) -> GrowthEstimates:
    """log T / log r and log log T / log r along the grid (no limits claimed)."""
    radii = [frac(r) for r in grid]
    orders = []
    hypers = []
    for r in radii:
        if r <= 1:
            raise ValueError(f"grid radii must be > 1, got {r}")
        t = profile(r)
        t_float = value_float(t)
        if t_float <= 0 or (isinstance(t, Fraction) and t <= 0):
            raise NonPositiveValues(f"profile value {t_float} <= 0 at r = {r}")
        if t_float <= 1:
            raise NonPositiveValues(
                f"profile value {t_float} <= 1 at r = {r}: log log undefined"
            )
        orders.append(math.log(t_float) / math.log(float(r)))
        hypers.append(math.log(math.log(t_float)) / math.log(float(r)))
    return GrowthEstimates(tuple(radii), tuple(orders), tuple(hypers))
