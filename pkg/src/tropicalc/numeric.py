"""Exact real scalars: rationals plus real algebraic numbers.

The package does all of its analysis in exact arithmetic.  A scalar is either
a :class:`fractions.Fraction` or an :class:`AlgebraicNumber` -- a real root of
an integer polynomial, pinned down by an isolating interval whose endpoints
are rationals with opposite polynomial signs.  Comparisons are decided
exactly (Sturm counts + gcd arguments, never floating point) and every
derived quantity can be enclosed in an interval of requested width.

Value sums that mix rationals with polynomial expressions evaluated at
several distinct algebraic points are carried by :class:`ExactValue`, which
cancels exactly within each root and encloses the remainder on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import EmptyWindow, NonPositiveEps, ZeroPolynomial
from .poly import Polynomial, frac, poly_gcd, squarefree_part

LESS, EQUAL, GREATER = -1, 0, 1

_MAX_REFINE_STEPS = 100_000


def sign_of(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def decimal_string(x: Fraction, digits: int = 12) -> str:
    """Round x to `digits` decimal places, exact half-away-from-zero."""
    scaled = x * 10**digits
    n = scaled.numerator
    d = scaled.denominator
    q, r = divmod(abs(n), d)
    if 2 * r >= d:
        q += 1
    sign = "-" if n < 0 and q != 0 else ""
    whole, fracpart = divmod(q, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(fracpart).zfill(digits)}"


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """Sturm sequence of p (callers pass a squarefree p for exact counts)."""
    if p.is_zero:
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(chain: Sequence[Polynomial], x: Fraction) -> int:
    signs = [s for s in (sign_of(q(x)) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain: Sequence[Polynomial], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots in (lo, hi]; endpoints must not be roots of chain[0]."""
    return _variations(chain, lo) - _variations(chain, hi)


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """B with every real root of p in (-B, B)."""
    if p.is_zero:
        raise ZeroPolynomial("root bound of the zero polynomial")
    if p.degree == 0:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def _shave_endpoint_roots(w: Polynomial, lo: Fraction, hi: Fraction) -> Polynomial:
    x = Polynomial.identity()
    for point in (lo, hi):
        while not w.is_zero and w.degree >= 1 and w(point) == 0:
            w = w // (x - Polynomial.constant(point))
    return w


def sturm_isolate(
    p: Union[Polynomial, Iterable], window: tuple
) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals, one per distinct real root of p inside the open window.

    Interval endpoints are rationals that are not roots; each interval contains
    exactly one root and every root strictly inside the window is covered.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial.from_coeffs(p)
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    lo, hi = (frac(window[0]), frac(window[1]))
    if lo >= hi:
        raise EmptyWindow(f"window ({lo}, {hi}) is empty")
    w = _shave_endpoint_roots(squarefree_part(p).primitive(), lo, hi)
    if w.degree <= 0:
        return []
    chain = sturm_chain(w)
    out: list[tuple[Fraction, Fraction]] = []

    def emit_known_root(root: Fraction, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
        # Shrink a symmetric interval around a known rational root until it
        # isolates it from the other roots and has non-root endpoints.
        radius = min(root - a, b - root) / 2
        while True:
            c, d = root - radius, root + radius
            if w(c) != 0 and w(d) != 0 and sturm_count(chain, c, d) == 1:
                return c, d
            radius /= 2

    def bisect(a: Fraction, b: Fraction, count: int) -> None:
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        if w(mid) == 0:
            c, d = emit_known_root(mid, a, b)
            left = sturm_count(chain, a, c)
            bisect(a, c, left)
            out.append((c, d))
            bisect(d, b, count - 1 - left)
            return
        left = sturm_count(chain, a, mid)
        bisect(a, mid, left)
        bisect(mid, b, count - left)

    bisect(lo, hi, sturm_count(chain, lo, hi))
    return out


# ---------------------------------------------------------------------------
# Integer factorization (for rational-root stripping)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _divisors(n: int, trial_bound: int = 1_000_000) -> list[int] | None:
    """All positive divisors of |n|, or None when factorization gives up."""
    n = abs(n)
    if n == 0:
        return None
    factors: dict[int, int] = {}
    m = n
    d = 2
    while d * d <= m and d <= trial_bound:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            return None  # composite cofactor beyond the trial bound
    divs = [1]
    for prime, mult in factors.items():
        divs = [dv * prime**e for dv in divs for e in range(mult + 1)]
        if len(divs) > 50_000:
            return None
    return sorted(divs)


def strip_rational_roots(p: Polynomial) -> tuple[list[Fraction], Polynomial]:
    """Split off the rational roots of p (with multiplicity collapsed).

    Returns (sorted distinct rational roots, cofactor with those roots removed
    entirely).  Uses the rational-root theorem on the primitive form; if the
    endpoints cannot be factored the stripping silently returns fewer roots
    (downstream comparisons stay exact, only the preferred representation of
    such roots degrades to AlgebraicNumber).
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    roots: list[Fraction] = []
    x = Polynomial.identity()
    # x = 0 roots first (lowest nonzero coefficient).
    val = 0
    while val < len(p.coeffs) and p.coeffs[val] == 0:
        val += 1
    if val:
        roots.append(Fraction(0))
        p = Polynomial(tuple(p.coeffs[val:]))
    if p.degree >= 1:
        prim = p.primitive()
        num_divs = _divisors(int(prim.coeffs[0]))
        den_divs = _divisors(int(prim.leading))
        if num_divs is not None and den_divs is not None:
            candidates = {
                Fraction(s * a, b) for a in num_divs for b in den_divs for s in (1, -1)
            }
            for c in sorted(candidates):
                if p(c) == 0:
                    roots.append(c)
                    while p(c) == 0 and p.degree >= 1:
                        p = p // (x - Polynomial.constant(c))
    return sorted(roots), p


# ---------------------------------------------------------------------------
# Algebraic numbers


class AlgebraicNumber:
    """A real irrational root of an integer polynomial, isolated by an interval.

    The defining polynomial is squarefree with primitive integer coefficients
    and positive leading coefficient, and has had its rational roots stripped
    whenever the coefficients factor; the interval (lo, hi) has rational
    non-root endpoints with a sign change and contains exactly one root.
    The interval narrows in place as comparisons demand (a cache, not state).
    """

    __slots__ = ("poly", "_lo", "_hi", "_chain")

    def __init__(self, poly: Polynomial, lo: Fraction, hi: Fraction):
        self.poly = poly
        self._lo = lo
        self._hi = hi
        self._chain: list[Polynomial] | None = None
        if not (lo < hi and sign_of(poly(lo)) * sign_of(poly(hi)) < 0):
            raise ValueError(
                f"({lo}, {hi}) is not a sign-change interval for {poly}"
            )

    # -- interval management -------------------------------------------------

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    @property
    def chain(self) -> list[Polynomial]:
        if self._chain is None:
            self._chain = sturm_chain(self.poly)
        return self._chain

    def _halve(self) -> None:
        mid = (self._lo + self._hi) / 2
        s = sign_of(self.poly(mid))
        if s == 0:
            # A rational root that survived stripping: pinch next to it,
            # keeping the sign-change invariant intact.
            offset = (self._hi - self._lo) / 4
            while True:
                c, d = mid - offset, mid + offset
                if self.poly(c) != 0 and self.poly(d) != 0:
                    break
                offset /= 2
            if sign_of(self.poly(self._lo)) * sign_of(self.poly(c)) < 0:
                self._hi = c
            else:
                self._lo, self._hi = c, d
            return
        if s == sign_of(self.poly(self._lo)):
            self._lo = mid
        else:
            self._hi = mid

    def refine_to(self, eps: Fraction) -> tuple[Fraction, Fraction]:
        if eps <= 0:
            raise NonPositiveEps(f"eps = {eps}")
        steps = 0
        while self._hi - self._lo > eps:
            self._halve()
            steps += 1
            if steps > _MAX_REFINE_STEPS:
                raise RuntimeError("interval refinement did not converge")
        return self._lo, self._hi

    # -- numeric views --------------------------------------------------------

    def sign(self) -> int:
        if self._lo >= 0:
            return 1
        if self._hi <= 0:
            return -1
        while self._lo < 0 < self._hi:
            self._halve()
        return 1 if self._lo >= 0 else -1

    def __float__(self) -> float:
        lo, hi = self.refine_to(Fraction(1, 10**18))
        return float((lo + hi) / 2)

    def decimal(self, digits: int = 12) -> str:
        lo, hi = self.refine_to(Fraction(1, 10 ** (digits + 3)))
        return decimal_string((lo + hi) / 2, digits)

    def __neg__(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.poly.reflect().primitive(), -self._hi, -self._lo)

    # -- comparisons ------------------------------------------------------------

    def _compare_rational(self, q: Fraction) -> int:
        lo, hi = self._lo, self._hi
        if q <= lo:
            return GREATER
        if q >= hi:
            return LESS
        if self.poly(q) == 0:
            return EQUAL  # q is the unique root in the interval
        # Root lies in (lo, q) or (q, hi); one Sturm count decides which.
        return LESS if sturm_count(self.chain, lo, q) == 1 else GREATER

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (AlgebraicNumber, Fraction, int)):
            return compare(self, other) == EQUAL
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (AlgebraicNumber, Fraction, int)):
            return compare(self, other) == LESS
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (AlgebraicNumber, Fraction, int)):
            return compare(self, other) != GREATER
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (AlgebraicNumber, Fraction, int)):
            return compare(self, other) == GREATER
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (AlgebraicNumber, Fraction, int)):
            return compare(self, other) != LESS
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("algebraic", self.poly.coeffs))

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self.poly}, ~{self.decimal(6)})"


Scalar = Union[Fraction, AlgebraicNumber]


def algebraic_root(poly: Polynomial, lo, hi) -> AlgebraicNumber:
    """Canonicalize and wrap: squarefree primitive poly, rationals stripped."""
    w = squarefree_part(poly).primitive()
    _, w = strip_rational_roots(w)
    lo, hi = frac(lo), frac(hi)
    w = _shave_endpoint_roots(w, lo, hi)
    return AlgebraicNumber(w.primitive(), lo, hi)


def real_roots_in(
    p: Polynomial, lo: Fraction | None = None, hi: Fraction | None = None
) -> list[Scalar]:
    """All distinct real roots of p in the open window, exact, sorted ascending.

    Rational roots come back as Fractions, the rest as AlgebraicNumbers.
    With lo/hi omitted the window is taken wide enough to hold every root.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    if p.degree == 0:
        return []
    bound = cauchy_root_bound(p)
    wlo = frac(lo) if lo is not None else -bound
    whi = frac(hi) if hi is not None else bound
    if wlo >= whi:
        return []
    rationals, rest = strip_rational_roots(squarefree_part(p))
    roots: list[Scalar] = [q for q in rationals if wlo < q < whi]
    if rest.degree >= 1:
        rest = rest.primitive()
        for a, b in sturm_isolate(rest, (min(wlo, -bound - 1), max(whi, bound + 1))):
            candidate = AlgebraicNumber(rest, a, b)
            if wlo < candidate and candidate < whi:
                roots.append(candidate)
    return sort_scalars(roots)


# ---------------------------------------------------------------------------
# Exact comparison of scalars


def compare(a: Scalar, b: Scalar) -> int:
    """Exact three-way comparison; returns LESS, EQUAL, or GREATER."""
    if isinstance(a, int):
        a = Fraction(a)
    if isinstance(b, int):
        b = Fraction(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return sign_of(a - b)
    if isinstance(a, Fraction):
        return -_compare_alg_rational(b, a)
    if isinstance(b, Fraction):
        return _compare_alg_rational(a, b)
    return _compare_alg_alg(a, b)


def _compare_alg_rational(a: AlgebraicNumber, q: Fraction) -> int:
    return a._compare_rational(q)


def _compare_alg_alg(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    if a is b:
        return EQUAL
    if not _maybe_equal(a, b):
        return _separate(a, b)
    return EQUAL


def _maybe_equal(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    """Decide equality exactly; False means the values differ."""
    alo, ahi = a.interval
    blo, bhi = b.interval
    if ahi <= blo or bhi <= alo:
        return False
    g = poly_gcd(a.poly, b.poly)
    if g.degree < 1:
        return False
    g = g.primitive()
    gchain = sturm_chain(g)
    # g's endpoints are safe: g divides both polynomials, whose endpoint
    # values are nonzero by the isolating-interval invariant.
    a_owns = sturm_count(gchain, alo, ahi) == 1
    b_owns = sturm_count(gchain, blo, bhi) == 1
    if not (a_owns and b_owns):
        return False
    hull_lo, hull_hi = min(alo, blo), max(ahi, bhi)
    return sturm_count(gchain, hull_lo, hull_hi) == 1


def _separate(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Order two algebraic numbers known to be distinct."""
    for _ in range(_MAX_REFINE_STEPS):
        alo, ahi = a.interval
        blo, bhi = b.interval
        if ahi <= blo:
            return LESS
        if bhi <= alo:
            return GREATER
        a._halve()
        b._halve()
    raise RuntimeError("failed to separate distinct algebraic numbers")


def refine(s: Scalar, eps) -> tuple[Fraction, Fraction]:
    """An enclosing interval of width <= eps around the scalar."""
    eps = frac(eps)
    if eps <= 0:
        raise NonPositiveEps(f"eps = {eps}")
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        return s, s
    return s.refine_to(eps)


def scalar_sign(s: Scalar) -> int:
    if isinstance(s, AlgebraicNumber):
        return s.sign()
    return sign_of(frac(s) if not isinstance(s, Fraction) else s)


def scalar_neg(s: Scalar) -> Scalar:
    return -s


def scalar_abs(s: Scalar) -> Scalar:
    return -s if scalar_sign(s) < 0 else s


def scalar_float(s: Scalar) -> float:
    return float(s)


def scalar_eq(a: Scalar, b: Scalar) -> bool:
    return compare(a, b) == EQUAL


def sort_scalars(values: Iterable[Scalar]) -> list[Scalar]:
    import functools

    return sorted(values, key=functools.cmp_to_key(compare))


def separators(sorted_scalars: Sequence[Scalar]) -> list[Fraction]:
    """Rationals strictly between consecutive members of an ascending list."""
    out: list[Fraction] = []
    for left, right in zip(sorted_scalars, sorted_scalars[1:]):
        eps = Fraction(1, 2)
        while True:
            _, lhi = refine(left, eps)
            rlo, _ = refine(right, eps)
            if lhi < rlo:
                out.append((lhi + rlo) / 2)
                break
            eps /= 4
    return out


def poly_sign_at(p: Polynomial, s: Scalar) -> int:
    """Exact sign of p evaluated at a scalar."""
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        return sign_of(p(s))
    return root_value(p, s).sign()


def poly_nonneg_on(p: Polynomial, lo: Fraction, hi: Fraction) -> bool:
    """Exact check that p >= 0 everywhere on the closed interval [lo, hi]."""
    if lo > hi:
        raise EmptyWindow(f"interval [{lo}, {hi}] is empty")
    if p.is_zero:
        return True
    if p(lo) < 0 or p(hi) < 0:
        return False
    if lo == hi:
        return True
    interior = real_roots_in(p, lo, hi)
    points: list[Fraction] = [lo]
    points.extend(separators([lo, *interior, hi]))
    points.append(hi)
    return all(sign_of(p(x)) >= 0 for x in points)


# ---------------------------------------------------------------------------
# Values built from polynomials at algebraic points


@dataclass(frozen=True)
class RootValue:
    """q(alpha) for a polynomial q and a fixed algebraic number alpha.

    q is stored reduced modulo the defining polynomial of alpha.  Arithmetic
    is closed among values at the *same* alpha (use ExactValue to mix roots).
    """

    num: Polynomial
    root: AlgebraicNumber

    @property
    def is_rational(self) -> bool:
        return self.num.degree <= 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("value is not known to be rational")
        return self.num.coefficient(0)

    def _coerce(self, other) -> "RootValue | None":
        if isinstance(other, RootValue):
            if other.root is self.root or scalar_eq(other.root, self.root):
                return RootValue(other.num % self.root.poly, self.root)
            return None
        if isinstance(other, (int, Fraction)):
            return RootValue(Polynomial.constant(other), self.root)
        return None

    def __add__(self, other):
        rv = self._coerce(other)
        if rv is None:
            return NotImplemented
        return RootValue((self.num + rv.num) % self.root.poly, self.root)

    __radd__ = __add__

    def __neg__(self):
        return RootValue(-self.num, self.root)

    def __sub__(self, other):
        rv = self._coerce(other)
        if rv is None:
            return NotImplemented
        return self + (-rv)

    def __rsub__(self, other):
        rv = self._coerce(other)
        if rv is None:
            return NotImplemented
        return rv + (-self)

    def __mul__(self, other):
        rv = self._coerce(other)
        if rv is None:
            return NotImplemented
        return RootValue((self.num * rv.num) % self.root.poly, self.root)

    __rmul__ = __mul__

    def sign(self) -> int:
        if self.num.is_zero:
            return 0
        if self.num.degree == 0:
            return sign_of(self.num.coefficient(0))
        g = poly_gcd(self.num, self.root.poly)
        if g.degree >= 1:
            lo, hi = self.root.interval
            if sturm_count(sturm_chain(g.primitive()), lo, hi) == 1:
                return 0  # alpha is a root of q as well
        for _ in range(_MAX_REFINE_STEPS):
            lo, hi = self.root.interval
            vlo, vhi = self.num.eval_interval(lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            self.root._halve()
        raise RuntimeError("sign refinement did not converge")

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def enclosure(self, eps) -> tuple[Fraction, Fraction]:
        eps = frac(eps)
        if eps <= 0:
            raise NonPositiveEps(f"eps = {eps}")
        for _ in range(_MAX_REFINE_STEPS):
            lo, hi = self.root.interval
            vlo, vhi = self.num.eval_interval(lo, hi)
            if vhi - vlo <= eps:
                return vlo, vhi
            self.root._halve()
        raise RuntimeError("enclosure refinement did not converge")

    def __float__(self) -> float:
        lo, hi = self.enclosure(Fraction(1, 10**18))
        return float((lo + hi) / 2)

    def __repr__(self) -> str:
        lo, hi = self.enclosure(Fraction(1, 10**9))
        return f"RootValue(~{decimal_string((lo + hi) / 2, 9)})"


def root_value(q: Polynomial, root: AlgebraicNumber) -> RootValue:
    return RootValue(q % root.poly, root)


Value = Union[Fraction, "ExactValue"]


@dataclass(frozen=True)
class ExactValue:
    """rational + sum of RootValues at pairwise-distinct algebraic points."""

    rational: Fraction
    parts: tuple[RootValue, ...]

    def enclosure(self, eps) -> tuple[Fraction, Fraction]:
        eps = frac(eps)
        if eps <= 0:
            raise NonPositiveEps(f"eps = {eps}")
        lo = hi = self.rational
        if self.parts:
            share = eps / len(self.parts)
            for part in self.parts:
                plo, phi = part.enclosure(share)
                lo += plo
                hi += phi
        return lo, hi

    def __float__(self) -> float:
        lo, hi = self.enclosure(Fraction(1, 10**18))
        return float((lo + hi) / 2)

    def __add__(self, other):
        return exact_sum([self, other])

    __radd__ = __add__

    def __neg__(self):
        return ExactValue(-self.rational, tuple(-p for p in self.parts))

    def __sub__(self, other):
        return exact_sum([self, _negate_term(other)])

    def __rsub__(self, other):
        return exact_sum([other, -self])

    def scale(self, c) -> "ExactValue":
        c = frac(c)
        return exact_sum(
            [self.rational * c, *(RootValue(p.num.scale(c), p.root) for p in self.parts)]
        )

    def __repr__(self) -> str:
        lo, hi = self.enclosure(Fraction(1, 10**9))
        return f"ExactValue(~{decimal_string((lo + hi) / 2, 9)})"


def _negate_term(t):
    if isinstance(t, (int, Fraction)):
        return -frac(t)
    return -t


def exact_sum(terms: Iterable) -> Value:
    """Sum rationals / RootValues / ExactValues, cancelling within each root.

    Returns a plain Fraction whenever every algebraic contribution cancels,
    so identities that hold exactly produce literal exact zeros.
    """
    rational = Fraction(0)
    groups: list[list[RootValue]] = []
    for term in terms:
        if isinstance(term, (int, Fraction)):
            rational += term
            continue
        if isinstance(term, ExactValue):
            rational += term.rational
            pending: Iterable[RootValue] = term.parts
        elif isinstance(term, RootValue):
            pending = (term,)
        else:
            raise TypeError(f"cannot sum term {term!r}")
        for rv in pending:
            for group in groups:
                if group[0].root is rv.root or scalar_eq(group[0].root, rv.root):
                    group.append(rv)
                    break
            else:
                groups.append([rv])
    parts = []
    for group in groups:
        total = group[0]
        for rv in group[1:]:
            total = total + rv
        if total.is_rational:
            rational += total.as_fraction()
        else:
            parts.append(total)
    if not parts:
        return rational
    return ExactValue(rational, tuple(parts))


def value_enclosure(v, eps) -> tuple[Fraction, Fraction]:
    """Enclose any scalar-like value (Fraction, RootValue, ExactValue)."""
    eps = frac(eps)
    if eps <= 0:
        raise NonPositiveEps(f"eps = {eps}")
    if isinstance(v, int):
        v = Fraction(v)
    if isinstance(v, Fraction):
        return v, v
    return v.enclosure(eps)


def value_float(v) -> float:
    if isinstance(v, int):
        return float(v)
    return float(v)


def value_sign(v) -> int:
    """Exact sign for Fractions and RootValues; ExactValue only when one-sided."""
    if isinstance(v, int):
        return sign_of(Fraction(v))
    if isinstance(v, Fraction):
        return sign_of(v)
    if isinstance(v, RootValue):
        return v.sign()
    if isinstance(v, ExactValue):
        if not v.parts:
            return sign_of(v.rational)
        eps = Fraction(1, 2)
        for _ in range(64):
            lo, hi = v.enclosure(eps)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            eps /= 16
        raise RuntimeError(
            "cannot resolve the sign of a near-zero mixed algebraic sum exactly"
        )
    raise TypeError(f"no sign for {v!r}")
