from fractions import Fraction as F

import pytest

from tropicalc.numeric import (
    AlgebraicNumber,
    algebraic_root,
    compare,
    decimal_string,
    exact_sum,
    real_roots_in,
    refine,
    root_value,
    scalar_eq,
    separators,
    sort_scalars,
    sturm_chain,
    sturm_count,
    value_enclosure,
    value_float,
    value_sign,
)
from tropicalc.poly import Polynomial


SQRT2 = algebraic_root(Polynomial.of(-2, 0, 1), 1, 2)
NEG_SQRT2 = algebraic_root(Polynomial.of(-2, 0, 1), -2, -1)


def test_real_roots_of_quadratic():
    roots = real_roots_in(Polynomial.of(-2, 0, 1), F(-10), F(10))
    assert len(roots) == 2
    assert compare(roots[0], roots[1]) < 0
    assert scalar_eq(roots[0], NEG_SQRT2)
    assert scalar_eq(roots[1], SQRT2)


def test_rational_roots_come_back_as_fractions():
    # (x - 1/2)(x^2 - 2) has one rational and two algebraic roots
    p = Polynomial.of("-1/2", 1) * Polynomial.of(-2, 0, 1)
    roots = real_roots_in(p, F(-3), F(3))
    assert len(roots) == 3
    assert roots[1] == F(1, 2)
    assert isinstance(roots[1], F)
    assert isinstance(roots[0], AlgebraicNumber)


def test_sturm_count_matches_dense_sign_scan():
    p = Polynomial.of(1, -5, 0, 1)  # x^3 - 5x + 1: three real roots
    chain = sturm_chain(p)
    assert sturm_count(chain, F(-4), F(4)) == 3
    assert sturm_count(chain, F(0), F(1)) == 1
    assert sturm_count(chain, F(1), F(2)) == 0


def test_algebraic_number_is_value_semantic():
    other = algebraic_root(Polynomial.of(-2, 0, 1), F(1), F(3, 2))
    assert SQRT2 == other
    assert hash(SQRT2) == hash(other)
    assert SQRT2 != NEG_SQRT2
    assert NEG_SQRT2 < F(0) < SQRT2
    assert SQRT2 < F(3, 2)
    assert F(7, 5) < SQRT2


def test_algebraic_root_strips_rational_factors():
    # isolating sqrt(2) inside (x - 2)(x^2 - 2) drops the rational factor
    p = Polynomial.of(-2, 1) * Polynomial.of(-2, 0, 1)
    got = algebraic_root(p, F(1), F(3, 2))
    assert got.poly == Polynomial.of(-2, 0, 1)
    assert got == SQRT2


def test_refine_produces_nested_enclosures():
    lo1, hi1 = refine(SQRT2, F(1, 10))
    lo2, hi2 = refine(SQRT2, F(1, 100))
    assert lo1 <= lo2 < hi2 <= hi1
    assert hi2 - lo2 <= F(1, 100)
    assert lo2 * lo2 <= 2 <= hi2 * hi2


def test_compare_is_a_total_order():
    vals = [SQRT2, F(1), NEG_SQRT2, F(-3, 2), F(3, 2)]
    s = sort_scalars(vals)
    for a, b in zip(s, s[1:]):
        assert compare(a, b) <= 0
    floats = [value_float(v) for v in s]
    assert floats == sorted(floats)


def test_separators_interleave():
    s = sort_scalars([NEG_SQRT2, F(0), SQRT2])
    seps = separators(s)
    assert len(seps) == 2
    assert compare(s[0], seps[0]) < 0 < compare(s[1], seps[0])
    assert compare(s[1], seps[1]) < 0 < compare(s[2], seps[1])


def test_root_value_collapses_rational_results():
    v = root_value(Polynomial.identity(), SQRT2)  # the value sqrt(2)
    sq = v * v
    assert sq.is_rational and sq.as_fraction() == F(2)
    prod = v * (-v)
    assert prod.is_rational and prod.as_fraction() == F(-2)


def test_root_value_arithmetic_and_sign():
    v = root_value(Polynomial.identity(), SQRT2)
    w = v + F(1)  # sqrt(2) + 1
    assert value_sign(w) > 0
    assert value_sign(w - w) == 0
    assert value_sign(F(3, 2) - v) > 0  # 3/2 > sqrt(2)
    assert value_sign(F(7, 5) - v) < 0  # 7/5 < sqrt(2)


def test_exact_sum_mixes_rationals_and_roots():
    v = root_value(Polynomial.identity(), SQRT2)
    total = exact_sum([F(1, 2), v, F(1, 2), -v])
    assert total == F(1)
    sym = exact_sum([v, v, F(-1)])  # 2*sqrt(2) - 1
    assert value_sign(sym) > 0
    lo, hi = value_enclosure(sym, F(1, 10**13))
    assert hi - lo <= F(1, 10**13)
    assert lo <= F(2) * F(14142135623731, 10**13) - 1 <= hi + F(1, 10**10)


def test_exact_sum_combines_conjugate_contributions():
    # sqrt(2) + (2 - sqrt(2)) must collapse to the literal rational 2
    v = root_value(Polynomial.identity(), SQRT2)
    w = root_value(Polynomial.of(2, -1), SQRT2)
    total = exact_sum([v, w])
    assert total == F(2)
    assert isinstance(total, F)


def test_value_enclosure_hits_requested_width():
    v = root_value(Polynomial.of(0, 0, 1), SQRT2)  # evaluates to 2 exactly
    lo, hi = value_enclosure(v, F(1, 10**12))
    assert lo <= F(2) <= hi
    assert hi - lo <= F(1, 10**12)


def test_decimal_string_is_exact_rounding():
    assert decimal_string(F(9, 16), 6) == "0.562500"
    assert decimal_string(F(1, 3), 4) == "0.3333"
    assert decimal_string(F(-1, 3), 4) == "-0.3333"
    assert decimal_string(F(2), 2) == "2.00"


def test_algebraic_requires_sign_change():
    with pytest.raises(ValueError):
        algebraic_root(Polynomial.of(-2, 0, 1), F(2), F(3))
