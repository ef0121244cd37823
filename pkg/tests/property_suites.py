"""Seeded invariant suites shared by the property tests and the acceptance gate.

Each suite checks one library-wide law on ``instances`` independently seeded
random inputs, raising AssertionError on the first violation and returning
the number of instances exercised.  Keeping them here lets the acceptance
tests re-run the exact same corpora under a time budget.
"""

from fractions import Fraction

from tropicalc import (
    classify,
    entire_decomposition,
    evaluate,
    linear_combine,
    normalize,
    omega_at,
    randgen,
    scan,
    shift,
    tropical_plus,
)


def _sample_points(*fns, extra=()):
    pts = {Fraction(0), Fraction(7, 3), Fraction(-11, 5)}
    for f in fns:
        for bp in f.breakpoints:
            pts.add(bp)
            pts.add(bp - Fraction(1, 3))
            pts.add(bp + Fraction(1, 3))
    pts.update(extra)
    return sorted(pts)


def suite_tropical_algebra(instances: int = 100) -> int:
    """max is commutative/associative/idempotent; + distributes over max."""
    checked = 0
    for seed in range(instances):
        rnd = randgen.rng(10_000 + seed)
        f = randgen.random_function(rnd, degree=2, max_breaks=3)
        g = randgen.random_function(rnd, degree=2, max_breaks=3)
        h = randgen.random_function(rnd, degree=2, max_breaks=3)
        fg = tropical_plus(f, g)
        gf = tropical_plus(g, f)
        assoc_l = tropical_plus(fg, h)
        assoc_r = tropical_plus(f, tropical_plus(g, h))
        idem = tropical_plus(f, f)
        dist_l = linear_combine(f, tropical_plus(g, h), 1, 1)
        dist_r = tropical_plus(
            linear_combine(f, g, 1, 1), linear_combine(f, h, 1, 1)
        )
        assert normalize(fg) == normalize(gf)
        assert normalize(assoc_l) == normalize(assoc_r)
        assert normalize(idem) == normalize(f)
        for x in _sample_points(f, g, h):
            vf, vg, vh = evaluate(f, x), evaluate(g, x), evaluate(h, x)
            assert evaluate(fg, x) == max(vf, vg) == evaluate(gf, x)
            assert evaluate(assoc_l, x) == max(vf, vg, vh)
            assert evaluate(assoc_r, x) == max(vf, vg, vh)
            assert evaluate(idem, x) == vf
            assert evaluate(dist_l, x) == vf + max(vg, vh)
            assert evaluate(dist_r, x) == vf + max(vg, vh)
        checked += 1
    return checked


def suite_omega_additivity(instances: int = 100) -> int:
    """Jump profiles add componentwise under pointwise sums."""
    checked = 0
    for seed in range(instances):
        rnd = randgen.rng(20_000 + seed)
        f = randgen.random_function(rnd, degree=3, max_breaks=3)
        g = randgen.random_function(rnd, degree=3, max_breaks=3)
        s = linear_combine(f, g, 1, 1)
        n = max(1, f.degree_bound, g.degree_bound, s.degree_bound)
        pts = {Fraction(0), randgen.random_rational(rnd)}
        pts.update(f.breakpoints)
        pts.update(g.breakpoints)
        for x in pts:
            pf = omega_at(f, x, n)
            pg = omega_at(g, x, n)
            ps = omega_at(s, x, n)
            for j in range(1, n + 1):
                assert ps.omega_of(j) == pf.omega_of(j) + pg.omega_of(j)
                assert ps.tau_of(j) == pf.tau_of(j) + pg.tau_of(j)
        checked += 1
    return checked


def suite_shift_compatibility(instances: int = 100) -> int:
    """Jumps of x -> f(x+k) match those of f when |x| > |k| or the order is odd."""
    checked = 0
    for seed in range(instances):
        rnd = randgen.rng(30_000 + seed)
        f = randgen.random_function(rnd, degree=3, max_breaks=3)
        k = randgen.random_rational(rnd, -3, 3)
        g = shift(f, k)
        n = max(1, f.degree_bound)
        pts = {Fraction(0), k, -k, randgen.random_rational(rnd)}
        pts.update(f.breakpoints)
        for x in pts:
            pf = omega_at(f, x, n)
            pg = omega_at(g, x - k, n)
            for j in range(1, n + 1):
                if abs(x) > abs(k) or j % 2 == 1:
                    assert pg.omega_of(j) == pf.omega_of(j), (x, k, j)
        checked += 1
    return checked


def suite_entire_midpoint(instances: int = 100) -> int:
    """Pole-free: (f(r)+f(-r))/2 >= f(0); equality when also root-free."""
    checked = 0
    for seed in range(instances):
        rnd = randgen.rng(40_000 + seed)
        f = randgen.random_entire(rnd)
        r = randgen.random_radius(rnd)
        mean_f = (evaluate(f, r) + evaluate(f, -r)) / 2
        assert mean_f >= evaluate(f, 0)
        g = randgen.random_gauge(rnd)
        assert classify(g).nowhere_vanishing_entire
        assert (evaluate(g, r) + evaluate(g, -r)) / 2 == evaluate(g, 0)
        checked += 1
    return checked


def suite_decomposition_roundtrip(instances: int = 100) -> int:
    """f = h - g with h, g pole-free, g's roots on f's poles, no shared roots."""
    checked = 0
    for seed in range(instances):
        rnd = randgen.rng(50_000 + seed)
        f = randgen.random_function(rnd, degree=3, max_breaks=4)
        h, g = entire_decomposition(f)
        assert classify(h).entire
        assert classify(g).entire
        assert normalize(linear_combine(h, g, 1, -1)) == normalize(f)
        g_roots = {(s.location, s.order): s.multiplicity for s in scan(g).roots()}
        f_poles = {(s.location, s.order): s.multiplicity for s in scan(f).poles()}
        assert g_roots == f_poles
        h_roots = {(s.location, s.order) for s in scan(h).roots()}
        assert not (h_roots & set(g_roots))
        checked += 1
    return checked


ALL_SUITES = (
    suite_tropical_algebra,
    suite_omega_additivity,
    suite_shift_compatibility,
    suite_entire_midpoint,
    suite_decomposition_roundtrip,
)
