"""Acceptance suite: frozen end-to-end expectations plus randomized identities.

Every assertion is exact integer arithmetic with zero tolerance.  The fixture
values were frozen from independent computations — sympy resultants and
factorizations, Fraction-arithmetic chord envelopes, exhaustive finite-field
enumerations, and direct binomial/companion-matrix recomputations — never from
the code under test.  Randomized identities run on fixed seeds so the suite is
fully deterministic.

One sub-assertion is expected to fail and marked strict-xfail: a recorded
factorization digest for the degree-16 fixture's odd discriminant part that
direct modular arithmetic refutes (see the test's reason string).  The true
frozen value is asserted, and passes, right next to it.
"""

import math
import random
from fractions import Fraction

import pytest

from trinogen.exactnum import (
    binom_val2,
    count_monic_irreducibles,
    strip_p,
    valp,
)
from trinogen.ffactor import factor as fq_factor
from trinogen.ffactor import is_irreducible as fq_is_irreducible
from trinogen.monogenity import (
    SquarefreeStatus,
    Trinomial,
    VerdictKind,
    check_alpha_generator,
    check_alpha_generator_pow2,
    check_congruence_obstruction,
    check_pure_field_obstruction,
    common_index_divisor,
    disc_trinomial,
    irreducibility_certificate,
    verdict,
)
from trinogen.newton import phi_index, principal_polygon, shifted_dev_2r
from trinogen.ore import factor_p, index_bound
from trinogen.polyring import PolyZ, discriminant, get_field, phi_expand

from conftest import sympy_poly


# -- fixture 1: x^8 + 8x + 8 — the polynomial is not monogenic, the field is ------


class TestDegree8AlphaGenerator:
    T = Trinomial(8, 1, 8, 8)

    def test_discriminant_exact(self):
        assert disc_trinomial(self.T) == 2**24 * 1273609

    def test_alpha_is_theta_cubed_over_two(self):
        cert = check_alpha_generator(self.T)
        assert cert is not None
        assert (cert.p, cert.x, cert.y) == (2, 3, 1)

    def test_alpha_min_poly_is_2_eisenstein(self):
        H = check_alpha_generator(self.T).H
        assert H.is_monic() and H.degree == 8
        assert H[0] % 2 == 0 and H[0] % 4 != 0
        assert all(H[i] % 2 == 0 for i in range(1, 8))

    def test_index_bound_exactly_seven(self):
        assert index_bound(self.T.poly(), 2) == (7, True)


# -- fixture 2: x^8 + 12x + 3 — 2 is a common index divisor ------------------------


class TestDegree8CommonIndexDivisor:
    T = Trinomial(8, 1, 12, 3)

    def test_irreducibility_is_eisenstein_at_3(self):
        cert = irreducibility_certificate(self.T)
        assert (cert.route, cert.p) == ("eisenstein", 3)

    def test_congruence_screen_matches_first_pattern(self):
        w = check_congruence_obstruction(3, 12, 3)
        assert w is not None and w.case.value == "mod8"

    def test_splitting_shape_at_2(self):
        fact = factor_p(self.T.poly(), 2)
        assert fact.regular
        shapes = sorted((f.e, f.f) for f in fact.factors)
        assert shapes == [(1, 1), (3, 1), (4, 1)]
        assert sum(e * f for e, f in shapes) == 8

    def test_common_index_divisor_by_pigeonhole(self):
        fact = factor_p(self.T.poly(), 2)
        assert common_index_divisor(fact, 8) == (True, 1)
        residue_degree_one = sum(1 for f in fact.factors if f.f == 1)
        assert residue_degree_one == 3
        assert count_monic_irreducibles(2, 1) == 2
        assert residue_degree_one > count_monic_irreducibles(2, 1)

    def test_verdict_field_not_monogenic_at_2(self):
        v = verdict(self.T)
        assert v.kind is VerdictKind.FIELD_NOT_MONOGENIC
        assert v.p == 2


# -- fixture 3: x^16 + 24x^15 + 8 — alpha = theta^11 / 4 ---------------------------


class TestDegree16HighMiddleAlphaGenerator:
    T = Trinomial(16, 15, 24, 8)

    def test_disc_two_valuation_is_ninety(self):
        assert strip_p(2, disc_trinomial(self.T)).nu == 90

    def test_odd_part_exact_value(self):
        # Frozen closed form of the odd cofactor, with its residues: it is
        # congruent to 5 mod 7 and 26 mod 43, so neither 7 nor 43 divides it.
        odd = strip_p(2, disc_trinomial(self.T)).unit_part
        assert odd == 2**19 - 3**31 * 5**15
        assert odd % 7 == 5 and odd % 43 == 26

    @pytest.mark.xfail(
        strict=True,
        reason="recorded digest 2^90 * 7 * 43 for this discriminant is wrong: "
        "the odd part of disc(x^16 + 24x^15 + 8) equals 2^19 - 3^31 * 5^15 = "
        "-18849896126829437255335087, which is 5 mod 7 and 26 mod 43, so it is "
        "divisible by neither 7 nor 43; kept as a strict expected failure so "
        "any change in the exact arithmetic is noticed",
    )
    def test_odd_part_recorded_digest(self):
        odd = strip_p(2, disc_trinomial(self.T)).unit_part
        assert odd % 7 == 0 and odd % 43 == 0

    def test_power_of_two_criterion_applies_at_2(self):
        ok, cert = check_alpha_generator_pow2(4, 15, 24, 8)
        assert ok and cert is not None
        assert cert.p == 2

    def test_alpha_is_theta_11_over_4(self):
        _, cert = check_alpha_generator_pow2(4, 15, 24, 8)
        assert (cert.x, cert.y) == (11, 2)

    def test_alpha_min_poly_is_2_eisenstein(self):
        _, cert = check_alpha_generator_pow2(4, 15, 24, 8)
        H = cert.H
        assert H.is_monic() and H.degree == 16
        assert H[0] % 2 == 0 and H[0] % 4 != 0
        assert all(H[i] % 2 == 0 for i in range(1, 16))


# -- fixture 4: x^64 - 65 — pure field that is not monogenic -----------------------


class TestDegree64PureField:
    T = Trinomial(64, 1, 0, -65)

    def test_pure_field_screen_fires(self):
        assert check_pure_field_obstruction(6, -65) is True

    def test_engine_confirmation_at_2(self):
        fact = factor_p(self.T.poly(), 2)
        assert fact.regular
        assert sum(1 for f in fact.factors if f.f == 1) >= 3
        exponents = {f.e for f in fact.factors}
        assert {2**5, 2**4, 2**3} <= exponents
        assert sum(f.e * f.f for f in fact.factors) == 64

    def test_verdict_field_not_monogenic_at_2(self):
        v = verdict(self.T)
        assert v.kind is VerdictKind.FIELD_NOT_MONOGENIC
        assert v.p == 2


# -- fixture 5: x^16 + 8x + 7 — four-sided polygon with a degree-1 witness ---------


class TestDegree16FourSidedPolygon:
    F = PolyZ([7, 8] + [0] * 14 + [1])

    def test_polygon_vertices(self):
        fact = factor_p(self.F, 2)
        pd = fact.evidence[0]
        assert pd.polygon.vertices == ((0, 4), (1, 3), (4, 2), (8, 1), (16, 0))

    def test_four_sides_each_degree_one(self):
        fact = factor_p(self.F, 2)
        sides = fact.evidence[0].polygon.sides
        assert len(sides) == 4
        assert [s.d for s in sides] == [1, 1, 1, 1]

    def test_shapes_and_residue_degree_one_count(self):
        fact = factor_p(self.F, 2)
        assert sum(f.e * f.f for f in fact.factors) == 16
        assert sum(1 for f in fact.factors if f.f == 1) == 4

    def test_common_index_divisor_witness(self):
        fact = factor_p(self.F, 2)
        assert common_index_divisor(fact, 16) == (True, 1)


# -- fixture 6: Dedekind's cubic x^3 + x^2 - 2x + 8 --------------------------------


class TestDedekindCubic:
    F = PolyZ([8, -2, 1, 1])

    def test_two_splits_completely(self):
        fact = factor_p(self.F, 2)
        assert fact.regular
        assert sorted((f.e, f.f) for f in fact.factors) == [(1, 1), (1, 1), (1, 1)]

    def test_pigeonhole_witness(self):
        fact = factor_p(self.F, 2)
        assert common_index_divisor(fact, 3) == (True, 1)
        assert sum(1 for f in fact.factors if f.f == 1) == 3
        assert count_monic_irreducibles(2, 1) == 2


# -- randomized identities (fixed seeds, exact arithmetic) -------------------------


def random_trinomial_any(rng, max_n=64, span=50):
    n = rng.randrange(2, max_n + 1)
    m = rng.randrange(1, n)
    a = rng.randrange(-span, span + 1)
    b = rng.choice([x for x in range(-span, span + 1) if x != 0])
    return Trinomial(n, m, a, b)


def random_certified_trinomial(rng):
    """Random trinomial biased so an irreducibility certificate exists."""
    while True:
        p0 = rng.choice((2, 3, 5))
        n = rng.choice((2, 3, 4, 5, 6, 8, 9, 12, 16))
        m = rng.randrange(1, n)
        u = rng.choice([x for x in range(-9, 10) if x % p0 != 0])
        if rng.random() < 0.5:
            # Eisenstein shape: nu_p0(b) = 1, p0 | a (or a = 0)
            b = p0 * u
            a = p0 * rng.randrange(-9, 10)
        else:
            # one-sided polygon shape: gcd(n, nu_p0(b)) = 1, deep a
            k = rng.choice([k for k in (1, 2, 3, 5) if math.gcd(n, k) == 1])
            b = p0**k * u
            a = 0 if rng.random() < 0.5 else p0 ** (k + 3) * rng.randrange(-4, 5)
        T = Trinomial(n, m, a, b)
        if irreducibility_certificate(T) is not None:
            return T


class TestDiscriminantIdentity:
    def test_closed_form_matches_resultant_oracle(self):
        rng = random.Random(0xD15C)
        for i in range(500):
            T = random_trinomial_any(rng)
            assert disc_trinomial(T) == discriminant(T.poly()), (i, T)

    def test_closed_form_matches_sympy(self):
        rng = random.Random(0xD15C + 1)
        for _ in range(100):
            T = random_trinomial_any(rng, max_n=12, span=30)
            assert disc_trinomial(T) == int(sympy_poly(T.poly()).discriminant())


class TestSplittingShapeIdentity:
    def test_shape_sums_and_index_bounds(self):
        # >= 500 certified-irreducible inputs; at each of p = 2, 3, 5 the
        # regular splittings must satisfy sum(e*f) = deg F, and the polygon
        # index bound must stay within half the discriminant valuation.
        rng = random.Random(0x5E55)
        regular_checks = 0
        for i in range(500):
            T = random_certified_trinomial(rng)
            disc = disc_trinomial(T)
            assert disc != 0
            for p in (2, 3, 5):
                fact = factor_p(T.poly(), p)
                if fact.regular:
                    regular_checks += 1
                    assert sum(f.e * f.f for f in fact.factors) == T.n, (i, T, p)
                bound, exact = index_bound(T.poly(), p)
                assert valp(p, disc) >= 2 * bound, (i, T, p)
        assert regular_checks >= 500


class TestIndexBoundWithinDiscValuation:
    def test_holds_for_arbitrary_inputs(self):
        # Unbiased inputs, including reducible ones: whenever the engine
        # completes, nu_p(disc) >= 2 * (polygon index bound).
        rng = random.Random(0xB0B0)
        checked = 0
        for _ in range(400):
            T = random_trinomial_any(rng, max_n=20, span=30)
            disc = disc_trinomial(T)
            if disc == 0:
                continue
            for p in (2, 3, 5):
                try:
                    bound, _ = index_bound(T.poly(), p)
                except ValueError:
                    continue  # exact rational factor detected: engine declines
                checked += 1
                assert valp(p, disc) >= 2 * bound, (T, p)
        assert checked >= 500


def chord_envelope(points, x) -> Fraction:
    """Lower convex envelope at abscissa x: minimum over all chords."""
    best = None
    for px, py in points:
        for qx, qy in points:
            if not px <= x <= qx:
                continue
            if px == qx:
                val = Fraction(min(py, qy))
            else:
                val = Fraction(py) + Fraction(qy - py, qx - px) * (x - px)
            if best is None or val < best:
                best = val
    assert best is not None
    return best


def polygon_ordinate(polygon, x) -> Fraction:
    for side in polygon.sides:
        if side.start[0] <= x <= side.end[0]:
            num, den = side.ordinate_num(x)
            return Fraction(num, den)
    if x == polygon.length:
        # zero-length principal part: the single vertex sits at ordinate 0
        return Fraction(0)
    raise AssertionError(f"abscissa {x} not covered")


def random_cloud(rng, max_pts=10, max_x=24, max_y=12):
    xs = sorted(rng.sample(range(max_x + 1), rng.randint(1, max_pts)))
    pts = [(x, rng.randint(0, max_y)) for x in xs]
    pts[rng.randrange(len(pts))] = (pts[rng.randrange(len(pts))][0], 0)
    # re-sort abscissas may collide after the overwrite; rebuild cleanly
    seen = {}
    for x, y in pts:
        seen[x] = min(y, seen.get(x, y))
    pts = sorted(seen.items())
    if all(y > 0 for _, y in pts):
        x0, _ = pts[0]
        pts[0] = (x0, 0)
    return pts


class TestHullOracle:
    def test_polygon_equals_chord_envelope(self):
        # The principal polygon is computed with integer cross products;
        # the oracle recomputes the envelope with Fraction chords.
        rng = random.Random(0x41D5)
        for i in range(1000):
            pts = random_cloud(rng)
            poly = principal_polygon(pts)
            if not poly.sides:
                # zero-length polygon: the first cloud point already has
                # ordinate 0, so there is no negative-slope part at all
                assert min(y for _, y in pts) == 0
                assert chord_envelope(pts, poly.vertices[0][0]) == 0
                continue
            start = poly.vertices[0][0]
            end = poly.vertices[-1][0]
            for x in range(start, end + 1):
                assert polygon_ordinate(poly, x) == chord_envelope(pts, x), (i, pts, x)
            # structural invariants: vertices are cloud points, slopes
            # strictly increase and stay negative, sides tile the range
            cloud = set(pts)
            assert all(v in cloud for v in poly.vertices)
            slopes = [Fraction(-s.h, s.e) for s in poly.sides]
            assert all(s < 0 for s in slopes)
            assert all(a < b for a, b in zip(slopes, slopes[1:]))
            assert all(
                poly.sides[j].end == poly.sides[j + 1].start
                for j in range(len(poly.sides) - 1)
            )


class TestPolygonIndexOracle:
    def test_matches_lattice_point_count(self):
        # phi-index = deg(phi) times the number of lattice points (x, y)
        # with x >= 1, 1 <= y <= envelope(x); counted here via Fraction floor.
        rng = random.Random(0x1A77)
        for _ in range(300):
            pts = random_cloud(rng, max_pts=8, max_x=16, max_y=10)
            poly = principal_polygon(pts)
            expected = 0
            start = poly.vertices[0][0]
            for x in range(max(1, start), poly.length + 1):
                expected += max(0, int(polygon_ordinate(poly, x)))
            for deg_phi in (1, 2, 3):
                assert phi_index(poly, deg_phi) == expected * deg_phi


class TestClosedFormDevelopment:
    def test_matches_generic_expansion_for_all_small_degrees(self):
        rng = random.Random(0xDEF)
        pairs = [(rng.randrange(-60, 61), rng.choice([x for x in range(-60, 61) if x != 0]))
                 for _ in range(200)]
        for r in range(1, 7):
            n = 2**r
            for a, b in pairs:
                fast = shifted_dev_2r(r, a, b)
                coeffs = [0] * (n + 1)
                coeffs[0] = b
                coeffs[1] += a
                coeffs[n] += 1
                generic = phi_expand(PolyZ(coeffs), PolyZ((-1, 1)), 2)
                assert fast.dev.terms == generic.terms, (r, a, b)
                assert fast.dev.vals == generic.vals, (r, a, b)
                assert fast.dev.phi == generic.phi
                assert fast.mu == generic.vals[1]
                assert fast.nu == generic.vals[0]


class TestBinomialValuation:
    def test_matches_direct_computation_up_to_r_10(self):
        for r in range(1, 11):
            n = 2**r
            for j in range(1, n):
                assert binom_val2(r, j) == valp(2, math.comb(n, j)), (r, j)


def enumerate_monic(field, d):
    from itertools import product

    for combo in product(range(field.order), repeat=d):
        yield field.poly_from_ints(list(combo) + [1])


def brute_irreducible(field, f) -> bool:
    if f.degree < 1:
        return False
    for e in range(1, f.degree // 2 + 1):
        for g in enumerate_monic(field, e):
            if (f % g).is_zero():
                return False
    return True


class TestIrreducibleCountIdentity:
    @pytest.mark.parametrize("p", [2, 3])
    def test_matches_exhaustive_enumeration(self, p):
        field = get_field(p)
        for d in range(1, 5):
            enumerated = sum(
                1 for f in enumerate_monic(field, d) if brute_irreducible(field, f)
            )
            assert count_monic_irreducibles(p, d) == enumerated, (p, d)


class TestFiniteFieldFactorization:
    FIELDS = [(2, None), (3, None), (5, None), (2, (1, 1, 1)), (3, (1, 0, 1))]

    def test_reconstruction_and_seed_independence(self):
        rng = random.Random(0xFAC7)
        total = 0
        for p, modulus in self.FIELDS:
            field = get_field(p, modulus)
            for _ in range(100):
                deg = rng.randint(1, 8)
                coeffs = [rng.randrange(field.order) for _ in range(deg)]
                coeffs.append(rng.randrange(1, field.order))
                f = field.poly_from_ints(coeffs)
                fact = fq_factor(f)
                total += 1
                assert fact.product() == f
                assert fact.unit == f.leading
                for g, mult in fact.factors:
                    assert g.is_monic() and mult >= 1 and fq_is_irreducible(g)
                for seed in (1, 7, 12345):
                    assert fq_factor(f, seed=seed) == fact
        assert total >= 500


# -- exact field invariants are out of scope by design -----------------------------


class TestScopeBoundary:
    def test_no_exact_field_invariant_api(self):
        # The library proves divisibility witnesses and index *bounds*; it
        # deliberately does not compute the exact field index, the field
        # discriminant, integral bases, or index-form equations, which need
        # machinery far beyond trinomial certificates.  Guard the surface so
        # nothing starts pretending otherwise.
        import trinogen
        from trinogen import monogenity, ore

        for name in (
            "field_index",
            "exact_field_index",
            "field_discriminant",
            "integral_basis",
            "index_form",
            "index_form_equation",
        ):
            assert not hasattr(trinogen, name)
            assert not hasattr(monogenity, name)
            assert not hasattr(ore, name)

    def test_substitute_witnesses_are_reported(self):
        # In place of exact invariants the pipeline emits: a common-index-
        # divisor witness (divisibility of every generator's index) ...
        v = verdict(Trinomial(8, 1, 12, 3))
        assert v.cid_degree == 1 and v.cid_count == 3 and v.cid_available == 2
        # ... exact-or-lower index bounds at the bad primes ...
        v = verdict(Trinomial(4, 1, 4, 4), assume_irreducible=True)
        assert v.index_bounds and all(e.bound >= 1 for e in v.index_bounds)
        # ... and squarefree statuses that admit honest uncertainty.
        v = verdict(Trinomial(16, 1, 8, 56))
        assert v.alpha.deltap_status is SquarefreeStatus.UNKNOWN
