"""Monogenity certificates for monic integer trinomials x**n + a*x**m + b.

The analysis pipeline produces one of four typed verdicts, each carrying
machine-checkable evidence:

* ``FieldNotMonogenic``: a prime p is a common index divisor of the field
  K = Q[x]/(F) — more primes of residue degree d above p than F_p has monic
  irreducibles of degree d — so no generator of Z_K exists at all.  The
  congruence screens only predict this; the verdict is emitted only after
  the polygon engine re-derives the splitting and confirms the count.
* ``PolyNotMonogenicFieldMonogenic``: F itself is not monogenic (its polygon
  index is positive) but an explicit alpha = theta**x / p**y is proved to
  generate Z_K via a p-Eisenstein minimal polynomial, with the stripped
  discriminant certified squarefree.
* ``PolyNotMonogenicFieldConditional``: same alpha construction, but the
  squarefree test on the stripped discriminant was inconclusive.
* ``Inconclusive``: no criterion applied; exact polygon index bounds for
  the small primes with nu_p(disc) >= 2 are attached as partial data.

Everything is exact integer arithmetic; nothing is sampled or approximated.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass

from . import newton, ore
from .newton import MalformedInput
from .exactnum import (
    count_monic_irreducibles,
    dioph_solve,
    is_certified_prime,
    perfect_power,
    strip_p,
    trial_factor,
    valp,
)
from .ore import OreFactorization
from .polyring import PolyZ, phi_expand, power_charpoly


class InternalContradiction(RuntimeError):
    """A result the supporting theory guarantees failed to verify.

    This always signals an implementation bug (or an unsound input sneaked
    past a precondition), never a legitimate mathematical outcome, so it is
    an exception rather than a verdict.
    """


DEFAULT_SF_BOUND = 10**6

_SF_BOUND_ENV = "TRINOGEN_SF_BOUND"


def _sf_bound() -> int:
    raw = os.environ.get(_SF_BOUND_ENV)
    if raw is None:
        return DEFAULT_SF_BOUND
    try:
        bound = int(raw)
    except ValueError as exc:
        raise ValueError(f"{_SF_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if bound < 2:
        raise ValueError(f"{_SF_BOUND_ENV} must be >= 2, got {bound}")
    return bound


@dataclass(frozen=True)
class Trinomial:
    """x**n + a*x**m + b with n > m >= 1 and b != 0."""

    n: int
    m: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 2 or not 1 <= self.m < self.n:
            raise ValueError(f"need n >= 2 and 1 <= m < n, got n={self.n}, m={self.m}")
        if self.b == 0:
            raise ValueError("b must be nonzero")

    @property
    def d0(self) -> int:
        return math.gcd(self.n, self.m)

    @property
    def n1(self) -> int:
        return self.n // self.d0

    @property
    def m1(self) -> int:
        return self.m // self.d0

    @property
    def r(self) -> int | None:
        """r with n = 2**r, or None when n is not a power of two."""
        n = self.n
        if n & (n - 1) == 0:
            return n.bit_length() - 1
        return None

    def poly(self) -> PolyZ:
        coeffs = [0] * (self.n + 1)
        coeffs[0] = self.b
        coeffs[self.m] += self.a
        coeffs[self.n] += 1
        return PolyZ(coeffs)

    def __str__(self) -> str:
        def term(c, e):
            if c == 0:
                return ""
            xs = "1" if e == 0 else ("x" if e == 1 else f"x^{e}")
            if e == 0:
                body = str(abs(c))
            else:
                body = xs if abs(c) == 1 else f"{abs(c)}*{xs}"
            return (" - " if c < 0 else " + ") + body

        return f"x^{self.n}" + term(self.a, self.m) + term(self.b, 0)


DISC_FORMULA = (
    "(-1)^(n*(n-1)/2) * b^(m-1) * "
    "(n^n1 * b^(n1-m1) - (-1)^m1 * m^m1 * (m-n)^(n1-m1) * a^n1)^d0"
)


def disc_trinomial(T: Trinomial) -> int:
    """Discriminant of the trinomial, in closed form.

    Uses the reading of the closed form that agrees with the resultant
    definition (verified against polyring.discriminant): the bases of the
    inner powers are n and m themselves, with exponents n1 and m1.
    """
    n, m, a, b = T.n, T.m, T.a, T.b
    d0, n1, m1 = T.d0, T.n1, T.m1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    inner = n**n1 * b ** (n1 - m1) - (-1) ** m1 * m**m1 * (m - n) ** (n1 - m1) * a**n1
    return sign * b ** (m - 1) * inner**d0


class SquarefreeStatus(enum.Enum):
    SQUARE_FREE = "SquareFree"
    NOT_SQUARE_FREE = "NotSquareFree"
    UNKNOWN = "Unknown"


def squarefree_status(t: int, bound: int | None = None) -> SquarefreeStatus:
    """Best-effort squarefree certificate for a nonzero integer.

    Trial division up to ``bound`` (default 10**6, overridable via the
    TRINOGEN_SF_BOUND environment variable), then a perfect-power check and
    a primality test on the cofactor.  SquareFree is returned only when the
    factorization into distinct primes is fully certified; a probable prime
    above the deterministic-test range yields Unknown, as does an
    unfactored composite cofactor.
    """
    if t == 0:
        raise ValueError("squarefree status of 0 is undefined")
    t = abs(t)
    if t == 1:
        return SquarefreeStatus.SQUARE_FREE
    if bound is None:
        bound = _sf_bound()
    small, cofactor = trial_factor(t, bound)
    if any(e >= 2 for _, e in small):
        return SquarefreeStatus.NOT_SQUARE_FREE
    if cofactor == 1:
        return SquarefreeStatus.SQUARE_FREE
    if perfect_power(cofactor) is not None:
        return SquarefreeStatus.NOT_SQUARE_FREE
    if is_certified_prime(cofactor):
        return SquarefreeStatus.SQUARE_FREE
    return SquarefreeStatus.UNKNOWN


# -- irreducibility certificates -------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Why F is irreducible over Q.

    route = "eisenstein": p divides a and b, p**2 does not divide b.
    route = "one_sided_polygon": the phi = x polygon at p is a single side
    of degree 1 (gcd(n, nu_p(b)) = 1 and n*nu_p(a) > (n-m)*nu_p(b)), which
    forces irreducibility over the p-adic numbers already.
    """

    route: str
    p: int


def _candidate_primes(T: Trinomial, bound: int) -> list[int]:
    """Primes dividing both a and b (or just b when a = 0), ascending.

    The scan is bounded: primes found by trial division up to ``bound``
    plus a fully certified prime cofactor, so very large prime divisors
    beyond the bound may be missed (the verdict then degrades gracefully).
    """
    base = abs(T.b) if T.a == 0 else math.gcd(abs(T.a), abs(T.b))
    if base <= 1:
        return []
    small, cofactor = trial_factor(base, bound)
    out = [p for p, _ in small]
    if cofactor > 1 and is_certified_prime(cofactor):
        out.append(cofactor)
    return out


def _one_sided_hypotheses(T: Trinomial, p: int) -> bool:
    k = valp(p, T.b)
    if math.gcd(T.n, k) != 1:
        return False
    if T.a == 0:
        return True
    return T.n * valp(p, T.a) > (T.n - T.m) * k


def irreducibility_certificate(T: Trinomial) -> IrreducibilityCertificate | None:
    """Certify irreducibility over Q, or return None (never claims reducibility).

    Two routes, tried for each candidate prime in increasing order:
    a p-Eisenstein check, then the one-sided degree-1 polygon criterion.
    Both claims are re-verified on the actual polynomial before returning.
    """
    bound = _sf_bound()
    for p in _candidate_primes(T, bound):
        k = valp(p, T.b)
        if k == 1 and (T.a == 0 or valp(p, T.a) >= 1):
            if not _is_eisenstein(T.poly(), p):  # pragma: no cover - direct check
                raise InternalContradiction("Eisenstein conditions failed recheck")
            return IrreducibilityCertificate(route="eisenstein", p=p)
        if _one_sided_hypotheses(T, p):
            dev = phi_expand(T.poly(), PolyZ((0, 1)), p)
            polygon = newton.principal_polygon(
                newton.point_cloud(dev), phi=PolyZ((0, 1)), p=p
            )
            if len(polygon.sides) != 1 or polygon.sides[0].d != 1:
                raise InternalContradiction(
                    "one-sided degree-1 polygon hypothesis failed recheck"
                )
            return IrreducibilityCertificate(route="one_sided_polygon", p=p)
    return None


def _is_eisenstein(F: PolyZ, p: int) -> bool:
    if not F.is_monic() or F.degree < 1:
        return False
    if valp(p, F[0]) != 1:
        return False
    return all(F[i] % p == 0 for i in range(1, F.degree))


# -- the alpha = theta**x / p**y generator construction ---------------------------


@dataclass(frozen=True)
class AlphaCert:
    """Certificate that alpha = theta**x / p**y generates the ring of integers.

    H is the exact minimal polynomial of alpha over Q: the characteristic
    polynomial of theta**x with its coefficients rescaled by powers of p.
    ``eisenstein_ok`` records that H passed the p-Eisenstein check, which
    simultaneously proves H irreducible (hence minimal) and nu_p-integrality.
    ``deltap_status`` is the squarefree status of disc(F) with its p-part
    removed; SquareFree upgrades the verdict to an unconditional one.
    """

    p: int
    k: int
    x: int
    y: int
    H: PolyZ
    eisenstein_ok: bool
    deltap_status: SquarefreeStatus
    polygon_index: int


def _build_alpha_cert(T: Trinomial, p: int, k: int, disc: int) -> AlphaCert:
    n = T.n
    F = T.poly()

    # The phi = x polygon must be a single side of degree 1 whose lattice
    # index is (n-1)(k-1)/2; verified, not assumed.
    dev = phi_expand(F, PolyZ((0, 1)), p)
    polygon = newton.principal_polygon(newton.point_cloud(dev), phi=PolyZ((0, 1)), p=p)
    expected = (n - 1) * (k - 1) // 2
    if (
        len(polygon.sides) != 1
        or polygon.sides[0].d != 1
        or newton.phi_index(polygon, 1) != expected
        or expected < 1
    ):
        raise InternalContradiction("alpha-generator polygon shape failed recheck")

    x, y = dioph_solve(k, n)
    G = power_charpoly(F, x)
    coeffs = []
    for i, c in enumerate(G.coeffs):
        scale = p ** (y * (n - i))
        q, rem = divmod(c, scale)
        if rem:
            raise InternalContradiction(
                "alpha minimal-polynomial rescaling was not integral"
            )
        coeffs.append(q)
    H = PolyZ(coeffs)
    if H.degree != n or not H.is_monic():
        raise InternalContradiction("alpha minimal polynomial has wrong shape")
    if not _is_eisenstein(H, p):
        raise InternalContradiction("alpha minimal polynomial is not p-Eisenstein")
    status = squarefree_status(strip_p(p, disc).unit_part)
    return AlphaCert(
        p=p,
        k=k,
        x=x,
        y=y,
        H=H,
        eisenstein_ok=True,
        deltap_status=status,
        polygon_index=expected,
    )


def check_alpha_generator(T: Trinomial, only_p: int | None = None) -> AlphaCert | None:
    """Find a prime p where alpha = theta**x / p**y provably generates Z_K.

    Hypotheses per prime: k = nu_p(b) >= 2, gcd(n, k) = 1, and
    n*nu_p(a) > (n-m)*k (automatic when a = 0).  Candidate primes are the
    divisors of gcd(a, b) in increasing order.  Among primes meeting the
    hypotheses, the first whose stripped discriminant is certified
    squarefree wins; failing that, the first with an Unknown status; a
    NotSquareFree status is reported only when no better prime exists.
    """
    disc = disc_trinomial(T)
    if disc == 0:
        return None
    candidates = [only_p] if only_p is not None else _candidate_primes(T, _sf_bound())
    fallback: AlphaCert | None = None
    for p in candidates:
        k = valp(p, T.b)
        if k < 2 or math.gcd(T.n, k) != 1:
            continue
        if not _one_sided_hypotheses(T, p):
            continue
        cert = _build_alpha_cert(T, p, k, disc)
        if cert.deltap_status is SquarefreeStatus.SQUARE_FREE:
            return cert
        if fallback is None or (
            fallback.deltap_status is SquarefreeStatus.NOT_SQUARE_FREE
            and cert.deltap_status is SquarefreeStatus.UNKNOWN
        ):
            fallback = cert
    return fallback


def check_alpha_generator_pow2(
    r: int, m: int, a: int, b: int
) -> tuple[bool, AlphaCert | None]:
    """Degree-2**r specialization of the alpha-generator criterion.

    Applicable when some prime p has nu_p(a) >= nu_p(b) >= 3 with nu_p(b)
    odd and the stripped discriminant not provably squarefull: those
    hypotheses imply the general ones (gcd(2**r, odd) = 1 and
    2**r * nu_p(a) >= 2**r * nu_p(b) > (2**r - m) * nu_p(b)), so the
    construction is delegated to check_alpha_generator at that prime.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    T = Trinomial(n=2**r, m=m, a=a, b=b)
    for p in _candidate_primes(T, _sf_bound()):
        if a != 0 and valp(p, a) < valp(p, b):
            continue
        k = valp(p, b)
        if k < 3 or k % 2 == 0:
            continue
        if math.gcd(T.n, k) != 1 or not _one_sided_hypotheses(T, p):
            raise InternalContradiction(
                "power-of-two hypotheses failed to imply the general ones"
            )
        cert = check_alpha_generator(T, only_p=p)
        if cert is None:  # pragma: no cover - hypotheses were just verified
            raise InternalContradiction("delegated alpha construction vanished")
        if cert.deltap_status is not SquarefreeStatus.NOT_SQUARE_FREE:
            return True, cert
    return False, None


# -- congruence obstructions for n = 2**r, m = 1 ----------------------------------


class CongruenceCase(enum.Enum):
    MOD8 = "mod8"
    MOD16 = "mod16"
    MOD32 = "mod32"


@dataclass(frozen=True)
class CongruenceWitness:
    """The matched congruence pattern, with the witnessing residues."""

    case: CongruenceCase
    modulus: int
    a_residue: int
    b_residue: int


def check_congruence_obstruction(r: int, a: int, b: int) -> CongruenceWitness | None:
    """Screen x**(2**r) + a*x + b for a mod-2 common-index-divisor pattern.

    Three mutually exclusive residue patterns force (when F is irreducible)
    at least three primes of residue degree 1 above 2, which exceeds the
    two monic linear polynomials over F_2.  This is only the prediction;
    callers must confirm it with the polygon engine before emitting a
    field-level verdict.
    """
    if r >= 3 and a % 8 == 4 and b % 8 == 3:
        return CongruenceWitness(
            case=CongruenceCase.MOD8, modulus=8, a_residue=a % 8, b_residue=b % 8
        )
    if r >= 4 and a % 16 == 8 and b % 16 == 7:
        return CongruenceWitness(
            case=CongruenceCase.MOD16, modulus=16, a_residue=a % 16, b_residue=b % 16
        )
    if r >= 4 and (a % 32, b % 32) in {(0, 31), (16, 15)}:
        return CongruenceWitness(
            case=CongruenceCase.MOD32, modulus=32, a_residue=a % 32, b_residue=b % 32
        )
    return None


def check_pure_field_obstruction(r: int, b: int) -> bool:
    """Pure-field form of the congruence screen: x**(2**r) + b with b = -m.

    True iff r >= 4 and b = -1 (mod 32), which is exactly the (0, 31)
    pattern of the mod-32 case with a = 0.
    """
    return r >= 4 and b % 32 == 31


# -- common index divisors ---------------------------------------------------------


def common_index_divisor(fact: OreFactorization, n: int) -> tuple[bool, int | None]:
    """Does p divide the index of every generator of the field?

    Compares, for each residue degree d, the number P_d of primes above p
    with f = d against the number of monic irreducible degree-d polynomials
    over F_p.  Pigeonhole: a generator's minimal polynomial mod p needs P_d
    distinct such factors.  Returns (True, least offending d) or (False, None).
    """
    if not fact.regular:
        raise ValueError("common index divisor needs a complete (regular) splitting")
    counts: dict[int, int] = {}
    for factor in fact.factors:
        counts[factor.f] = counts.get(factor.f, 0) + 1
    for d in range(1, n + 1):
        if counts.get(d, 0) > count_monic_irreducibles(fact.p, d):
            return True, d
    return False, None


# -- the verdict pipeline ----------------------------------------------------------


class VerdictKind(enum.Enum):
    FIELD_NOT_MONOGENIC = "FieldNotMonogenic"
    POLY_NOT_MONOGENIC_FIELD_MONOGENIC = "PolyNotMonogenicFieldMonogenic"
    POLY_NOT_MONOGENIC_FIELD_CONDITIONAL = "PolyNotMonogenicFieldConditional"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class IndexBoundEntry:
    p: int
    bound: int
    exact: bool


@dataclass(frozen=True)
class MonogenityVerdict:
    """Typed outcome with every piece of evidence needed to re-check it."""

    trinomial: Trinomial
    kind: VerdictKind
    disc: int
    irreducibility: IrreducibilityCertificate | None
    irreducibility_assumed: bool
    trail: tuple[str, ...]
    p: int | None = None
    alpha: AlphaCert | None = None
    congruence: CongruenceWitness | None = None
    splitting: OreFactorization | None = None
    cid_degree: int | None = None
    cid_count: int | None = None
    cid_available: int | None = None
    reason: str | None = None
    index_bounds: tuple[IndexBoundEntry, ...] = ()


def _inconclusive_bounds(
    T: Trinomial, disc: int, certified: bool
) -> tuple[tuple[IndexBoundEntry, ...], str | None]:
    """Exact polygon index bounds at the small primes with nu_p(disc) >= 2.

    Returns the bound entries plus a reducibility proof message when the
    engine detects an exact rational factor along the way.  With a real
    irreducibility certificate in hand such a detection is impossible, so
    it is escalated to an internal error instead of being reported.
    """
    small, _ = trial_factor(abs(disc), _sf_bound())
    entries = []
    proof: str | None = None
    for p, e in small:
        if e >= 2:
            try:
                bound, exact = ore.index_bound(T.poly(), p)
            except MalformedInput as exc:
                if certified:
                    raise InternalContradiction(
                        "irreducibility was certified but the engine found "
                        f"a rational factor: {exc}"
                    ) from exc
                proof = str(exc)
                continue
            entries.append(IndexBoundEntry(p=p, bound=bound, exact=exact))
    return tuple(entries), proof


def verdict(T: Trinomial, assume_irreducible: bool = False) -> MonogenityVerdict:
    """Run the full certificate pipeline on one trinomial.

    Congruence screens are confirmed by the polygon engine before any
    field-level claim; the alpha construction downgrades to a conditional
    verdict when the squarefree test is inconclusive; everything else
    falls through to Inconclusive with partial index data attached.
    """
    disc = disc_trinomial(T)
    trail: list[str] = []
    if disc == 0:
        return MonogenityVerdict(
            trinomial=T,
            kind=VerdictKind.INCONCLUSIVE,
            disc=disc,
            irreducibility=None,
            irreducibility_assumed=assume_irreducible,
            trail=("zero-discriminant",),
            reason="discriminant is zero: the trinomial has repeated roots",
        )
    irr = irreducibility_certificate(T)
    if irr is not None:
        trail.append(f"irreducible({irr.route}, p={irr.p})")
    elif assume_irreducible:
        trail.append("irreducible(assumed)")
    else:
        return MonogenityVerdict(
            trinomial=T,
            kind=VerdictKind.INCONCLUSIVE,
            disc=disc,
            irreducibility=None,
            irreducibility_assumed=False,
            trail=tuple(trail) + ("irreducibility-not-certified",),
            reason="irreducibility could not be certified; "
            "rerun with the assume-irreducible flag to proceed anyway",
        )

    r = T.r
    if r is not None and T.m == 1:
        witness = check_congruence_obstruction(r, T.a, T.b)
        if witness is not None:
            trail.append(f"congruence-screen({witness.case.value})")
            confirmed = True
            problem = None
            try:
                fact = ore.factor_p(T.poly(), 2)
            except MalformedInput as exc:
                confirmed = False
                problem = str(exc)
                fact = None
            else:
                if not fact.regular:
                    confirmed = False
                    problem = "the polygon data at 2 is not regular"
                else:
                    divides, d = common_index_divisor(fact, T.n)
                    p1 = sum(1 for f in fact.factors if f.f == 1)
                    if not divides or d != 1 or p1 < 3:
                        confirmed = False
                        problem = "no common index divisor was found at 2"
            if not confirmed:
                # A certified-irreducible input failing engine confirmation
                # means the code is wrong; a merely assumed one means the
                # assumption was wrong, which is the user's honest answer.
                if irr is not None:
                    raise InternalContradiction(
                        f"congruence screen matched but {problem}"
                    )
                trail.append("assumption-contradicted")
                return MonogenityVerdict(
                    trinomial=T,
                    kind=VerdictKind.INCONCLUSIVE,
                    disc=disc,
                    irreducibility=None,
                    irreducibility_assumed=True,
                    trail=tuple(trail),
                    congruence=witness,
                    reason="irreducibility was assumed but could not hold: "
                    + problem,
                )
            trail.append(f"common-index-divisor(p=2, d=1, primes={p1} > 2)")
            return MonogenityVerdict(
                trinomial=T,
                kind=VerdictKind.FIELD_NOT_MONOGENIC,
                disc=disc,
                irreducibility=irr,
                irreducibility_assumed=assume_irreducible and irr is None,
                trail=tuple(trail),
                p=2,
                congruence=witness,
                splitting=fact,
                cid_degree=d,
                cid_count=p1,
                cid_available=count_monic_irreducibles(2, 1),
            )

    alpha = check_alpha_generator(T)
    if alpha is not None and alpha.deltap_status is not SquarefreeStatus.NOT_SQUARE_FREE:
        trail.append(f"alpha-generator(p={alpha.p}, x={alpha.x}, y={alpha.y})")
        if alpha.deltap_status is SquarefreeStatus.SQUARE_FREE:
            kind = VerdictKind.POLY_NOT_MONOGENIC_FIELD_MONOGENIC
            trail.append(f"stripped-discriminant-squarefree(p={alpha.p})")
        else:
            kind = VerdictKind.POLY_NOT_MONOGENIC_FIELD_CONDITIONAL
            trail.append(f"stripped-discriminant-unresolved(p={alpha.p})")
        return MonogenityVerdict(
            trinomial=T,
            kind=kind,
            disc=disc,
            irreducibility=irr,
            irreducibility_assumed=assume_irreducible and irr is None,
            trail=tuple(trail),
            p=alpha.p,
            alpha=alpha,
        )

    bounds, reducibility_proof = _inconclusive_bounds(T, disc, certified=irr is not None)
    if reducibility_proof is not None:
        trail.append("assumption-contradicted")
        return MonogenityVerdict(
            trinomial=T,
            kind=VerdictKind.INCONCLUSIVE,
            disc=disc,
            irreducibility=None,
            irreducibility_assumed=True,
            trail=tuple(trail),
            reason="irreducibility was assumed but could not hold: "
            + reducibility_proof,
            index_bounds=bounds,
        )
    trail.append("no-criterion-applied")
    return MonogenityVerdict(
        trinomial=T,
        kind=VerdictKind.INCONCLUSIVE,
        disc=disc,
        irreducibility=irr,
        irreducibility_assumed=assume_irreducible and irr is None,
        trail=tuple(trail),
        reason="no implemented criterion covers this trinomial",
        index_bounds=bounds,
    )


analyze_trinomial = verdict
