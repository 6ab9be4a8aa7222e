"""Exact integer arithmetic helpers.

Everything here is plain ``int`` arithmetic: p-adic valuations, stripping
prime powers, deterministic primality testing, bounded trial division,
counting monic irreducible polynomials over a prime field, and the linear
Diophantine solver used to build power-quotient generators.  No floats are
used anywhere; the valuation of zero is the distinguished :data:`INFINITY`
object rather than a sentinel integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class NotCoprime(ValueError):
    """Raised when a modular inverse required by dioph_solve does not exist."""


class Infinity:
    """The valuation of zero.

    Compares strictly above every integer and absorbs addition, which is all
    the polygon code ever does with it.  A single shared instance is exposed
    as :data:`INFINITY`.
    """

    _instance = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __add__(self, other: object) -> "Infinity":
        return self

    __radd__ = __add__

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = Infinity()

# A valuation is either a non-negative int or INFINITY (only for input 0).
Valuation = "int | Infinity"


def is_finite(v) -> bool:
    """True iff the valuation ``v`` is an actual integer."""
    return not isinstance(v, Infinity)


def valp(p: int, t: int):
    """p-adic valuation of ``t``; INFINITY iff t == 0.

    ``p`` must be at least 2 (and prime for the result to be a valuation;
    the engine only ever calls this with verified primes).
    """
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if t == 0:
        return INFINITY
    v = 0
    while t % p == 0:
        t //= p
        v += 1
    return v


@dataclass(frozen=True)
class StrippedInt:
    """t = p**nu * unit_part with p not dividing unit_part."""

    nu: int
    unit_part: int


def strip_p(p: int, t: int) -> StrippedInt:
    """Strip all factors of ``p`` out of the nonzero integer ``t``."""
    if t == 0:
        raise ValueError("cannot strip a prime out of zero")
    nu = 0
    while t % p == 0:
        t //= p
        nu += 1
    return StrippedInt(nu, t)


def binom_val2(r: int, j: int) -> int:
    """2-adic valuation of binomial(2**r, j) for 1 <= j <= 2**r - 1.

    Equals r - valp(2, j): of the factors in C(2^r, j) = (2^r / j) * C(2^r - 1, j - 1),
    the second is odd because every base-2 digit of j - 1 is dominated by
    2^r - 1 (Kummer: no carries).
    """
    if not 1 <= j <= (1 << r) - 1:
        raise ValueError(f"j={j} out of range for r={r}")
    return r - valp(2, j)


def _divisors(d: int) -> list[int]:
    out = []
    i = 1
    while i * i <= d:
        if d % i == 0:
            out.append(i)
            if i != d // i:
                out.append(d // i)
        i += 1
    out.sort()
    return out


def _mobius(d: int) -> int:
    if d == 1:
        return 1
    mu = 1
    i = 2
    while i * i <= d:
        if d % i == 0:
            d //= i
            if d % i == 0:
                return 0
            mu = -mu
        i += 1
    if d > 1:
        mu = -mu
    return mu


def count_monic_irreducibles(p: int, d: int) -> int:
    """Number of monic irreducible degree-d polynomials over F_p.

    Standard Moebius inversion of sum_{e | d} e * N_p(e) = p**d.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    total = sum(_mobius(e) * p ** (d // e) for e in _divisors(d))
    count, rem = divmod(total, d)
    if rem:  # pragma: no cover - would contradict the inversion identity
        raise ArithmeticError("necklace count was not divisible by d")
    return count


def dioph_solve(k: int, n: int) -> tuple[int, int]:
    """The unique (x, y) with k*x - n*y == 1 and 0 <= x < n.

    Raises NotCoprime when gcd(k, n) != 1.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(k, n) != 1:
        raise NotCoprime(f"gcd({k}, {n}) != 1")
    x = pow(k, -1, n)
    y = (k * x - 1) // n
    return x, y


# Below this bound the fixed Miller-Rabin base set is known to be exhaustive,
# so a pass is a primality certificate rather than a probabilistic claim.
MR_CERTIFIED_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _mr_witness(a: int, n: int, d: int, s: int) -> bool:
    """True iff ``a`` witnesses that ``n`` is composite."""
    t = pow(a, d, n)
    if t == 1 or t == n - 1:
        return False
    for _ in range(s - 1):
        t = t * t % n
        if t == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set.

    Deterministic (a genuine certificate) for n < MR_CERTIFIED_BOUND; above
    that the verdict is "probable prime" and callers that need certainty
    must check is_certified_prime as well.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < MR_CERTIFIED_BOUND else _MR_BASES + _MR_EXTRA_BASES
    return not any(_mr_witness(a % n, n, d, s) for a in bases)


def is_certified_prime(n: int) -> bool:
    """True iff ``n`` is prime and small enough for the test to be exhaustive."""
    return n < MR_CERTIFIED_BOUND and is_probable_prime(n)


@lru_cache(maxsize=4)
def primes_below(bound: int) -> tuple[int, ...]:
    """All primes < bound, by sieve.  Cached; bounds in use are few."""
    if bound <= 2:
        return ()
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound, i)))
    return tuple(i for i in range(bound) if sieve[i])


def trial_factor(t: int, bound: int) -> tuple[list[tuple[int, int]], int]:
    """Factor |t| by trial division with primes < bound.

    Returns (factors, cofactor) where factors is a list of (p, multiplicity)
    pairs in increasing p and cofactor is the unfactored remainder (1 when
    the factorization is complete).  t must be nonzero.
    """
    if t == 0:
        raise ValueError("cannot factor zero")
    t = abs(t)
    out: list[tuple[int, int]] = []
    for p in primes_below(bound):
        if p * p > t:
            break
        if t % p == 0:
            nu = 0
            while t % p == 0:
                t //= p
                nu += 1
            out.append((p, nu))
    if 1 < t < bound * bound:
        # Either the loop broke at p*p > t (all smaller primes tried, so t is
        # prime) or every prime below the bound was tried, in which case all
        # factors of t are >= bound and a composite t would be >= bound**2.
        out.append((t, 1))
        t = 1
    return out, t


def iroot(t: int, k: int) -> int:
    """Floor of the k-th root of the non-negative integer ``t``."""
    if t < 0 or k < 1:
        raise ValueError("iroot needs t >= 0 and k >= 1")
    if k == 1 or t < 2:
        return t
    if k == 2:
        return math.isqrt(t)
    x = 1 << (t.bit_length() + k - 1) // k  # upper-ish start for Newton
    while True:
        y = ((k - 1) * x + t // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > t:
        x -= 1
    return x


def perfect_power(t: int) -> tuple[int, int] | None:
    """(base, k) with base**k == t and k >= 2, or None.  Requires t >= 2."""
    if t < 2:
        raise ValueError("perfect_power needs t >= 2")
    for k in primes_below(t.bit_length() + 1):
        r = iroot(t, k)
        if r**k == t:
            deeper = perfect_power(r) if r >= 2 else None
            if deeper is not None:
                return deeper[0], deeper[1] * k
            return r, k
    return None
