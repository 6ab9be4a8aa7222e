"""Shared test helpers: seeded generators and independent oracles.

Oracles here are deliberately written against third-party code (sympy) or
from-scratch brute force so they share no logic with the package under test.
"""

from __future__ import annotations

import random

import pytest

from trinogen.monogenity import Trinomial
from trinogen.polyring import PolyZ


def random_trinomial(rng: random.Random, max_n: int = 64) -> Trinomial:
    """A random valid trinomial x^n + a*x^m + b with n <= max_n."""
    while True:
        n = rng.randint(2, max_n)
        m = rng.randint(1, n - 1)
        a = rng.randint(-50, 50)
        b = rng.randint(-50, 50)
        if b != 0:
            return Trinomial(n=n, m=m, a=a, b=b)


def random_polyz(rng: random.Random, max_deg: int = 8, span: int = 30) -> PolyZ:
    """A random nonzero integer polynomial."""
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = [rng.randint(-span, span) for _ in range(deg + 1)]
        f = PolyZ(coeffs)
        if not f.is_zero():
            return f


def random_monic_polyz(rng: random.Random, deg: int, span: int = 30) -> PolyZ:
    coeffs = [rng.randint(-span, span) for _ in range(deg)] + [1]
    return PolyZ(coeffs)


@pytest.fixture
def rng() -> random.Random:
    """Fresh deterministic generator per test."""
    return random.Random(0xC0FFEE)


def sympy_poly(f: PolyZ):
    """The same polynomial as a sympy Poly in x over ZZ."""
    import sympy

    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(f.coeffs)), x, domain="ZZ")
