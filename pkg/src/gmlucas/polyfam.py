"""Polynomial analogues of the number families.

m_0(x) = 2, m_1(x) = 3x, m_n(x) = 3x m_{n-1}(x) - 2 m_{n-2}(x); the Gaussian
family starts from Gm_0(x) = 2 + (3i/2)x and Gm_1(x) = 3x + 2i and satisfies
Gm_n(x) = m_n(x) + i m_{n-1}(x) for n >= 1.  Specializing x = 1 collapses
both families onto the number sequences.

The characteristic roots (3x +- sqrt(9x**2 - 8)) / 2 are irrational in x, so
the closed form is exposed only as a floating point spot check
(binet_numeric); every exact route stays in Z[1/2][i][x].
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterator

from .arith import Dyadic, GaussianDyadic, Poly, poly_eval
from .sequences import Method, explicit_summand


@dataclass(frozen=True)
class PolyTerm:
    index: int
    value: Poly
    method: Method


@dataclass(frozen=True)
class CharRoots:
    """Numeric characteristic roots at a real point x."""

    x: float
    lambda1: complex
    lambda2: complex


# Recurrence seeds.
MP0 = Poly((2,))
MP1 = Poly((0, 3))
GMP0 = Poly((2, GaussianDyadic(0, Dyadic(3, 1))))
GMP1 = Poly((GaussianDyadic(0, 2), 3))

_THREE_X = Poly((0, 3))
_HALF_I = GaussianDyadic(0, Dyadic(1, 1))


def poly_recurrence_term(seed0: Poly, seed1: Poly, n: int) -> Poly:
    """n-th entry of p_k = 3x p_{k-1} - 2 p_{k-2} from arbitrary seeds."""
    if n < 0:
        raise ValueError("poly_recurrence_term requires n >= 0")
    if n == 0:
        return seed0
    a, b = seed0, seed1
    for _ in range(n - 1):
        a, b = b, _THREE_X * b - 2 * a
    return b


def iter_ml_poly() -> Iterator[Poly]:
    """Yields m_0(x), m_1(x), m_2(x), ... without recomputing prefixes."""
    a, b = MP0, MP1
    yield a
    while True:
        yield b
        a, b = b, _THREE_X * b - 2 * a


def iter_gml_poly() -> Iterator[Poly]:
    a, b = GMP0, GMP1
    yield a
    while True:
        yield b
        a, b = b, _THREE_X * b - 2 * a


def _ml_poly(n: int) -> Poly:
    return poly_recurrence_term(MP0, MP1, n)


def ml_poly(n: int) -> PolyTerm:
    if n < 0:
        raise ValueError("ml_poly requires n >= 0")
    return PolyTerm(n, _ml_poly(n), Method.RECURRENCE)


def gml_poly(n: int) -> PolyTerm:
    if n < 0:
        raise ValueError("gml_poly requires n >= 0")
    return PolyTerm(n, poly_recurrence_term(GMP0, GMP1, n), Method.RECURRENCE)


def gml_poly_from_ml(n: int) -> PolyTerm:
    """Gm_n(x) = m_n(x) + i m_{n-1}(x), valid for n >= 1."""
    if n < 1:
        raise ValueError("gml_poly_from_ml requires n >= 1")
    return PolyTerm(n, _ml_poly(n) + GaussianDyadic.I * _ml_poly(n - 1), Method.RELATION)


def _ml_poly_explicit(n: int) -> Poly:
    if n == 0:
        return MP0
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = explicit_summand(n, j)
    return Poly(coeffs)


def ml_poly_explicit(n: int) -> PolyTerm:
    """Closed binomial expansion: the x**(n-2j) coefficient is the same
    integer summand that the number family adds up."""
    if n < 0:
        raise ValueError("ml_poly_explicit requires n >= 0")
    return PolyTerm(n, _ml_poly_explicit(n), Method.EXPLICIT)


def gml_poly_explicit(n: int) -> PolyTerm:
    if n < 1:
        raise ValueError("gml_poly_explicit requires n >= 1")
    value = _ml_poly_explicit(n) + GaussianDyadic.I * _ml_poly_explicit(n - 1)
    return PolyTerm(n, value, Method.EXPLICIT)


def ml_poly_negative(n: int) -> PolyTerm:
    """m_{-n}(x) = m_n(x) / 2**n for n >= 1 (backward recurrence closure)."""
    if n < 1:
        raise ValueError("ml_poly_negative requires n >= 1")
    return PolyTerm(-n, _ml_poly(n).div_pow2(n), Method.RECURRENCE)


def gml_poly_negative(n: int) -> PolyTerm:
    """Gm_{-n}(x) = (m_n(x) + (i/2) m_{n+1}(x)) / 2**n for n >= 1."""
    if n < 1:
        raise ValueError("gml_poly_negative requires n >= 1")
    value = (_ml_poly(n) + _HALF_I * _ml_poly(n + 1)).div_pow2(n)
    return PolyTerm(-n, value, Method.RECURRENCE)


def char_roots(x: float) -> CharRoots:
    """Roots of t**2 - 3x t + 2 at a real x; complex for |x| < sqrt(8)/3."""
    x = float(x)
    root = cmath.sqrt(complex(9.0 * x * x - 8.0))
    return CharRoots(x, (3.0 * x + root) / 2.0, (3.0 * x - root) / 2.0)


def _cpow(base: complex, k: int) -> complex:
    # Repeated multiplication keeps integer-valued cases exact in floats.
    if k < 0:
        return 1.0 / _cpow(base, -k)
    out = complex(1.0)
    for _ in range(k):
        out *= base
    return out


def binet_numeric(n: int, x: float) -> complex:
    """Floating point Gm_n(x) from the characteristic roots.

    This is the only inexact route in the package; it exists purely as an
    independent numeric spot check of the exact polynomial routes.
    """
    roots = char_roots(x)
    l1, l2 = roots.lambda1, roots.lambda2
    re = _cpow(l1, n) + _cpow(l2, n)
    im = _cpow(l1, n - 1) + _cpow(l2, n - 1)
    return re + 1j * im


def eval_gml_poly(n: int, x) -> GaussianDyadic:
    """Exact Gm_n(x) at a dyadic point, for comparison with binet_numeric."""
    return poly_eval(gml_poly(n).value, x)
