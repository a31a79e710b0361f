"""Mersenne Lucas numbers and their Gaussian companions.

The integer family is m_0 = 2, m_1 = 3, m_n = 3 m_{n-1} - 2 m_{n-2}, whose
closed form is m_n = 2**n + 1.  The Gaussian family shares the recurrence
with seeds Gm_0 = 2 + (3/2)i and Gm_1 = 3 + 2i, and satisfies
Gm_n = m_n + i m_{n-1} for n >= 1.  Every term can be produced by several
independent routes which must agree exactly; the cross-checks live in the
test suite and in the verify command.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import Dyadic, GaussianDyadic, binomial


class Method(enum.Enum):
    """Which computation route produced a term."""

    RECURRENCE = "recurrence"
    BINET = "binet"
    EXPLICIT = "explicit"
    SYMMETRIC = "symmetric"
    GENFUN = "genfun"
    RELATION = "relation"


@dataclass(frozen=True)
class SeqTerm:
    index: int
    value: GaussianDyadic
    method: Method


# Recurrence seeds.
M0 = 2
M1 = 3
GM0 = GaussianDyadic(2, Dyadic(3, 1))
GM1 = GaussianDyadic(3, 2)


def recurrence_term(seed0, seed1, n: int):
    """n-th entry of x_k = 3 x_{k-1} - 2 x_{k-2} from arbitrary seeds.

    Works over any ring whose elements support + and * with ints.
    """
    if n < 0:
        raise ValueError("recurrence_term requires n >= 0")
    if n == 0:
        return seed0
    a, b = seed0, seed1
    for _ in range(n - 1):
        a, b = b, 3 * b - 2 * a
    return b


def explicit_summand(n: int, j: int) -> int:
    """The degree n-2j integer term of the closed binomial expansion.

    Equals (-1)**j * n/(n-j) * C(n-j, j) * 3**(n-2j) * 2**j, which is an
    integer for 0 <= j <= n // 2 and n >= 1.
    """
    if n < 1 or j < 0 or 2 * j > n:
        raise ValueError("explicit_summand requires n >= 1 and 0 <= 2j <= n")
    c = n * binomial(n - j, j) // (n - j)
    term = c * 3 ** (n - 2 * j) * 2**j
    return -term if j & 1 else term


def _ml_int(n: int) -> int:
    return 2**n + 1


def _ml_explicit_int(n: int) -> int:
    # The lone n = 0 summand is 0/0 * C(0,0); the Lucas convention reads
    # it as 2, matching the recurrence seed.  Powers are carried across the
    # loop instead of recomputed; the summand function below stays the
    # term-by-term reference.
    if n == 0:
        return 2
    total = 0
    three_pow = 3**n
    two_pow = 1
    for j in range(n // 2 + 1):
        c = n * binomial(n - j, j) // (n - j)
        term = c * three_pow * two_pow
        total += -term if j & 1 else term
        three_pow //= 9
        two_pow <<= 1
    return total


def ml_recurrence(n: int) -> SeqTerm:
    if n < 0:
        raise ValueError("ml_recurrence requires n >= 0")
    return SeqTerm(n, GaussianDyadic(recurrence_term(M0, M1, n)), Method.RECURRENCE)


def ml_binet(n: int) -> SeqTerm:
    """Closed form 2**n + 1 (the roots of the recurrence are 2 and 1)."""
    if n < 0:
        raise ValueError("ml_binet requires n >= 0; use ml_negative below zero")
    return SeqTerm(n, GaussianDyadic(_ml_int(n)), Method.BINET)


def ml_explicit(n: int) -> SeqTerm:
    """Alternating binomial sum over j <= n/2; n = 0 returns 2 by convention."""
    if n < 0:
        raise ValueError("ml_explicit requires n >= 0")
    return SeqTerm(n, GaussianDyadic(_ml_explicit_int(n)), Method.EXPLICIT)


def ml_negative(n: int) -> SeqTerm:
    """m_{-n} = m_n / 2**n for n >= 1, the backward closure of the recurrence."""
    if n < 1:
        raise ValueError("ml_negative requires n >= 1")
    return SeqTerm(-n, GaussianDyadic(Dyadic(_ml_int(n), n)), Method.BINET)


def gml_recurrence(n: int) -> SeqTerm:
    if n < 0:
        raise ValueError("gml_recurrence requires n >= 0")
    return SeqTerm(n, recurrence_term(GM0, GM1, n), Method.RECURRENCE)


def gml_binet(n: int) -> SeqTerm:
    """Gm_n = (2**n + 1) + i (2**(n-1) + 1), with the n = 0 imaginary part 3/2."""
    if n < 0:
        raise ValueError("gml_binet requires n >= 0; use gml_negative below zero")
    im = Dyadic(_ml_int(n - 1)) if n >= 1 else Dyadic(3, 1)
    return SeqTerm(n, GaussianDyadic(Dyadic(_ml_int(n)), im), Method.BINET)


def gml_from_ml(n: int) -> SeqTerm:
    """Gm_n = m_n + i m_{n-1}, valid for n >= 1."""
    if n < 1:
        raise ValueError("gml_from_ml requires n >= 1")
    return SeqTerm(n, GaussianDyadic(_ml_int(n), _ml_int(n - 1)), Method.RELATION)


def gml_explicit(n: int) -> SeqTerm:
    """Binomial sums for both parts; the shifted imaginary sum needs n >= 1."""
    if n < 1:
        raise ValueError("gml_explicit requires n >= 1")
    return SeqTerm(
        n,
        GaussianDyadic(_ml_explicit_int(n), _ml_explicit_int(n - 1)),
        Method.EXPLICIT,
    )


def gml_negative(n: int) -> SeqTerm:
    """Gm_{-n} = (m_n + (i/2) m_{n+1}) / 2**n for n >= 1."""
    if n < 1:
        raise ValueError("gml_negative requires n >= 1")
    value = GaussianDyadic(Dyadic(_ml_int(n), n), Dyadic(_ml_int(n + 1), n + 1))
    return SeqTerm(-n, value, Method.BINET)
