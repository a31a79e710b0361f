"""Symmetric function calculus over exact rings.

S_n(lambda - mu) is coefficient n of prod(1 - mu_i z) / prod(1 - lambda_i z),
with S_n = 0 for n < 0.  A SymKernel (d, p) is the two-parameter special
case S_0 = 1, S_n = d S_{n-1} + p S_{n-2}, whose generating series is
1 / (1 - d z - p z**2); the number families arise from (3, -2) and the
polynomial families from (3x, -2).

Everything here is ring generic: coefficients may be GaussianDyadic or Poly,
and truncated series division only ever inverts constant terms that are
units (in practice 1 or 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Dyadic, GaussianDyadic, Poly, binomial


def _as_ring(value):
    if isinstance(value, (Poly, GaussianDyadic)):
        return value
    g = GaussianDyadic._coerce(value)
    if g is None:
        raise TypeError(f"not a ring element: {value!r}")
    return g


def _one_like(value):
    return Poly.ONE if isinstance(value, Poly) else GaussianDyadic.ONE


def _zero_like(value):
    return Poly.ZERO if isinstance(value, Poly) else GaussianDyadic.ZERO


def _common_ring(entries: list) -> list:
    """Coerce a mixed int/Dyadic/GaussianDyadic/Poly list into one ring."""
    entries = [_as_ring(e) for e in entries]
    if any(isinstance(e, Poly) for e in entries):
        entries = [e if isinstance(e, Poly) else Poly((e,)) for e in entries]
    return entries


class PowerSeries:
    """A truncated power series: coefficients 0..order, one ring throughout."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(_common_ring(list(coeffs)))
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if not 0 <= order <= self.order:
            raise ValueError("can only truncate to a lower order")
        return PowerSeries(self.coeffs[: order + 1])

    def _check_order(self, other):
        if not isinstance(other, PowerSeries):
            raise TypeError("series arithmetic needs two PowerSeries")
        if other.order != self.order:
            raise ValueError("series orders differ; truncate explicitly first")

    def __add__(self, other):
        self._check_order(other)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check_order(other)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        """Cauchy product truncated back to the shared order."""
        self._check_order(other)
        zero = _zero_like(self.coeffs[0])
        out = [zero] * (self.order + 1)
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            for k in range(self.order + 1 - j):
                b = other.coeffs[k]
                if b:
                    out[j + k] = out[j + k] + a * b
        return PowerSeries(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.coeffs)!r})"


def series_from_coeffs(coeffs, order: int) -> PowerSeries:
    """Lift polynomial coefficients into a series of the given order."""
    cs = _common_ring(list(coeffs))
    if not cs:
        cs = [GaussianDyadic.ZERO]
    zero = _zero_like(cs[0])
    cs = cs[: order + 1]
    cs += [zero] * (order + 1 - len(cs))
    return PowerSeries(cs)


def series_div(num, den, order: int) -> PowerSeries:
    """Unique s with den * s = num modulo z**(order+1).

    num and den are coefficient lists in ascending powers of z.  The
    constant term of den must be invertible (for GaussianDyadic: a unit,
    meaning its norm is a power of two; for Poly: an invertible constant).
    """
    if order < 0:
        raise ValueError("series order must be non-negative")
    num = list(num)
    den = list(den)
    if not den:
        raise ZeroDivisionError("empty denominator")
    mixed = _common_ring(num + den)
    num, den = mixed[: len(num)], mixed[len(num):]
    try:
        inv = den[0].inverse()
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError(f"denominator constant term is not invertible: {err}") from None
    zero = _zero_like(den[0])
    out: list = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else zero
        for k in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[k] * out[n - k]
        out.append(inv * acc)
    return PowerSeries(out)


@dataclass(frozen=True)
class Alphabet:
    """A finite multiset of ring letters."""

    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(_common_ring(list(self.letters))))

    @classmethod
    def of(cls, *letters) -> "Alphabet":
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def _letters(alpha) -> tuple:
    if isinstance(alpha, Alphabet):
        return alpha.letters
    return tuple(_common_ring(list(alpha)))


def _alphabet_poly(letters) -> list:
    """Coefficients of prod(1 - letter * z) over the letters' ring."""
    if not letters:
        return [GaussianDyadic.ONE]
    one = _one_like(letters[0])
    zero = _zero_like(letters[0])
    coeffs = [one]
    for letter in letters:
        nxt = coeffs + [zero]
        for j in range(len(coeffs)):
            nxt[j + 1] = nxt[j + 1] - letter * coeffs[j]
        coeffs = nxt
    return coeffs


def s_neg_alphabet(mu, order: int) -> PowerSeries:
    """S_n(-mu): coefficients of prod(1 - mu_i z), zero beyond len(mu)."""
    return series_from_coeffs(_alphabet_poly(_letters(mu)), order)


def s_diff_series(lam, mu, order: int) -> PowerSeries:
    """S_n(lambda - mu) for n = 0..order, by truncated series division."""
    lam = _letters(lam)
    mu = _letters(mu)
    return series_div(_alphabet_poly(mu), _alphabet_poly(lam), order)


def s_diff_convolution(lam, mu, n: int):
    """S_n(lambda - mu) = sum_j S_{n-j}(-mu) S_j(lambda).

    An independent route to the same coefficient as s_diff_series, used to
    cross-check the series expansion.
    """
    if n < 0:
        raise ValueError("s_diff_convolution requires n >= 0")
    lam = _letters(lam)
    mu = _letters(mu)
    s_mu = s_neg_alphabet(mu, n).coeffs
    s_lam = s_diff_series(lam, (), n).coeffs
    ring_probe = (list(lam) + list(mu) + [GaussianDyadic.ONE])[0]
    acc = _zero_like(ring_probe)
    for j in range(n + 1):
        acc = acc + s_mu[n - j] * s_lam[j]
    return acc


def two_letter_sn(l1, l2, n: int):
    """S_n of a two-letter alphabet: sum of l1**j * l2**(n-j)."""
    if n < 0:
        raise ValueError("two_letter_sn requires n >= 0")
    l1, l2 = _common_ring([l1, l2])
    one = _one_like(l1)
    pows1 = [one]
    pows2 = [one]
    for _ in range(n):
        pows1.append(pows1[-1] * l1)
        pows2.append(pows2[-1] * l2)
    acc = _zero_like(l1)
    for j in range(n + 1):
        acc = acc + pows1[j] * pows2[n - j]
    return acc


@dataclass(frozen=True)
class SymKernel:
    """The weight pair (d, p) of S_0 = 1, S_n = d S_{n-1} + p S_{n-2}."""

    d: object
    p: object

    def __post_init__(self):
        d, p = _common_ring([self.d, self.p])
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "p", p)


def kernel_term(k: SymKernel, n: int):
    """S_n of the kernel by running its recurrence; zero for n < 0."""
    zero = _zero_like(k.d)
    if n < 0:
        return zero
    prev, cur = zero, _one_like(k.d)
    for _ in range(n):
        prev, cur = cur, k.d * cur + k.p * prev
    return cur


def kernel_term_explicit(k: SymKernel, n: int):
    """S_n = sum_j C(n-j, j) d**(n-2j) p**j, the closed binomial route."""
    if n < 0:
        return _zero_like(k.d)
    one = _one_like(k.d)
    d_pows = [one]
    for _ in range(n):
        d_pows.append(d_pows[-1] * k.d)
    p_pows = [one]
    for _ in range(n // 2):
        p_pows.append(p_pows[-1] * k.p)
    acc = _zero_like(k.d)
    for j in range(n // 2 + 1):
        acc = acc + binomial(n - j, j) * d_pows[n - 2 * j] * p_pows[j]
    return acc


def kernel_series(k: SymKernel, order: int) -> PowerSeries:
    """The generating series 1 / (1 - d z - p z**2) to the given order."""
    one = _one_like(k.d)
    return series_div([one], [one, -k.d, -k.p], order)


def kernel_even_odd_series(k: SymKernel, order: int):
    """Decimated series (sum S_{2n-1} z**n, sum S_{2n} z**n, sum S_{2n+1} z**n).

    All three share the denominator D = 1 - (d**2 + 2p) z + p**2 z**2; the
    numerators are d z, 1 - p z, and d respectively.
    """
    one = _one_like(k.d)
    zero = _zero_like(k.d)
    den = [one, -(k.d * k.d + 2 * k.p), k.p * k.p]
    odd_back = series_div([zero, k.d], den, order)
    even = series_div([one, -k.p], den, order)
    odd_fwd = series_div([k.d], den, order)
    return odd_back, even, odd_fwd


# Fixed rational generating functions for the Gaussian number family.

def gf_gml(order: int) -> PowerSeries:
    """Sum of Gm_n z**n: (4 + 3i - (6 + 5i) z) / (2 - 6z + 4z**2)."""
    num = [GaussianDyadic(4, 3), GaussianDyadic(-6, -5)]
    den = [GaussianDyadic(2), GaussianDyadic(-6), GaussianDyadic(4)]
    return series_div(num, den, order)


def gf_gml_even(order: int) -> PowerSeries:
    """Sum of Gm_{2n} z**n: (4 + 3i - (10 + 9i) z) / (2 - 10z + 8z**2)."""
    num = [GaussianDyadic(4, 3), GaussianDyadic(-10, -9)]
    den = [GaussianDyadic(2), GaussianDyadic(-10), GaussianDyadic(8)]
    return series_div(num, den, order)


def gf_gml_odd(order: int) -> PowerSeries:
    """Sum of Gm_{2n+1} z**n: (6 + 4i - (12 + 10i) z) / (2 - 10z + 8z**2)."""
    num = [GaussianDyadic(6, 4), GaussianDyadic(-12, -10)]
    den = [GaussianDyadic(2), GaussianDyadic(-10), GaussianDyadic(8)]
    return series_div(num, den, order)


def gf_ml_poly(order: int) -> PowerSeries:
    """Sum of m_n(x) z**n: (2 - 3x z) / (1 - 3x z + 2 z**2)."""
    num = [Poly((2,)), Poly((0, -3))]
    den = [Poly((1,)), Poly((0, -3)), Poly((2,))]
    return series_div(num, den, order)


def gf_gml_poly(order: int) -> PowerSeries:
    """Sum of Gm_n(x) z**n:
    (4 + 3ix + (i(4 - 9x**2) - 6x) z) / (2 - 6x z + 4 z**2)."""
    num = [
        Poly((4, GaussianDyadic(0, 3))),
        Poly((GaussianDyadic(0, 4), -6, GaussianDyadic(0, -9))),
    ]
    den = [Poly((2,)), Poly((0, -6)), Poly((4,))]
    return series_div(num, den, order)


# Decompositions of the families over their kernels.

_KERNEL_NUM = SymKernel(3, -2)
_KERNEL_POLY = SymKernel(Poly((0, 3)), Poly((-2,)))


def sym_decompose_gml(n: int) -> GaussianDyadic:
    """Gm_n = (2 + 3i/2) S_n - (3 + 5i/2) S_{n-1} over the kernel (3, -2)."""
    if n < 0:
        raise ValueError("sym_decompose_gml requires n >= 0")
    c0 = GaussianDyadic(2, Dyadic(3, 1))
    c1 = GaussianDyadic(3, Dyadic(5, 1))
    return c0 * kernel_term(_KERNEL_NUM, n) - c1 * kernel_term(_KERNEL_NUM, n - 1)


def sym_decompose_ml_poly(n: int) -> Poly:
    """m_n(x) = 2 S_n - 3x S_{n-1} over the kernel (3x, -2)."""
    if n < 0:
        raise ValueError("sym_decompose_ml_poly requires n >= 0")
    s_n = kernel_term(_KERNEL_POLY, n)
    s_prev = kernel_term(_KERNEL_POLY, n - 1)
    return 2 * s_n - Poly((0, 3)) * s_prev


def sym_decompose_gml_poly(n: int) -> Poly:
    """Gm_n(x) = (2 + (3i/2)x) S_n + (i(2 - (9/2)x**2) - 3x) S_{n-1}."""
    if n < 0:
        raise ValueError("sym_decompose_gml_poly requires n >= 0")
    c0 = Poly((2, GaussianDyadic(0, Dyadic(3, 1))))
    c1 = Poly((GaussianDyadic(0, 2), -3, GaussianDyadic(0, Dyadic(-9, 1))))
    s_n = kernel_term(_KERNEL_POLY, n)
    s_prev = kernel_term(_KERNEL_POLY, n - 1)
    return c0 * s_n + c1 * s_prev
