"""Exact arithmetic kernels: dyadic rationals, Gaussian dyadics, and dense
univariate polynomials over them.

The coefficient universe for the whole package is Z[1/2][i]: complex numbers
a + bi whose parts are integers divided by a power of two.  Addition,
subtraction and multiplication are closed; division is deliberately
restricted to powers of two and to units (elements whose norm is a power of
two), which is all the sequence and series machinery ever needs.  Nothing in
this module touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with out-of-range k giving 0."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _den_text(exp: int) -> str:
    return "2" if exp == 1 else f"2^{exp}"


class Dyadic:
    """A rational num / 2**exp, kept normalized.

    Normalized means exp == 0, or num is odd; num == 0 forces exp == 0.
    Instances are treated as immutable.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            raise ValueError("dyadic exponent must be non-negative")
        if num == 0:
            exp = 0
        elif exp:
            twos = (num & -num).bit_length() - 1
            cancel = twos if twos < exp else exp
            if cancel:
                num >>= cancel
                exp -= cancel
        self.num = num
        self.exp = exp

    @staticmethod
    def _coerce(value) -> "Dyadic | None":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return Dyadic(value)
        return None

    def __add__(self, other):
        other = Dyadic._coerce(other)
        if other is None:
            return NotImplemented
        if self.exp >= other.exp:
            return Dyadic(self.num + (other.num << (self.exp - other.exp)), self.exp)
        return Dyadic((self.num << (other.exp - self.exp)) + other.num, other.exp)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other):
        other = Dyadic._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Dyadic._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Dyadic._coerce(other)
        if other is None:
            return NotImplemented
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def mul_pow2(self, k: int) -> "Dyadic":
        """self * 2**k for k >= 0."""
        if k < 0:
            raise ValueError("use div_pow2 for negative shifts")
        return Dyadic(self.num << k, self.exp)

    def div_pow2(self, k: int) -> "Dyadic":
        """self / 2**k for k >= 0; always exact in this ring."""
        if k < 0:
            raise ValueError("use mul_pow2 for negative shifts")
        return Dyadic(self.num, self.exp + k)

    def inverse(self) -> "Dyadic":
        """Multiplicative inverse, defined only for +-2**t / 2**exp."""
        if self.num == 0:
            raise ZeroDivisionError("dyadic zero has no inverse")
        mag = abs(self.num)
        if mag & (mag - 1):
            raise ValueError(f"{self} is not invertible in Z[1/2]")
        t = mag.bit_length() - 1
        sign = 1 if self.num > 0 else -1
        return Dyadic(sign << self.exp, t)

    def is_integer(self) -> bool:
        return self.exp == 0

    def __int__(self) -> int:
        if self.exp:
            raise ValueError(f"{self} is not an integer")
        return self.num

    def as_pair(self) -> tuple[int, int]:
        return (self.num, self.exp)

    def __float__(self) -> float:
        # Fraction conversion stays correctly rounded even for huge num.
        if self.exp == 0:
            return float(self.num)
        return float(Fraction(self.num, 1 << self.exp))

    def __bool__(self) -> bool:
        return self.num != 0

    def __eq__(self, other) -> bool:
        other = Dyadic._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __hash__(self):
        # Integer-valued dyadics hash like the integer they equal.
        return hash(self.num) if self.exp == 0 else hash((self.num, self.exp))

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{_den_text(self.exp)}"

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"


def dyadic_normalize(num: int, exp: int) -> Dyadic:
    """Build a Dyadic from raw parts; the constructor cancels shared twos."""
    return Dyadic(num, exp)


def _imag_text(d: Dyadic) -> str:
    mag = abs(d.num)
    sign = "-" if d.num < 0 else ""
    head = "i" if mag == 1 else f"{mag}i"
    if d.exp:
        head += "/" + _den_text(d.exp)
    return sign + head


class GaussianDyadic:
    """An element a + bi of Z[1/2][i], with i*i = -1."""

    __slots__ = ("re", "im")

    ZERO: "GaussianDyadic"
    ONE: "GaussianDyadic"
    I: "GaussianDyadic"

    def __init__(self, re=0, im=0):
        r = Dyadic._coerce(re)
        m = Dyadic._coerce(im)
        if r is None or m is None:
            raise TypeError("GaussianDyadic parts must be Dyadic or int")
        self.re = r
        self.im = m

    @staticmethod
    def _coerce(value) -> "GaussianDyadic | None":
        if isinstance(value, GaussianDyadic):
            return value
        if isinstance(value, (int, Dyadic)):
            return GaussianDyadic(value)
        return None

    def __add__(self, other):
        other = GaussianDyadic._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianDyadic(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianDyadic(-self.re, -self.im)

    def __sub__(self, other):
        other = GaussianDyadic._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = GaussianDyadic._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = GaussianDyadic._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianDyadic(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers need an explicit inverse()")
        out = GaussianDyadic.ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianDyadic":
        return GaussianDyadic(self.re, -self.im)

    def norm(self) -> Dyadic:
        """re**2 + im**2, a non-negative dyadic."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianDyadic":
        """Inverse, defined exactly for units: norm must be a power of two."""
        n = self.norm()
        if n.num == 0:
            raise ZeroDivisionError("gaussian zero has no inverse")
        if n.num & (n.num - 1):
            raise ValueError(f"{self} is not a unit of Z[1/2][i]")
        return self.conj() * GaussianDyadic(n.inverse())

    def mul_pow2(self, k: int) -> "GaussianDyadic":
        return GaussianDyadic(self.re.mul_pow2(k), self.im.mul_pow2(k))

    def div_pow2(self, k: int) -> "GaussianDyadic":
        return GaussianDyadic(self.re.div_pow2(k), self.im.div_pow2(k))

    def is_real(self) -> bool:
        return self.im.num == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        other = GaussianDyadic._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # Real values hash like their real part (which hashes like an int
        # when integer-valued), keeping mixed-type dict lookups coherent.
        return hash(self.re) if self.im.num == 0 else hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im.num == 0:
            return str(self.re)
        imag = _imag_text(self.im)
        if self.re.num == 0:
            return imag
        return f"{self.re}{imag}" if imag.startswith("-") else f"{self.re}+{imag}"

    def __repr__(self) -> str:
        return f"GaussianDyadic({self.re!r}, {self.im!r})"


GaussianDyadic.ZERO = GaussianDyadic(0, 0)
GaussianDyadic.ONE = GaussianDyadic(1, 0)
GaussianDyadic.I = GaussianDyadic(0, 1)


def gaussian_mul(a: GaussianDyadic, b: GaussianDyadic) -> GaussianDyadic:
    ga = GaussianDyadic._coerce(a)
    gb = GaussianDyadic._coerce(b)
    if ga is None or gb is None:
        raise TypeError("gaussian_mul expects GaussianDyadic operands")
    return ga * gb


def _poly_term_text(c: GaussianDyadic, j: int) -> str:
    if j == 0:
        s = str(c)
        return f"({s})" if (c.re.num and c.im.num) else s
    base = "x" if j == 1 else f"x^{j}"
    if c.re.num and c.im.num:
        return f"({c}){base}"
    if c.im.num == 0:
        # pure real coefficient
        if c.re.num == 1 and c.re.exp == 0:
            return base
        if c.re.num == -1 and c.re.exp == 0:
            return "-" + base
        if c.re.exp == 0:
            return f"{c.re.num}{base}"
        sign = "-" if c.re.num < 0 else ""
        mag = Dyadic(abs(c.re.num), c.re.exp)
        return f"{sign}({mag}){base}"
    # pure imaginary coefficient
    sign = "-" if c.im.num < 0 else ""
    mag = Dyadic(abs(c.im.num), c.im.exp)
    body = _imag_text(mag)
    return f"{sign}{body}{base}" if mag.exp == 0 else f"{sign}({body}){base}"


class Poly:
    """Dense univariate polynomial over GaussianDyadic, ascending
    coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    ZERO: "Poly"
    ONE: "Poly"
    X: "Poly"

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            g = GaussianDyadic._coerce(c)
            if g is None:
                raise TypeError("Poly coefficients must be GaussianDyadic, Dyadic or int")
            cs.append(g)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def _coerce(value) -> "Poly | None":
        if isinstance(value, Poly):
            return value
        g = GaussianDyadic._coerce(value)
        if g is not None:
            return Poly((g,))
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> GaussianDyadic:
        if j < 0:
            raise IndexError("coefficient index must be non-negative")
        return self.coeffs[j] if j < len(self.coeffs) else GaussianDyadic.ZERO

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.ZERO
        out = [GaussianDyadic.ZERO] * (len(a) + len(b) - 1)
        for j, cj in enumerate(a):
            if not cj:
                continue
            for k, ck in enumerate(b):
                out[j + k] = out[j + k] + cj * ck
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers need an explicit inverse()")
        out = Poly.ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_pow2(self, k: int) -> "Poly":
        return Poly(tuple(c.mul_pow2(k) for c in self.coeffs))

    def div_pow2(self, k: int) -> "Poly":
        return Poly(tuple(c.div_pow2(k) for c in self.coeffs))

    def inverse(self) -> "Poly":
        """Inverse, defined only for invertible constants."""
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no inverse")
        if self.degree > 0:
            raise ValueError("only constant polynomials are invertible")
        return Poly((self.coeffs[0].inverse(),))

    def __call__(self, x) -> GaussianDyadic:
        gx = GaussianDyadic._coerce(x)
        if gx is None:
            raise TypeError("polynomial argument must be GaussianDyadic, Dyadic or int")
        acc = GaussianDyadic.ZERO
        for c in reversed(self.coeffs):
            acc = acc * gx + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [
            _poly_term_text(c, j) for j, c in enumerate(self.coeffs) if c
        ]
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += f" - {part[1:]}"
            else:
                out += f" + {part}"
        return out

    def __repr__(self) -> str:
        return f"Poly([{', '.join(map(repr, self.coeffs))}])"


Poly.ZERO = Poly(())
Poly.ONE = Poly((1,))
Poly.X = Poly((0, 1))


def poly_eval(p: Poly, x) -> GaussianDyadic:
    """Horner evaluation of p at a GaussianDyadic point (exact)."""
    if not isinstance(p, Poly):
        raise TypeError("poly_eval expects a Poly")
    return p(x)
