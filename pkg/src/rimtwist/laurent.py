"""Exact Laurent-polynomial arithmetic over the integers.

Single variable t, arbitrary-precision integer coefficients, no
floating point anywhere.  This module also carries the fraction-free
(Bareiss) determinant over polynomial and integer matrices and the
resultant against t^d - 1 used by the branched-cover order formula.
"""

from __future__ import annotations

from collections.abc import Sequence


class LaurentPoly:
    """An element of Z[t, t^-1].

    Stored as ``min_exp`` plus a coefficient tuple: ``coeffs[i]`` is
    the coefficient of ``t**(min_exp + i)``.  The zero polynomial has
    an empty tuple; otherwise the first and last coefficients are
    nonzero.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int = 0, coeffs: Sequence[int] = ()):
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    @staticmethod
    def t_power(k: int, c: int = 1) -> "LaurentPoly":
        """The monomial c * t^k."""
        return LaurentPoly(k, (c,))

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """True for +-t^k, the units of Z[t, t^-1]."""
        return len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            return 0
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        i = k - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return LaurentPoly(lo, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly.zero()
        if len(a) == 1:
            c = a[0]
            return LaurentPoly(self.min_exp + other.min_exp, tuple(c * x for x in b))
        if len(b) == 1:
            c = b[0]
            return LaurentPoly(self.min_exp + other.min_exp, tuple(c * x for x in a))
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return LaurentPoly(self.min_exp + other.min_exp, out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers only defined for units")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly(self.min_exp + k, self.coeffs)

    def reverse(self) -> "LaurentPoly":
        """Substitute t -> t^-1."""
        return LaurentPoly(-self.max_exp, tuple(reversed(self.coeffs)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.min_exp, self.coeffs))

    # -- division -----------------------------------------------------

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises if the division has a remainder.

        Division in Z[t, t^-1]: shift both operands to honest
        polynomials with nonzero constant term, divide in Z[t], and
        restore the exponent offset.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        quot = _poly_div_exact(list(self.coeffs), list(other.coeffs))
        return LaurentPoly(self.min_exp - other.min_exp, quot)

    def evaluate(self, x: int) -> int:
        """Evaluate at an integer; x must be a unit (+-1) if min_exp < 0."""
        if self.is_zero():
            return 0
        if self.min_exp < 0 and x not in (1, -1):
            raise ValueError("cannot evaluate negative powers at non-unit integer")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp:
            acc *= x ** self.min_exp if self.min_exp > 0 else x ** (-self.min_exp)
        return acc

    # -- normal form ----------------------------------------------------

    def normalize(self) -> "LaurentPoly":
        """Unit-multiple representative: min_exp = 0, positive constant term."""
        if self.is_zero():
            return self
        sign = 1 if self.coeffs[0] > 0 else -1
        return LaurentPoly(0, tuple(sign * c for c in self.coeffs))

    def unit_equal(self, other: "LaurentPoly") -> bool:
        """Equality up to multiplication by +-t^k."""
        return self.normalize() == other.normalize()

    # -- presentation ---------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self.min_exp}, {self.coeffs})"

    def __str__(self) -> str:
        return poly_text(self)

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        return LaurentPoly(int(obj["min_exp"]), [int(c) for c in obj["coeffs"]])


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of coefficient lists (ascending order) over Z."""
    while num and num[0] == 0:
        num = num[1:]
    while den and den[0] == 0:
        den = den[1:]
    if not den:
        raise ZeroDivisionError
    if not num:
        return []
    if len(num) < len(den):
        raise ValueError("inexact polynomial division")
    num = list(num)
    dlead = den[-1]
    qlen = len(num) - len(den) + 1
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % dlead != 0:
            raise ValueError("inexact polynomial division")
        q = c // dlead
        quot[k] = q
        if q:
            for i, dc in enumerate(den):
                num[k + i] -= q * dc
    if any(num[: len(den) - 1]):
        raise ValueError("inexact polynomial division")
    return quot


def poly_text(p: LaurentPoly) -> str:
    """Render as e.g. ``t^2 - t + 1`` (descending exponents)."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        e = p.min_exp + i
        if e == 0:
            body = str(abs(c))
        else:
            tpart = "t" if e == 1 else f"t^{e}"
            body = tpart if abs(c) == 1 else f"{abs(c)}{tpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# -- determinants ------------------------------------------------------


def laurent_det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix over Z[t, t^-1].

    Fraction-free Bareiss elimination: every division is exact, all
    intermediate entries are minors of the input, so coefficient growth
    stays polynomial.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - head * row_k[j]
                row_i[j] = num.div_exact(prev)
            row_i[k] = LaurentPoly.zero()
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            head = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - head * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant_with_cyclotomic(delta: LaurentPoly, d: int) -> int:
    """Res(t^d - 1, delta'), the exact integer product of delta over d-th roots of unity.

    delta' is the unit normalization of delta (min_exp = 0, positive
    constant term); since t^d - 1 is monic the Sylvester determinant
    equals the product of delta'(w) over all w with w^d = 1.  A zero
    value signals a root of delta among the d-th roots of unity.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if delta.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    g = delta.normalize()
    e = g.max_exp
    if e == 0:
        return g.coeffs[0] ** d
    # f = t^d - 1, coefficients descending
    f_desc = [1] + [0] * (d - 1) + [-1]
    g_desc = [g.coeff(e - i) for i in range(e + 1)]
    size = d + e
    rows: list[list[int]] = []
    for i in range(e):
        rows.append([0] * i + f_desc + [0] * (size - d - 1 - i))
    for i in range(d):
        rows.append([0] * i + g_desc + [0] * (size - e - 1 - i))
    return int_det(rows)
