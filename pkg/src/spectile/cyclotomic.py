"""Exact arithmetic for sums of roots of unity with rational coefficients.

Roots are stored by their exponent: e^(2*pi*i*p/q) is kept as the reduced
fraction p/q in [0, 1).  A sum of such roots is zero exactly when the
polynomial with a term x^(e*N) for each root (N = common order) is divisible
by the N-th cyclotomic polynomial; divisibility is tested by exact integer
polynomial remainder, never by floating point.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

# Orders up to this bound get a cached monomial-residue table; larger orders
# fall back to one-shot dense division (still exact, just slower).
_TABLE_LIMIT = 1024


def as_fraction(value: object) -> Fraction:
    """Coerce ints, strings ("3/4") and [num, den] pairs to Fraction.

    Floats are refused: every quantity in this package is exact, and a float
    argument is almost always a lost denominator.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    raise TypeError(f"expected an exact rational, got {value!r}")


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """e^(2*pi*i*exponent) with the exponent reduced mod 1."""

    exponent: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", as_fraction(self.exponent) % 1)

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent + other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * k)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def negated(self) -> "RootOfUnity":
        """The root equal to -1 times this one."""
        return RootOfUnity(self.exponent + Fraction(1, 2))

    def complex_value(self) -> complex:
        return cmath.exp(2j * cmath.pi * float(self.exponent))


def root_of_unity(num: RationalLike, den: int = 1) -> RootOfUnity:
    """Root with exponent num/den (num may itself be a Fraction or string)."""
    e = as_fraction(num)
    if den != 1:
        e /= den
    return RootOfUnity(e)


ONE = RootOfUnity(Fraction(0))
MINUS_ONE = RootOfUnity(Fraction(1, 2))


@dataclass(frozen=True)
class CycloSum:
    """Finite sum  sum_i c_i * e^(2*pi*i*e_i)  with rational c_i.

    Terms are merged by root and sorted; zero coefficients are dropped, so
    equal values built along different routes compare equal.
    """

    terms: tuple[tuple[Fraction, RootOfUnity], ...]

    def __post_init__(self) -> None:
        merged: dict[Fraction, Fraction] = {}
        for coeff, root in self.terms:
            c = as_fraction(coeff)
            e = root.exponent
            merged[e] = merged.get(e, Fraction(0)) + c
        cleaned = tuple(
            (c, RootOfUnity(e)) for e, c in sorted(merged.items()) if c != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def zero() -> "CycloSum":
        return CycloSum(())

    @staticmethod
    def of_root(root: RootOfUnity, coeff: RationalLike = 1) -> "CycloSum":
        return CycloSum(((as_fraction(coeff), root),))

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[RationalLike, RootOfUnity]]) -> "CycloSum":
        return CycloSum(tuple((as_fraction(c), r) for c, r in pairs))

    @staticmethod
    def from_exponents(exponents: Iterable[RationalLike]) -> "CycloSum":
        """Sum of unit-coefficient roots given by their exponents."""
        return CycloSum(tuple((Fraction(1), RootOfUnity(as_fraction(e))) for e in exponents))

    @property
    def common_order(self) -> int:
        n = 1
        for _, root in self.terms:
            n = math.lcm(n, root.order)
        return n

    def __add__(self, other: "CycloSum") -> "CycloSum":
        return CycloSum(self.terms + other.terms)

    def __sub__(self, other: "CycloSum") -> "CycloSum":
        return self + (-other)

    def __neg__(self) -> "CycloSum":
        return CycloSum(tuple((-c, r) for c, r in self.terms))

    def __mul__(self, other: object) -> "CycloSum":
        if isinstance(other, RootOfUnity):
            return CycloSum(tuple((c, r * other) for c, r in self.terms))
        if isinstance(other, CycloSum):
            return CycloSum(
                tuple(
                    (c1 * c2, r1 * r2)
                    for c1, r1 in self.terms
                    for c2, r2 in other.terms
                )
            )
        return CycloSum(tuple((c * as_fraction(other), r) for c, r in self.terms))

    __rmul__ = __mul__

    def rotated(self, root: RootOfUnity) -> "CycloSum":
        """Multiply every term by a fixed root of unity."""
        return self * root

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        n = self.common_order
        if n <= _TABLE_LIMIT:
            rows = _monomial_residues(n)
            deg = len(rows[0])
            acc = [Fraction(0)] * deg
            for coeff, root in self.terms:
                row = rows[int(root.exponent * n)]
                for i in range(deg):
                    if row[i]:
                        acc[i] += coeff * row[i]
            return not any(acc)
        return _dense_remainder_is_zero(self, n)

    def eval_complex(self) -> complex:
        return sum(
            (float(c) * r.complex_value() for c, r in self.terms), complex(0)
        )


def _proper_divisors(n: int) -> list[int]:
    out = [d for d in range(1, n // 2 + 1) if n % d == 0]
    return out


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; the division must leave remainder zero.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by exact division of x^n - 1 by the cyclotomic polynomials of
    the proper divisors of n.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _proper_divisors(n):
        poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


@functools.lru_cache(maxsize=128)
def _monomial_residues(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for k in range(n), as integer coefficient tuples."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    cur = [0] * deg
    cur[0] = 1
    rows = []
    for _ in range(n):
        rows.append(tuple(cur))
        carry = cur[deg - 1]
        cur = [0] + cur[:-1]
        if carry:
            for i in range(deg):
                cur[i] -= carry * phi[i]
    return tuple(rows)


def _dense_remainder_is_zero(s: CycloSum, n: int) -> bool:
    den = 1
    for c, _ in s.terms:
        den = math.lcm(den, c.denominator)
    poly = [0] * n
    for c, root in s.terms:
        poly[int(root.exponent * n)] += int(c * den)
    phi = cyclotomic_poly(n)
    dd = len(phi) - 1
    for i in range(n - 1, dd - 1, -1):
        c = poly[i]
        if c == 0:
            continue
        for j in range(dd + 1):
            poly[i - dd + j] -= c * phi[j]
        poly[i] = 0
    return not any(poly)


def cyclo_is_zero(s: CycloSum) -> bool:
    """True iff the complex value of s is exactly zero."""
    return s.is_zero()


def cyclo_eval_float(s: CycloSum) -> complex:
    """Double-precision value of s; test-oracle companion to cyclo_is_zero."""
    return s.eval_complex()
