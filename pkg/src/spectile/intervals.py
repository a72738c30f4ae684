"""Finite unions of half-open intervals and their Fourier zero set.

Membership of a rational frequency in the zero set of the indicator's
Fourier transform reduces to exact vanishing of a sum of roots of unity:
for lam != 0,  2*pi*i*lam * FT(lam) = sum_j e(lam*(a_j+r_j)) - e(lam*a_j).
The covering-multiplicity profile of the (1/d)Z translates is computed on an
exact rational grid, which decides d-fold tiling.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import CycloSum, RootOfUnity, as_fraction
from .errors import PreconditionError
from .jsonio import fraction_to_pair, pair_to_fraction


@dataclass(frozen=True)
class IntervalUnion:
    """Disjoint union of [left, left+length) pieces, sorted by left endpoint."""

    pieces: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        norm = tuple(
            sorted((as_fraction(a), as_fraction(r)) for a, r in self.pieces)
        )
        if not norm:
            raise ValueError("at least one piece required")
        for a, r in norm:
            if r <= 0:
                raise ValueError(f"piece length must be positive, got {r}")
        for (a1, r1), (a2, _) in zip(norm, norm[1:]):
            if a1 + r1 > a2:
                raise ValueError(f"pieces overlap near {a2}")
        object.__setattr__(self, "pieces", norm)

    @staticmethod
    def from_pieces(pieces: Iterable[tuple[object, object]]) -> "IntervalUnion":
        return IntervalUnion(tuple((a, r) for a, r in pieces))

    @staticmethod
    def from_unit_cells(offsets: Iterable[int]) -> "IntervalUnion":
        return IntervalUnion(tuple((Fraction(o), Fraction(1)) for o in offsets))

    @property
    def measure(self) -> Fraction:
        return sum((r for _, r in self.pieces), Fraction(0))

    def scaled(self, factor: object) -> "IntervalUnion":
        f = as_fraction(factor)
        if f <= 0:
            raise ValueError("scale factor must be positive")
        return IntervalUnion(tuple((a * f, r * f) for a, r in self.pieces))

    def translated(self, t: object) -> "IntervalUnion":
        t = as_fraction(t)
        return IntervalUnion(tuple((a + t, r) for a, r in self.pieces))

    def contains(self, x: object) -> bool:
        x = as_fraction(x)
        return any(a <= x < a + r for a, r in self.pieces)

    def endpoint_denominator(self) -> int:
        q = 1
        for a, r in self.pieces:
            q = math.lcm(q, a.denominator, (a + r).denominator)
        return q

    def to_json_dict(self) -> dict:
        return {
            "pieces": [
                [fraction_to_pair(a), fraction_to_pair(r)] for a, r in self.pieces
            ]
        }

    @staticmethod
    def from_json_dict(data: dict) -> "IntervalUnion":
        return IntervalUnion(
            tuple(
                (pair_to_fraction(a), pair_to_fraction(r))
                for a, r in data["pieces"]
            )
        )


def boundary_sum(omega: IntervalUnion, lam: object) -> CycloSum:
    """sum_j e(lam*(a_j+r_j)) - e(lam*a_j), which is 2*pi*i*lam*FT(lam)."""
    lam = as_fraction(lam)
    terms = []
    for a, r in omega.pieces:
        terms.append((Fraction(1), RootOfUnity(lam * (a + r))))
        terms.append((Fraction(-1), RootOfUnity(lam * a)))
    return CycloSum(tuple(terms))


@functools.lru_cache(maxsize=65536)
def _in_zero_set_cached(omega: IntervalUnion, lam: Fraction) -> bool:
    return boundary_sum(omega, lam).is_zero()


def in_zero_set(omega: IntervalUnion, lam: object) -> bool:
    """Membership in the zero set of the indicator's Fourier transform.

    The point 0 belongs by convention, so difference sets of candidate
    spectra can be tested uniformly.
    """
    lam = as_fraction(lam)
    if lam == 0:
        return True
    return _in_zero_set_cached(omega, lam)


def fourier_indicator(omega: IntervalUnion, xi: float) -> complex:
    """Float evaluation of the indicator's Fourier transform (test oracle)."""
    if xi == 0:
        return complex(float(omega.measure))
    total = complex(0)
    for a, r in omega.pieces:
        total += cmath.exp(2j * cmath.pi * xi * float(a + r)) - cmath.exp(
            2j * cmath.pi * xi * float(a)
        )
    return total / (2j * cmath.pi * xi)


def unit_interval_factor(omega: IntervalUnion) -> tuple[int, ...]:
    """Integer offsets A with Omega = union of unit cells at A.

    Splits multi-unit pieces into unit cells; rejects pieces that are not
    integer-aligned runs of unit cells.
    """
    offsets: list[int] = []
    for a, r in omega.pieces:
        if a.denominator != 1 or r.denominator != 1:
            raise ValueError(
                "pieces must be unit intervals on integer endpoints"
            )
        for i in range(int(r)):
            offsets.append(int(a) + i)
    return tuple(offsets)


@dataclass(frozen=True)
class LevelProfile:
    """Step profile of x -> number of k with x + k/d in the set, x in [0, 1/d)."""

    cell_width: Fraction
    values: tuple[int, ...]

    def is_constant(self, value: int) -> bool:
        return all(v == value for v in self.values)


def level_function(omega: IntervalUnion, d: int) -> LevelProfile:
    """Exact covering-multiplicity profile of the (1/d)Z translates."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    q = omega.endpoint_denominator()
    grid = math.lcm(q, d)
    width = Fraction(1, grid)
    cells = grid // d
    values = []
    for m in range(cells):
        x = Fraction(m, grid)
        count = 0
        for a, r in omega.pieces:
            lo = d * (a - x)
            hi = lo + d * r
            count += math.ceil(hi) - math.ceil(lo)
        values.append(count)
    return LevelProfile(width, tuple(values))


def d_tiles(omega: IntervalUnion, d: int) -> bool:
    """True iff translates by (1/d)Z cover the line exactly d times."""
    if omega.measure != 1:
        raise PreconditionError("d-tiling test requires total measure 1")
    return level_function(omega, d).is_constant(d)
