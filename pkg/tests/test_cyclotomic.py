"""Kernel tests: cyclotomic polynomials and exact zero detection."""

import math
import random
from fractions import Fraction

import pytest

from spectile.cyclotomic import (
    CycloSum,
    RootOfUnity,
    as_fraction,
    cyclo_eval_float,
    cyclo_is_zero,
    cyclotomic_poly,
    root_of_unity,
)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_first_cyclotomic_is_x_minus_one():
    assert cyclotomic_poly(1) == (-1, 1)


def test_sixth_cyclotomic():
    assert cyclotomic_poly(6) == (1, -1, 1)


def test_twelfth_cyclotomic_against_product_oracle():
    # oracle: the product of Phi_d over d | 12 expands to x^12 - 1
    prod = [1]
    for d in divisors(12):
        prod = poly_mul(prod, list(cyclotomic_poly(d)))
    assert prod == [-1] + [0] * 11 + [1]
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", list(range(1, 121)))
def test_product_identity_up_to_120(n):
    prod = [1]
    for d in divisors(n):
        prod = poly_mul(prod, list(cyclotomic_poly(d)))
    want = [0] * (n + 1)
    want[0] = -1
    want[n] = 1
    assert prod == want


def test_root_normalization():
    r = root_of_unity(7, 3)
    assert r.exponent == Fraction(1, 3)
    assert r.order == 3
    assert root_of_unity(-1, 4).exponent == Fraction(3, 4)
    assert (r * r * r).exponent == 0


def test_float_rejected():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_basic_zero_sums():
    omega = Fraction(1, 3)
    s = CycloSum.from_exponents([0, omega, 2 * omega])
    assert cyclo_is_zero(s)
    assert abs(cyclo_eval_float(s)) < 1e-12

    s2 = CycloSum.from_pairs([(1, RootOfUnity(Fraction(0))), (-1, RootOfUnity(Fraction(0)))])
    assert cyclo_is_zero(s2)

    two = CycloSum.from_pairs([(1, RootOfUnity(Fraction(0))), (1, RootOfUnity(Fraction(0)))])
    assert not cyclo_is_zero(two)
    assert abs(cyclo_eval_float(two) - 2) < 1e-12


def test_fifth_roots_sum_to_minus_one():
    s = CycloSum.from_exponents([Fraction(k, 5) for k in range(1, 5)])
    assert abs(cyclo_eval_float(s) + 1) < 1e-12
    assert not cyclo_is_zero(s)


def test_mixed_five_three_vanishing_sum():
    # rho + rho^2 + rho^3 + rho^4 - omega - omega^2 = (-1) - (-1)
    exps = [Fraction(k, 5) for k in range(1, 5)]
    exps += [Fraction(1, 3) + Fraction(1, 2), Fraction(2, 3) + Fraction(1, 2)]
    s = CycloSum.from_exponents(exps)
    assert cyclo_is_zero(s)


def test_rotation_invariance():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 40)
        terms = [
            (rng.randint(-5, 5), RootOfUnity(Fraction(rng.randrange(n), n)))
            for _ in range(rng.randint(1, 6))
        ]
        s = CycloSum.from_pairs(terms)
        rot = RootOfUnity(Fraction(rng.randrange(n), n))
        assert cyclo_is_zero(s) == cyclo_is_zero(s * rot)


def _random_sum(rng):
    n = rng.choice([k for k in range(1, 61)])
    k = rng.randint(1, 6)
    terms = []
    for _ in range(k):
        c = rng.randint(-5, 5)
        terms.append((c, RootOfUnity(Fraction(rng.randrange(n), n))))
    return CycloSum.from_pairs(terms)


def _planted_zero(rng):
    # random rational combination of rotated full prime orbits
    n = rng.choice([3, 5, 7, 2])
    rot = Fraction(rng.randrange(60), 60)
    c = rng.randint(1, 5) * rng.choice([1, -1])
    terms = [(c, RootOfUnity(rot + Fraction(j, n))) for j in range(n)]
    if rng.random() < 0.5:
        m = rng.choice([2, 3])
        rot2 = Fraction(rng.randrange(60), 60)
        c2 = rng.randint(1, 5)
        terms += [(c2, RootOfUnity(rot2 + Fraction(j, m))) for j in range(m)]
    return CycloSum.from_pairs(terms)


def test_exact_zero_agrees_with_float_oracle():
    # shared generator with the acceptance suite: orders <= 60, coeffs in [-5,5]
    rng = random.Random(20240901)
    for i in range(10_000):
        s = _planted_zero(rng) if i % 5 == 0 else _random_sum(rng)
        exact = cyclo_is_zero(s)
        approx = abs(cyclo_eval_float(s))
        if exact:
            assert approx < 1e-9, s
        else:
            assert approx > 1e-9, s


def test_big_order_fallback_path():
    # order above the residue-table limit exercises dense remainder division
    n = 1031 * 2  # 2062 > table limit
    s = CycloSum.from_exponents(
        [Fraction(1, 1031), Fraction(1, 2) + Fraction(1, 1031)]
    )
    assert cyclo_is_zero(s)
    s2 = CycloSum.from_exponents([Fraction(1, 1031), Fraction(1, 2)])
    assert not cyclo_is_zero(s2)


def test_cyclosum_algebra():
    a = CycloSum.from_exponents([0, Fraction(1, 3)])
    b = CycloSum.from_exponents([Fraction(2, 3)])
    assert cyclo_is_zero(a + b - (a + b))
    assert (a - a).terms == ()
    prod = a * b
    assert prod.common_order == 3
    assert cyclo_is_zero(a + b)  # 1 + w + w^2
