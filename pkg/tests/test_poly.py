import cmath
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from ftadescent.gaussian import GaussianRational as G
from ftadescent.poly import (
    DegenerateLocalFormError, Polynomial, ZeroPolynomialError, binomial, binomial_row,
    deflate, evaluate, local_form, root_bound, taylor_shift,
)

from conftest import gaussians, nonzero_gaussians

exact_polys = st.lists(gaussians, min_size=1, max_size=7).flatmap(
    lambda cs: nonzero_gaussians.map(lambda lead: Polynomial(cs + [lead])))


def _exact_value(coeffs, z):
    """Naive power sum over the rationals of float inputs (the oracle)."""
    zr = (F(z.real), F(z.imag))
    acc = (F(0), F(0))
    power = (F(1), F(0))
    for c in coeffs:
        cr = (F(c.real), F(c.imag))
        acc = (acc[0] + cr[0] * power[0] - cr[1] * power[1],
               acc[1] + cr[0] * power[1] + cr[1] * power[0])
        power = (power[0] * zr[0] - power[1] * zr[1], power[0] * zr[1] + power[1] * zr[0])
    return complex(float(acc[0]), float(acc[1]))


def test_eval_examples():
    assert evaluate(Polynomial([1, 0, 1]), G(0, 1)) == 0
    assert evaluate(Polynomial([1, 2]), 0) == 1
    assert Polynomial([1.0, 0.0, 1.0])(1j) == 0


def test_zero_polynomial_sentinel():
    z = Polynomial([0, 0])
    assert z.is_zero and z.degree == -1
    with pytest.raises(ZeroPolynomialError):
        evaluate(z, 1)
    with pytest.raises(ZeroPolynomialError):
        taylor_shift(z, 1)


def test_only_exact_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).degree == 1
    assert Polynomial([1.0, 1e-300]).degree == 1


def test_horner_against_exact_power_sum():
    rng = random.Random(5)
    for _ in range(300):
        coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(6)]
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        h = evaluate(Polynomial(coeffs), z)
        ref = _exact_value(coeffs, z)
        mag = sum(abs(c) * abs(z) ** j for j, c in enumerate(coeffs))
        assert abs(h - ref) <= 8 * math.ulp(mag)


@given(exact_polys, gaussians)
@settings(max_examples=60)
def test_exact_horner_equals_power_sum(p, z):
    naive = sum((c * z ** j for j, c in enumerate(p.coeffs)), G(0))
    assert evaluate(p, z) == naive


def test_binomial():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert F(binomial(6, 2), 9) == F(5, 3) == 2 - F(1, 3)
    with pytest.raises(ValueError):
        binomial(3, 4)
    assert binomial_row(10) == [math.comb(10, j) for j in range(11)]


def test_taylor_shift_examples():
    assert taylor_shift(Polynomial([0, 0, 1]), 1).coeffs == Polynomial([1, 2, 1]).coeffs
    assert taylor_shift(Polynomial([0, 0, 0, 1]), -1) == Polynomial([-1, 3, -3, 1])


@given(exact_polys, gaussians, gaussians)
@settings(max_examples=60)
def test_taylor_shift_evaluation_consistency(p, z0, w):
    assert evaluate(taylor_shift(p, z0), w) == evaluate(p, z0 + w)


@given(exact_polys, gaussians)
@settings(max_examples=60)
def test_taylor_shift_round_trip_exact(p, a):
    assert taylor_shift(p, 0) == p
    assert taylor_shift(taylor_shift(p, a), -a) == p


def test_taylor_shift_round_trip_float():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 20)
        coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n + 1)]
        p = Polynomial(coeffs)
        a = rng.uniform(0, 1) * root_bound(p) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        back = taylor_shift(taylor_shift(p, a), -a)
        err = max(abs(x - y) for x, y in zip(back.coeffs, p.coeffs))
        # Intermediate coefficients reach sum |a_j| (1 + |a|)^j; error is relative to that.
        cond = sum(abs(c) * (1 + abs(a)) ** j for j, c in enumerate(coeffs))
        assert err <= 1e-10 * cond


def test_local_form_examples():
    lf = local_form(Polynomial([1, 0, 1]), 0)
    assert (lf.k, lf.c0, lf.ck) == (2, 1, 1)
    lf = local_form(Polynomial([-1, 3, -3, 1]), 1)
    assert (lf.k, lf.c0, lf.ck) == (3, 0, 1)
    lf = local_form(Polynomial([1.0, 1e-30, 1.0]), 0, tau=1e-12)
    assert lf.k == 2
    assert lf.q_coeffs == (1.0 + 0j,)


def test_local_form_degenerate():
    with pytest.raises(ValueError):
        local_form(Polynomial([3]), 0)
    with pytest.raises(DegenerateLocalFormError):
        local_form(Polynomial([1.0, 1e-30]), 0)


def test_deflate_examples():
    q, rem = deflate(Polynomial([-1, 0, 1]), 1)
    assert q == Polynomial([1, 1]) and rem == 0
    q, rem = deflate(Polynomial([1, 0, 1]), G(0, 1))
    assert q == Polynomial([G(0, 1), 1]) and rem == 0


@given(exact_polys.filter(lambda p: p.degree >= 1), gaussians)
@settings(max_examples=60)
def test_deflate_remainder_and_reconstruction(p, r):
    q, rem = deflate(p, r)
    assert rem == evaluate(p, r)
    assert Polynomial([-r, 1]) * q + Polynomial([rem]) == p


def test_root_bound_examples():
    assert root_bound(Polynomial([-2, 0, 1])) == 3
    for n in range(1, 8):
        assert root_bound(Polynomial([0] * n + [1])) == 2
    with pytest.raises(ValueError):
        root_bound(Polynomial([5]))


def test_root_bound_lower_bound_sampled_on_circle():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 10)
        coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n + 1)]
        p = Polynomial(coeffs)
        R = root_bound(p)
        margin = abs(coeffs[-1]) * R ** n - sum(abs(c) * R ** j for j, c in enumerate(coeffs[:-1]))
        assert margin > 0
        for t in range(16):
            z = R * cmath.exp(2j * math.pi * t / 16)
            assert abs(evaluate(p, z)) >= margin * (1 - 1e-12)
