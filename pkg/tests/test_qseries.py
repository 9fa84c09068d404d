"""Laurent-series substrate: arithmetic examples, window semantics, and the
randomized ring-law suites (exact comparisons only)."""

import random
from fractions import Fraction

import pytest

from moonshine.qseries import (
    BiLaurentSeries,
    LaurentSeries,
    RectangleMismatch,
    UnknownCoefficient,
    ZeroLeadingCoefficient,
    coeff_denominator,
)


def series(coeffs, valuation=0, trunc=None):
    return LaurentSeries(coeffs, valuation, trunc)


def test_coefficient_window_semantics():
    s = series([1, 2, 3], valuation=-1)  # q^-1 + 2 + 3q, trunc 2
    assert s.coefficient(-1) == 1
    assert s.coefficient(0) == 2
    assert s.coefficient(-5) == 0
    with pytest.raises(UnknownCoefficient):
        s.coefficient(2)
    with pytest.raises(UnknownCoefficient):
        s.coefficient(100)


def test_zero_series_sentinel():
    z = LaurentSeries.zero(4)
    assert z.is_zero
    assert z.coeffs == ()
    assert z.trunc == 4
    assert z.coefficient(3) == 0
    with pytest.raises(UnknownCoefficient):
        z.coefficient(4)
    # canonicalization: an all-zero window collapses to the sentinel
    assert series([0, 0, 0], valuation=2) == LaurentSeries.zero(5)


def test_canonical_leading_coefficient():
    s = series([0, 0, 5, 0], valuation=-2)
    assert s.valuation == 0
    assert s.coeffs == (5, 0)
    assert s.trunc == 2


def test_add_disjoint_supports():
    a = series([1, 744], valuation=-1)
    b = series([0, 0, 196884], valuation=-1)
    total = a + b
    assert total.coefficient(-1) == 1
    assert total.coefficient(0) == 744
    # the narrower window wins
    assert total.trunc == 1


def test_add_additive_inverse():
    a = series([3, -1, 2], valuation=-1)
    z = a + (-a)
    assert z.is_zero
    assert z.trunc == a.trunc


def test_add_truncation_min_rule():
    a = series([1, 1, 0, 0, 0])            # 1 + q, trunc 5
    b = series([1, 0, 1])                  # 1 + q^2, trunc 3
    s = a + b
    assert s == series([2, 1, 1])
    assert s.trunc == 3


def test_mul_geometric_series():
    one_minus_q = series([1, -1] + [0] * 6)
    geo = series([1] * 8)
    prod = one_minus_q * geo
    assert prod.valuation == 0
    assert prod.coefficient(0) == 1
    assert all(prod.coefficient(k) == 0 for k in range(1, prod.trunc))


def test_mul_valuation_addition():
    qinv = LaurentSeries.monomial(-1)
    q = LaurentSeries.monomial(1)
    assert (qinv * q).coefficient(0) == 1


def test_mul_binomial():
    s = series([1, 1, 0])
    assert (s * s).coefficient_list() == [1, 2, 1]


def test_mul_window_rule():
    a = series([1, 1], valuation=2)    # q^2 + q^3, trunc 4
    b = series([1, 5, 7], valuation=-1)  # trunc 2
    prod = a * b
    assert prod.valuation == 1
    assert prod.trunc == min(a.trunc + b.valuation, b.trunc + a.valuation)


def _long_division_inverse(a):
    """Oracle: divide 1 by the unit part of ``a`` with explicit long division."""
    width = a.trunc - a.valuation
    u = [a.coefficient(a.valuation + i) for i in range(width)]
    remainder = [Fraction(1)] + [Fraction(0)] * (width - 1)
    quotient = []
    for _ in range(width):
        q = remainder[0] / u[0]
        quotient.append(q)
        remainder = [remainder[i] - q * u[i] for i in range(len(remainder))]
        remainder.pop(0)
        u.pop()
    return LaurentSeries(quotient, -a.valuation)


def test_invert_geometric():
    inv = series([1, -1, 0, 0, 0, 0]).inverse()
    assert inv.coefficient_list() == [1, 1, 1, 1, 1, 1]


def test_invert_monomial():
    assert LaurentSeries.monomial(1).inverse() == LaurentSeries.monomial(-1)


def test_invert_discriminant_head_against_long_division():
    # head of q * prod(1-q^n)^24; the inverse must match classical 1/Delta
    delta = series([1, -24, 252, -1472, 4830], valuation=1)
    inv = delta.inverse()
    assert inv == _long_division_inverse(delta)
    assert inv.valuation == -1
    assert inv.coefficient(-1) == 1
    assert inv.coefficient(0) == 24
    assert inv.coefficient(1) == 324
    assert (delta * inv) == LaurentSeries.one((delta * inv).trunc)


def test_invert_zero_raises():
    with pytest.raises(ZeroLeadingCoefficient):
        LaurentSeries.zero(5).inverse()


def test_pow_examples():
    s = series([1, 1, 0, 0])
    assert (s**3).coefficient_list() == [1, 3, 3, 1]
    assert s**0 == LaurentSeries.one(4)
    inv_sq = series([1, -1, 0, 0, 0]) ** -2
    assert inv_sq.coefficient_list() == [1, 2, 3, 4, 5]


def test_pow_negative_propagates_inversion_error():
    with pytest.raises(ZeroLeadingCoefficient):
        LaurentSeries.zero(3) ** -1


def test_bls_negative_power_rejected():
    f = BiLaurentSeries({(0, 0): 1, (1, 1): -1}, (0, 2, 0, 2))
    with pytest.raises(ValueError):
        f ** -1


def test_scalar_arithmetic():
    s = series([1, 2, 3])
    assert (s - 1).coefficient(0) == 0
    assert (s - 1).valuation == 1
    assert (s + 0) == s
    assert (s * 2).coefficient_list() == [2, 4, 6]
    assert (s / 2).coefficient(1) == 1
    assert coeff_denominator((s / 2).coefficient(0)) == 2
    # adding a constant beyond the known window is a no-op
    t = series([1], valuation=-1)  # window [-1, 0)
    assert (t + 744) == t


def _random_series(rng, allow_fraction=False):
    width = rng.randint(1, 7)
    val = rng.randint(-3, 3)
    coeffs = []
    for _ in range(width):
        c = rng.randint(-9, 9)
        if allow_fraction and rng.random() < 0.3:
            c = Fraction(c, rng.randint(1, 5))
        coeffs.append(c)
    return LaurentSeries(coeffs, val)


def _agree(a, b):
    """Exact equality on the jointly determined window."""
    t = min(a.trunc, b.trunc)
    return a.truncate(t) == b.truncate(t)


def test_ring_laws_randomized():
    rng = random.Random(20260809)
    for _ in range(200):
        a = _random_series(rng, allow_fraction=True)
        b = _random_series(rng, allow_fraction=True)
        c = _random_series(rng, allow_fraction=True)
        assert a + b == b + a
        assert a * b == b * a
        assert _agree((a + b) + c, a + (b + c))
        assert (a * b) * c == a * (b * c)
        assert _agree(a * (b + c), a * b + a * c)


def test_inverse_roundtrip_randomized():
    rng = random.Random(97)
    for _ in range(200):
        a = _random_series(rng, allow_fraction=True)
        while a.is_zero:
            a = _random_series(rng, allow_fraction=True)
        prod = a * a.inverse()
        assert prod == LaurentSeries.one(prod.trunc)
        assert prod.trunc == a.trunc - a.valuation


def test_truncation_monotonicity_randomized():
    # recomputing a pipeline with wider windows and restricting must agree
    rng = random.Random(5)
    for _ in range(200):
        coeffs = [rng.randint(-9, 9) for _ in range(8)]
        coeffs[0] = rng.choice([1, -1, 2, 3])
        lo = LaurentSeries(coeffs[:5])
        hi = LaurentSeries(coeffs)
        e = rng.randint(1, 3)
        narrow = (lo**e + lo.inverse()) * lo
        wide = (hi**e + hi.inverse()) * hi
        assert wide.truncate(narrow.trunc) == narrow


def test_integer_closure_randomized():
    rng = random.Random(11)
    for _ in range(200):
        a = _random_series(rng)
        b = _random_series(rng)
        out = (a + b) * a - b * b + a**3
        assert all(isinstance(c, int) for c in out.coeffs)


# -- two-variable series -------------------------------------------------------


def test_bls_mul_examples():
    rect = (0, 2, -2, 0)
    a = BiLaurentSeries({(0, 0): 1, (1, -1): -1}, rect)
    b = BiLaurentSeries({(0, 0): 1, (1, -1): 1}, rect)
    assert a * b == BiLaurentSeries({(0, 0): 1, (2, -2): -1}, rect)

    rect2 = (-1, 1, -1, 1)
    x = BiLaurentSeries({(-1, 0): 1, (0, -1): -1}, rect2)
    pq = BiLaurentSeries({(1, 1): 1}, rect2)
    assert x * pq == BiLaurentSeries({(0, 1): 1, (1, 0): -1}, rect2)

    one = BiLaurentSeries.one(rect2)
    assert x * one == x


def test_bls_rectangle_mismatch():
    a = BiLaurentSeries({(0, 0): 1}, (0, 1, 0, 1))
    b = BiLaurentSeries({(0, 0): 1}, (0, 2, 0, 1))
    with pytest.raises(RectangleMismatch):
        a * b
    with pytest.raises(RectangleMismatch):
        a + b


def test_bls_pow():
    rect = (0, 2, 0, 2)
    f = BiLaurentSeries({(0, 0): 1, (1, 1): -1}, rect)
    assert f**2 == BiLaurentSeries({(0, 0): 1, (1, 1): -2, (2, 2): 1}, rect)
    assert f**0 == BiLaurentSeries.one(rect)
    capped = BiLaurentSeries({(0, 0): 1, (1, 1): -1}, (0, 2, 0, 3))
    cubed = capped**3
    assert cubed == BiLaurentSeries({(0, 0): 1, (1, 1): -3, (2, 2): 3}, (0, 2, 0, 3))


def test_bls_coefficient_and_truncate():
    rect = (0, 2, 0, 2)
    f = BiLaurentSeries({(1, 1): 4}, rect)
    assert f.coefficient(1, 1) == 4
    assert f.coefficient(0, 0) == 0
    with pytest.raises(UnknownCoefficient):
        f.coefficient(3, 0)
    assert f.truncated((0, 1, 0, 1)) == BiLaurentSeries({(1, 1): 4}, (0, 1, 0, 1))
    with pytest.raises(ValueError):
        f.truncated((0, 5, 0, 1))


def test_bls_rejects_out_of_rectangle_keys():
    with pytest.raises(ValueError):
        BiLaurentSeries({(5, 0): 1}, (0, 2, 0, 2))


def test_no_floats_anywhere():
    with pytest.raises(TypeError):
        LaurentSeries([1.5])
    with pytest.raises(TypeError):
        BiLaurentSeries({(0, 0): 0.5}, (0, 1, 0, 1))
