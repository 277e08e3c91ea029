"""Tests for the scalar entropy primitives.

Expected values fall into three groups: hand-checkable identities
(endpoints, symmetry, absorbing elements), values frozen from an
independent arbitrary-precision evaluation with mpmath, and structural
properties (convexity, monotonicity) checked on grids and random draws.
"""

import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperrect import (
    NEG_INF,
    binary_entropy,
    binary_entropy_inv,
    g_func,
    log_binomial,
    phi,
    star,
    v_func,
)


def mp_entropy(p):
    """Independent high-precision h(p) in bits."""
    with mpmath.workdps(50):
        p = mpmath.mpf(p)
        if p == 0 or p == 1:
            return 0.0
        q = 1 - p
        return float(-(p * mpmath.log(p, 2) + q * mpmath.log(q, 2)))


class TestBinaryEntropy:
    def test_maximum(self):
        assert binary_entropy(0.5) == 1.0

    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_quarter(self):
        # Frozen from mpmath at 50 digits: h(1/4) = 0.81127812445913283...
        assert binary_entropy(0.25) == pytest.approx(0.8112781244591328, abs=1e-15)
        assert binary_entropy(0.25) == pytest.approx(mp_entropy(0.25), abs=1e-15)

    def test_symmetry(self):
        for p in [0.1, 0.23, 0.4, 0.47]:
            assert binary_entropy(p) == pytest.approx(binary_entropy(1 - p), abs=1e-15)

    def test_against_mpmath_grid(self):
        for i in range(1, 50):
            p = i / 50
            assert binary_entropy(p) == pytest.approx(mp_entropy(p), abs=1e-13)

    def test_domain_rejected(self):
        with pytest.raises(ValueError):
            binary_entropy(-0.01)
        with pytest.raises(ValueError):
            binary_entropy(1.01)

    @given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_range(self, p):
        h = binary_entropy(p)
        assert 0.0 <= h <= 1.0


class TestBinaryEntropyInv:
    def test_endpoints(self):
        assert binary_entropy_inv(1.0) == 0.5
        assert binary_entropy_inv(0.0) == 0.0

    def test_known_value(self):
        assert binary_entropy_inv(0.8112781) == pytest.approx(0.25, abs=1e-7)

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(1000):
            p = rng.uniform(0.0, 0.5)
            assert abs(binary_entropy_inv(binary_entropy(p)) - p) <= 1e-9

    def test_forward_residual(self):
        # The inverse is accurate enough that h(h_inv(y)) returns y to 1e-12.
        for y in [0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99]:
            p = binary_entropy_inv(y)
            assert abs(binary_entropy(p) - y) <= 1e-12

    def test_monotone(self):
        ys = [i / 200 for i in range(201)]
        ps = [binary_entropy_inv(y) for y in ys]
        assert all(a < b for a, b in zip(ps, ps[1:]))

    def test_scalar_convexity_of_variance_curve(self):
        # x -> h_inv(x) * (1 - h_inv(x)) is convex; midpoint test on a grid.
        m = 10**4
        xs = [i / m for i in range(m + 1)]
        vals = [binary_entropy_inv(x) * (1 - binary_entropy_inv(x)) for x in xs]
        for i in range(1, m):
            assert vals[i] <= 0.5 * (vals[i - 1] + vals[i + 1]) + 1e-12

    @given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    def test_range(self, y):
        p = binary_entropy_inv(y)
        assert 0.0 <= p <= 0.5


class TestStar:
    def test_identity_element(self):
        for q in [0.0, 0.3, 0.5, 0.9, 1.0]:
            assert star(0.0, q) == pytest.approx(q, abs=1e-15)

    def test_absorbing_element(self):
        for q in [0.0, 0.3, 0.5, 0.9, 1.0]:
            assert star(0.5, q) == pytest.approx(0.5, abs=1e-15)

    def test_quarter_quarter(self):
        assert star(0.25, 0.25) == pytest.approx(0.375, abs=1e-15)

    @given(
        st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
        st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    )
    def test_commutative_and_in_range(self, p, q):
        s = star(p, q)
        assert s == pytest.approx(star(q, p), abs=1e-15)
        assert 0.0 <= s <= 1.0

    @given(
        st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
        st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    )
    def test_product_form(self, p, q):
        assert star(p, q) == pytest.approx(
            0.5 * (1 - (1 - 2 * p) * (1 - 2 * q)), abs=1e-14
        )


class TestPhi:
    def test_both_full(self):
        assert phi(1.0, 1.0) == 0.5

    def test_both_zero(self):
        assert phi(0.0, 0.0) == 0.0

    def test_absorbing(self):
        for x in [0.0, 0.2, 0.5, 0.8, 1.0]:
            assert phi(x, 1.0) == pytest.approx(0.5, abs=1e-13)

    def test_symmetric(self):
        rng = random.Random(3)
        for _ in range(50):
            x, y = rng.random(), rng.random()
            assert phi(x, y) == pytest.approx(phi(y, x), abs=1e-15)

    def test_midpoint_convexity(self):
        rng = random.Random(11)
        for _ in range(10**4):
            x1, y1 = rng.random(), rng.random()
            x2, y2 = rng.random(), rng.random()
            mid = phi((x1 + x2) / 2, (y1 + y2) / 2)
            assert mid <= 0.5 * (phi(x1, y1) + phi(x2, y2)) + 1e-12


class TestLogBinomial:
    def test_small_exact(self):
        assert log_binomial(4, 2) == pytest.approx(math.log2(6), abs=1e-15)

    def test_k_zero(self):
        for n in [0, 1, 5, 64, 1000]:
            assert log_binomial(n, 0) == 0.0

    def test_ten_choose_five(self):
        assert log_binomial(10, 5) == pytest.approx(math.log2(252), abs=1e-15)

    def test_exact_vs_gamma_all_small(self):
        # Both paths agree to 1e-10 for every n <= 64.
        for n in range(65):
            for k in range(n + 1):
                exact = math.log2(math.comb(n, k))
                got = log_binomial(n, k)
                assert abs(got - exact) <= 1e-10

    def test_gamma_path_relative_error(self):
        for n in [65, 100, 500, 4096]:
            for k in [0, 1, n // 3, n // 2, n - 1, n]:
                exact = math.log2(math.comb(n, k))
                got = log_binomial(n, k)
                if exact == 0.0:
                    assert got == 0.0
                else:
                    assert abs(got - exact) <= 1e-12 * abs(exact) + 1e-12

    def test_strict_out_of_range(self):
        with pytest.raises(ValueError):
            log_binomial(4, 5)
        with pytest.raises(ValueError):
            log_binomial(4, -1)

    def test_sentinel_mode(self):
        assert log_binomial(4, 5, strict=False) == NEG_INF
        assert log_binomial(4, -1, strict=False) == NEG_INF


class TestVFunc:
    def test_quarter(self):
        assert v_func(0.25) == pytest.approx(0.5 / math.log(3), abs=1e-15)

    def test_limit_toward_half(self):
        assert abs(v_func(0.499) - 0.5) <= 1e-3

    def test_monotone_witness(self):
        assert v_func(0.3) > v_func(0.2)

    def test_strictly_increasing_grid(self):
        ts = [(i + 1) / 1001 * 0.5 for i in range(999)]
        vals = [v_func(t) for t in ts]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_singular_endpoints_rejected(self):
        with pytest.raises(ValueError):
            v_func(0.0)
        with pytest.raises(ValueError):
            v_func(0.5)

    @given(st.floats(min_value=1e-9, max_value=0.5, exclude_max=True))
    def test_positive(self, t):
        assert v_func(t) > 0.0


class TestGFunc:
    def test_at_one(self):
        assert g_func(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_at_two(self):
        assert g_func(2.0) == pytest.approx(1.5 - 2 * math.log(2), abs=1e-15)

    def test_at_ten(self):
        assert g_func(10.0) == pytest.approx(9.9 - 2 * math.log(10), abs=1e-13)
        assert g_func(10.0) > 0.0

    def test_nonnegative_log_grid(self):
        for i in range(1000):
            y = 10 ** (6 * i / 999)
            assert g_func(y) >= -1e-12

    def test_below_one_rejected(self):
        with pytest.raises(ValueError):
            g_func(0.999)
