import math

import pytest

from udc.designer import (
    DesignError,
    design_code,
    failure_bound,
    field_candidates,
)
from udc.fields import make_field
from udc.ntheory import is_prime, multiplicative_order
from udc.schemes import RowSelection, derive_code, fourier_scheme


def test_multiplier_is_smallest_sufficient():
    for t in range(1, 60):
        for n0, r0 in ((8, 7), (7, 5), (4, 3), (3, 2)):
            d = design_code(t, n0, r0)
            assert d.n == d.multiplier * n0 and d.r == d.multiplier * r0
            assert d.t >= t  # capability reached
            if d.multiplier > 1:
                m1 = d.multiplier - 1
                assert (m1 * n0 - m1 * r0) // 2 < t  # and minimally so
            assert d.distance == d.n - d.r + 1


def test_known_plans():
    d = design_code(50, 7, 5)
    assert (d.n, d.r, d.distance) == (350, 250, 101)
    assert "GF(43^4)" in [str(c) for c in d.candidates]

    d = design_code(49, 7, 5)
    assert (d.n, d.r, d.distance) == (343, 245, 99)
    assert "GF(19^6)" in [str(c) for c in d.candidates]

    d = design_code(48, 7, 5)
    assert (d.n, d.r, d.distance) == (336, 240, 97)
    assert str(d.smallest_field()) == "GF(337)"

    d = design_code(50, 4, 3)
    assert (d.n, d.r, d.distance) == (400, 300, 101)
    assert str(d.smallest_extension_field()) == "GF(7^4)"
    # the overall smallest candidate is the prime field 401
    assert str(d.smallest_field()) == "GF(401)"


def test_candidates_support_the_length():
    for n in (7, 16, 272, 336, 400):
        cands = field_candidates(n)
        assert cands
        qs = [c.q for c in cands]
        assert qs == sorted(qs)
        assert len(set(qs)) == len(qs)
        for c in cands:
            assert is_prime(c.p)
            assert (c.q - 1) % n == 0  # the length divides the group order
            assert c.q == c.p**c.s
            if c.s > 1:
                # minimal extension degree for that characteristic
                assert multiplicative_order(c.p, n) == c.s


def test_candidate_fields_actually_build_codes():
    d = design_code(2, 8, 7)  # n = 16, r = 14
    built = 0
    for c in d.candidates:
        if c.q > 300:
            continue
        field = make_field(c.p, c.s)
        code = derive_code(fourier_scheme(field, d.n), RowSelection(0, 1, d.r))
        assert code.mds_certified and code.t == d.t
        built += 1
    assert built >= 1


def test_design_validation():
    with pytest.raises(DesignError):
        design_code(0, 8, 7)
    with pytest.raises(DesignError):
        design_code(5, 7, 7)
    with pytest.raises(DesignError):
        design_code(5, 7, 0)
    with pytest.raises(DesignError):
        field_candidates(1)


# ---------------------------------------------------------------------------
# failure probability bound


def test_failure_bound_identity():
    fb = failure_bound(256, 222, 0.03)
    mu = 256 * 0.03
    assert fb.t == 17
    assert fb.delta == pytest.approx((fb.t + 1) / mu - 1)
    assert (1 + fb.delta) * mu == pytest.approx(fb.t + 1)  # threshold sits at t+1
    assert fb.bound == pytest.approx(math.exp(-(fb.delta**2) * mu / (2 + fb.delta)))
    assert fb.bound == pytest.approx(0.01584, abs=2e-4)
    assert not fb.high_error_regime  # 222/256 < 1 - 0.06


def test_failure_bound_monotone_in_error_rate():
    prev = 0.0
    for eps in (0.005, 0.01, 0.02, 0.03, 0.04):
        b = failure_bound(256, 222, eps).bound
        assert b > prev  # worse channels give weaker guarantees
        prev = b
    assert prev < 1


def test_failure_bound_regimes():
    with pytest.raises(DesignError):
        failure_bound(256, 222, 0.08)  # mu = 20.48 > t+1 = 18: vacuous
    # rate 0.9 > 1 - 2*0.055 while mu = 5.5 still sits below t+1 = 6
    assert failure_bound(100, 90, 0.055).high_error_regime
    assert not failure_bound(100, 90, 0.01).high_error_regime
    with pytest.raises(DesignError):
        failure_bound(256, 222, 0.0)
    with pytest.raises(DesignError):
        failure_bound(256, 0, 0.03)


def test_failure_bound_dominates_exact_tail():
    # exact binomial tail P[X > t] must sit below the bound
    from math import comb

    for n, r, eps in ((256, 222, 0.03), (64, 32, 0.05), (100, 80, 0.02)):
        fb = failure_bound(n, r, eps)
        tail = sum(comb(n, k) * eps**k * (1 - eps) ** (n - k) for k in range(fb.t + 1, n + 1))
        assert tail <= fb.bound
