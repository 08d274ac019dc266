import math

import numpy as np
import pytest

from pslab import (
    ExponentC,
    GuardError,
    chebyshev_sum,
    convolution_count,
    floor_pow,
    large_pf_exceed,
    largest_prime_factor,
    residue_equidistribution,
    smooth_count,
    square_divisor_sum,
    squarefree_density,
)

C32 = ExponentC(3, 2)
C1110 = ExponentC(11, 10)
C1710 = ExponentC(17, 10)


def test_squarefree_small_hand_enumeration():
    # values 1,2,5,8,11,14,18,22,27,31; squarefree except 8, 18, 27
    r = squarefree_density(10, C32)
    assert r.observed == 7.0


def test_squarefree_x1():
    r = squarefree_density(1, C32)
    assert r.observed == 1.0
    assert abs(r.reference - 6 / math.pi**2) < 1e-12


def test_squarefree_frozen_count_at_1e5():
    # frozen from the per-value factorization oracle
    r = squarefree_density(10**5, C32)
    assert int(r.observed) == 58585


def test_squarefree_ratio_trend():
    r4 = squarefree_density(10**4, C32)
    r6 = squarefree_density(10**6, C32)
    assert abs(r6.ratio - 1.0) < abs(r4.ratio - 1.0)


def test_squarefree_warns_outside_range():
    with pytest.warns(UserWarning):
        squarefree_density(100, ExponentC(9, 5))


def test_chebyshev_hand_values():
    assert chebyshev_sum(2, C32).observed == pytest.approx(math.log(2))
    assert chebyshev_sum(1, C32).observed == 0.0


def test_chebyshev_matches_slow_oracle():
    # independent recount via per-value factorization
    from pslab import factorize

    x = 2000
    expected = 0.0
    for n in range(1, x + 1):
        v = floor_pow(n, C1110)
        if v > 1:
            expected += sum(math.log(p) for p, _ in factorize(v).entries)
    assert chebyshev_sum(x, C1110).observed == pytest.approx(expected, rel=1e-9)


def test_chebyshev_acceptance_band():
    r = chebyshev_sum(10**5, ExponentC(6, 5))
    assert 0.90 <= r.ratio <= 1.05


def test_smooth_count_witness_frozen():
    # frozen from the direct scan oracle over n <= 10^4
    r = smooth_count(10**4, C1110, 0.5)
    assert r.observed == 1977.0
    assert r.observed >= 1.0


def test_smooth_count_eps_one_recount():
    x = 3000
    r = smooth_count(x, C1110, 1.0)
    direct = sum(
        1 for n in range(2, x + 1) if largest_prime_factor(floor_pow(n, C1110)) <= n
    )
    assert int(r.observed) == direct


def test_smooth_count_monotone_in_eps():
    counts = [smooth_count(5000, C1110, e).observed for e in (0.2, 0.4, 0.6, 0.8, 1.0)]
    assert counts == sorted(counts)


def test_large_pf_theta_zero_counts_everything():
    for x in (100, 5000):
        r = large_pf_exceed(x, C32, 0.0, 0.05)
        assert r.observed == float(x - 1)


def test_large_pf_theta_c_matches_prime_values():
    # theta = c: only n with floor(n^c) prime (plus boundary effects) survive;
    # cross-check the count against the sequence-prime enumeration
    from pslab import ApQuery, pi_c_ap

    x = 2000
    r = large_pf_exceed(x, C32, 1.5, 0.05)
    strict = sum(
        1
        for n in range(2, x + 1)
        if largest_prime_factor(floor_pow(n, C32)) > float(n) ** 1.45
    )
    assert int(r.observed) == strict
    prime_values = pi_c_ap(ApQuery(floor_pow(x, C32), 1, 0, C32))
    assert int(r.observed) <= prime_values


def test_large_pf_deciles_present():
    r = large_pf_exceed(1000, C32, 0.3, 0.05)
    assert set(r.extras) == {f"d{k}0" for k in range(1, 10)}
    assert all(0.0 < v <= 1.6 for v in r.extras.values())
    assert r.extras["d10"] <= r.extras["d50"] <= r.extras["d90"]


def test_square_divisor_zero_weight():
    lhs, rhs = square_divisor_sum(1000, C32, 2, np.zeros_like)
    assert (lhs, rhs) == (0.0, 0.0)


def test_square_divisor_example_envelope():
    lhs, rhs = square_divisor_sum(10**5, C32, 2, np.ones_like)
    assert abs(lhs - rhs) <= 0.05 * 10**5


def test_square_divisor_single_d_cross_check():
    # the d-term of the sum matches an independent residue scan
    x, d = 20000, 5
    vals = [floor_pow(n, C32) for n in range(1, x + 1)]
    direct = sum(1 for v in vals if v % (d * d) == 0)
    lhs, _ = square_divisor_sum(
        x, C32, 4, lambda ds: (ds == d).astype(float)
    )
    assert lhs == float(direct)


def test_residue_equidistribution_exactness():
    n = 10**4
    r = residue_equidistribution(n, C1710, 1, 0)
    assert r.observed == float(n)
    counts = [
        residue_equidistribution(n, C1710, 7, a).observed for a in range(7)
    ]
    assert sum(counts) == float(n)


def test_residue_equidistribution_acceptance_band():
    devs = [
        abs(residue_equidistribution(10**6, C1710, 7, a).observed * 7 / 10**6 - 1)
        for a in range(7)
    ]
    assert max(devs) <= 0.02


def test_residue_guard():
    with pytest.raises(GuardError):
        residue_equidistribution(100, C1710, 50, 1)


def test_residue_warns_outside_c_range():
    with pytest.warns(UserWarning):
        residue_equidistribution(1000, C1110, 2, 0)


def test_convolution_zero_predicate():
    assert convolution_count(10**4, C1110, np.zeros_like) == 0.0


def test_convolution_positive_and_brute_force():
    got = convolution_count(2000, C1110, np.ones_like)
    assert got > 0
    # oracle: iterate n and scan divisors of floor(n^c) inside the boxes
    eps, cf = 0.01, 11 / 10
    K = max(int(2000 ** (cf - 1 + 6 * eps)), 1)
    L = max(int(2000 ** (1 - 6 * eps) / 5), 1)
    brute = 0
    for n in range(1, 2001):
        v = floor_pow(n, C1110)
        for k in range(K + 1, 2 * K + 1):
            if v % k == 0 and L < v // k <= 2 * L:
                brute += 1
    assert got == float(brute)


def test_convolution_prime_indicator_cross_check():
    from pslab import is_prime

    def prime_indicator(arr):
        return np.array([1.0 if is_prime(int(v)) else 0.0 for v in arr])

    got = convolution_count(1500, C1110, prime_indicator)
    eps, cf = 0.01, 11 / 10
    K = max(int(1500 ** (cf - 1 + 6 * eps)), 1)
    L = max(int(1500 ** (1 - 6 * eps) / 5), 1)
    brute = 0
    for n in range(1, 1501):
        v = floor_pow(n, C1110)
        for k in range(K + 1, 2 * K + 1):
            if v % k == 0:
                l = v // k
                if L < l <= 2 * L and is_prime(k) and is_prime(l):
                    brute += 1
    assert got == float(brute)


def test_reports_serialize():
    r = squarefree_density(100, C32)
    assert r.to_csv_row().startswith("squarefree_density,")
    assert '"experiment": "squarefree_density"' in r.to_json()
    assert r.ratio == pytest.approx(r.observed / r.reference)
