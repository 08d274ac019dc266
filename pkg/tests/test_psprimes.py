import math

import numpy as np
import pytest

from pslab import (
    ApQuery,
    ExponentC,
    GuardError,
    ValidationError,
    ap_main_term,
    brun_titchmarsh_report,
    pi_ap,
    pi_c_ap,
    ps_primes_up_to,
    theta_ap,
    vartheta_c_ap,
)

C32 = ExponentC(3, 2)


def test_pi_ap_examples():
    assert pi_ap(20, 4, 1) == 3  # 5, 13, 17
    assert pi_ap(100, 1, 0) == 25
    assert pi_ap(2, 2, 1) == 0  # no odd primes... 2 = 0 mod 2 is excluded


def test_pi_ap_query_validation():
    with pytest.raises(ValidationError):
        ApQuery(100, 4, 2, C32)  # gcd(2, 4) > 1
    with pytest.raises(ValidationError):
        ApQuery(1, 1, 0, C32)
    with pytest.raises(GuardError):
        ApQuery(10**9 + 1, 1, 0, C32)


def test_theta_ap_example():
    assert abs(theta_ap(10, 1, 0) - math.log(210)) < 1e-12


def test_pi_c_examples():
    assert pi_c_ap(ApQuery(50, 1, 0, C32)) == 5
    assert list(ps_primes_up_to(50, C32)) == [2, 5, 11, 31, 41]
    assert pi_c_ap(ApQuery(50, 4, 1, C32)) == 2  # 5 and 41
    assert pi_c_ap(ApQuery(2, 1, 0, C32)) == 1  # 2 = floor(2^1.5)


def test_pi_c_partition_over_residues():
    for c in (C32, ExponentC(21, 20)):
        total = pi_c_ap(ApQuery(2000, 1, 0, c))
        for d in range(2, 11):
            parts = sum(
                pi_c_ap(ApQuery(2000, d, a, c))
                for a in range(d)
                if math.gcd(a, d) == 1
            )
            dividing = sum(
                1 for p in ps_primes_up_to(2000, c) if d % int(p) == 0
            )
            assert parts + dividing == total


def test_vartheta_bounded_by_theta():
    for d, a in ((1, 0), (3, 1), (4, 3)):
        assert vartheta_c_ap(ApQuery(10**4, d, a, C32)) <= theta_ap(10**4, d, a) + 1e-9


def test_vartheta_empty_progression():
    # x=3: primes 2, 3; progression 5 mod 7 is empty
    assert vartheta_c_ap(ApQuery(3, 7, 5, C32)) == 0.0


def test_counting_monotone_in_x():
    qs = [ApQuery(x, 3, 1, C32) for x in (10, 100, 1000, 5000)]
    counts = [pi_c_ap(q) for q in qs]
    assert counts == sorted(counts)
    weights = [vartheta_c_ap(q) for q in qs]
    assert weights == sorted(weights)


def test_main_term_closed_form_small():
    g = 2 / 3
    expected = g * (2 ** (g - 1) + 3 ** (g - 1))
    assert abs(ap_main_term(ApQuery(3, 1, 0, C32)) - expected) < 1e-12


def test_main_term_empty_progression():
    assert ap_main_term(ApQuery(3, 7, 5, C32)) == 0.0


def test_main_term_route_agreement_corpus(envelopes):
    fx = envelopes["main_term_corpus"]
    rng = np.random.default_rng(fx["seed"])
    cs = [(21, 20), (3, 2), (11, 10), (17, 10), (1001, 1000), (5, 3)]
    for _ in range(fx["count"]):
        x = int(rng.integers(10**3, 10**6))
        d = int(rng.integers(1, 13))
        while True:
            a = int(rng.integers(0, d)) if d > 1 else 0
            if math.gcd(a, d) == 1:
                break
        p, q = cs[int(rng.integers(0, len(cs)))]
        value = ap_main_term(ApQuery(x, d, a, ExponentC(p, q)))  # raises on disagreement
        assert value >= 0.0


def test_main_term_tracks_count():
    # |pi_c - main| / main stays a small trend statistic at desk scale
    q = ApQuery(10**5, 4, 1, ExponentC(21, 20))
    main = ap_main_term(q)
    count = pi_c_ap(q)
    assert abs(count - main) / main < 0.2


def test_brun_titchmarsh_finite_positive():
    q = ApQuery(10**4, 3, 1, C32)
    r = brun_titchmarsh_report(q)
    assert math.isfinite(r) and r > 0


def test_brun_titchmarsh_sweep_envelope():
    c = ExponentC(21, 20)
    ratios = [
        brun_titchmarsh_report(ApQuery(10**6, d, a, c))
        for d in (3, 4, 5, 7)
        for a in range(d)
        if math.gcd(a, d) == 1
    ]
    assert all(math.isfinite(r) for r in ratios)
    assert max(ratios) <= 5.0
