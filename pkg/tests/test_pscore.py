import numpy as np
import pytest

from pslab import (
    ExponentC,
    ValidationError,
    count_decomposition,
    floor_pow,
    floor_pow_bulk,
    integer_root,
    is_ps_value,
    ps_values_in,
)

C32 = ExponentC(3, 2)

C_CORPUS = [ExponentC(*pq) for pq in [(3, 2), (11, 10), (17, 10), (5, 3), (21, 20), (5, 2)]]


def test_integer_root_examples():
    assert integer_root(1000, 2) == 31
    assert integer_root(0, 5) == 0
    assert integer_root(2**64, 4) == 2**16


def test_integer_root_bracket_randomized():
    rng = np.random.default_rng(11)
    for _ in range(2000):
        q = int(rng.integers(1, 12))
        m = int(rng.integers(0, 10**12))
        r = integer_root(m, q)
        assert r**q <= m < (r + 1) ** q
    # near perfect powers, where float seeds are most dangerous
    for base in (10**6 - 1, 10**6, 10**6 + 1):
        for q in (2, 3, 5, 7):
            for delta in (-1, 0, 1):
                m = base**q + delta
                r = integer_root(m, q)
                assert r**q <= m < (r + 1) ** q


def test_integer_root_rejects():
    with pytest.raises(ValidationError):
        integer_root(10, 0)
    with pytest.raises(ValidationError):
        integer_root(-1, 2)


def test_exponent_validation():
    with pytest.raises(ValidationError):
        ExponentC(2, 1)  # integer c
    with pytest.raises(ValidationError):
        ExponentC(2, 4)  # not reduced
    with pytest.raises(ValidationError):
        ExponentC(2, 3)  # c < 1
    with pytest.raises(ValidationError):
        ExponentC.parse("1.5")
    assert ExponentC.parse(" 3/2 ") == C32


def test_floor_pow_examples():
    assert floor_pow(2, C32) == 2
    assert floor_pow(1, ExponentC(21, 20)) == 1
    assert floor_pow(10, C32) == 31


def test_floor_pow_exactness_against_high_precision():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 50
    rng = np.random.default_rng(5)
    for c in C_CORPUS:
        for n in rng.integers(1, 10**5, 200):
            n = int(n)
            hp = mpmath.floor(mpmath.mpf(n) ** (mpmath.mpf(c.p) / c.q))
            exact = floor_pow(n, c)
            # high-precision float agrees whenever it is clearly off-integer;
            # any disagreement must favour the exact path
            dist = abs(mpmath.mpf(n) ** (mpmath.mpf(c.p) / c.q) - mpmath.nint(
                mpmath.mpf(n) ** (mpmath.mpf(c.p) / c.q)))
            if dist >= 1e-6:
                assert exact == int(hp)


def test_floor_pow_monotone():
    for c in C_CORPUS:
        vals = [floor_pow(n, c) for n in range(1, 2000)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_is_ps_value_examples():
    assert is_ps_value(5, C32).preimage == 3
    assert is_ps_value(3, C32).preimage is None
    assert is_ps_value(1, ExponentC(17, 10)).preimage == 1


def test_round_trip_membership():
    for c in C_CORPUS:
        for n in list(range(1, 300)) + [10**4, 10**5]:
            k = floor_pow(n, c)
            w = is_ps_value(k, c)
            assert w.is_member
            assert floor_pow(w.preimage, c) == k


def test_ps_values_in_examples():
    got = [(w.value, w.preimage) for w in ps_values_in(1, 12, C32)]
    assert got == [(1, 1), (2, 2), (5, 3), (8, 4), (11, 5)]
    assert list(ps_values_in(3, 4, C32)) == []


def test_ps_values_in_matches_membership_filter():
    for c in C_CORPUS[:4]:
        stream = {w.value for w in ps_values_in(1, 500, c)}
        direct = {k for k in range(1, 501) if is_ps_value(k, c).is_member}
        assert stream == direct


def test_ps_values_single_point_consistency():
    for k in range(1, 60):
        single = list(ps_values_in(k, k, C32))
        w = is_ps_value(k, C32)
        assert (len(single) == 1) == w.is_member


def test_count_identity():
    # floor(n^c) is strictly increasing, so values <= floor(x^c) biject with n <= x
    for c in C_CORPUS[:4]:
        for x in (10, 100, 1234):
            assert sum(1 for _ in ps_values_in(1, floor_pow(x, c), c)) == x


def test_decomposition_zero_weight():
    main, corr, exact = count_decomposition(100, C32, np.zeros_like)
    assert (main, corr, exact) == (0.0, 0.0, 0.0)


def test_decomposition_small_exact_count():
    main, corr, exact = count_decomposition(10, C32, np.ones_like)
    assert exact == 4.0  # values 1, 2, 5, 8


def test_decomposition_residual_envelope():
    # the O(1) residual stays inside the calibrated envelope across the corpus
    for c in C_CORPUS[:5]:
        main, corr, exact = count_decomposition(10**4, c, np.ones_like)
        assert abs(exact - main - corr) <= 2.0


def test_decomposition_rejects_zero():
    with pytest.raises(ValidationError):
        count_decomposition(0, C32, np.ones_like)


def test_floor_pow_bulk_matches_exact():
    rng = np.random.default_rng(17)
    for c in C_CORPUS:
        ns = np.unique(rng.integers(1, 2 * 10**6, 800).astype(np.int64))
        bulk = floor_pow_bulk(ns, c)
        for n, k in zip(ns, bulk):
            assert int(k) == floor_pow(int(n), c)


def test_floor_pow_bulk_big_value_fallback():
    c = ExponentC(5, 2)  # values ~ n^2.5 blow past the float path quickly
    ns = np.array([10**6, 10**6 + 1], dtype=np.int64)
    bulk = floor_pow_bulk(ns, c)
    assert int(bulk[0]) == floor_pow(10**6, c)
