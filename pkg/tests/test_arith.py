import numpy as np
import pytest

from pslab import (
    GuardError,
    ValidationError,
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    is_squarefree_bulk,
    largest_prime_factor,
    mobius_up_to,
    primes_up_to,
)

# classical prime counts pi(10^k)
PI_TABLE = {10: 4, 100: 25, 10**3: 168, 10**4: 1229, 10**6: 78498}


def test_sieve_counts():
    for limit, count in PI_TABLE.items():
        assert primes_up_to(limit).prime_count() == count
    assert primes_up_to(1).prime_count() == 0
    assert list(primes_up_to(10).primes) == [2, 3, 5, 7]


def test_sieve_segmented_matches_simple():
    # limit straddling several segment boundaries
    limit = (1 << 18) * 3 + 12345
    seg = primes_up_to(limit).primes
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    assert np.array_equal(seg, np.nonzero(flags)[0])


def test_sieve_guard():
    with pytest.raises(GuardError):
        primes_up_to(10**9 + 1)


def test_spf_table():
    cache = primes_up_to(10**4, with_spf=True)
    assert cache.spf[2] == 2 and cache.spf[9] == 3 and cache.spf[9991] == 97
    for m in range(2, 500):
        p = int(cache.spf[m])
        assert m % p == 0 and is_prime(p)
        assert all(m % r for r in range(2, p))


def test_is_prime_small_and_bases():
    sieve = primes_up_to(10**4).primes
    marks = np.zeros(10**4 + 1, dtype=bool)
    marks[sieve] = True
    for n in range(2, 10**4 + 1):
        assert is_prime(n) == bool(marks[n])
    assert is_prime(999999999989)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_factorize_examples():
    assert factorize(12).entries == ((2, 2), (3, 1))
    assert factorize(561).entries == ((3, 1), (11, 1), (17, 1))
    assert factorize(1).entries == ()


def test_factorize_recompose_randomized():
    rng = np.random.default_rng(23)
    for decade in range(1, 14):
        lo, hi = 10**decade, 10 ** (decade + 1)
        count = 400 if decade <= 9 else 40
        for m in rng.integers(lo, min(hi, 10**14), count):
            m = int(m)
            fm = factorize(m)
            assert fm.product() == m
            assert all(is_prime(p) for p, _ in fm.entries)


def test_factorize_guard():
    with pytest.raises(GuardError):
        factorize(10**14 + 1)


def test_factorize_hard_semiprimes():
    # two primes just under 1e7 make a rho-requiring semiprime near the guard
    ps = [n for n in range(10**7 - 1, 10**7 - 60, -2) if is_prime(n)][:2]
    p, q = max(ps), min(ps)
    assert factorize(p * q).entries == ((q, 1), (p, 1))
    assert factorize(10**13 + 39).entries[-1][0] > 10**6  # large prime survives


def test_largest_prime_factor():
    assert largest_prime_factor(8) == 2
    assert largest_prime_factor(561) == 17
    assert largest_prime_factor(97) == 97
    with pytest.raises(ValidationError):
        largest_prime_factor(1)


def test_lpf_multiplicative_property():
    rng = np.random.default_rng(31)
    primes = primes_up_to(10**4).primes
    for _ in range(200):
        m = int(rng.integers(2, 10**8))
        p = int(primes[rng.integers(0, primes.size)])
        assert largest_prime_factor(m * p) == max(largest_prime_factor(m), p)


def test_is_squarefree_examples():
    assert is_squarefree(10)
    assert not is_squarefree(8)
    assert is_squarefree(999999999989)


def test_is_squarefree_bulk_matches_slow():
    rng = np.random.default_rng(41)
    vals = rng.integers(1, 10**9, 4000).astype(np.int64)
    bulk = is_squarefree_bulk(vals)
    for v, b in zip(vals, bulk):
        assert bool(b) == is_squarefree(int(v))


def test_mobius_values():
    mu = mobius_up_to(100)
    assert mu[1] == 1 and mu[2] == -1 and mu[4] == 0 and mu[30] == -1
    assert mu[36] == 0 and mu[6] == 1


def test_mobius_partial_series():
    mu = mobius_up_to(10**4)
    d = np.arange(1, 10**4 + 1, dtype=np.float64)
    partial = float(np.sum(mu[1:].astype(np.float64) / d**2))
    assert abs(partial - 0.60793) < 5e-4  # partial sum of 6/pi^2


def test_mobius_squarefree_crosscheck():
    # sum |mu(d)| counts the squarefree d, which factorize must reproduce
    N = 10**4
    mu = mobius_up_to(N)
    assert int(np.sum(np.abs(mu[1:]))) == sum(1 for d in range(1, N + 1) if is_squarefree(d))


def test_mobius_matches_factorize_pointwise():
    mu = mobius_up_to(2000)
    for d in range(1, 2001):
        fm = factorize(d)
        expected = 0 if not fm.is_squarefree() else (-1) ** len(fm.entries)
        assert mu[d] == expected


def test_euler_phi():
    assert [euler_phi(d) for d in (1, 2, 3, 4, 10, 12)] == [1, 1, 2, 2, 4, 4]
