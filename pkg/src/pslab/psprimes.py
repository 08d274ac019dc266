"""Counting sequence primes in arithmetic progressions and the two-route
evaluation of the smoothed main term.

Membership of a prime in the value set of n -> floor(n^c) is always
settled by exact big-integer comparison; only the log-weighted sums are
floating point, and those accumulate in fixed chunk order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, log

import numpy as np

from .arith import euler_phi, primes_up_to
from .errors import GuardError, RouteDisagreementError, ValidationError
from .pscore import ExponentC, is_ps_value

X_GUARD = 10**9
ROUTE_TOLERANCE = 1e-9
_CHUNK = 1 << 16


@dataclass(frozen=True)
class ApQuery:
    """Primes p <= x with p = a (mod d), under the exponent c."""

    x: int
    d: int
    a: int
    c: ExponentC

    def __post_init__(self) -> None:
        if self.x < 2:
            raise ValidationError(f"x={self.x} must be >= 2")
        if self.d < 1:
            raise ValidationError(f"modulus d={self.d} must be >= 1")
        if gcd(self.a, self.d) != 1:
            raise ValidationError(f"a={self.a} and d={self.d} must be coprime")
        if self.x > X_GUARD:
            raise GuardError(f"x={self.x} exceeds the guard {X_GUARD}")


def _progression_primes(x: int, d: int, a: int) -> np.ndarray:
    if x > X_GUARD:
        raise GuardError(f"x={x} exceeds the guard {X_GUARD}")
    primes = primes_up_to(x).primes
    if d == 1:
        return primes
    return primes[primes % d == a % d]


def pi_ap(x: int, d: int, a: int) -> int:
    """pi(x; d, a): exact count of primes p <= x with p = a (mod d)."""
    return int(_progression_primes(x, d, a).size)


def theta_ap(x: int, d: int, a: int) -> float:
    """Chebyshev sum of log p over primes p <= x, p = a (mod d)."""
    ps = _progression_primes(x, d, a)
    return _chunked_sum(np.log(ps.astype(np.float64)))


def _chunked_sum(v: np.ndarray) -> float:
    # fixed-order compensated combination of 2^16-element chunk sums
    s = 0.0
    comp = 0.0
    for lo in range(0, v.size, _CHUNK):
        p = float(np.sum(v[lo : lo + _CHUNK]))
        y = p - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return s


@lru_cache(maxsize=8)
def _ps_prime_mask_cached(x: int, p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """All primes <= x plus the boolean mask of sequence membership."""
    c = ExponentC(p, q)
    primes = primes_up_to(x).primes
    mask = np.fromiter(
        (is_ps_value(int(k), c).is_member for k in primes), dtype=bool, count=primes.size
    )
    return primes, mask


def ps_primes_up_to(x: int, c: ExponentC) -> np.ndarray:
    """The sequence primes up to x, each certified by an exact witness."""
    primes, mask = _ps_prime_mask_cached(x, c.p, c.q)
    return primes[mask]


def pi_c_ap(q: ApQuery) -> int:
    """Count of sequence primes p <= x with p = a (mod d)."""
    ps = ps_primes_up_to(q.x, q.c)
    if q.d == 1:
        return int(ps.size)
    return int(np.sum(ps % q.d == q.a % q.d))


def vartheta_c_ap(q: ApQuery) -> float:
    """Log-weighted count of sequence primes in the progression."""
    ps = ps_primes_up_to(q.x, q.c)
    if q.d > 1:
        ps = ps[ps % q.d == q.a % q.d]
    if ps.size == 0:
        return 0.0
    return _chunked_sum(np.log(ps.astype(np.float64)))


def ap_main_term(q: ApQuery) -> float:
    """Smoothed main term for pi_c(x; d, a), evaluated two independent ways.

    Route A integrates the step function pi(u; d, a) exactly, using the
    antiderivative u^(gamma-1)/(gamma-1) on each inter-prime interval:

        gamma x^(gamma-1) pi(x;d,a) + gamma(1-gamma) I,
        I = sum_{p} (x^(gamma-1) - p^(gamma-1)) / (gamma - 1).

    Route B is the algebraically equal closed form gamma sum_p p^(gamma-1).
    The two must agree to 1e-9 relative; disagreement signals a bug and
    raises RouteDisagreementError.
    """
    gamma = q.c.gamma
    ps = _progression_primes(q.x, q.d, q.a).astype(np.float64)
    if ps.size == 0:
        return 0.0

    xg = float(q.x) ** (gamma - 1.0)
    integral = _chunked_sum((xg - ps ** (gamma - 1.0)) / (gamma - 1.0))
    route_a = gamma * xg * ps.size + gamma * (1.0 - gamma) * integral
    route_b = gamma * _chunked_sum(ps ** (gamma - 1.0))

    scale = max(abs(route_a), abs(route_b), 1e-300)
    if abs(route_a - route_b) / scale > ROUTE_TOLERANCE:
        raise RouteDisagreementError(
            f"main-term routes disagree: {route_a!r} vs {route_b!r} for {q}"
        )
    return route_b


def brun_titchmarsh_report(q: ApQuery) -> float:
    """Empirical constant pi_c(x;d,a) * phi(d) * log(x) / x^gamma.

    The upper-bound constant in the progression estimate is non-effective;
    this reports its measured value for trend studies.
    """
    count = pi_c_ap(q)
    return count * euler_phi(q.d) * log(q.x) / float(q.x) ** q.c.gamma
