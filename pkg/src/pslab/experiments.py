"""Theorem-level empirical harnesses over the value sequence floor(n^c):
squarefree density, the Chebyshev-style double sum, smooth and large
prime-factor statistics, square-divisibility sums, residue
equidistribution, and the dyadic convolution count.

Each harness returns an ExperimentReport pairing the observed value with
its theoretical reference; only main-term agreement is asserted anywhere
(the error-term exponents carry non-effective constants).
"""
from __future__ import annotations

import json
import time
import warnings
from dataclasses import dataclass, field
from math import log
from typing import Callable, Optional

import numpy as np

from .arith import SieveCache, factorize, is_squarefree_bulk, primes_up_to
from .errors import GuardError, ValidationError
from .pscore import ExponentC, floor_pow, floor_pow_bulk, is_ps_value

SIX_OVER_PI_SQUARED = 6.0 / np.pi**2
CHUNK = 1 << 16


@dataclass
class ExperimentReport:
    """One experiment row: inputs, observed value, reference value, ratio."""

    experiment: str
    params: dict
    observed: float
    reference: float
    runtime_ms: int = 0
    extras: dict = field(default_factory=dict)
    ratio: float = field(init=False)

    def __post_init__(self) -> None:
        self.ratio = self.observed / self.reference if self.reference != 0 else float("nan")

    def to_csv_row(self) -> str:
        return ",".join(
            [
                self.experiment,
                json.dumps(self.params, sort_keys=True).replace(",", ";"),
                repr(self.observed),
                repr(self.reference),
                repr(self.ratio),
                str(self.runtime_ms),
            ]
        )

    def to_json(self) -> str:
        obj = {
            "experiment": self.experiment,
            "params": self.params,
            "observed": self.observed,
            "reference": self.reference,
            "ratio": self.ratio,
            "runtime_ms": self.runtime_ms,
        }
        if self.extras:
            obj["extras"] = self.extras
        return json.dumps(obj, sort_keys=True)

    CSV_HEADER = "experiment,param_json,observed,reference,ratio,runtime_ms"


def _values_upto(x: int, c: ExponentC, threads: int = 1) -> np.ndarray:
    """floor(n^c) for n = 1..x, exact, chunked for determinism."""
    ns = np.arange(1, x + 1, dtype=np.int64)
    if threads > 1 and x > CHUNK:
        from concurrent.futures import ThreadPoolExecutor

        bounds = [(lo, min(lo + CHUNK, x)) for lo in range(0, x, CHUNK)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: floor_pow_bulk(ns[b[0] : b[1]], c), bounds))
        return np.concatenate(parts)
    return floor_pow_bulk(ns, c)


def squarefree_density(x: int, c: ExponentC, threads: int = 1) -> ExperimentReport:
    """#{n <= x : floor(n^c) squarefree} against the density (6/pi^2) x."""
    if x < 1:
        raise ValidationError("x must be >= 1")
    if x > 10**7:
        raise GuardError(f"x={x} exceeds the squarefree guard 10^7")
    from fractions import Fraction

    if not (1 < Fraction(c.p, c.q) < Fraction(149, 87)):
        warnings.warn(f"c={c} outside (1, 149/87); the density claim is unproven there")
    t0 = time.perf_counter()
    vals = _values_upto(x, c, threads)
    if vals.dtype == object:
        observed = sum(1 for v in vals if factorize(int(v)).is_squarefree())
    else:
        observed = int(np.sum(is_squarefree_bulk(vals)))
    report = ExperimentReport(
        "squarefree_density",
        {"x": x, "c": str(c)},
        float(observed),
        SIX_OVER_PI_SQUARED * x,
    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _distinct_prime_log_sum(vals: np.ndarray, cache: SieveCache) -> float:
    """sum over values of sum of log p over distinct primes p | value."""
    logs = 0.0
    spf = cache.spf
    part = 0.0
    for i, v in enumerate(vals):
        m = int(v)
        while m > 1:
            p = int(spf[m])
            part += log(p)
            while m % p == 0:
                m //= p
        if (i + 1) % CHUNK == 0:
            logs += part
            part = 0.0
    return logs + part


def chebyshev_sum(x: int, c: ExponentC, threads: int = 1) -> ExperimentReport:
    """sum_{n<=x} sum_{p | floor(n^c)} log p against c*x*(log x - 1).

    The reference keeps the second-order term of sum log(floor(n^c))
    ~ c x (log x - 1); at desk scale the naive c x log x would hide the
    convergence behind a ~7 percent offset.
    """
    if x < 1:
        raise ValidationError("x must be >= 1")
    if x > 10**6:
        raise GuardError(f"x={x} exceeds the Chebyshev guard 10^6")
    t0 = time.perf_counter()
    vals = _values_upto(x, c, threads)
    vmax = int(vals.max()) if x > 0 else 1
    if vmax > 10**7:
        raise GuardError("values exceed the smallest-prime-factor table guard")
    cache = primes_up_to(vmax, with_spf=True)
    observed = _distinct_prime_log_sum(vals, cache)
    report = ExperimentReport(
        "chebyshev_sum", {"x": x, "c": str(c)}, observed, c.as_float * x * (log(x) - 1.0)
    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _largest_prime_factors(vals: np.ndarray) -> np.ndarray:
    """P(value) for every value (values must exceed 1)."""
    vmax = int(vals.max())
    if vmax <= 10**7:
        cache = primes_up_to(vmax, with_spf=True)
        spf = cache.spf
        out = np.empty(vals.size, dtype=np.int64)
        for i, v in enumerate(vals):
            m = int(v)
            big = 1
            while m > 1:
                p = int(spf[m])
                big = p if p > big else big
                while m % p == 0:
                    m //= p
            out[i] = big
        return out
    return np.array([factorize(int(v)).max_prime() for v in vals], dtype=np.int64)


def smooth_count(x: int, c: ExponentC, eps: float, threads: int = 1) -> ExperimentReport:
    """#{2 <= n <= x : P(floor(n^c)) <= n^eps} against the shape x^(1-eps)."""
    if not (0 < eps <= 1):
        raise ValidationError(f"eps={eps} must lie in (0, 1]")
    if x < 2:
        raise ValidationError("x must be >= 2")
    if x > 10**6:
        raise GuardError(f"x={x} exceeds the smooth-count guard 10^6")
    t0 = time.perf_counter()
    ns = np.arange(2, x + 1, dtype=np.int64)
    vals = _values_upto(x, c, threads)[1:]
    P = _largest_prime_factors(vals)
    observed = int(np.sum(P.astype(np.float64) <= ns.astype(np.float64) ** eps))
    report = ExperimentReport(
        "smooth_count", {"x": x, "c": str(c), "eps": eps}, float(observed), float(x) ** (1.0 - eps)
    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def large_pf_exceed(
    x: int, c: ExponentC, theta: float, eps: float, threads: int = 1
) -> ExperimentReport:
    """#{2 <= n <= x : P(floor(n^c)) > n^(theta-eps)} against reference x.

    The report's extras carry the deciles of log P(floor(n^c)) / log n,
    the empirical distribution behind the lower-bound exponent.
    """
    if x < 2:
        raise ValidationError("x must be >= 2")
    if x > 10**6:
        raise GuardError(f"x={x} exceeds the guard 10^6")
    t0 = time.perf_counter()
    ns = np.arange(2, x + 1, dtype=np.int64)
    vals = _values_upto(x, c, threads)[1:]
    P = _largest_prime_factors(vals).astype(np.float64)
    observed = int(np.sum(P > ns.astype(np.float64) ** (theta - eps)))
    exponents = np.log(P) / np.log(ns.astype(np.float64))
    deciles = {f"d{k}0": float(np.percentile(exponents, 10 * k)) for k in range(1, 10)}
    report = ExperimentReport(
        "large_pf_exceed",
        {"x": x, "c": str(c), "theta": theta, "eps": eps},
        float(observed),
        float(x),
        extras=deciles,
    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def square_divisor_sum(
    x: int,
    c: ExponentC,
    D: int,
    z: Callable[[np.ndarray], np.ndarray],
    threads: int = 1,
) -> tuple[float, float]:
    """Direct count of d^2 | floor(n^c) over dyadic d ~ D, versus the
    predicted x * sum z_d / d^2.

    Returns (lhs, rhs).  The proposition's epsilon-ranges are surfaced as
    warnings so boundary behaviour stays probeable.
    """
    if x < 1 or D < 1:
        raise ValidationError("x and D must be >= 1")
    if x > 10**6:
        raise GuardError(f"x={x} exceeds the guard 10^6")
    cf = c.as_float
    if float(D) > float(x) ** (cf / 2):
        raise ValidationError(f"D={D} exceeds x^(c/2)")
    if float(D) > float(x) ** (2.0 - cf):
        warnings.warn("D beyond x^(2-c): outside the proven main-term range")
    ds = np.arange(D + 1, 2 * D + 1, dtype=np.int64)
    zd = np.asarray(z(ds), dtype=np.float64)
    if zd.size and np.max(np.abs(zd)) > 2.0 * np.log(np.maximum(ds, 2)).max() + 1e-9:
        warnings.warn("weights exceed the 2 log d envelope")
    vals = _values_upto(x, c, threads)
    lhs = 0.0
    for d, w in zip(ds, zd):
        if w == 0.0:
            continue
        dd = int(d) * int(d)
        lhs += float(w) * int(np.sum(vals % dd == 0))
    rhs = float(x) * float(np.sum(zd / ds.astype(np.float64) ** 2))
    return lhs, rhs


def residue_equidistribution(
    N: int, c: ExponentC, q: int, a: int, threads: int = 1
) -> ExperimentReport:
    """#{n ~ N : floor(n^c) = a (mod q)} against the uniform share N/q."""
    if N < 1 or q < 1:
        raise ValidationError("N and q must be >= 1")
    if N > 10**6:
        raise GuardError(f"N={N} exceeds the guard 10^6")
    cf = c.as_float
    if float(q) > float(N) ** ((3.0 - cf) / 6.0):
        raise GuardError(f"q={q} exceeds the admissible range N^((3-c)/6)")
    if not (1.5 < cf < 2.0):
        warnings.warn(f"c={c} outside (3/2, 2); the equidistribution claim is unproven there")
    t0 = time.perf_counter()
    ns = np.arange(N + 1, 2 * N + 1, dtype=np.int64)
    vals = floor_pow_bulk(ns, c)
    if vals.dtype == object:
        observed = sum(1 for v in vals if int(v) % q == a % q)
    else:
        observed = int(np.sum(vals % q == a % q))
    report = ExperimentReport(
        "residue_equidistribution",
        {"N": N, "c": str(c), "q": q, "a": a},
        float(observed),
        N / q,
    )
    report.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return report


def convolution_count(
    x: int,
    c: ExponentC,
    predicate: Callable[[np.ndarray], np.ndarray],
    eps: float = 0.01,
) -> float:
    """sum_{n<=x} of the dyadic-box convolution R(n) = sum a_k a_l over
    k*l = floor(n^c), with K = x^(c-1+6 eps) and L = x^(1-6 eps)/5.

    Iterates the (k, l) boxes directly, testing each product for sequence
    membership with a preimage n <= x.
    """
    if x < 2:
        raise ValidationError("x must be >= 2")
    if x > 10**5:
        raise GuardError(f"x={x} exceeds the double-loop guard 10^5")
    cf = c.as_float
    K = int(float(x) ** (cf - 1.0 + 6.0 * eps))
    L = int(float(x) ** (1.0 - 6.0 * eps) / 5.0)
    K, L = max(K, 1), max(L, 1)
    ks = np.arange(K + 1, 2 * K + 1, dtype=np.int64)
    ls = np.arange(L + 1, 2 * L + 1, dtype=np.int64)
    ak = np.asarray(predicate(ks), dtype=np.float64)
    al = np.asarray(predicate(ls), dtype=np.float64)
    total = 0.0
    for k, wk in zip(ks, ak):
        if wk == 0.0:
            continue
        for l, wl in zip(ls, al):
            if wl == 0.0:
                continue
            w = is_ps_value(int(k) * int(l), c)
            if w.is_member and w.preimage <= x:
                total += float(wk) * float(wl)
    return total
