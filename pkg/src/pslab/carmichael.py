"""Korselt-criterion machinery and search for Carmichael numbers whose
prime factors all belong to the value sequence floor(n^c).

The infinitude statement is not desk-verifiable; the contract here is
exact finite search (plus the exact rational range constants living in
exppairs), which exercises every computable facet of the construction.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arith import FactorMap, factorize, primes_up_to
from .errors import GuardError, ValidationError
from .pscore import ExponentC, is_ps_value

SEARCH_GUARD = 10**9
_SPF_SEARCH_LIMIT = 10**7  # 80 MB table; larger limits use per-N checks


@dataclass(frozen=True)
class CarmichaelRecord:
    """A Carmichael number, its factorization, and per-prime membership
    status in the value sequence for the chosen exponent."""

    N: int
    factors: FactorMap
    ps_status: tuple[bool, ...]

    @property
    def all_ps(self) -> bool:
        return all(self.ps_status)

    def to_json_line(self, c: ExponentC) -> str:
        return json.dumps(
            {
                "N": self.N,
                "factors": list(self.factors.primes()),
                "ps": list(self.ps_status),
                "c": str(c),
            }
        )


def korselt(N: int) -> bool:
    """True iff N is composite, squarefree, and p-1 | N-1 for every p | N."""
    if N < 2:
        raise ValidationError(f"korselt requires N >= 2, got {N}")
    fm = factorize(N)
    if len(fm.entries) < 2 or not fm.is_squarefree():
        return False
    return all((N - 1) % (p - 1) == 0 for p, _ in fm.entries)


def is_ps_carmichael(N: int, c: ExponentC) -> Optional[CarmichaelRecord]:
    """The record for N when N is Carmichael with every factor a sequence
    value under c; None otherwise."""
    if N < 2:
        raise ValidationError(f"N must be >= 2, got {N}")
    if not korselt(N):
        return None
    fm = factorize(N)
    status = tuple(is_ps_value(p, c).is_member for p in fm.primes())
    if not all(status):
        return None
    return CarmichaelRecord(N, fm, status)


def carmichael_numbers_up_to(limit: int) -> list[int]:
    """All Carmichael numbers <= limit, by sieve-driven Korselt scan.

    Candidates are odd squarefree composites with at least three prime
    factors; each surviving candidate is checked against Korselt's
    divisibility condition using its sieve factorization.
    """
    if limit > SEARCH_GUARD:
        raise GuardError(f"limit {limit} exceeds the guard {SEARCH_GUARD}")
    if limit < 561:
        return []
    if limit <= _SPF_SEARCH_LIMIT:
        cache = primes_up_to(limit, with_spf=True)
        spf = cache.spf
        out = []
        for N in range(9, limit + 1, 2):
            if spf[N] == N:  # prime
                continue
            m = N
            ok = True
            nfac = 0
            while m > 1:
                p = int(spf[m])
                m //= p
                if m % p == 0:  # square factor
                    ok = False
                    break
                nfac += 1
                if (N - 1) % (p - 1) != 0:
                    ok = False
                    break
            if ok and nfac >= 3:
                out.append(N)
        return out
    # beyond the table, fall back to blockwise per-N Korselt checks
    out = []
    for N in range(561, limit + 1, 2):
        if korselt(N):
            out.append(N)
    return out


def search_ps_carmichael(limit: int, c: ExponentC) -> list[CarmichaelRecord]:
    """All Carmichael numbers <= limit whose prime factors are all sequence
    values under c, sorted ascending with exact membership witnesses."""
    records = []
    for N in carmichael_numbers_up_to(limit):
        fm = factorize(N)
        status = tuple(is_ps_value(p, c).is_member for p in fm.primes())
        if all(status):
            records.append(CarmichaelRecord(N, fm, status))
    return records


def fermat_holds(N: int, bases: tuple[int, ...] = (2, 3, 5, 7)) -> bool:
    """Direct modular check of a^N = a (mod N) for the given bases."""
    return all(pow(a, N, N) == a % N for a in bases)
