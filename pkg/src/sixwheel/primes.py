"""Prime engine built on the mod-6 wheel.

Every prime above 3 is congruent to 1 or 5 mod 6 (classes alpha and beta),
so primality tests, factorization and sieving only ever touch the wheel
values 5, 7, 11, 13, ... after the seed primes 2 and 3.  The segmented
sieve allocates flags for wheel values only, a third of the naive flag
count; ``naive_sieve`` is the classic full-array Eratosthenes kept as the
slow reference the fast path must agree with.

Memory budget: ``sieve`` and ``naive_sieve`` refuse limits above
``MAX_SIEVE_LIMIT`` (default 10**8) since flag storage and the returned
prime list grow linearly with the limit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .residues import SixClass, TypeLetter, class_of, type_of
from .verification import Counterexample, VerificationReport

MAX_SIEVE_LIMIT = 10**8

# Flags per segment of the segmented sieve; 2**18 bool flags stay cache
# resident and cover a value span of ~786k per segment.
SEGMENT_FLAGS = 1 << 18


@dataclass(frozen=True)
class Factorization:
    """Sign and ascending (prime, multiplicity) pairs; empty only for +-1."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def is_unit(self) -> bool:
        return not self.factors

    @property
    def is_prime_value(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def value(self) -> int:
        out = self.sign
        for p, k in self.factors:
            out *= p**k
        return out

    def expr(self, times: str = " * ") -> str:
        """Canonical product string, e.g. ``5 * 11^2`` (sign as leading -1)."""
        terms = [f"{p}^{k}" if k > 1 else str(p) for p, k in self.factors]
        if self.sign < 0:
            terms.insert(0, "-1")
        return times.join(terms) if terms else "1"

    def __str__(self) -> str:
        return self.expr()


def _wheel_index(v: int) -> int:
    # v must be >= 5 and congruent to 1 or 5 mod 6; 5 -> 0, 7 -> 1, 11 -> 2, ...
    return (v - 5) // 3 if v % 6 == 5 else (v - 4) // 3


def _wheel_value(i: int) -> int:
    return 3 * i + 5 - (i & 1)


# Distance from a residue mod 6 down to the nearest wheel residue (1 or 5).
_DOWN_TO_WHEEL = (1, 0, 1, 2, 3, 0)


def _wheel_values_up_to(x: int):
    v, step = 5, 2
    while v <= x:
        yield v
        v += step
        step = 6 - step


def wheel_candidates(limit: int) -> list[int]:
    """The trial-division candidates up to limit: 2, 3, then every 6k+-1
    value from 5 on, ascending.  The unit 1 is never a candidate."""
    if limit < 2:
        raise ValueError(f"candidate limit must be >= 2, got {limit}")
    out = [p for p in (2, 3) if p <= limit]
    if limit >= 5:
        top = limit - _DOWN_TO_WHEEL[limit % 6]
        idx = np.arange(_wheel_index(top) + 1, dtype=np.int64)
        out.extend((3 * idx + 5 - (idx & 1)).tolist())
    return out


def is_prime(n: int) -> bool:
    """Trial division over the wheel; a negative is prime iff |n| is."""
    m = -n if n < 0 else n
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0 or m % 3 == 0:
        return False
    d, step = 5, 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += step
        step = 6 - step
    return True


def factorize(n: int) -> Factorization:
    """Canonical prime factorization of any nonzero integer."""
    if n == 0:
        raise ValueError("zero has no factorization")
    sign = -1 if n < 0 else 1
    m = -n if n < 0 else n
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            factors.append((p, k))
    d, step = 5, 2
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            factors.append((d, k))
        d += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(sign, tuple(factors))


def _check_sieve_limit(limit: int) -> None:
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > MAX_SIEVE_LIMIT:
        raise ValueError(
            f"sieve limit {limit} exceeds the memory budget MAX_SIEVE_LIMIT={MAX_SIEVE_LIMIT} "
            "(flag storage and the prime list grow linearly with the limit)"
        )


def naive_sieve(limit: int) -> list[int]:
    """Reference Eratosthenes over every integer 2..limit (one flag each)."""
    _check_sieve_limit(limit)
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i in range(2, limit + 1) if flags[i]]


def sieve(limit: int, *, segment_flags: int = SEGMENT_FLAGS) -> list[int]:
    """Segmented wheel sieve: all primes <= limit, ascending.

    Flags are allocated only for 6k+-1 values, one segment of
    ``segment_flags`` flags at a time.  Base primes up to sqrt(limit) come
    from trial division, keeping this path independent of ``naive_sieve``.
    """
    _check_sieve_limit(limit)
    if segment_flags < 16:
        raise ValueError(f"segment_flags must be >= 16, got {segment_flags}")
    primes = [p for p in (2, 3) if p <= limit]
    if limit < 5:
        return primes

    top = limit - _DOWN_TO_WHEEL[limit % 6]
    n_flags = _wheel_index(top) + 1
    base = [p for p in _wheel_values_up_to(isqrt(limit)) if is_prime(p)]

    for lo in range(0, n_flags, segment_flags):
        hi = min(lo + segment_flags, n_flags)
        flags = np.ones(hi - lo, dtype=bool)
        v_lo = _wheel_value(lo)
        v_hi = _wheel_value(hi - 1)
        for p in base:
            if p * p > v_hi:
                break
            # Multiples of p that are wheel values are p*m for wheel m; the
            # two residue families m = 1, 5 (mod 6) advance by 6p in value,
            # i.e. by 2p in flag index.  Starting at m >= p skips p itself
            # and anything already owned by a smaller prime factor.
            m_start = max(p, -(-v_lo // p))
            for m in (m_start + (1 - m_start) % 6, m_start + (5 - m_start) % 6):
                first = p * m
                if first > v_hi:
                    continue
                flags[_wheel_index(first) - lo :: 2 * p] = False
        idx = np.flatnonzero(flags) + lo
        primes.extend((3 * idx + 5 - (idx & 1)).tolist())
    return primes


def prime_location_check(limit: int) -> VerificationReport:
    """Check that every prime p with 3 < p <= limit, and its negation, falls
    in class alpha or beta, and that +-2 and +-3 classify as the known
    exceptions (2 -> epsilon, -2 -> delta, +-3 -> gamma)."""
    if limit < 5:
        raise ValueError(f"location check needs limit >= 5, got {limit}")
    ps = np.asarray(sieve(limit), dtype=np.int64)
    big = ps[ps > 3]
    res_pos = big % 6
    res_neg = (-big) % 6
    ok = ((res_pos == 1) | (res_pos == 5)) & ((res_neg == 1) | (res_neg == 5))
    bad = np.flatnonzero(~ok)

    passed = bad.size == 0
    counterexample = None
    if not passed:
        p = int(big[bad[0]])
        counterexample = Counterexample(
            p, -p, "class alpha or beta", f"{class_of(p).label}/{class_of(-p).label}"
        )

    expected_exceptions = {
        2: SixClass.EPSILON,
        -2: SixClass.DELTA,
        3: SixClass.GAMMA,
        -3: SixClass.GAMMA,
    }
    exception_notes = []
    for v, expected in expected_exceptions.items():
        got = class_of(v)
        exception_notes.append(f"{v} -> {got.label}")
        if got is not expected:
            passed = False
    notes = ("exceptions: " + ", ".join(exception_notes),)
    return VerificationReport(
        check="prime-location",
        limit=limit,
        checked=2 * int(big.size),
        passed=passed,
        counterexample=counterexample,
        notes=notes,
    )


@dataclass(frozen=True)
class AlphaBetaRow:
    """One row of the alpha/beta table: values 1+6n and 5+6n with their
    types and canonical factorizations."""

    n: int
    alpha_type: TypeLetter
    alpha_value: int
    alpha_factorization: Factorization
    beta_type: TypeLetter
    beta_value: int
    beta_factorization: Factorization


def alpha_beta_table(max_n: int) -> list[AlphaBetaRow]:
    """Rows n = 0..max_n of the alpha/beta table.  Value 1 is the unit,
    primes carry a single-factor factorization, composites their full one."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    rows = []
    for n in range(max_n + 1):
        a = 1 + 6 * n
        b = 5 + 6 * n
        rows.append(
            AlphaBetaRow(
                n=n,
                alpha_type=type_of(a),
                alpha_value=a,
                alpha_factorization=factorize(a),
                beta_type=type_of(b),
                beta_value=b,
                beta_factorization=factorize(b),
            )
        )
    return rows


def wheel_flag_count(limit: int) -> int:
    """Positions a mod-6 wheel allocates up to limit: every value congruent
    to +-1 mod 6 (the unit 1 included) plus the seed primes 2 and 3."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    wheel = (limit + 5) // 6 + (limit + 1) // 6
    return wheel + sum(1 for p in (2, 3) if p <= limit)


@dataclass(frozen=True)
class BenchReport:
    """Naive vs wheel sieve comparison; counts are deterministic, timings not."""

    limit: int
    naive_seconds: float
    wheel_seconds: float
    naive_candidates: int
    wheel_candidates: int
    candidate_ratio: float
    prime_count: int
    primes_match: bool


def bench(limit: int) -> BenchReport:
    """Time both sieves at the given limit and compare their candidate counts."""
    if limit < 100:
        raise ValueError(f"bench limit must be >= 100, got {limit}")
    t0 = time.perf_counter()
    naive = naive_sieve(limit)
    t1 = time.perf_counter()
    wheel = sieve(limit)
    t2 = time.perf_counter()
    naive_candidates = limit - 1
    wheel_candidates_ = wheel_flag_count(limit)
    return BenchReport(
        limit=limit,
        naive_seconds=t1 - t0,
        wheel_seconds=t2 - t1,
        naive_candidates=naive_candidates,
        wheel_candidates=wheel_candidates_,
        candidate_ratio=wheel_candidates_ / naive_candidates,
        prime_count=len(wheel),
        primes_match=naive == wheel,
    )
