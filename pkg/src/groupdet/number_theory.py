"""Primality, factorization, (-2/p), U^2 + 2V^2 = p and the SD16 achievability test."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Optional

TRIAL_BOUND = 10**6
DEFAULT_EFFORT = 20

# Deterministic for n < 3.3e24 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_EXTRA_ROUNDS = 16


class BadResidue(ValueError):
    pass


class BadPrime(ValueError):
    pass


class NoRepresentation(ArithmeticError):
    pass


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


@lru_cache(maxsize=1)
def trial_primes() -> list[int]:
    return _small_primes(TRIAL_BOUND)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(_mr_round(n, d, s, rng.randrange(2, n - 1)) for _ in range(_MR_EXTRA_ROUNDS))


def legendre_minus2(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise BadPrime(f"{p} is not an odd prime")
    return 1 if p % 8 in (1, 3) else -1


def cornacchia2(p: int) -> tuple[int, int]:
    """Positive odd (U, V) with U^2 + 2 V^2 = p, for a prime p = 3 mod 8."""
    if p % 8 != 3:
        raise BadResidue(f"{p} is not 3 mod 8")
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    for U in range(1, isqrt(p) + 1, 2):
        rest = p - U * U
        if rest % 2 == 0:
            V = isqrt(rest // 2)
            if V * V * 2 == rest:
                return U, V
    raise NoRepresentation(f"no representation U^2 + 2V^2 = {p}")


def _pollard_brent(n: int, rng: random.Random, max_iter: int) -> Optional[int]:
    """A nontrivial factor of the odd composite n, or None if the budget runs out."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > max_iter:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]
    complete: bool
    cofactor: int = 1  # unfactored composite part (1 when complete)

    @property
    def sign(self) -> int:
        return -1 if self.n < 0 else 1

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.cofactor != 1:
            parts.append(f"[{self.cofactor}]")
        body = " * ".join(parts) or "1"
        return ("-" if self.n < 0 else "") + body


def _split(n: int, effort: int, rng: random.Random, found: dict[int, int]) -> list[int]:
    """Fully split n into primes where possible; returns leftover composites."""
    if n == 1:
        return []
    if is_prime(n):
        found[n] = found.get(n, 0) + 1
        return []
    r = isqrt(n)
    if r * r == n:
        sub: dict[int, int] = {}
        left = _split(r, effort, rng, sub)
        for p, e in sub.items():
            found[p] = found.get(p, 0) + 2 * e
        return left + left
    for _ in range(effort):
        d = _pollard_brent(n, rng, 1 << 20)
        if d:
            return _split(d, effort, rng, found) + _split(n // d, effort, rng, found)
    return [n]


def factorize(n: int, effort: int = DEFAULT_EFFORT) -> Factorization:
    """Trial division up to 10^6, then Pollard-Brent rho (``effort`` restarts per cofactor)."""
    if n == 0:
        raise ValueError("cannot factor 0")
    return _factorize(n, effort)


@lru_cache(maxsize=1 << 16)
def _factorize(n: int, effort: int) -> Factorization:
    rest = abs(n)
    found: dict[int, int] = {}
    for i, p in enumerate(trial_primes()):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
        # once the cofactor is prime there is nothing left to find
        if i % 512 == 511 and is_prime(rest):
            break
    leftovers: list[int] = []
    if rest > 1:
        leftovers = _split(rest, effort, random.Random(rest), found)
    cofactor = 1
    for c in leftovers:
        cofactor *= c
    return Factorization(n, tuple(sorted(found.items())), not leftovers, cofactor)


def combine_factorizations(n: int, parts: Iterable[tuple[Factorization, int]]) -> Factorization:
    """Factorization of ``n`` = prod part**power, assembled from factored parts."""
    found: dict[int, int] = {}
    cofactor, complete = 1, True
    for fac, power in parts:
        for p, e in fac.factors:
            found[p] = found.get(p, 0) + e * power
        cofactor *= fac.cofactor ** power
        complete = complete and fac.complete
    return Factorization(n, tuple(sorted(found.items())), complete, cofactor)


class Reason(str, Enum):
    EVEN_MULTIPLE_OF_1024 = "EvenMultipleOf1024"
    EVEN_NOT_MULTIPLE = "EvenNotMultiple"
    ODD_ONE_MOD_8 = "OddOneMod8"
    ODD_FIVE_WITH_P = "OddFiveWithP"
    ODD_FIVE_NO_P = "OddFiveNoP"
    ODD_THREE_MOD_4 = "OddThreeMod4"
    UNKNOWN = "UnknownIncompleteFactorization"


@dataclass(frozen=True)
class Verdict:
    n: int
    achievable: Optional[bool]  # None: unknown
    reason: Reason
    p: Optional[int] = None

    @property
    def status(self) -> str:
        if self.achievable is None:
            return "unknown"
        return "achievable" if self.achievable else "not achievable"

    def describe(self) -> str:
        extra = f" (p={self.p})" if self.p is not None else ""
        return f"{self.status}: {self.reason.value}{extra}"


def classify(n: int, factorization: Optional[Factorization] = None, effort: int = DEFAULT_EFFORT) -> Verdict:
    """Decide whether n is an SD16 integer group determinant.

    Even n: exactly the multiples of 2^10.  Odd n: n = 1 mod 8, or n = 5 mod 8
    with p^2 | n for some prime p = 3 mod 8.  A caller that already knows the
    factorization of n (e.g. from the factored determinant) may pass it in.
    """
    if n % 2 == 0:
        if n % 1024 == 0:
            return Verdict(n, True, Reason.EVEN_MULTIPLE_OF_1024)
        return Verdict(n, False, Reason.EVEN_NOT_MULTIPLE)
    if n % 8 == 1:
        return Verdict(n, True, Reason.ODD_ONE_MOD_8)
    if n % 4 == 3:
        return Verdict(n, False, Reason.ODD_THREE_MOD_4)
    fac = factorization if factorization is not None else factorize(n, effort)
    if fac.n != n:
        raise ValueError(f"factorization is of {fac.n}, not {n}")
    p = smallest_square_prime_3mod8(fac)
    if p is not None:
        return Verdict(n, True, Reason.ODD_FIVE_WITH_P, p)
    if not fac.complete:
        return Verdict(n, None, Reason.UNKNOWN)
    return Verdict(n, False, Reason.ODD_FIVE_NO_P)


def smallest_square_prime_3mod8(fac: Factorization) -> Optional[int]:
    for p, e in fac.factors:
        if e >= 2 and p % 8 == 3:
            return p
    return None
