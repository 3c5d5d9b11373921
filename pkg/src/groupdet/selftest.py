"""Reduced-scale invariant sweeps, runnable from the command line."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .determinants import (M16, SD16, SD32, dihedral_cross_check, m_factored, regular_determinant,
                           sd16_factored, sd_general_factored)
from .group_ring import GroupRingElement, format_element
from .number_theory import classify, cornacchia2, is_prime
from .witness import WITNESS_FAMILIES, witness

DEFAULT_SEED = 20240501


@dataclass
class SuiteResult:
    name: str
    checked: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _random_element(rng: random.Random, n: int, lo: int, hi: int) -> GroupRingElement:
    return GroupRingElement.from_flat([rng.randint(lo, hi) for _ in range(1 << n)])


def suite_sd16_factored(rng: random.Random, count: int = 20000) -> SuiteResult:
    checked = 0
    for i in range(count):
        if i % 2:
            F = _random_element(rng, 4, -9, 9)
        else:
            F = _random_element(rng, 4, 0, 1)
        fac = sd16_factored(F)
        D = regular_determinant(F, SD16)
        if fac.product != D:
            return SuiteResult("sd16 factored = oracle", checked,
                               f"{format_element(F)}: factored {fac.product} ({fac}), oracle {D}")
        checked += 1
    return SuiteResult("sd16 factored = oracle", checked)


def suite_cross_groups(rng: random.Random, count: int = 1000) -> SuiteResult:
    name = "D8 / M16 / SD32 cross-checks"
    for i in range(count):
        F = _random_element(rng, 4, -3, 3)
        left, right = dihedral_cross_check(F)
        if left != right:
            return SuiteResult(name, i, f"D8 fold of {format_element(F)}: {left} != {right}")
        m, D = m_factored(F).product, regular_determinant(F, M16)
        if m != D:
            return SuiteResult(name, i, f"M16 {format_element(F)}: {m} != {D}")
        G = _random_element(rng, 5, -3, 3)
        s, D = sd_general_factored(G).product, regular_determinant(G, SD32)
        if s != D:
            return SuiteResult(name, i, f"SD32 {format_element(G)}: {s} != {D}")
    return SuiteResult(name, count)


def suite_witness(m_range: range = range(-3, 4), primes=(3, 11, 19)) -> SuiteResult:
    checked = 0
    for fam in WITNESS_FAMILIES.values():
        for m in m_range:
            targets = [fam.value(m, p) for p in primes] if "p^2" in fam.tag else [fam.value(m)]
            for N in targets:
                try:
                    res = witness(N)
                except Exception as exc:  # report, do not crash the summary
                    return SuiteResult("witness round trips", checked, f"N={N}: {exc!r}")
                if not res.verified:
                    return SuiteResult("witness round trips", checked, f"N={N} not verified")
                checked += 1
    return SuiteResult("witness round trips", checked)


def suite_cornacchia(limit: int = 10**4) -> SuiteResult:
    checked = 0
    for p in range(3, limit, 8):
        if not is_prime(p):
            continue
        U, V = cornacchia2(p)
        if U * U + 2 * V * V != p or U % 2 == 0 or V % 2 == 0 or U <= 0 or V <= 0:
            return SuiteResult("cornacchia", checked, f"p={p}: ({U}, {V})")
        checked += 1
    return SuiteResult("cornacchia", checked)


def theorem_predicate(n: int) -> bool:
    """Achievability read straight off the classification, using trial division."""
    if n % 2 == 0:
        return n % 1024 == 0
    if n % 8 == 1:
        return True
    if n % 8 != 5:
        return False
    rest, p = abs(n), 3
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e >= 2 and p % 8 == 3:
            return True
        p += 2
    return False


def suite_classify(limit: int = 10**4) -> SuiteResult:
    checked = 0
    for n in range(-limit, limit + 1):
        if n == 0:
            continue
        got = classify(n).achievable
        if got != theorem_predicate(n):
            return SuiteResult("classify = theorem predicate", checked, f"n={n}: classify {got}")
        checked += 1
    return SuiteResult("classify = theorem predicate", checked)


def run_selftest(seed: int = DEFAULT_SEED, report: Callable[[SuiteResult], None] = lambda r: None) -> list[SuiteResult]:
    rng = random.Random(seed)
    results = []
    for suite in (lambda: suite_sd16_factored(rng), lambda: suite_cross_groups(rng),
                  suite_witness, suite_cornacchia, suite_classify):
        res = suite()
        report(res)
        results.append(res)
        if not res.ok:
            break
    return results
