"""Exit criteria.  Every check is exact integer equality; timing budgets are asserted where stated."""
import random
import time
from itertools import product
from math import isqrt

import pytest

from groupdet.census import CensusConfig, run_census
from groupdet.determinants import (M16, SD16, SD32, dihedral_cross_check, m16_factored, regular_determinant,
                                   sd16_factored, sd_general_factored)
from groupdet.group_ring import MODULAR, SEMIDIHEDRAL, GroupRingElement, TwistMap, gr_multiply
from groupdet.number_theory import classify, cornacchia2
from groupdet.witness import WITNESS_FAMILIES, witness, witness_odd_5mod8

SEED = 20240501


def _elements(rng, count, lo, hi, size=16):
    for _ in range(count):
        yield GroupRingElement.from_flat([rng.randint(lo, hi) for _ in range(size)])


def test_factored_equals_oracle():
    """1. SD16 factored formula = 16x16 oracle on {0,1}^16 and 1e5 random in [-9,9] (< 3 min)"""
    start = time.perf_counter()
    for c in product((0, 1), repeat=16):
        F = GroupRingElement.from_flat(c)
        assert sd16_factored(F).product == regular_determinant(F, SD16), c
    for F in _elements(random.Random(SEED), 10**5, -9, 9):
        assert sd16_factored(F).product == regular_determinant(F, SD16), F
    assert time.perf_counter() - start < 180


def test_witness_round_trips():
    """2. every witness family for m in [-10,10] reproduces its target under the oracle"""
    checked = 0
    for fam in WITNESS_FAMILIES.values():
        for m in range(-10, 11):
            if "p^2" in fam.tag:
                for p in (3, 11, 19, 43, 59, 83):
                    N = fam.value(m, p)
                    res = witness_odd_5mod8(N, p)
                    assert res.family == fam.tag and regular_determinant(res.element, SD16) == N
                    res = witness(N)
                    assert regular_determinant(res.element, SD16) == N
                    checked += 1
            else:
                N = fam.value(m)
                res = witness(N)
                assert res.family == fam.tag and regular_determinant(res.element, SD16) == N
                checked += 1
    assert checked == 6 * 21 + 2 * 21 * 6
    for N in (17, -7, 45, -27, 605, 0, 2**10, 2**11, 2**12 * 5):
        assert regular_determinant(witness(N).element, SD16) == N


def _smallest_prime_factors(limit):
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:
            for q in range(p * p, limit + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def _theorem_text(n, spf):
    if n % 2 == 0:
        return n % 2**10 == 0
    if n % 8 == 1:
        return True
    if n % 8 != 5:
        return False
    rest, exps = abs(n), {}
    while rest > 1:
        p = spf[rest]
        exps[p] = exps.get(p, 0) + 1
        rest //= p
    return any(e >= 2 and p % 8 == 3 and (n // (p * p)) % 8 == 5 for p, e in exps.items())


def test_classifier_matches_theorem():
    """3. classify = brute-force theorem predicate on odd |n| <= 1e5 and even |n| <= 2^20"""
    spf = _smallest_prime_factors(10**5)
    for n in range(-10**5, 10**5 + 1):
        if n % 2:
            assert classify(n).achievable == _theorem_text(n, spf), n
    for n in range(-2**20, 2**20 + 1, 2):
        assert classify(n).achievable == (n % 1024 == 0), n
    for n in (1, 9, 17, -7, 45, -27):
        assert classify(n).achievable is True
    for n in (5, 13, 21, 29, 37, -3, 512):
        assert classify(n).achievable is False


def _check_report(report):
    assert report.violations == []
    for v in report.values:
        if v % 2:
            assert v % 4 == 1
        else:
            assert v % 1024 == 0
        if v % 8 == 5:
            verdict = classify(v)
            assert verdict.p % 8 == 3 and v % verdict.p**2 == 0


def test_census_necessity():
    """4. zero necessity violations on the {0,1}^16 census and a 1e6-sample random census"""
    exhaustive = run_census(CensusConfig(lo=0, hi=1, max_nonzero=16))
    assert exhaustive.scanned == 2**16
    _check_report(exhaustive)
    sampled = run_census(CensusConfig(lo=-5, hi=5, max_nonzero=None, samples=10**6, seed=42))
    assert sampled.scanned == 10**6
    _check_report(sampled)


def test_cross_group_checks():
    """5. D8 fold (1e3), M16 (1e4) and SD32 (1e3) factored forms equal their oracles (< 2 min)"""
    rng = random.Random(SEED + 5)
    start = time.perf_counter()
    for F in _elements(rng, 10**3, -5, 5):
        left, right = dihedral_cross_check(F)
        assert left == right, F
    for F in _elements(rng, 10**4, -5, 5):
        assert m16_factored(F).product == regular_determinant(F, M16), F
    for F in _elements(rng, 10**3, -3, 3, size=32):
        assert sd_general_factored(F).product == regular_determinant(F, SD32), F
    assert time.perf_counter() - start < 120


def test_cornacchia_exhaustive():
    """6. cornacchia2 gives odd U,V > 0 with U^2+2V^2=p for every prime p = 3 mod 8 below 1e4"""
    spf = _smallest_prime_factors(10**4)
    count = 0
    for p in range(3, 10**4, 8):
        if spf[p] != p:
            continue
        U, V = cornacchia2(p)
        assert U > 0 and V > 0 and U % 2 == 1 and V % 2 == 1
        assert U * U + 2 * V * V == p
        brute = [(u, v) for u in range(1, isqrt(p) + 1) for v in range(1, isqrt(p // 2) + 1)
                 if u * u + 2 * v * v == p]
        assert brute == [(U, V)]
        count += 1
    assert count > 300


@pytest.mark.parametrize("spec,kind", [(SD16, SEMIDIHEDRAL), (M16, MODULAR)], ids=["SD16", "M16"])
def test_multiplicativity(spec, kind):
    """7. D(F1*F2) = D(F1) D(F2) on 1e4 random pairs"""
    rng = random.Random(SEED + 7)
    tw = TwistMap(4, kind)
    for _ in range(10**4):
        F1, F2 = _elements(rng, 2, -3, 3)
        assert regular_determinant(gr_multiply(F1, F2, tw), spec) == \
            regular_determinant(F1, spec) * regular_determinant(F2, spec)


def test_census_sharding_deterministic():
    """8. 4-worker sharded census and single-threaded census give byte-identical value sets"""
    single = run_census(CensusConfig(lo=0, hi=1, max_nonzero=16, workers=1))
    sharded = run_census(CensusConfig(lo=0, hi=1, max_nonzero=16, workers=4))
    assert sharded.to_text().encode() == single.to_text().encode()
    assert sharded.achieved_set() == single.achieved_set()
    assert sharded.scanned == single.scanned == 2**16
