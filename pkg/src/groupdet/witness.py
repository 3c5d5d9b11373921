"""Explicit SD16 group-ring elements realizing every achievable determinant."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .determinants import SD16, regular_determinant
from .group_ring import GroupRingElement
from .number_theory import (BadPrime, BadResidue, Verdict, classify, cornacchia2,
                            is_prime)

H = (1, 1, 1, 1, 1, 1, 1, 1)  # (x+1)(x^2+1)(x^4+1)
ZERO = (0,) * 8
ONE_MINUS_X4 = (1, 0, 0, 0, -1, 0, 0, 0)
X2_MINUS_X6 = (0, 0, 1, 0, 0, 0, -1, 0)


def _neg(v):
    return tuple(-c for c in v)


class NotAchievable(Exception):
    def __init__(self, verdict: Verdict):
        super().__init__(f"{verdict.n} is {verdict.describe()}")
        self.verdict = verdict


class VerificationFailed(AssertionError):
    pass


class NotMultipleOf1024(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    """f = f0 + m*fm + k*fk + s*fs, likewise g; determinant given by ``value``."""

    tag: str
    f0: tuple[int, ...]
    g0: tuple[int, ...]
    fm: tuple[int, ...]
    gm: tuple[int, ...]
    value: Callable[..., int]
    fk: tuple[int, ...] = ZERO
    gk: tuple[int, ...] = ZERO
    fs: tuple[int, ...] = ZERO
    gs: tuple[int, ...] = ZERO

    def element(self, m: int, k: int = 0, s: int = 0) -> GroupRingElement:
        f = [c0 + m * cm + k * ck + s * cs for c0, cm, ck, cs in zip(self.f0, self.fm, self.fk, self.fs)]
        g = [c0 + m * cm + k * ck + s * cs for c0, cm, ck, cs in zip(self.g0, self.gm, self.gk, self.gs)]
        return GroupRingElement(4, tuple(f), tuple(g))


WITNESS_FAMILIES = {
    f.tag: f for f in (
        Family("even-2^12m",
               f0=(1, 1, 1, 1, 0, 0, -1, -1), g0=(1, 1, 0, -1, -1, -1, 0, -1),
               fm=_neg(H), gm=_neg(H), value=lambda m: 4096 * m),
        Family("even-2^11(2m+1)",
               f0=(1, 1, 1, 1, 1, 1, 1, -1), g0=(1, 1, 0, 0, 0, -1, 0, 1),
               fm=H, gm=H, value=lambda m: 2048 * (2 * m + 1)),
        Family("even-2^10(4m-1)",
               f0=(1, 1, 1, 1, 0, 0, 0, 0), g0=(1, 1, 1, 0, 0, -1, -1, -1),
               fm=_neg(H), gm=_neg(H), value=lambda m: 1024 * (4 * m - 1)),
        Family("even-2^10(4m+1)",
               f0=(1, 1, 1, 1, 1, 0, 0, -1), g0=(1, 1, 0, -1, -1, -1, 0, 1),
               fm=H, gm=H, value=lambda m: 1024 * (4 * m + 1)),
        Family("odd-16m+1",
               f0=(1, 0, 0, 0, 0, 0, 0, 0), g0=ZERO,
               fm=H, gm=H, value=lambda m: 16 * m + 1),
        Family("odd-16m-7",
               f0=(1, 1, 1, 1, 1, 0, -1, 0), g0=(1, 1, 0, 0, 0, 1, 0, 0),
               fm=_neg(H), gm=_neg(H), value=lambda m: 16 * m - 7),
        Family("odd-(16m+5)p^2",
               f0=(0, 1, 1, 0, 0, 0, 0, 0), g0=(1, 1, 1, 0, 0, 0, 0, 0),
               fm=H, gm=H,
               fk=_neg(ONE_MINUS_X4), fs=X2_MINUS_X6,
               gk=X2_MINUS_X6, gs=ONE_MINUS_X4,
               value=lambda m, p: (16 * m + 5) * p * p),
        Family("odd-(16m-3)p^2",
               f0=(1, 1, 0, 0, 0, 0, 0, 0), g0=(0, 1, 0, 0, 0, 0, 0, 0),
               fm=_neg(H), gm=_neg(H),
               fk=X2_MINUS_X6, fs=ONE_MINUS_X4,
               gk=ONE_MINUS_X4, gs=_neg(X2_MINUS_X6),
               value=lambda m, p: (16 * m - 3) * p * p),
    )
}


@dataclass(frozen=True)
class WitnessResult:
    target: int
    element: GroupRingElement
    family: str
    params: tuple[tuple[str, int], ...] = ()
    verified: bool = False


def h_poly() -> tuple[int, ...]:
    return H


def _finish(target: int, family: str, params: dict, verify: bool) -> WitnessResult:
    fam = WITNESS_FAMILIES[family]
    element = fam.element(params["m"], params.get("k", 0), params.get("s", 0))
    verified = False
    if verify:
        D = regular_determinant(element, SD16)
        if D != target:
            raise VerificationFailed(f"{family} with {params}: determinant {D}, expected {target}")
        verified = True
    return WitnessResult(target, element, family, tuple(params.items()), verified)


def witness_even(N: int, verify: bool = True) -> WitnessResult:
    if N % 1024:
        raise NotMultipleOf1024(f"{N} is not a multiple of 2^10")
    q = N // 1024
    if q % 4 == 0:
        return _finish(N, "even-2^12m", {"m": q // 4}, verify)
    if q % 4 == 2:
        return _finish(N, "even-2^11(2m+1)", {"m": (q // 2 - 1) // 2}, verify)
    if q % 4 == 1:
        return _finish(N, "even-2^10(4m+1)", {"m": (q - 1) // 4}, verify)
    return _finish(N, "even-2^10(4m-1)", {"m": (q + 1) // 4}, verify)


def witness_odd_1mod8(N: int, verify: bool = True) -> WitnessResult:
    if N % 8 != 1:
        raise BadResidue(f"{N} is not 1 mod 8")
    if N % 16 == 1:
        return _finish(N, "odd-16m+1", {"m": (N - 1) // 16}, verify)
    return _finish(N, "odd-16m-7", {"m": (N + 7) // 16}, verify)


def _unit_mod4(x: int, residue: int) -> int:
    """The one of +-x that is ``residue`` mod 4 (x odd)."""
    return x if x % 4 == residue else -x


def witness_odd_5mod8(N: int, p: int, verify: bool = True) -> WitnessResult:
    if p % 8 != 3:
        raise BadPrime(f"{p} is not 3 mod 8")
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    if N % (p * p):
        raise BadPrime(f"{p}^2 does not divide {N}")
    m = N // (p * p)
    if m % 8 != 5:
        raise BadResidue(f"{N}/{p}^2 = {m} is not 5 mod 8")
    U, V = cornacchia2(p)
    if m % 16 == 5:
        U, V = _unit_mod4(U, 1), _unit_mod4(V, 1)
        params = {"m": (m - 5) // 16, "k": (U - 1) // 4, "s": (V - 1) // 4}
        return _finish(N, "odd-(16m+5)p^2", params, verify)
    U, V = _unit_mod4(U, 1), _unit_mod4(V, 3)
    params = {"m": (m + 3) // 16, "k": (V + 1) // 4, "s": (U - 1) // 4}
    return _finish(N, "odd-(16m-3)p^2", params, verify)


def witness(N: int, verify: bool = True, verdict: Optional[Verdict] = None) -> WitnessResult:
    verdict = verdict or classify(N)
    if not verdict.achievable:
        raise NotAchievable(verdict)
    if N % 2 == 0:
        return witness_even(N, verify)
    if N % 8 == 1:
        return witness_odd_1mod8(N, verify)
    return witness_odd_5mod8(N, verdict.p, verify)
