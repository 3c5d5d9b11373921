"""Exact arithmetic in Z[x]/(x^m + 1) for m a power of two.

The ring is Z[zeta] for zeta a primitive 2m-th root of unity, so reducing a
polynomial here is the same as evaluating it at zeta.  m=1 evaluates at -1,
m=2 gives the Gaussian integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

RING_DEGREES = (1, 2, 4, 8, 16)


class NonScalarProduct(ArithmeticError):
    """An orbit product left a nonzero non-constant coordinate."""


@dataclass(frozen=True)
class CyclotomicElement:
    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m not in RING_DEGREES:
            raise ValueError(f"unsupported ring degree m={self.m}")
        if len(self.coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(self.coeffs)}")

    def __add__(self, other: CyclotomicElement) -> CyclotomicElement:
        _check_same(self, other)
        return CyclotomicElement(self.m, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CyclotomicElement) -> CyclotomicElement:
        _check_same(self, other)
        return CyclotomicElement(self.m, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: CyclotomicElement) -> CyclotomicElement:
        return cyc_mul(self, other)

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    @classmethod
    def scalar(cls, m: int, c: int) -> CyclotomicElement:
        return cls(m, (c,) + (0,) * (m - 1))


def _check_same(u: CyclotomicElement, v: CyclotomicElement):
    if u.m != v.m:
        raise ValueError(f"ring degree mismatch: {u.m} vs {v.m}")


def cyc_reduce(poly: Iterable[int], m: int) -> CyclotomicElement:
    if m not in RING_DEGREES:
        raise ValueError(f"unsupported ring degree m={m}")
    out = [0] * m
    for k, c in enumerate(poly):
        if c:
            r = k % (2 * m)
            if r < m:
                out[r] += c
            else:
                out[r - m] -= c
    return CyclotomicElement(m, tuple(out))


def cyc_mul(u: CyclotomicElement, v: CyclotomicElement) -> CyclotomicElement:
    _check_same(u, v)
    m = u.m
    out = [0] * m
    for i, c in enumerate(u.coeffs):
        if not c:
            continue
        for j, d in enumerate(v.coeffs):
            k = i + j
            if k < m:
                out[k] += c * d
            else:
                out[k - m] -= c * d
    return CyclotomicElement(m, tuple(out))


def galois_apply(u: CyclotomicElement, g: int) -> CyclotomicElement:
    """The automorphism sigma_g: x -> x^g (g odd)."""
    if g % 2 == 0:
        raise ValueError(f"Galois index must be odd, got {g}")
    m = u.m
    out = [0] * m
    for k, c in enumerate(u.coeffs):
        if c:
            r = (k * g) % (2 * m)
            if r < m:
                out[r] += c
            else:
                out[r - m] -= c
    return CyclotomicElement(m, tuple(out))


def units(modulus: int) -> list[int]:
    return [i for i in range(1, modulus) if gcd(i, modulus) == 1]


def coset_representatives(modulus: int, subgroup: Sequence[int]) -> list[int]:
    """Smallest representative of each coset of ``subgroup`` in (Z/modulus)^x."""
    sub = {s % modulus for s in subgroup} | {1}
    seen: set[int] = set()
    reps = []
    for u in units(modulus):
        if u in seen:
            continue
        reps.append(u)
        seen.update((u * s) % modulus for s in sub)
    return reps


def orbit_norm(u: CyclotomicElement, reps: Iterable[int]) -> int:
    """Product of sigma_i(u) over ``reps``; the result must be a rational integer."""
    acc = CyclotomicElement.scalar(u.m, 1)
    for i in reps:
        acc = cyc_mul(acc, galois_apply(u, i))
    if not acc.is_scalar():
        raise NonScalarProduct(f"orbit product {acc.coeffs} is not an integer")
    return acc.coeffs[0]
