"""Group-ring elements f(X) + Y*g(X) for the 2-groups SD_{2^n} and M_{2^n}.

Elements are stored Y-left: ``b[i]`` is the coefficient of ``Y*X^i``.
The relation ``Y X Y = X^t`` gives ``X^i Y = Y X^(i*t)``, which is all the
multiplication law needs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

# n = 3 only appears as the D8 quotient produced by fold_to_d8.
SUPPORTED_N = (3, 4, 5, 6)

SEMIDIHEDRAL = "SD"
MODULAR = "M"


class ElementParseError(ValueError):
    pass


@dataclass(frozen=True)
class TwistMap:
    """Exponent map k -> k*multiplier mod 2^(n-1) induced by conjugation by Y."""

    n: int
    kind: str = SEMIDIHEDRAL

    def __post_init__(self):
        if self.n not in SUPPORTED_N:
            raise ValueError(f"unsupported tower exponent n={self.n}")
        if self.kind not in (SEMIDIHEDRAL, MODULAR):
            raise ValueError(f"unknown twist kind {self.kind!r}")

    @property
    def half(self) -> int:
        return 1 << (self.n - 1)

    @property
    def multiplier(self) -> int:
        q = 1 << (self.n - 2)
        return (q - 1 if self.kind == SEMIDIHEDRAL else q + 1) % self.half

    def permutation(self) -> list[int]:
        t, h = self.multiplier, self.half
        return [(k * t) % h for k in range(h)]

    def apply(self, poly: Sequence[int]) -> tuple[int, ...]:
        """Coefficient vector of p(X^t), reduced mod X^(2^(n-1)) - 1."""
        out = [0] * self.half
        for k, c in zip(self.permutation(), poly):
            out[k] += c
        return tuple(out)


@dataclass(frozen=True)
class GroupRingElement:
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if self.n not in SUPPORTED_N:
            raise ValueError(f"unsupported tower exponent n={self.n}")
        half = 1 << (self.n - 1)
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        if len(a) != half or len(b) != half:
            raise ValueError(f"coefficient vectors must have length {half}, got {len(a)} and {len(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def half(self) -> int:
        return len(self.a)

    @property
    def order(self) -> int:
        return 2 * len(self.a)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Flat vector indexed by e(i, j) = i + 2^(n-1)*j."""
        return self.a + self.b

    @classmethod
    def from_flat(cls, coeffs: Sequence[int]) -> GroupRingElement:
        half = len(coeffs) // 2
        n = half.bit_length()
        if 2 * half != len(coeffs) or (1 << (n - 1)) != half:
            raise ValueError(f"cannot infer group order from {len(coeffs)} coefficients")
        return cls(n, tuple(coeffs[:half]), tuple(coeffs[half:]))

    @classmethod
    def from_polys(cls, n: int, f: Sequence[int] = (), g: Sequence[int] = ()) -> GroupRingElement:
        """Build from (possibly short) coefficient lists, zero-padded."""
        half = 1 << (n - 1)
        if len(f) > half or len(g) > half:
            raise ValueError("polynomial degree exceeds 2^(n-1) - 1")
        return cls(n, tuple(f) + (0,) * (half - len(f)), tuple(g) + (0,) * (half - len(g)))

    def __str__(self) -> str:
        return format_element(self)


def gr_identity(n: int) -> GroupRingElement:
    if n not in SUPPORTED_N:
        raise ValueError(f"unsupported tower exponent n={n}")
    half = 1 << (n - 1)
    return GroupRingElement(n, (1,) + (0,) * (half - 1), (0,) * half)


def cyclic_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """Product in Z[X]/(X^len - 1)."""
    size = len(p)
    out = [0] * size
    for i, c in enumerate(p):
        if c:
            for j, d in enumerate(q):
                if d:
                    out[(i + j) % size] += c * d
    return out


def gr_multiply(F1: GroupRingElement, F2: GroupRingElement, twist: TwistMap) -> GroupRingElement:
    if not (F1.n == F2.n == twist.n):
        raise ValueError(f"mismatched tower exponents: {F1.n}, {F2.n}, {twist.n}")
    f1t = twist.apply(F1.a)
    g1t = twist.apply(F1.b)
    f = [x + y for x, y in zip(cyclic_mul(F1.a, F2.a), cyclic_mul(g1t, F2.b))]
    g = [x + y for x, y in zip(cyclic_mul(f1t, F2.b), cyclic_mul(F1.b, F2.a))]
    return GroupRingElement(F1.n, tuple(f), tuple(g))


def fold_to_d8(F: GroupRingElement) -> GroupRingElement:
    """Image of an SD16 element in the quotient by <X^4>, which is D8."""
    if F.n != 4:
        raise ValueError("fold_to_d8 needs an SD16 element (n=4)")
    gamma = tuple(F.a[i] + F.a[i + 4] for i in range(4))
    delta = tuple(F.b[i] + F.b[i + 4] for i in range(4))
    return GroupRingElement(3, gamma, delta)


_INT = re.compile(r"^[+-]?\d+$")


def parse_element(text: str, n: int | None = None) -> GroupRingElement:
    """Parse "a0,...,a7;b0,...,b7" (or 2^n comma-separated integers, a first)."""
    text = text.strip()
    if ";" in text:
        parts = text.split(";")
        if len(parts) != 2:
            raise ElementParseError(f"expected exactly one ';' in {text!r}")
        fields = parts[0].split(",") + parts[1].split(",")
        if len(parts[0].split(",")) != len(parts[1].split(",")):
            raise ElementParseError("a and b halves have different lengths")
    else:
        fields = text.split(",")
    coeffs = []
    for field in fields:
        field = field.strip()
        if not _INT.match(field):
            raise ElementParseError(f"not an integer: {field!r}")
        coeffs.append(int(field))
    try:
        F = GroupRingElement.from_flat(coeffs)
    except ValueError as exc:
        raise ElementParseError(str(exc)) from None
    if n is not None and F.n != n:
        raise ElementParseError(f"expected {1 << n} coefficients, got {len(coeffs)}")
    return F


def format_element(F: GroupRingElement) -> str:
    return ",".join(map(str, F.a)) + ";" + ",".join(map(str, F.b))
