"""Group determinants two ways: the regular-representation matrix (oracle)
and the factored closed forms built from cyclotomic orbit norms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .cyclotomic import coset_representatives, cyc_reduce, galois_apply, orbit_norm, units
from .group_ring import GroupRingElement, fold_to_d8

FAMILIES = ("SD", "M", "D8")


class FormulaMismatch(AssertionError):
    """Factored formula disagrees with the matrix determinant."""


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.family == "D8" and self.n != 3:
            raise ValueError("D8 has fixed order 8 (n=3)")
        if self.family != "D8" and self.n not in (4, 5, 6):
            raise ValueError(f"unsupported n={self.n} for family {self.family}")

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def half(self) -> int:
        return 1 << (self.n - 1)

    @property
    def multiplier(self) -> int:
        """t with Y X Y = X^t."""
        if self.family == "D8":
            return self.half - 1
        q = 1 << (self.n - 2)
        return q - 1 if self.family == "SD" else q + 1

    @property
    def name(self) -> str:
        return "D8" if self.family == "D8" else f"{self.family}{self.order}"


SD16 = GroupSpec("SD", 4)
SD32 = GroupSpec("SD", 5)
M16 = GroupSpec("M", 4)
M32 = GroupSpec("M", 5)
D8 = GroupSpec("D8", 3)

GROUPS = {
    "sd16": SD16, "sd32": SD32, "sd64": GroupSpec("SD", 6),
    "m16": M16, "m32": M32, "m64": GroupSpec("M", 6),
    "d8": D8,
}


@dataclass(frozen=True)
class CayleyTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]


def element_index(i: int, j: int, half: int) -> int:
    return i % half + half * j


def cayley_table(spec: GroupSpec) -> CayleyTable:
    return _cayley(spec)


@lru_cache(maxsize=None)
def _cayley(spec: GroupSpec) -> CayleyTable:
    half, t = spec.half, spec.multiplier
    order = 2 * half
    rows = []
    for j, i in product(range(2), range(half)):
        row = [0] * order
        for l, k in product(range(2), range(half)):
            # (Y^j X^i)(Y^l X^k) = Y^(j+l) X^(i t^l + k)
            row[l * half + k] = element_index(i * (t if l else 1) + k, (j + l) % 2, half)
        rows.append(tuple(row))
    table = tuple(rows)
    inv = []
    for g in range(order):
        matches = [h for h in range(order) if table[g][h] == 0]
        inv.append(matches[0])
    ct = CayleyTable(order, table, tuple(inv))
    _validate(ct)
    return ct


def _validate(ct: CayleyTable):
    full = set(range(ct.order))
    for g in range(ct.order):
        if set(ct.table[g]) != full or {ct.table[h][g] for h in range(ct.order)} != full:
            raise AssertionError("Cayley table is not a Latin square")
        if ct.table[g][ct.inv[g]] != 0:
            raise AssertionError("bad inverse")
    if ct.order <= 32:
        tb = ct.table
        for a in range(ct.order):
            ra = tb[a]
            for b in range(ct.order):
                ab = ra[b]
                rab, rb = tb[ab], tb[b]
                if any(rab[c] != ra[rb[c]] for c in range(ct.order)):
                    raise AssertionError("Cayley table is not associative")


@lru_cache(maxsize=None)
def _index_matrix(spec: GroupSpec) -> tuple[tuple[int, ...], ...]:
    ct = _cayley(spec)
    return tuple(tuple(ct.table[g][ct.inv[h]] for h in range(ct.order)) for g in range(ct.order))


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free elimination.

    Pivot is the first nonzero entry in the leading column; each row swap
    flips the sign.  The matrix shrinks by one row and column per step.
    """
    a = [list(r) for r in matrix]
    if not a:
        return 1
    sign, prev = 1, 1
    while len(a) > 1:
        for i, row in enumerate(a):
            if row[0]:
                break
        else:
            return 0
        if i:
            a[0], a[i] = a[i], a[0]
            sign = -sign
        top = a[0]
        piv, tail = top[0], top[1:]
        a = [[(piv * x - r0 * y) // prev for x, y in zip(row[1:], tail)]
             for row in a[1:] for r0 in (row[0],)]
        prev = piv
    return sign * a[0][0]


def regular_matrix(F: GroupRingElement, spec: GroupSpec) -> list[list[int]]:
    """Rows g, columns h, entry = coefficient of g*h^-1."""
    if F.order != spec.order:
        raise ValueError(f"element of order {F.order} does not match {spec.name}")
    c = F.coefficients
    return [[c[k] for k in row] for row in _index_matrix(spec)]


def regular_determinant(F: GroupRingElement, spec: GroupSpec) -> int:
    return bareiss_det(regular_matrix(F, spec))


# --- factored forms -------------------------------------------------------

@dataclass(frozen=True)
class FactoredSD16:
    M: int
    A2: int
    A3: int
    U1: int
    V1: int
    U2: int
    V2: int
    product: int


@dataclass(frozen=True)
class FactoredGeneral:
    M: int
    A: tuple[int, ...]
    product: int


@dataclass(frozen=True)
class FactoredM:
    M1: int
    A: int
    product: int


def character_product(a: Sequence[int], b: Sequence[int]) -> int:
    """F(1,1)F(1,-1)F(-1,1)F(-1,-1) = (f(1)^2 - g(1)^2)(f(-1)^2 - g(-1)^2)."""
    f1, g1 = sum(a), sum(b)
    fm = sum(a[0::2]) - sum(a[1::2])
    gm = sum(b[0::2]) - sum(b[1::2])
    return (f1 * f1 - g1 * g1) * (fm * fm - gm * gm)


def bilinear_forms(d0: int, d1: int, d2: int, d3: int) -> tuple[int, int]:
    """(U, V) with p(w)p(w^3) = U + sqrt(-2) V, p(w) = d0 + d1 w + d2 w^2 + d3 w^3, w = e^(i pi/4)."""
    U = d0 * d0 - d1 * d1 + d2 * d2 - d3 * d3
    V = d0 * d1 + d0 * d3 - d1 * d2 + d2 * d3
    return U, V


def sd16_factored(F: GroupRingElement) -> FactoredSD16:
    if F.n != 4:
        raise ValueError("sd16_factored needs n=4")
    a, b = F.a, F.b
    M = character_product(a, b)
    A2 = ((a[0] - a[2] + a[4] - a[6]) ** 2 + (a[1] - a[3] + a[5] - a[7]) ** 2
          - (b[0] - b[2] + b[4] - b[6]) ** 2 - (b[1] - b[3] + b[5] - b[7]) ** 2)
    U1, V1 = bilinear_forms(a[0] - a[4], a[1] - a[5], a[2] - a[6], a[3] - a[7])
    U2, V2 = bilinear_forms(b[0] - b[4], b[1] - b[5], b[2] - b[6], b[3] - b[7])
    du, dv = U1 - U2, V1 - V2
    A3 = du * du + 2 * dv * dv
    return FactoredSD16(M, A2, A3, U1, V1, U2, V2, M * A2 * A2 * A3 * A3)


def _twisted_norm_part(F: GroupRingElement, m: int, twist: int):
    """k = f*sigma_t(f) - g*sigma_t(g) in Z[x]/(x^m + 1)."""
    uf, ug = cyc_reduce(F.a, m), cyc_reduce(F.b, m)
    return uf * galois_apply(uf, twist) - ug * galois_apply(ug, twist)


def sd_general_factored(F: GroupRingElement) -> FactoredGeneral:
    n = F.n
    if n not in (4, 5, 6):
        raise ValueError(f"sd_general_factored needs n in 4..6, got {n}")
    M = character_product(F.a, F.b)
    A = []
    for j in range(2, n - 1):
        m = 1 << (j - 1)
        k = _twisted_norm_part(F, m, -1)
        A.append(orbit_norm(k, coset_representatives(1 << j, [-1])))
    m = 1 << (n - 2)
    tau = m - 1
    k = _twisted_norm_part(F, m, tau)
    A.append(orbit_norm(k, coset_representatives(2 * m, [tau])))
    prod = M
    for x in A:
        prod *= x * x
    return FactoredGeneral(M, tuple(A), prod)


def m_factored(F: GroupRingElement) -> FactoredM:
    """M1 * A^2 for the modular maximal-cyclic group M_{2^n}."""
    n = F.n
    if n not in (4, 5, 6):
        raise ValueError(f"m_factored needs n in 4..6, got {n}")
    f1, g1 = sum(F.a), sum(F.b)
    M1 = f1 * f1 - g1 * g1
    # remaining x with x^(2^(n-2)) = 1 are primitive 2m-th roots, 2m | 2^(n-2)
    m = 1
    while 2 * m <= 1 << (n - 2):
        uf, ug = cyc_reduce(F.a, m), cyc_reduce(F.b, m)
        M1 *= orbit_norm(uf * uf - ug * ug, units(2 * m))
        m *= 2
    m = 1 << (n - 2)
    t = m + 1
    k = _twisted_norm_part(F, m, t)
    A = orbit_norm(k, coset_representatives(2 * m, [t]))
    return FactoredM(M1, A, M1 * A * A)


def m16_factored(F: GroupRingElement) -> FactoredM:
    if F.n != 4:
        raise ValueError("m16_factored needs n=4")
    return m_factored(F)


def dihedral_cross_check(F: GroupRingElement) -> tuple[int, int]:
    fac = sd16_factored(F)
    return fac.M * fac.A2 * fac.A2, regular_determinant(fold_to_d8(F), D8)


def factored_determinant(F: GroupRingElement, spec: GroupSpec):
    """Factored form for ``spec``; None for D8, which has no closed form here."""
    if spec.family == "SD":
        return sd16_factored(F) if spec.n == 4 else sd_general_factored(F)
    if spec.family == "M":
        return m_factored(F)
    return None


def checked_factored(F: GroupRingElement, spec: GroupSpec):
    """Factored form after asserting its product equals the oracle."""
    fac = factored_determinant(F, spec)
    D = regular_determinant(F, spec)
    if fac is not None and fac.product != D:
        raise FormulaMismatch(f"{spec.name}: factored {fac.product} != oracle {D} for {F}")
    return D, fac
