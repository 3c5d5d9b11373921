"""Census of SD16 determinants over a coefficient box.

Every scanned element goes through the factored formula; one in
``spot_check_every`` is re-checked against the matrix determinant.  Each
observed value is run through the classifier, so any disagreement with the
achievability theorem shows up as a violation.
"""
from __future__ import annotations

import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

import numpy as np

from .determinants import SD16, FormulaMismatch, cayley_table, regular_determinant, sd16_factored
from .group_ring import GroupRingElement, format_element
from .number_theory import classify, combine_factorizations, factorize

log = logging.getLogger(__name__)

SIZE = 16
PREFIX_LEN = 2
BLOCK = 10_000


class CensusConfigError(ValueError):
    pass


class IncompatibleReports(ValueError):
    pass


@dataclass(frozen=True)
class CensusConfig:
    lo: int = 0
    hi: int = 1
    max_nonzero: Optional[int] = SIZE  # enumeration mode when samples is None
    samples: Optional[int] = None  # random mode
    seed: int = 42
    value_bound: int = 10**6
    workers: int = 1
    symmetry: bool = False
    spot_check_every: int = 1000

    def validate(self):
        if self.lo > self.hi:
            raise CensusConfigError(f"empty range [{self.lo}, {self.hi}]")
        if (self.samples is None) == (self.max_nonzero is None):
            raise CensusConfigError("exactly one of max_nonzero (enumeration) or samples (random) must be set")
        if self.samples is not None and self.samples < 0:
            raise CensusConfigError("samples must be nonnegative")
        if self.max_nonzero is not None and not 0 <= self.max_nonzero <= SIZE:
            raise CensusConfigError(f"max_nonzero must be in 0..{SIZE}")
        if self.workers < 1 or self.spot_check_every < 1 or self.value_bound < 0:
            raise CensusConfigError("workers, spot_check_every must be positive; value_bound nonnegative")

    @property
    def mode(self) -> str:
        return "random" if self.samples is not None else "enumeration"

    def semantics(self) -> tuple:
        """Fields that must agree for two reports to be mergeable."""
        return (self.lo, self.hi, self.value_bound)


@dataclass(frozen=True)
class Achieved:
    value: int
    element: tuple[int, ...]
    count: int

    @property
    def element_str(self) -> str:
        return format_element(GroupRingElement.from_flat(self.element))


@dataclass(frozen=True)
class Violation:
    value: int
    reason: str
    element: tuple[int, ...]


@dataclass
class CensusReport:
    config: CensusConfig
    values: dict[int, list] = field(default_factory=dict)  # value -> [count, example]
    violations: list[Violation] = field(default_factory=list)
    scanned: int = 0
    spot_checks: int = 0
    wall_time: float = 0.0

    @property
    def achieved(self) -> list[Achieved]:
        return [Achieved(v, ex, c) for v, (c, ex) in sorted(self.values.items())]

    def achieved_set(self) -> list[int]:
        return sorted(self.values)

    def to_text(self) -> str:
        return "".join(f"{a.value}\t{a.element_str}\t{a.count}\n" for a in self.achieved)

    def to_json(self) -> str:
        return json.dumps({
            "config": asdict(self.config),
            "achieved": [{"value": a.value, "element": a.element_str, "count": a.count} for a in self.achieved],
            "violations": [{"value": v.value, "reason": v.reason,
                            "element": format_element(GroupRingElement.from_flat(v.element))}
                           for v in self.violations],
            "stats": {"scanned": self.scanned, "spot_checks": self.spot_checks,
                      "wall_time": round(self.wall_time, 3)},
        }, indent=1)


def _witness_key(c: tuple[int, ...]):
    return (sum(abs(x) for x in c), c)


def merge_reports(a: CensusReport, b: CensusReport) -> CensusReport:
    if a.config.semantics() != b.config.semantics():
        raise IncompatibleReports(f"{a.config.semantics()} vs {b.config.semantics()}")
    values = {v: list(rec) for v, rec in a.values.items()}
    for v, (count, ex) in b.values.items():
        if v in values:
            old = values[v]
            old[0] += count
            if _witness_key(ex) < _witness_key(old[1]):
                old[1] = ex
        else:
            values[v] = [count, ex]
    violations = sorted(a.violations + b.violations, key=lambda x: (x.value, x.element))
    return CensusReport(a.config, values, violations, a.scanned + b.scanned,
                        a.spot_checks + b.spot_checks, a.wall_time + b.wall_time)


# --- symmetries --------------------------------------------------------------

def left_multiplication_permutations() -> list[tuple[int, ...]]:
    """perm[g][h] = index of g*h; left multiplication by g sends a_h to slot g*h."""
    return [tuple(row) for row in cayley_table(SD16).table]


def validated_symmetries(trials: int = 100, seed: int = 0) -> list[tuple[int, ...]]:
    """Left multiplications that preserve the determinant on ``trials`` random elements.

    Falls back to the identity alone if the survivors do not form a group.
    """
    rng = random.Random(seed)
    samples = [tuple(rng.randint(-3, 3) for _ in range(SIZE)) for _ in range(trials)]
    dets = [regular_determinant(GroupRingElement.from_flat(c), SD16) for c in samples]
    kept = []
    for perm in left_multiplication_permutations():
        if all(regular_determinant(GroupRingElement.from_flat(_permute(c, perm)), SD16) == d
               for c, d in zip(samples, dets)):
            kept.append(perm)
    as_set = set(kept)
    closed = all(tuple(p[q[i]] for i in range(SIZE)) in as_set for p in kept for q in kept)
    if not closed:
        log.warning("determinant-preserving left multiplications are not closed; symmetry disabled")
        return [tuple(range(SIZE))]
    return kept


def _permute(c: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * SIZE
    for h, x in enumerate(c):
        out[perm[h]] = x
    return tuple(out)


# --- enumeration -------------------------------------------------------------

def _fill(length: int, budget: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    nonzero = [v for v in range(lo, hi + 1) if v]
    if not lo <= 0 <= hi:
        if budget >= length:
            yield from product(nonzero, repeat=length)
        return
    for k in range(min(budget, length) + 1):
        for pos in combinations(range(length), k):
            for vals in product(nonzero, repeat=k):
                v = [0] * length
                for p, x in zip(pos, vals):
                    v[p] = x
                yield tuple(v)


def _tasks(config: CensusConfig) -> list[tuple]:
    if config.mode == "random":
        return [("random", b, min(BLOCK, config.samples - b * BLOCK))
                for b in range((config.samples + BLOCK - 1) // BLOCK)]
    return [("enum", prefix) for prefix in _fill(PREFIX_LEN, config.max_nonzero, config.lo, config.hi)]


def _task_elements(config: CensusConfig, task: tuple) -> Iterator[tuple[int, ...]]:
    if task[0] == "random":
        _, block, count = task
        rng = np.random.default_rng([config.seed, block])
        for row in rng.integers(config.lo, config.hi + 1, size=(count, SIZE)).tolist():
            yield tuple(row)
        return
    prefix = task[1]
    budget = config.max_nonzero - sum(1 for x in prefix if x)
    for suffix in _fill(SIZE - PREFIX_LEN, budget, config.lo, config.hi):
        yield prefix + suffix


class _Classifier:
    """Per-value verdict cache; factorizations come from the factored parts."""

    def __init__(self):
        self.cache: dict[int, Optional[str]] = {}

    def problem(self, D: int, fac) -> Optional[str]:
        if D in self.cache:
            return self.cache[D]
        factorization = None
        if D % 8 == 5:
            factorization = combine_factorizations(
                D, [(factorize(fac.M), 1), (factorize(fac.A2), 2), (factorize(fac.A3), 2)])
        verdict = classify(D, factorization)
        problem = None if verdict.achievable else f"classifier: {verdict.describe()}"
        self.cache[D] = problem
        return problem


def _run_task(config: CensusConfig, task: tuple, symmetries: Optional[list]) -> CensusReport:
    start = time.perf_counter()
    report = CensusReport(config)
    values = report.values
    classifier = _Classifier()
    bound = config.value_bound
    use_sym = symmetries is not None and task[0] == "enum"
    for idx, c in enumerate(_task_elements(config, task)):
        weight = 1
        if use_sym:
            images = {_permute(c, perm) for perm in symmetries}
            if min(images) != c:
                continue
            weight = len(images)
        F = GroupRingElement(4, c[:8], c[8:])
        fac = sd16_factored(F)
        D = fac.product
        report.scanned += weight
        if idx % config.spot_check_every == 0:
            report.spot_checks += 1
            oracle = regular_determinant(F, SD16)
            if oracle != D:
                raise FormulaMismatch(f"factored {D} != oracle {oracle} for {format_element(F)}")
        if D % 8 == 5 and fac.A3 % 8 != 3:
            report.violations.append(Violation(D, f"A3={fac.A3} is not 3 mod 8", c))
        problem = classifier.problem(D, fac)
        if problem:
            report.violations.append(Violation(D, problem, c))
        if abs(D) <= bound:
            rec = values.get(D)
            if rec is None:
                values[D] = [weight, c]
            else:
                rec[0] += weight
                if _witness_key(c) < _witness_key(rec[1]):
                    rec[1] = c
    report.wall_time = time.perf_counter() - start
    return report


def _run_task_star(args):
    return _run_task(*args)


def run_census(config: CensusConfig, tasks: Optional[Iterable[tuple]] = None) -> CensusReport:
    """Run the census; ``tasks`` restricts to a subset of the shard list (see ``census_tasks``)."""
    config.validate()
    symmetries = validated_symmetries() if config.symmetry else None
    task_list = list(tasks) if tasks is not None else _tasks(config)
    report = CensusReport(config)
    start = time.perf_counter()
    if config.workers == 1:
        parts: Iterable[CensusReport] = (_run_task(config, t, symmetries) for t in task_list)
        for part in parts:
            report = merge_reports(report, part)
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for part in pool.map(_run_task_star, [(config, t, symmetries) for t in task_list]):
                report = merge_reports(report, part)
    report.wall_time = time.perf_counter() - start
    return report


def census_tasks(config: CensusConfig) -> list[tuple]:
    """The static shard list; any partition of it merges to the full result."""
    config.validate()
    return _tasks(config)
