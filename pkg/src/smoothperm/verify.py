"""
Exhaustive verification suites over S_n.  Each suite checks one theorem-level
statement for a single n and reports the cases it looked at together with
any counterexamples it met, in the order they were found.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .admissible import (
    all_admissible,
    compat_graph_connected,
    compatible_order,
    enumerate_compatible_orders,
    is_admissible,
    is_compatible_order,
    pi,
    pi_oracle,
    product_along,
)
from .covexillary import ascent_chain, min_smooth_above_oracle, smooth_closure
from .dyck import (
    admissible_from_path,
    all_paths,
    path_from_admissible,
    sigma_from_path,
    word_to_perm,
)
from .enumeration import CLASSES, count_class, functional_equation_residual, series_smooth
from .essential import (
    admissible_from_grid,
    all_grid_sets,
    bruhat_leq_via_essential,
    coessential_core,
    essential_set,
    grid_from_path,
    path_from_grid,
    sigma_from_grid,
)
from .formats import format_elems, format_partition, format_path, format_perm
from .partitions import partition_max, partition_max_brute, set_partitions, witness_partition
from .perm import all_elems, all_perms, bruhat_leq, elem_leq, elem_to_perm, length
from .tables import is_covexillary, is_smooth, table_23, table_23_brute

# keep reports readable when something is badly broken
MAX_FAILURES = 20


@dataclass
class VerificationReport:
    theorem: str
    n_min: int
    n_max: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        span = f"n={self.n_max}" if self.n_min == self.n_max else f"n={self.n_min}..{self.n_max}"
        return f"{status} {self.theorem} {span} cases={self.cases} failures={len(self.failures)} time={self.seconds:.2f}s"


class _Log:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: Callable[[], str]) -> None:
        self.cases += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(what())


def _smooth(n: int) -> list:
    return [s for s in all_perms(n) if is_smooth(s)]


def suite_bijection(n: int, log: _Log) -> None:
    """Smooth permutations and admissible sets correspond through the 2-3 table."""
    smooth = _smooth(n)
    for s in smooth:
        A = table_23(s)
        log.check(is_admissible(A) and pi(A, n) == s, lambda: f"perm {format_perm(s)}")
    admissible = all_admissible(n)
    for A in admissible:
        if table_23(pi(A, n)) != A:
            log.failures.append(f"set {format_elems(A, n)!r}")
    if len(admissible) != len(smooth):
        log.failures.append(f"{len(admissible)} admissible sets but {len(smooth)} smooth")


def suite_compatible(n: int, log: _Log) -> None:
    """Compatible orders exist, reproduce pi, and (n <= 5) form a connected graph."""
    for A in all_admissible(n):
        order = compatible_order(A, n)
        ok = is_compatible_order(A, order) and product_along(order, n) == pi(A, n)
        if ok and n <= 5:
            target = pi(A, n)
            ok = all(product_along(o, n) == target for o in enumerate_compatible_orders(A))
            ok = ok and compat_graph_connected(A)
        log.check(ok, lambda: f"set {format_elems(A, n)!r}")


def suite_partitions(n: int, log: _Log) -> None:
    """Smooth permutations have every partition maximum; others have a witness."""
    parts = list(set_partitions(n))
    for s in all_perms(n):
        if is_smooth(s):
            for P in parts:
                got = partition_max(s, P)
                log.check(
                    got is not None and got == partition_max_brute(s, P),
                    lambda: f"perm {format_perm(s)} partition {format_partition(P)}",
                )
        else:
            P = witness_partition(s)
            log.check(
                partition_max_brute(s, P) is None and partition_max(s, P) is None,
                lambda: f"perm {format_perm(s)} witness {format_partition(P)}",
            )


def suite_paths(n: int, log: _Log) -> None:
    """Decorated paths biject onto smooth permutations with reduced words."""
    seen = set()
    for p in all_paths(n):
        s, word = sigma_from_path(p)
        A = admissible_from_path(p)
        ok = (
            is_smooth(s)
            and len(word) == length(s)
            and word_to_perm(word, n) == s
            and table_23(s) == A
            and path_from_admissible(A, n) == p
        )
        seen.add(s)
        log.check(ok, lambda: f"path {format_path(p)}")
    if len(seen) != len(_smooth(n)):
        log.failures.append(f"paths reach {len(seen)} smooth permutations")


def suite_closure(n: int, log: _Log) -> None:
    """The smooth closure of a covexillary permutation is the least smooth one above."""
    cov = [t for t in all_perms(n) if is_covexillary(t)]
    closure = {t: smooth_closure(t) for t in cov}
    for t in cov:
        c = closure[t]
        chain = ascent_chain(t)
        ok = (
            is_admissible(table_23(t))
            and smooth_closure(c) == c
            and min_smooth_above_oracle(t) == c
            and chain[-1] == c
            and len(chain) - 1 == length(c) - length(t)
            and all(table_23(u) == table_23(t) and is_covexillary(u) for u in chain)
        )
        log.check(ok, lambda: f"perm {format_perm(t)}")
    for a in cov:
        for b in cov:
            if bruhat_leq(a, b) and not bruhat_leq(closure[a], closure[b]):
                log.failures.append(f"order lost {format_perm(a)} <= {format_perm(b)}")


def suite_essential(n: int, log: _Log) -> None:
    """Essential sets of smooth permutations biject onto the grid class."""
    smooth = _smooth(n)
    for s in smooth:
        E = essential_set(s)
        A = table_23(s)
        p = path_from_admissible(A, n)
        ok = (
            E == coessential_core(s)
            and sigma_from_grid(E, n) == s
            and grid_from_path(p) == E
            and path_from_grid(E, n) == p
            and admissible_from_grid(E, n) == A
            and admissible_from_path(p) == A
        )
        log.check(ok, lambda: f"perm {format_perm(s)}")
    grids = list(all_grid_sets(n))
    if len(grids) != len(smooth):
        log.failures.append(f"{len(grids)} grid sets but {len(smooth)} smooth")


def suite_enumeration(n: int, log: _Log) -> None:
    """Brute force, paths and recurrences agree on every counted class."""
    for cls in CLASSES:
        got = {m: count_class(n, cls, m) for m in ("patterns", "paths", "recurrence")}
        log.check(len(set(got.values())) == 1, lambda: f"class {cls}: {got}")
    residual = functional_equation_residual(series_smooth(max(n, 2)), "smooth")
    log.check(not any(residual), lambda: f"functional equation residual {residual}")


def suite_oracles(n: int, log: _Log) -> None:
    """Closed forms agree with brute-force Bruhat comparisons."""
    elems = all_elems(n)
    perms = {x: elem_to_perm(x, n) for x in elems}
    for a in elems:
        for b in elems:
            log.check(elem_leq(a, b) == bruhat_leq(perms[a], perms[b]), lambda: f"{a} vs {b}")
    for s in all_perms(n):
        log.check(table_23(s) == table_23_brute(s), lambda: f"table of {format_perm(s)}")
    if n <= 5:
        every = list(all_perms(n))
        for s in every:
            for t in every:
                log.check(
                    bruhat_leq_via_essential(t, s) == bruhat_leq(t, s),
                    lambda: f"{format_perm(t)} vs {format_perm(s)}",
                )
        for A in all_admissible(n):
            log.check(pi(A, n) == pi_oracle(A, n), lambda: f"set {format_elems(A, n)!r}")


SUITES: dict[str, Callable[[int, _Log], None]] = {
    "1.1": suite_bijection,
    "1.2": suite_compatible,
    "1.3": suite_partitions,
    "1.4": suite_paths,
    "1.5": suite_closure,
    "1.6": suite_essential,
    "enum": suite_enumeration,
    "oracles": suite_oracles,
}


def _run_one(args: tuple[str, int]) -> tuple[str, int, int, list[str], float]:
    theorem, n = args
    log = _Log()
    start = time.perf_counter()
    SUITES[theorem](n, log)
    return theorem, n, log.cases, log.failures, time.perf_counter() - start


def run_suite(theorem: str, n_min: int, n_max: int, jobs: int = 1) -> VerificationReport:
    return run_suites([theorem], n_min, n_max, jobs)[0]


def run_suites(
    theorems: list[str], n_min: int, n_max: int, jobs: int = 1
) -> list[VerificationReport]:
    """One report per theorem; results do not depend on ``jobs``."""
    unknown = [t for t in theorems if t not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; expected {sorted(SUITES)}")
    if not 1 <= n_min <= n_max:
        raise ValueError(f"bad n range {n_min}..{n_max}")
    tasks = [(t, n) for t in theorems for n in range(n_min, n_max + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(task) for task in tasks]
    reports = {t: VerificationReport(t, n_min, n_max) for t in theorems}
    for theorem, _, cases, failures, seconds in results:
        r = reports[theorem]
        r.cases += cases
        r.failures.extend(failures)
        r.seconds += seconds
    return [reports[t] for t in theorems]


__all__ = [
    "MAX_FAILURES",
    "SUITES",
    "VerificationReport",
    "run_suite",
    "run_suites",
]
