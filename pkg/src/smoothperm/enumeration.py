"""
Counting smooth permutations and three subclasses.  Every count is available
by brute force over S_n, by generating decorated paths, and by exact integer
recurrences.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from .admissible import staircase_functions
from .dyck import all_paths, classify_path, count_decorations
from .perm import Elem, Perm, avoids, is_indecomposable
from .tables import is_smooth_by_patterns

METHODS = ("patterns", "paths", "recurrence")
CLASSES = ("smooth", "avoid231", "avoid321", "indecomposable")
DEFAULT_SERIES_LENGTH = 30
# path generation walks all Catalan-many staircases
PATHS_MAX_N = 12


def catalan(n: int) -> int:
    """
    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    return math.comb(2 * n, n) // (n + 1)


def fibonacci(k: int) -> int:
    """F_1 = F_2 = 1."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def count_dyck(n: int) -> int:
    """Number of staircase functions on [n], by generation."""
    return sum(1 for _ in staircase_functions(n))


def central_binomials(N: int) -> list[int]:
    """Coefficients of 1/sqrt(1-4x) up to x^N."""
    return [math.comb(2 * k, k) for k in range(N + 1)]


def series_indecomposable(N: int = DEFAULT_SERIES_LENGTH) -> list[int]:
    """
    Counts of indecomposable smooth permutations; entry n is the count in S_n
    and entry 0 is 0.

    >>> series_indecomposable(5)
    [0, 1, 1, 3, 11, 43]
    """
    q = [0] * (N + 1)
    if N >= 1:
        q[1] = 1
    for n in range(2, N + 1):
        q[n] = q[n - 1] + 2 * sum(catalan(i - 1) * q[n - i] for i in range(1, n - 1))
    return q


def series_smooth(N: int = DEFAULT_SERIES_LENGTH) -> list[int]:
    """
    Counts of smooth permutations, from the indecomposable ones by splitting
    off the first indecomposable block.

    >>> series_smooth(5)
    [0, 1, 2, 6, 22, 88]
    """
    q = series_indecomposable(N)
    p = [0] * (N + 1)
    for n in range(1, N + 1):
        p[n] = q[n] + sum(q[i] * p[n - i] for i in range(1, n))
    return p


def _mul(a: list[int], b: list[int], N: int) -> list[int]:
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(N + 1)]


def functional_equation_residual(series: list[int], kind: str) -> list[int]:
    """
    Coefficients of (1 - xB - c x) S - x through the length of ``series``, with
    B the central binomial series and c = 1 for "smooth", 0 for
    "indecomposable".  All zero exactly when the equation holds to that order.
    """
    if kind not in ("smooth", "indecomposable"):
        raise ValueError(f"unknown series kind {kind!r}")
    N = len(series) - 1
    factor = [0] * (N + 1)
    factor[0] = 1
    for k, b in enumerate(central_binomials(N - 1)):
        factor[k + 1] -= b
    if kind == "smooth" and N >= 1:
        factor[1] -= 1
    out = _mul(factor, list(series), N)
    if N >= 1:
        out[1] -= 1
    return out


def _class_test(cls: str) -> Callable[[Perm], bool]:
    tests = {
        "smooth": is_smooth_by_patterns,
        "avoid231": lambda s: avoids(s, (2, 3, 1)),
        "avoid321": lambda s: avoids(s, (3, 2, 1), (3, 4, 1, 2)),
        "indecomposable": lambda s: is_indecomposable(s) and is_smooth_by_patterns(s),
    }
    try:
        return tests[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}") from None


def _count_chunk(args: tuple[int, int, str]) -> int:
    n, first, cls = args
    test = _class_test(cls)
    rest = [v for v in range(1, n + 1) if v != first]
    return sum(test((first, *tail)) for tail in itertools.permutations(rest))


def count_brute(n: int, cls: str = "smooth", jobs: int = 1) -> int:
    """Scan S_n, split into chunks by the first value."""
    _class_test(cls)
    chunks = [(n, first, cls) for first in range(1, n + 1)]
    if jobs > 1 and n >= 7:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_chunk, chunks))
    return sum(map(_count_chunk, chunks))


def count_paths(n: int, cls: str = "smooth") -> int:
    if n > PATHS_MAX_N:
        raise ValueError(f"path generation is capped at n={PATHS_MAX_N}")
    if cls == "smooth":
        return sum(count_decorations(f) for f in staircase_functions(n))
    _class_test(cls)
    field = cls if cls == "indecomposable" else cls.replace("avoid", "avoids")
    return sum(getattr(classify_path(p), field) for p in all_paths(n))


def count_recurrence(n: int, cls: str = "smooth") -> int:
    if cls == "smooth":
        return series_smooth(n)[n]
    if cls == "avoid231":
        return catalan(n)
    if cls == "avoid321":
        return fibonacci(2 * n - 1)
    if cls == "indecomposable":
        return series_indecomposable(n)[n]
    raise ValueError(f"unknown class {cls!r}; expected one of {CLASSES}")


def count_class(n: int, cls: str, method: str = "recurrence", jobs: int = 1) -> int:
    """
    >>> [count_class(4, c) for c in ("avoid231", "avoid321", "indecomposable")]
    [14, 13, 11]
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if method == "patterns":
        return count_brute(n, cls, jobs)
    if method == "paths":
        return count_paths(n, cls)
    if method == "recurrence":
        return count_recurrence(n, cls)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def count_smooth(n: int, method: str = "recurrence", jobs: int = 1) -> int:
    """
    >>> [count_smooth(4, m) for m in ("patterns", "paths", "recurrence")]
    [22, 22, 22]
    """
    return count_class(n, "smooth", method, jobs)


def is_transposition_downset(gamma: Iterable[Elem]) -> bool:
    """Closed under T(i,j) -> T(i+1,j), T(i,j-1) among the transpositions."""
    pairs = {(x.i, x.j) for x in gamma}
    return all(
        (i + 1, j) in pairs and (i, j - 1) in pairs for i, j in pairs if j > i + 1
    )


def table_free_indices(gamma: Iterable[Elem]) -> list[int]:
    """Indices i carrying a free R/L choice once the transpositions are fixed."""
    pairs = {(x.i, x.j) for x in gamma}
    out = []
    for i in sorted({a for a, _ in pairs}):
        # far ends k of chains T(i,j), T(j,k) inside the table
        ends = [k for a, j in pairs if a == i for b, k in pairs if b == j]
        if any((i, k) not in pairs for k in ends) and all((i + 1, k) in pairs for k in ends):
            out.append(i)
    return out


def count_admissible_with_table(gamma: Iterable[Elem]) -> int:
    """
    Number of admissible sets whose transpositions are exactly ``gamma``.

    >>> from smoothperm.perm import T
    >>> count_admissible_with_table({T(1, 2), T(2, 3)})
    2
    """
    gamma = frozenset(gamma)
    if any(x.kind != "T" for x in gamma):
        raise ValueError("the table may contain only transpositions")
    if not is_transposition_downset(gamma):
        raise ValueError("the transposition set is not downward closed")
    return 2 ** len(table_free_indices(gamma))


__all__ = [
    "CLASSES",
    "DEFAULT_SERIES_LENGTH",
    "METHODS",
    "PATHS_MAX_N",
    "catalan",
    "central_binomials",
    "count_admissible_with_table",
    "count_brute",
    "count_class",
    "count_dyck",
    "count_paths",
    "count_recurrence",
    "count_smooth",
    "fibonacci",
    "functional_equation_residual",
    "is_transposition_downset",
    "series_indecomposable",
    "series_smooth",
    "table_free_indices",
]
