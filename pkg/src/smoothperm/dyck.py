"""
Decorated Dyck paths.

A path is a weakly increasing ``f`` on [n] with ``f(i) >= i``; a decoration is a
0/1 vector ``g`` tied to ``f`` by two local rules.  Decorated paths are in
bijection with admissible sets and with smooth permutations, and the
permutation side comes with an explicit reduced word.
"""
from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Sequence

from .admissible import require_admissible, staircase_functions
from .perm import (
    Elem,
    Perm,
    all_elems,
    avoids,
    bruhat_leq,
    identity,
    is_indecomposable,
    product,
    transposition,
)


class DecoratedPath(NamedTuple):
    f: tuple[int, ...]
    g: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.f)

    def __str__(self) -> str:
        return f"f={','.join(map(str, self.f))}; g={','.join(map(str, self.g))}"


class InvalidPathError(ValueError):
    pass


def is_valid_path(f: Sequence[int]) -> bool:
    n = len(f)
    return (
        n >= 1
        and all(i <= v <= n for i, v in enumerate(f, 1))
        and all(a <= b for a, b in zip(f, f[1:]))
    )


def decoration_violation(f: Sequence[int], g: Sequence[int]) -> str | None:
    if not is_valid_path(f):
        return f"not a path: {tuple(f)}"
    n = len(f)
    if len(g) != n or any(v not in (0, 1) for v in g):
        return f"decoration must be {n} values in {{0,1}}"
    ff = lambda i: f[f[i - 1] - 1]  # noqa: E731  f(f(i))
    for i in range(1, n + 1):
        if g[i - 1] and ff(i) == f[i - 1]:
            return f"g({i}) must be 0 since f(f({i})) = f({i})"
        if i < n and f[i] < ff(i) and g[i - 1] != g[i]:
            return f"g({i}) must equal g({i + 1}) since f({i + 1}) < f(f({i}))"
    return None


def is_valid_decoration(f: Sequence[int], g: Sequence[int]) -> bool:
    return decoration_violation(f, g) is None


def make_path(f: Sequence[int], g: Sequence[int] | None = None) -> DecoratedPath:
    """Validated constructor; ``g`` defaults to all zeros."""
    f = tuple(f)
    g = tuple(g) if g is not None else (0,) * len(f)
    why = decoration_violation(f, g)
    if why is not None:
        raise InvalidPathError(why)
    return DecoratedPath(f, g)


def free_indices(f: Sequence[int]) -> list[int]:
    """Indices i < n with f(i) < f(f(i)) = f(i+1); each carries a free bit."""
    n = len(f)
    return [
        i
        for i in range(1, n)
        if f[i - 1] < f[f[i - 1] - 1] == f[i]
    ]


def count_decorations(f: Sequence[int]) -> int:
    """
    >>> count_decorations((2, 3, 3))
    2
    """
    return 2 ** len(free_indices(f))


def decorations(f: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All decorations of ``f``, in binary counter order."""
    n = len(f)
    for bits in itertools.product((0, 1), repeat=n):
        if is_valid_decoration(f, bits):
            yield bits


def all_paths(n: int) -> Iterator[DecoratedPath]:
    for f in staircase_functions(n):
        for g in decorations(f):
            yield DecoratedPath(f, g)


def count_paths_by_decorations(n: int) -> int:
    return sum(count_decorations(f) for f in staircase_functions(n))


def path_from_admissible(A, n: int) -> DecoratedPath:
    """(f_A, g_A): f(i) is the largest j with T(i,j) in A, g flags R(i,f(i),f(i)+1)."""
    A = require_admissible(A)
    f = [i for i in range(1, n + 1)]
    for x in A:
        if x.kind == "T":
            f[x.i - 1] = max(f[x.i - 1], x.j)
    g = [
        int(i < f[i - 1] < n and Elem("R", i, f[i - 1], f[i - 1] + 1) in A)
        for i in range(1, n + 1)
    ]
    return DecoratedPath(tuple(f), tuple(g))


def _in_lambda(f: Sequence[int], i: int, j: int) -> bool:
    return i < j <= f[i - 1]


def admissible_from_path(p: DecoratedPath) -> frozenset[Elem]:
    p = make_path(p.f, p.g)
    f, g, n = p.f, p.g, p.n
    out = set()
    for x in all_elems(n):
        if x.kind == "T":
            keep = _in_lambda(f, x.i, x.j)
        else:
            keep = _in_lambda(f, x.i, x.j) and _in_lambda(f, x.j, x.k)
            if keep and not _in_lambda(f, x.i, x.k):
                keep = g[x.i - 1] == (1 if x.kind == "R" else 0)
        if keep:
            out.add(x)
    return frozenset(out)


def interval_word(direction: str, i: int, j: int) -> list[int]:
    """
    Adjacent-transposition word (as indices m of s_m = T(m,m+1)) for R[i,j]
    or L[i,j] under the left-to-right product convention.
    """
    word = list(range(i, j))
    return word if direction == "R" else word[::-1]


def path_word(p: DecoratedPath) -> list[int]:
    """The reduced word of sigma(f, g) as indices of adjacent transpositions."""
    f, g = p.f, p.g
    ones = [i for i in range(1, p.n + 1) if g[i - 1] == 1]
    zeros = [i for i in range(1, p.n + 1) if g[i - 1] == 0]
    word: list[int] = []
    for j in ones:
        word += interval_word("L", j, f[j - 1])
    for i in reversed(zeros):
        word += interval_word("R", i, f[i - 1])
    return word


def word_to_perm(word: Sequence[int], n: int) -> Perm:
    return product((transposition(n, m, m + 1) for m in word), n)


def sigma_from_path(p: DecoratedPath) -> tuple[Perm, list[int]]:
    """
    The smooth permutation of a decorated path, with its reduced word.

    >>> sigma_from_path(DecoratedPath((2, 3, 3), (1, 0, 0)))
    ((2, 3, 1), [1, 2])
    """
    p = make_path(p.f, p.g)
    word = path_word(p)
    return word_to_perm(word, p.n), word


def path_length(f: Sequence[int]) -> int:
    return sum(v - i for i, v in enumerate(f, 1))


def inverse_decoration(p: DecoratedPath) -> DecoratedPath:
    f = p.f
    g = tuple(
        0 if f[f[i - 1] - 1] == f[i - 1] else 1 - p.g[i - 1] for i in range(1, p.n + 1)
    )
    return DecoratedPath(f, g)


class PathFlags(NamedTuple):
    avoids231: bool
    avoids321: bool
    indecomposable: bool


def classify_path(p: DecoratedPath) -> PathFlags:
    f, n = p.f, p.n
    return PathFlags(
        avoids231=not any(p.g),
        avoids321=all(f[i - 1] <= i + 1 for i in range(1, n)),
        indecomposable=all(f[i - 1] > i for i in range(1, n)),
    )


def classify_perm(s: Perm) -> PathFlags:
    """The same three flags computed straight from the permutation."""
    return PathFlags(avoids(s, (2, 3, 1)), avoids(s, (3, 2, 1)), is_indecomposable(s))


def render_path(p: DecoratedPath) -> str:
    """
    Staircase picture: row i marks the cells (i, j) with i < j <= f(i) by '#'
    (or '*' in the last cell when g(i) = 1) and the diagonal by '\\'.
    """
    rows = []
    for i in range(1, p.n + 1):
        cells = []
        for j in range(1, p.n + 1):
            if j < i:
                cells.append(" ")
            elif j == i:
                cells.append("\\")
            elif j <= p.f[i - 1]:
                last = j == p.f[i - 1] and p.g[i - 1]
                cells.append("*" if last else "#")
            else:
                cells.append(".")
        rows.append("".join(cells).rstrip())
    return "\n".join(rows)


def induced_order(n: int) -> list[tuple[DecoratedPath, DecoratedPath]]:
    """
    Pairs (p, q) of distinct decorated paths with sigma(p) <= sigma(q) in
    Bruhat order.  An exploratory view; nothing is claimed about its shape.
    """
    paths = list(all_paths(n))
    perms = {p: sigma_from_path(p)[0] for p in paths}
    return [
        (p, q)
        for p in paths
        for q in paths
        if p != q and bruhat_leq(perms[p], perms[q])
    ]


def identity_path(n: int) -> DecoratedPath:
    return DecoratedPath(identity(n), (0,) * n)
