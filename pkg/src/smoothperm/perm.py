"""
Permutations of [n] in one-line notation, the Bruhat order, maximal functions,
pattern containment, and the small cycles T(i,j), R(i,j,k), L(i,j,k).

A permutation is a tuple ``(s(1), ..., s(n))`` of the values 1..n.  Positions and
values are 1-based everywhere in the public API.  Products use the convention
``compose(s, t)(x) = s(t(x))``, so right multiplication by a transposition acts on
positions: ``s < s*T(i,j)`` whenever ``s(i) < s(j)``.
"""
from __future__ import annotations

import functools
import itertools
import operator
from typing import Iterable, Iterator, NamedTuple, Sequence

Perm = tuple[int, ...]


def is_permutation(word: Sequence[int]) -> bool:
    """
    >>> [is_permutation(w) for w in [(1,), (2, 1), (1, 1), (0, 1), ()]]
    [True, True, False, False, False]
    """
    return len(word) >= 1 and sorted(word) == list(range(1, len(word) + 1))


def check_perm(word: Sequence[int]) -> Perm:
    if not is_permutation(word):
        raise ValueError(f"not a permutation of [n]: {tuple(word)!r}")
    return tuple(word)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """The maximum w0 of the Bruhat order, i -> n+1-i."""
    return tuple(range(n, 0, -1))


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


def _same_size(s: Sequence[int], t: Sequence[int]) -> None:
    if len(s) != len(t):
        raise ValueError(f"size mismatch: {len(s)} != {len(t)}")


def compose(s: Perm, t: Perm) -> Perm:
    """
    The product x -> s(t(x)).

    >>> compose((1, 3, 2), (2, 1, 3)) == (3, 1, 2)
    True
    """
    _same_size(s, t)
    return tuple(s[x - 1] for x in t)


def product(perms: Iterable[Perm], n: int) -> Perm:
    return functools.reduce(compose, perms, identity(n))


def inverse(s: Perm) -> Perm:
    inv = [0] * len(s)
    for pos, val in enumerate(s, 1):
        inv[val - 1] = pos
    return tuple(inv)


def upend(s: Perm) -> Perm:
    """Conjugation by the longest element, w0 * s * w0."""
    n = len(s)
    return tuple(n + 1 - s[n - i] for i in range(1, n + 1))


def length(s: Perm) -> int:
    """Number of inversions."""
    n = len(s)
    return sum(1 for a in range(n) for b in range(a + 1, n) if s[a] > s[b])


def right_mult_transposition(s: Perm, i: int, j: int) -> Perm:
    """s * T(i,j), i.e. swap the entries in positions i and j."""
    p = list(s)
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return tuple(p)


@functools.lru_cache(maxsize=1 << 16)
def rank_table(s: Perm) -> tuple[int, ...]:
    """
    Flattened table of #(s([i]) & [j]) for i, j in [n], row-major.
    """
    n = len(s)
    counts = [0] * (n + 1)
    out = []
    for i in range(n):
        for v in range(s[i], n + 1):
            counts[v] += 1
        out.extend(counts[1:])
    return tuple(out)


def bruhat_leq(t: Perm, s: Perm) -> bool:
    """
    t <= s in Bruhat order, by the dominance criterion
    #(t([i]) & [j]) >= #(s([i]) & [j]) for all i, j.
    """
    _same_size(t, s)
    return all(map(operator.ge, rank_table(t), rank_table(s)))


def bruhat_lt(t: Perm, s: Perm) -> bool:
    return t != s and bruhat_leq(t, s)


@functools.lru_cache(maxsize=1 << 16)
def max_function(s: Perm) -> Perm:
    """
    Prefix maxima i -> max s([i]).

    >>> max_function((2, 3, 1))
    (2, 3, 3)
    """
    return tuple(itertools.accumulate(s, max))


def contains_pattern(s: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``s`` is order-isomorphic to ``pattern``."""
    k = len(pattern)
    if k > len(s):
        return False
    # pattern position of each rank, so a candidate is checked by one scan
    order = sorted(range(k), key=lambda a: pattern[a])
    for positions in itertools.combinations(range(len(s)), k):
        vals = [s[p] for p in positions]
        if all(vals[order[a]] < vals[order[a + 1]] for a in range(k - 1)):
            return True
    return False


def avoids(s: Sequence[int], *patterns: Sequence[int]) -> bool:
    return not any(contains_pattern(s, p) for p in patterns)


def is_indecomposable(s: Perm) -> bool:
    """No 1 <= k < n with s([k]) = [k]."""
    m = max_function(s)
    return all(m[k - 1] > k for k in range(1, len(s)))


def pattern_of(values: Sequence[int]) -> Perm:
    """Standardize a sequence of distinct integers to a permutation."""
    ranks = {v: r for r, v in enumerate(sorted(values), 1)}
    return tuple(ranks[v] for v in values)


# --- small cycles ---------------------------------------------------------------

KIND_ORDER = {"T": 0, "R": 1, "L": 2}


class Elem(NamedTuple):
    """
    An element of the set of transpositions and 3-cycles.

    ``Elem("T", i, j)`` is the transposition of i and j, ``Elem("R", i, j, k)`` the
    3-cycle i -> j -> k -> i and ``Elem("L", i, j, k)`` its inverse.
    """

    kind: str
    i: int
    j: int
    k: int = 0

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j) if self.kind == "T" else (self.i, self.j, self.k)

    @property
    def outer(self) -> tuple[int, int]:
        """The outer transposition indices (i, k) of a 3-cycle, (i, j) for T."""
        return (self.i, self.j) if self.kind == "T" else (self.i, self.k)

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.indices))})"


def T(i: int, j: int) -> Elem:
    if not 1 <= i < j:
        raise ValueError(f"T needs 1 <= i < j, got ({i}, {j})")
    return Elem("T", i, j)


def R(i: int, j: int, k: int) -> Elem:
    if not 1 <= i < j < k:
        raise ValueError(f"R needs 1 <= i < j < k, got ({i}, {j}, {k})")
    return Elem("R", i, j, k)


def L(i: int, j: int, k: int) -> Elem:
    if not 1 <= i < j < k:
        raise ValueError(f"L needs 1 <= i < j < k, got ({i}, {j}, {k})")
    return Elem("L", i, j, k)


def elem_key(x: Elem) -> tuple[int, int, int, int]:
    """Canonical order: T before R before L, then indices lexicographically."""
    return (KIND_ORDER[x.kind], x.i, x.j, x.k)


def all_elems(n: int) -> list[Elem]:
    """The full set of transpositions and 3-cycles of S_n, canonically sorted."""
    out = [Elem("T", i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    triples = list(itertools.combinations(range(1, n + 1), 3))
    out += [Elem("R", *t) for t in triples]
    out += [Elem("L", *t) for t in triples]
    return out


def all_transpositions(n: int) -> list[Elem]:
    return [Elem("T", i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]


def elem_inverse(x: Elem) -> Elem:
    if x.kind == "T":
        return x
    return x._replace(kind="L" if x.kind == "R" else "R")


def elem_upend(x: Elem, n: int) -> Elem:
    """w0 x w0; it maps R(i,j,k) to L(w0(k), w0(j), w0(i)) and vice versa."""
    w = lambda a: n + 1 - a  # noqa: E731
    if x.kind == "T":
        return Elem("T", w(x.j), w(x.i))
    return Elem("L" if x.kind == "R" else "R", w(x.k), w(x.j), w(x.i))


def elem_to_perm(x: Elem, n: int) -> Perm:
    if max(x.indices) > n:
        raise ValueError(f"{x} does not live in S_{n}")
    if x.kind == "T":
        return transposition(n, x.i, x.j)
    return build_cycle(GeneralCycle(x.kind, x.indices), n)


def _t_leq(i: int, j: int, x: int, y: int) -> bool:
    return x <= i < j <= y


def elem_leq(a: Elem, b: Elem) -> bool:
    """
    Bruhat comparison of two small cycles by the closed-form table, without
    building permutations.
    """
    if b.kind == "T":
        return _t_leq(*a.outer, b.i, b.j)
    x, y, z = b.i, b.j, b.k
    if a.kind == "T":
        return _t_leq(a.i, a.j, x, y) or _t_leq(a.i, a.j, y, z)
    i, k = a.outer
    if _t_leq(i, k, x, y) or _t_leq(i, k, y, z):
        return True
    if a.kind != b.kind:
        return False
    return x <= i < a.j == y < k <= z


# --- general cycles -------------------------------------------------------------


class GeneralCycle(NamedTuple):
    """
    The cycle i1 -> i2 -> ... -> ik -> i1 on an increasing support (direction R)
    or its inverse (direction L).  Supports of size <= 2 are stored with R.
    """

    direction: str
    support: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.direction}({','.join(map(str, self.support))})"


def general_cycle(direction: str, support: Iterable[int]) -> GeneralCycle:
    supp = tuple(support)
    if direction not in ("R", "L"):
        raise ValueError(f"direction must be R or L, got {direction!r}")
    if not supp or any(a >= b for a, b in zip(supp, supp[1:])) or supp[0] < 1:
        raise ValueError(f"support must be a nonempty increasing subset of [n]: {supp}")
    if len(supp) == 1:
        # every singleton is the identity; keep one representative
        return GeneralCycle("R", (1,))
    if len(supp) == 2:
        direction = "R"
    return GeneralCycle(direction, supp)


def interval_cycle(direction: str, i: int, j: int) -> GeneralCycle:
    """R[i,j] (i -> i+1 -> ... -> j -> i) or L[i,j]."""
    return general_cycle(direction, range(i, j + 1))


def cycle_key(c: GeneralCycle) -> tuple:
    return (len(c.support), 0 if c.direction == "R" else 1, c.support)


def build_cycle(c: GeneralCycle, n: int) -> Perm:
    """
    >>> build_cycle(GeneralCycle("R", (1, 2, 3)), 3)
    (2, 3, 1)
    >>> build_cycle(GeneralCycle("L", (1, 2, 3)), 3)
    (3, 1, 2)
    """
    supp = c.support
    if supp[-1] > n:
        raise ValueError(f"support {supp} not inside [{n}]")
    p = list(range(1, n + 1))
    if c.direction == "R":
        for a, b in zip(supp, supp[1:] + supp[:1]):
            p[a - 1] = b
    else:
        for a, b in zip(supp, supp[1:] + supp[:1]):
            p[b - 1] = a
    return tuple(p)
