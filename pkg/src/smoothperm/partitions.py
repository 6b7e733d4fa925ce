"""
Set partitions of [n], the block subgroups S_X, the blockwise Bruhat order, and
the maximum of S_X below a permutation.

A partition is a tuple of blocks, each block a sorted tuple, blocks ordered by
their least element.  For a non-smooth permutation a partition with no maximum
can be produced constructively.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Sequence

from .admissible import bruhat_maximum, pi
from .dyck import word_to_perm
from .perm import (
    Elem,
    GeneralCycle,
    Perm,
    all_perms,
    bruhat_leq,
    build_cycle,
    compose,
    inverse,
    length,
    max_function,
    pattern_of,
    right_mult_transposition,
)
from .tables import is_defined_by_inclusions, is_smooth, table_23

Block = tuple[int, ...]
Partition = tuple[Block, ...]

DBI_WITNESS_PATTERNS = {
    (4, 2, 3, 1): (1, 4),
    (3, 5, 1, 4, 2): (0, 4),
    (4, 2, 5, 1, 3): (1, 5),
    (3, 5, 1, 6, 2, 4): (0, 5),
}


def normalize_partition(blocks: Iterable[Iterable[int]], n: int | None = None) -> Partition:
    out = tuple(sorted(tuple(sorted(b)) for b in blocks))
    flat = sorted(x for b in out for x in b)
    size = n if n is not None else len(flat)
    if any(not b for b in out) or flat != list(range(1, size + 1)):
        raise ValueError(f"not a set partition of [{size}]: {out}")
    return out


def set_partitions(n: int) -> Iterator[Partition]:
    """All set partitions of [n] in restricted-growth-string order."""

    def grow(rgs: list[int], top: int) -> Iterator[Partition]:
        if len(rgs) == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for x, b in enumerate(rgs, 1):
                blocks[b].append(x)
            yield tuple(map(tuple, blocks))
            return
        for b in range(top + 2):
            rgs.append(b)
            yield from grow(rgs, max(top, b))
            rgs.pop()

    if n == 0:
        yield ()
        return
    yield from grow([0], 0)


def singletons(n: int) -> Partition:
    return tuple((i,) for i in range(1, n + 1))


def embed(X: Sequence[int], t: Perm, n: int) -> Perm:
    """Act by ``t`` on the block X through its order isomorphism; fix the rest."""
    if len(X) != len(t):
        raise ValueError(f"block of size {len(X)} cannot carry a permutation of size {len(t)}")
    p = list(range(1, n + 1))
    for a, b in zip(X, t):
        p[a - 1] = X[b - 1]
    return tuple(p)


def in_block_group(t: Perm, P: Partition) -> bool:
    return all(t[x - 1] in b for b in P for x in b)


def component(t: Perm, X: Sequence[int]) -> Perm:
    """The permutation of [#X] that ``t`` induces on the invariant block X."""
    return pattern_of([t[x - 1] for x in X])


def restrict_to_block(t: Perm, X: Sequence[int]) -> Perm:
    """t on X, identity elsewhere."""
    p = list(range(1, len(t) + 1))
    for x in X:
        p[x - 1] = t[x - 1]
    return tuple(p)


def assemble(parts: Sequence[Perm], P: Partition, n: int) -> Perm:
    out = list(range(1, n + 1))
    for X, t in zip(P, parts):
        for a, b in zip(X, t):
            out[a - 1] = X[b - 1]
    return tuple(out)


def product_leq(t1: Perm, t2: Perm, P: Partition) -> bool:
    """Blockwise Bruhat comparison of two members of S_X."""
    if not (in_block_group(t1, P) and in_block_group(t2, P)):
        raise ValueError("both permutations must preserve every block")
    return all(bruhat_leq(component(t1, X), component(t2, X)) for X in P)


def restrict_admissible(A: Iterable[Elem], X: Sequence[int]) -> frozenset[Elem]:
    """The elements of the small set on [#X] whose images under the block embedding lie in A."""
    A = frozenset(A)
    pos = {x: r for r, x in enumerate(X, 1)}
    out = set()
    for y in A:
        if all(v in pos for v in y.indices):
            out.add(y._replace(i=pos[y.i], j=pos[y.j], k=pos[y.k] if y.k else 0))
    return frozenset(out)


def sigma_bracket(s: Perm, X: Sequence[int]) -> Perm:
    """Largest t in S_#X whose embedding on X lies below the smooth ``s``."""
    if not is_smooth(s):
        raise ValueError(f"{s} is not smooth")
    return pi(restrict_admissible(table_23(s), X), len(X))


def block_maximum_brute(s: Perm, X: Sequence[int]) -> Perm | None:
    n = len(s)
    below = [t for t in all_perms(len(X)) if bruhat_leq(embed(X, t, n), s)]
    return bruhat_maximum(below)


def partition_max(s: Perm, P: Partition) -> Perm | None:
    """
    The maximum of S_X below ``s`` for the blockwise order, or None.

    Below ``s`` the block group is a down-set of the product order, and its
    projection to a block X is {t : embed(X, t) <= s}.  So a maximum exists iff
    each block has a Bruhat maximum and the assembled permutation is below s.
    """
    n = len(s)
    P = normalize_partition(P, n)
    if is_smooth(s):
        top = assemble([sigma_bracket(s, X) for X in P], P, n)
        if not bruhat_leq(top, s):
            raise AssertionError(f"assembled block maxima not below {s}")
        return top
    parts = []
    for X in P:
        m = block_maximum_brute(s, X)
        if m is None:
            return None
        parts.append(m)
    top = assemble(parts, P, n)
    return top if bruhat_leq(top, s) else None


def block_group_below(s: Perm, P: Partition) -> list[Perm]:
    """Every member of S_X that lies below ``s``, by full enumeration."""
    n = len(s)
    return [
        t
        for t in (
            assemble(parts, P, n)
            for parts in itertools.product(*(list(all_perms(len(X))) for X in P))
        )
        if bruhat_leq(t, s)
    ]


def partition_max_brute(s: Perm, P: Partition) -> Perm | None:
    """Exhaustive maximum: the unique longest member, if it dominates everything."""
    P = normalize_partition(P, len(s))
    Q = block_group_below(s, P)
    top_len = max(map(length, Q))
    tops = [t for t in Q if length(t) == top_len]
    if len(tops) != 1:
        return None
    top = tops[0]
    return top if all(product_leq(t, top, P) for t in Q) else None


def maximal_elements(s: Perm, P: Partition) -> list[Perm]:
    """The blockwise-maximal members of S_X below ``s``, sorted."""
    P = normalize_partition(P, len(s))
    Q = block_group_below(s, P)
    return sorted(
        t
        for t in Q
        if not any(u != t and product_leq(t, u, P) for u in Q)
    )


# --- witnesses of non-smoothness -------------------------------------------------


def _cycle_of(t: Perm, start: int) -> frozenset[int]:
    seen = {start}
    x = t[start - 1]
    while x != start:
        seen.add(x)
        x = t[x - 1]
    return frozenset(seen)


def find_dbi_occurrence(s: Perm) -> tuple[tuple[int, ...], int, int] | None:
    """
    Positions of an occurrence of one of 4231, 35142, 42513, 351624, returned
    as (positions, s_index, t_index) with positions[0] labelled s_index.
    """
    for pattern, (lo, hi) in DBI_WITNESS_PATTERNS.items():
        k = len(pattern)
        for pos in itertools.combinations(range(1, len(s) + 1), k):
            if pattern_of([s[p - 1] for p in pos]) == pattern:
                return pos, lo, hi
    return None


def dbi_witness(s: Perm) -> tuple[Partition, Perm]:
    """
    For ``s`` not defined by inclusions: a two-class partition and a t in its
    block group with t not below s but every t_X below s.
    """
    found = find_dbi_occurrence(s)
    if found is None:
        raise ValueError(f"{s} is defined by inclusions")
    pos, lo, hi = found
    a = dict(zip(range(lo, hi + 1), pos))
    b = dict(zip(range(lo, hi + 1), sorted(s[p - 1] for p in pos)))
    t = list(s)
    for src, dst in ((1, 3), (2, 4), (3, 1), (4, 2)):
        t[a[src] - 1] = b[dst]
    for extra in {lo, hi} - {1, 4}:
        t[a[extra] - 1] = b[extra]
    tau = tuple(t)
    for x, y in ((1, 2), (3, 4)):
        if a[y] in _cycle_of(tau, a[x]):
            tau = right_mult_transposition(tau, a[x], a[y])
    # two-colour the cycles so that a1, a2 and a3, a4 are separated
    cycles = {}
    for x in range(1, len(s) + 1):
        if x not in cycles:
            c = _cycle_of(tau, x)
            for y in c:
                cycles[y] = c
    colour: dict[frozenset[int], int] = {}
    edges = [(cycles[a[1]], cycles[a[2]]), (cycles[a[3]], cycles[a[4]])]
    for c1, c2 in edges:
        if c1 in colour and c2 in colour:
            if colour[c1] == colour[c2]:
                raise AssertionError("cycle colouring failed")
        elif c1 in colour:
            colour[c2] = 1 - colour[c1]
        elif c2 in colour:
            colour[c1] = 1 - colour[c2]
        else:
            colour[c1], colour[c2] = 0, 1
    classes: list[list[int]] = [[], []]
    for x in range(1, len(s) + 1):
        classes[colour.get(cycles[x], 0)].append(x)
    return normalize_partition([c for c in classes if c], len(s)), tau


def shift_index(s: Perm) -> int | None:
    """
    Least i with M_s(M_s^-1(i)) > M_s(i) > i and M_s^-1(M_s(i)) > M_s^-1(i) > i.
    """
    m, mi = max_function(s), max_function(inverse(s))
    for i in range(1, len(s) + 1):
        j, k = m[i - 1], mi[i - 1]
        if m[k - 1] > j > i and mi[j - 1] > k > i:
            return i
    return None


def shift_witness(s: Perm) -> Partition:
    """One block {i, min(j,k), ..., max(j,k)+1}, singletons elsewhere."""
    i = shift_index(s)
    if i is None:
        raise ValueError(f"no shift index for {s}")
    j = max_function(s)[i - 1]
    k = max_function(inverse(s))[i - 1]
    lo, hi = min(j, k), max(j, k)
    A = (i, *range(lo, hi + 2))
    return normalize_partition([A] + [(r,) for r in range(1, len(s) + 1) if r not in A])


def witness_partition(s: Perm) -> Partition:
    """A partition for which ``partition_max`` finds no maximum (``s`` not smooth)."""
    if is_smooth(s):
        raise ValueError(f"{s} is smooth; every partition has a maximum")
    if is_defined_by_inclusions(s):
        return shift_witness(s)
    return dbi_witness(s)[0]


# --- the right cyclic shift ------------------------------------------------------


class ShiftFacts(NamedTuple):
    r: int
    interval_size: int
    boolean: bool
    maximal_below: list[Perm]
    maximal_match: bool
    above_iff_last_is_one: bool
    four_conditions_agree: bool


def right_shift(r: int) -> Perm:
    return build_cycle(GeneralCycle("R", tuple(range(1, r + 1))), r)


def cyclic_shift_interval_facts(r: int) -> ShiftFacts:
    """Enumerate S_r to check the structure of the interval below the right shift."""
    if r < 2:
        raise ValueError("r must be at least 2")
    s = right_shift(r)
    interval = [t for t in all_perms(r) if bruhat_leq(t, s)]
    # subwords of s_1 s_2 ... s_{r-1} in order, keyed by the subset used
    subsets = {
        sub: word_to_perm(sub, r)
        for size in range(r)
        for sub in itertools.combinations(range(1, r), size)
    }
    boolean = sorted(subsets.values()) == sorted(interval) and all(
        (set(a) <= set(b)) == bruhat_leq(subsets[a], subsets[b])
        for a in subsets
        for b in subsets
    )
    strictly_below = [t for t in interval if t != s]
    maximal = sorted(
        t for t in strictly_below if not any(t != u and bruhat_leq(t, u) for u in strictly_below)
    )
    expected = sorted(right_mult_transposition(s, i, r) for i in range(1, r))
    above = all(bruhat_leq(s, t) == (t[r - 1] == 1) for t in all_perms(r))
    s2 = compose(s, s)
    agree = True
    for t in all_perms(r):
        c1 = all(bruhat_leq(u, t) for u in strictly_below)
        c2 = bruhat_leq(right_mult_transposition(s, 1, r), t) and bruhat_leq(
            right_mult_transposition(s, r - 1, r), t
        )
        c3 = t[r - 1] == 1 or (r >= 2 and t[r - 1] == 2 and t[r - 2] == 1)
        c4 = bruhat_leq(s, t) or bruhat_leq(s2, t)
        if not c1 == c2 == c3 == c4:
            agree = False
            break
    return ShiftFacts(r, len(interval), boolean, maximal, maximal == expected, above, agree)


def format_partition(P: Partition) -> str:
    return "|".join(",".join(map(str, b)) for b in P)


__all__ = [
    "Partition",
    "ShiftFacts",
    "assemble",
    "block_group_below",
    "block_maximum_brute",
    "component",
    "cyclic_shift_interval_facts",
    "dbi_witness",
    "embed",
    "find_dbi_occurrence",
    "format_partition",
    "in_block_group",
    "maximal_elements",
    "normalize_partition",
    "partition_max",
    "partition_max_brute",
    "product_leq",
    "restrict_admissible",
    "restrict_to_block",
    "right_shift",
    "set_partitions",
    "shift_index",
    "shift_witness",
    "sigma_bracket",
    "singletons",
    "witness_partition",
]
