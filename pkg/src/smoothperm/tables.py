"""
Tables of a permutation: the transpositions below it, the transpositions and
3-cycles below it, and the general cycles below it.  Also the three classes
smooth, covexillary and defined-by-inclusions.
"""
from __future__ import annotations

import itertools
from typing import Iterable

from .perm import (
    Elem,
    GeneralCycle,
    Perm,
    all_elems,
    all_perms,
    avoids,
    bruhat_leq,
    build_cycle,
    cycle_key,
    elem_key,
    elem_to_perm,
    general_cycle,
    interval_cycle,
    inverse,
    length,
    max_function,
)

SMOOTH_PATTERNS = ((4, 2, 3, 1), (3, 4, 1, 2))
DBI_PATTERNS = ((4, 2, 3, 1), (3, 5, 1, 4, 2), (4, 2, 5, 1, 3), (3, 5, 1, 6, 2, 4))
# above this size is_smooth trusts the patterns alone
SELF_CHECK_MAX_N = 8


def sorted_elems(elems: Iterable[Elem]) -> list[Elem]:
    return sorted(elems, key=elem_key)


def t_part(elems: Iterable[Elem]) -> frozenset[Elem]:
    return frozenset(x for x in elems if x.kind == "T")


def elem_below(x: Elem, m: Perm, m_inv: Perm) -> bool:
    """x <= s given m = max_function(s) and m_inv = max_function(s^-1)."""
    i, j, k = x.i - 1, x.j - 1, x.k
    if x.kind == "T":
        return m[i] > j and m_inv[i] > j
    if x.kind == "R":
        return m[i] > j and m[j] >= k and m_inv[i] >= k
    return m_inv[i] > j and m_inv[j] >= k and m[i] >= k


def table_T(s: Perm) -> frozenset[Elem]:
    """
    The transpositions below ``s``.

    >>> sorted(map(str, table_T((2, 3, 1))))
    ['T(1,2)', 'T(2,3)']
    """
    m, mi = max_function(s), max_function(inverse(s))
    n = len(s)
    return frozenset(
        Elem("T", i, j)
        for i in range(1, n)
        for j in range(i + 1, min(m[i - 1], mi[i - 1]) + 1)
    )


def table_23(s: Perm) -> frozenset[Elem]:
    """All transpositions and 3-cycles below ``s``, by the maximal-function tests."""
    m, mi = max_function(s), max_function(inverse(s))
    return frozenset(x for x in all_elems(len(s)) if elem_below(x, m, mi))


def table_23_brute(s: Perm) -> frozenset[Elem]:
    """Same as :func:`table_23` but by a Bruhat comparison for every element."""
    n = len(s)
    return frozenset(x for x in all_elems(n) if bruhat_leq(elem_to_perm(x, n), s))


def all_cycles(n: int) -> list[GeneralCycle]:
    """Every cycle with increasing support, including one copy of the identity."""
    out = [general_cycle("R", (1,))]
    for size in range(2, n + 1):
        for supp in itertools.combinations(range(1, n + 1), size):
            out.append(GeneralCycle("R", supp))
            if size > 2:
                out.append(GeneralCycle("L", supp))
    return sorted(out, key=cycle_key)


def special_cycles(n: int) -> list[GeneralCycle]:
    """The interval cycles R[i,j] and L[i,j]; there are (n-1)^2 of them."""
    out = {
        interval_cycle(d, i, j)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        for d in ("R", "L")
    }
    return sorted(out, key=cycle_key)


def cycle_below(c: GeneralCycle, m: Perm, m_inv: Perm) -> bool:
    supp = c.support
    if len(supp) == 1:
        return True
    first, second = (m, m_inv) if c.direction == "R" else (m_inv, m)
    return all(first[a - 1] >= b for a, b in zip(supp, supp[1:])) and (
        second[supp[0] - 1] >= supp[-1]
    )


def table_D(s: Perm, special_only: bool = False) -> frozenset[GeneralCycle]:
    """
    The cycles below ``s``.  The full table contains the identity; the special
    table holds only interval cycles, so it never does.
    """
    n = len(s)
    m, mi = max_function(s), max_function(inverse(s))
    pool = special_cycles(n) if special_only else all_cycles(n)
    return frozenset(c for c in pool if cycle_below(c, m, mi))


def table_D_brute(s: Perm, special_only: bool = False) -> frozenset[GeneralCycle]:
    n = len(s)
    pool = special_cycles(n) if special_only else all_cycles(n)
    return frozenset(c for c in pool if bruhat_leq(build_cycle(c, n), s))


def is_smooth_by_patterns(s: Perm) -> bool:
    return avoids(s, *SMOOTH_PATTERNS)


def is_smooth_by_length(s: Perm) -> bool:
    return length(s) == len(table_T(s))


def is_smooth(s: Perm) -> bool:
    """
    Smooth means the length equals the number of transpositions below.  For
    small n this is checked against 4231/3412 avoidance as well.

    >>> [is_smooth(p) for p in [(2, 3, 1), (3, 4, 1, 2), (3, 6, 5, 2, 1, 4)]]
    [True, False, True]
    """
    by_len = is_smooth_by_length(s)
    if len(s) <= SELF_CHECK_MAX_N:
        by_pat = is_smooth_by_patterns(s)
        if by_pat != by_len:
            raise AssertionError(f"smoothness tests disagree on {s}")
    return by_len


def is_covexillary(s: Perm) -> bool:
    return avoids(s, (3, 4, 1, 2))


def is_defined_by_inclusions(s: Perm) -> bool:
    return avoids(s, *DBI_PATTERNS)


def is_defined_by_inclusions_brute(s: Perm) -> bool:
    """
    For every t: t <= s iff the special cycle table of t sits inside that of s.
    Exhaustive over S_n.
    """
    mine = table_D(s, special_only=True)
    return all(
        bruhat_leq(t, s) == (table_D(t, special_only=True) <= mine)
        for t in all_perms(len(s))
    )


def reconstruct_D_from_C(s: Perm) -> frozenset[GeneralCycle]:
    """
    Rebuild the full cycle table of a covexillary permutation from its 2-3 table,
    growing the support one point at a time.
    """
    if not is_covexillary(s):
        raise ValueError(f"{s} is not covexillary")
    n = len(s)
    c = table_23(s)
    ts = t_part(c)
    below: dict[tuple[str, tuple[int, ...]], bool] = {}
    for x in c:
        if x.kind != "T":
            below[(x.kind, x.indices)] = True

    def has(d: str, supp: tuple[int, ...]) -> bool:
        if len(supp) == 2:
            return Elem("T", *supp) in ts
        return below.get((d, supp), False)

    for size in range(4, n + 1):
        for supp in itertools.combinations(range(1, n + 1), size):
            first, second, last = supp[0], supp[1], supp[-1]
            blocked = (
                Elem("T", first, supp[-2]) not in ts
                and Elem("T", second, last) not in ts
            )
            for d in ("R", "L"):
                if (
                    has(d, (first, supp[-2], last))
                    or has(d, (first, second, last))
                    or (blocked and has(d, supp[:-1]) and has(d, supp[1:]))
                ):
                    below[(d, supp)] = True

    out = {general_cycle("R", (1,))}
    out |= {GeneralCycle("R", x.indices) for x in ts}
    out |= {GeneralCycle(d, supp) for d, supp in below}
    return frozenset(out)


def sorted_cycles(cycles: Iterable[GeneralCycle]) -> list[GeneralCycle]:
    return sorted(cycles, key=cycle_key)
