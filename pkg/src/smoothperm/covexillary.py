"""
The retraction from covexillary to smooth permutations and the single-step
ascent that realises it one inversion at a time.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple

from .admissible import pi
from .perm import Perm, all_perms, bruhat_leq, check_perm, inverse, right_mult_transposition
from .tables import is_covexillary, is_smooth, table_23, table_T


class NoUniqueMinimum(NamedTuple):
    """Returned by the oracle when the smooth elements above have several minima."""

    minimal: tuple[Perm, ...]


class AscentStep(NamedTuple):
    i: int
    j: int
    k: int
    l: int
    case: str  # "P0", "P1", "middle" or "fallback"; "inverse:" prefix when mirrored


def smooth_closure(t: Perm) -> Perm:
    """
    The least smooth permutation above a covexillary ``t``.

    >>> smooth_closure((4, 2, 3, 1))
    (4, 3, 2, 1)
    """
    t = check_perm(t)
    if not is_covexillary(t):
        raise ValueError(f"{t} is not covexillary")
    return pi(table_23(t), len(t))


def smooth_above(t: Perm) -> list[Perm]:
    return [s for s in all_perms(len(t)) if bruhat_leq(t, s) and is_smooth(s)]


def min_smooth_above_oracle(t: Perm) -> Perm | NoUniqueMinimum:
    """Brute force over S_n: the minimal smooth permutations above ``t``."""
    above = smooth_above(t)
    minimal = [
        s for s in above if not any(u != s and bruhat_leq(u, s) for u in above)
    ]
    if len(minimal) == 1:
        return minimal[0]
    return NoUniqueMinimum(tuple(minimal))


def quad_pairs(t: Perm, i: int, l: int) -> list[tuple[int, int]]:
    """P(i, l): pairs i < j < k < l with t(l) < t(j) < t(k) < t(i)."""
    lo, hi = t[l - 1], t[i - 1]
    return [
        (j, k)
        for j in range(i + 1, l)
        for k in range(j + 1, l)
        if lo < t[j - 1] < t[k - 1] < hi
    ]


def outer_pair(t: Perm) -> tuple[int, int] | None:
    """Minimal i, then maximal l, with P(i, l) nonempty."""
    n = len(t)
    for i in range(1, n + 1):
        for l in range(n, i, -1):
            if quad_pairs(t, i, l):
                return i, l
    return None


def _side_sets(t: Perm, i: int, l: int):
    n = len(t)
    ti = inverse(t)
    lo, hi = t[l - 1], t[i - 1]
    a0 = [a for a in range(1, i) if lo < t[a - 1] < hi]
    a1 = [a for a in range(l + 1, n + 1) if lo < t[a - 1] < hi]
    b0 = [b for b in range(1, lo) if i < ti[b - 1] < l]
    b1 = [b for b in range(hi + 1, n + 1) if i < ti[b - 1] < l]
    return a0, a1, b0, b1


def _choose(t: Perm, i: int, l: int) -> tuple[int, int, str]:
    """The case analysis, assuming the top side set B1 is empty."""
    P = quad_pairs(t, i, l)
    a0, a1, _, _ = _side_sets(t, i, l)
    top0 = max((t[a - 1] for a in a0), default=0)
    P0 = [(j, k) for j, k in P if t[j - 1] > top0]
    if P0:
        return (*min(P0), "P0")
    bottom1 = min((t[a - 1] for a in a1), default=len(t) + 1)
    P1 = [(j, k) for j, k in P if t[k - 1] < bottom1]
    if P1:
        j, k = max(P1, key=lambda p: (p[1], p[0]))
        return j, k, "P1"
    j = max(j for j, _ in P)
    k = min(k for jj, k in P if jj == j)
    return j, k, "middle"


def constructed_step(t: Perm) -> AscentStep:
    """
    The explicit choice of (j, k) for a covexillary, non-smooth ``t``.  When
    the values above t(i) that sit between positions i and l are nonempty the
    choice is made on the inverse and transported back.
    """
    t = check_perm(t)
    if not is_covexillary(t):
        raise ValueError(f"{t} is not covexillary")
    if is_smooth(t):
        raise ValueError(f"{t} is already smooth")
    i, l = outer_pair(t)
    _, _, _, b1 = _side_sets(t, i, l)
    if not b1:
        j, k, case = _choose(t, i, l)
        return AscentStep(i, j, k, l, case)
    u = inverse(t)
    # positions t(l) < t(j) < t(k) < t(i) of the inverse carry the same pattern
    a, b, case = _choose(u, t[l - 1], t[i - 1])
    j, k = sorted((u[a - 1], u[b - 1]))
    return AscentStep(i, j, k, l, "inverse:" + case)


def fallback_steps(t: Perm) -> Iterator[tuple[int, int]]:
    """Every (j, k) in P(i, l) of the outer pair whose swap stays covexillary."""
    pair = outer_pair(t)
    if pair is None:
        return
    for j, k in quad_pairs(t, *pair):
        if is_covexillary(right_mult_transposition(t, j, k)):
            yield j, k


def covex_ascent_step(t: Perm) -> tuple[int, int]:
    """
    (j, k) such that t T(j,k) is covexillary with the same 2-3 table.

    >>> covex_ascent_step((4, 2, 3, 1))
    (2, 3)
    """
    step = constructed_step(t)
    if is_covexillary(right_mult_transposition(t, step.j, step.k)):
        return step.j, step.k
    for jk in fallback_steps(t):
        return jk
    raise AssertionError(f"no covexillary ascent found for {t}")


def ascent_chain(t: Perm) -> list[Perm]:
    """t, then repeated ascent steps until a smooth permutation is reached."""
    chain = [check_perm(t)]
    while not is_smooth(chain[-1]):
        j, k = covex_ascent_step(chain[-1])
        chain.append(right_mult_transposition(chain[-1], j, k))
    return chain


def smooth_with_transposition_table(t: Perm) -> list[Perm]:
    """Smooth permutations whose transposition table equals that of ``t``."""
    target = table_T(t)
    return [s for s in all_perms(len(t)) if is_smooth(s) and table_T(s) == target]


__all__ = [
    "AscentStep",
    "NoUniqueMinimum",
    "ascent_chain",
    "constructed_step",
    "covex_ascent_step",
    "fallback_steps",
    "min_smooth_above_oracle",
    "outer_pair",
    "quad_pairs",
    "smooth_above",
    "smooth_closure",
    "smooth_with_transposition_table",
]
