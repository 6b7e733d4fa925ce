"""
Essential sets, their inclusion-defined core, and the grid-set description of
smooth permutations.

Grid sets are ``frozenset`` of 1-based pairs (i, j) in [n-1]^2.  As with
admissible sets the size n is carried separately.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .dyck import DecoratedPath, make_path, sigma_from_path
from .perm import Elem, Perm, all_elems, inverse, rank_table

Point = tuple[int, int]


def essential_set(s: Perm) -> frozenset[Point]:
    """
    Points (i, j) with s(i) <= j < s(i+1) and s^-1(j) <= i < s^-1(j+1).

    >>> sorted(essential_set((2, 3, 1)))
    [(1, 2)]
    """
    n = len(s)
    si = inverse(s)
    return frozenset(
        (i, j)
        for i in range(1, n)
        for j in range(s[i - 1], s[i])
        if si[j - 1] <= i < si[j]
    )


def coessential_core(s: Perm) -> frozenset[Point]:
    """Points of the essential set where s([i]) lies in [j] or s^-1([j]) lies in [i]."""
    n = len(s)
    ranks = rank_table(s)
    # #(s([i]) & [j]) = min(i, j) says exactly that one prefix set contains the other
    return frozenset(
        (i, j) for i, j in essential_set(s) if ranks[(i - 1) * n + (j - 1)] == min(i, j)
    )


def bruhat_leq_via_essential(t: Perm, s: Perm) -> bool:
    """Rank comparison restricted to the essential set of ``s``."""
    return bruhat_leq_on(t, s, essential_set(s))


def bruhat_leq_on(t: Perm, s: Perm, points: Iterable[Point]) -> bool:
    n = len(s)
    if len(t) != n:
        raise ValueError(f"size mismatch: {len(t)} != {n}")
    rt, rs = rank_table(t), rank_table(s)
    return all(rt[(i - 1) * n + j - 1] >= rs[(i - 1) * n + j - 1] for i, j in points)


def _ordered_ok(lo: Point, hi: Point) -> bool:
    """The membership condition for a pair with min(hi) >= min(lo)."""
    return (
        hi[0] >= lo[0]
        and hi[1] >= lo[1]
        and max(hi) > max(lo)
        and min(hi) > min(lo)
    )


def compatible_points(p: Point, q: Point) -> bool:
    if min(q) >= min(p) and not _ordered_ok(p, q):
        return False
    if min(p) >= min(q) and not _ordered_ok(q, p):
        return False
    return True


def in_frakE(E: Iterable[Point]) -> bool:
    """
    >>> in_frakE({(1, 1), (2, 2)}), in_frakE({(1, 2), (2, 1)})
    (True, False)
    """
    pts = sorted(set(E))
    return all(
        compatible_points(pts[a], pts[b])
        for a in range(len(pts))
        for b in range(a + 1, len(pts))
    )


def all_grid_sets(n: int) -> Iterator[frozenset[Point]]:
    """Every member of the grid class in [n-1]^2, by pairwise-pruned backtracking."""
    points = [(i, j) for i in range(1, n) for j in range(1, n)]
    chosen: list[Point] = []

    def grow(start: int) -> Iterator[frozenset[Point]]:
        yield frozenset(chosen)
        for idx in range(start, len(points)):
            p = points[idx]
            if all(compatible_points(p, q) for q in chosen):
                chosen.append(p)
                yield from grow(idx + 1)
                chosen.pop()

    return grow(0)


def grid_from_path(p: DecoratedPath) -> frozenset[Point]:
    f, g = p.f, p.g
    out = set()
    for i in range(1, p.n):
        if f[i] > f[i - 1]:
            out.add((i, f[i - 1]) if g[i - 1] else (f[i - 1], i))
    return frozenset(out)


def in_delta(point: Point, n: int) -> bool:
    """Strictly above the diagonal with second coordinate below n."""
    i, j = point
    return 1 <= i and i < j and j < n


def hat_f(E: Iterable[Point], n: int) -> tuple[int, ...]:
    E = list(E)
    return tuple(
        min([n] + [max(i, j) for i, j in E if i >= k and j >= k]) for k in range(1, n + 1)
    )


def path_from_grid(E: Iterable[Point], n: int) -> DecoratedPath:
    E = frozenset(E)
    if not in_frakE(E):
        raise ValueError(f"grid set is not in the smooth class: {sorted(E)}")
    if any(not (1 <= i < n and 1 <= j < n) for i, j in E):
        raise ValueError(f"grid set leaves [{n - 1}]^2: {sorted(E)}")
    f = hat_f(E, n)
    g = []
    for i in range(1, n + 1):
        j = max(k for k in range(1, n + 1) if f[k - 1] == f[i - 1])
        point = (j, f[j - 1])
        g.append(int(point in E and in_delta(point, n)))
    return make_path(f, g)


def admissible_from_grid(E: Iterable[Point], n: int) -> frozenset[Elem]:
    E = frozenset(E)

    def empty(rows: range, cols: range) -> bool:
        return not any(i in rows and j in cols for i, j in E)

    out = set()
    for x in all_elems(n):
        i, j, k = x.i, x.j, x.k
        if x.kind == "T":
            keep = empty(range(i, j), range(i, j))
        elif x.kind == "R":
            keep = empty(range(i, j), range(i, j)) and empty(range(j, k), range(i, k))
        else:
            keep = empty(range(i, j), range(i, k)) and empty(range(j, k), range(j, k))
        if keep:
            out.add(x)
    return frozenset(out)


def sigma_from_grid(E: Iterable[Point], n: int) -> Perm:
    return sigma_from_path(path_from_grid(E, n))[0]


def render_grid(E: Iterable[Point], n: int) -> str:
    """(n-1) x (n-1) dot matrix, row i left to right over j, 'o' for members."""
    E = frozenset(E)
    return "\n".join(
        " ".join("o" if (i, j) in E else "." for j in range(1, n)) for i in range(1, n)
    )


__all__ = [
    "admissible_from_grid",
    "all_grid_sets",
    "bruhat_leq_on",
    "bruhat_leq_via_essential",
    "coessential_core",
    "compatible_points",
    "essential_set",
    "grid_from_path",
    "hat_f",
    "in_delta",
    "in_frakE",
    "path_from_grid",
    "render_grid",
    "sigma_from_grid",
]
