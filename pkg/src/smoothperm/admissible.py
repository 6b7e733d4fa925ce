"""
Admissible sets of transpositions and 3-cycles, wedges, derived sets,
compatible orders and the reconstruction map ``pi``.

Sets are plain ``frozenset[Elem]``; functions that need the ambient size take
``n`` explicitly because a set does not determine it.
"""
from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

from .perm import (
    Elem,
    Perm,
    all_elems,
    all_perms,
    bruhat_leq,
    elem_inverse,
    elem_key,
    elem_to_perm,
    elem_upend,
    product,
)
from .tables import sorted_elems, t_part, table_23, table_T


class NotAdmissibleError(ValueError):
    pass


class Wedge(NamedTuple):
    side: str  # "direct" or "inverse"
    elem: Elem

    def __str__(self) -> str:
        return f"{self.side} {self.elem}"


def full_set(n: int) -> frozenset[Elem]:
    return frozenset(all_elems(n))


def as_set(elems: Iterable[Elem]) -> frozenset[Elem]:
    return frozenset(elems)


def ambient_size(elems: Iterable[Elem]) -> int:
    """Smallest n the elements live in (1 for the empty set)."""
    return max((max(x.indices) for x in elems), default=1)


def lower_generators(x: Elem) -> list[Elem]:
    """
    A set of elements below ``x`` whose down-closures cover everything below
    ``x``.  Checking these for every member is enough for downward closure.
    """
    i, j, k = x.i, x.j, x.k
    if x.kind == "T":
        out = [Elem("R", i, m, j) for m in range(i + 1, j)]
        out += [Elem("L", i, m, j) for m in range(i + 1, j)]
        if j > i + 1:
            out += [Elem("T", i, j - 1), Elem("T", i + 1, j)]
        return out
    out = [Elem("T", i, j), Elem("T", j, k)]
    if i + 1 < j:
        out.append(Elem(x.kind, i + 1, j, k))
    if k - 1 > j:
        out.append(Elem(x.kind, i, j, k - 1))
    return out


def is_downward_closed(A: frozenset[Elem]) -> bool:
    return all(y in A for x in A for y in lower_generators(x))


def admissibility_violation(A: frozenset[Elem]) -> str | None:
    """A short description of the first failed condition, or None."""
    for x in sorted_elems(A):
        for y in lower_generators(x):
            if y not in A:
                return f"not downward closed: {x} in set but {y} is not"
    ts = sorted(t_part(A), key=elem_key)
    by_first: dict[int, list[int]] = {}
    for t in ts:
        by_first.setdefault(t.i, []).append(t.j)
    for t in ts:
        for k in by_first.get(t.j, []):
            if Elem("R", t.i, t.j, k) not in A and Elem("L", t.i, t.j, k) not in A:
                return f"T({t.i},{t.j}), T({t.j},{k}) in set but neither 3-cycle is"
    threes = [x for x in A if x.kind == "R"]
    for r in threes:
        if Elem("T", r.i, r.k) in A:
            continue
        for m in range(r.i + 1, r.k):
            if Elem("L", r.i, m, r.k) in A:
                return f"{r} and L({r.i},{m},{r.k}) in set but T({r.i},{r.k}) is not"
    return None


def is_admissible(A: Iterable[Elem]) -> bool:
    """
    >>> is_admissible(set())
    True
    >>> is_admissible(table_23((3, 4, 1, 2)))
    False
    """
    return admissibility_violation(frozenset(A)) is None


def require_admissible(A: Iterable[Elem]) -> frozenset[Elem]:
    A = frozenset(A)
    why = admissibility_violation(A)
    if why is not None:
        raise NotAdmissibleError(why)
    return A


def invert_set(A: Iterable[Elem]) -> frozenset[Elem]:
    return frozenset(map(elem_inverse, A))


def upend_set(A: Iterable[Elem], n: int) -> frozenset[Elem]:
    return frozenset(elem_upend(x, n) for x in A)


# --- wedges and derived sets -----------------------------------------------------


def is_wedge(A: frozenset[Elem], t: Elem, n: int) -> bool:
    i, j = t.i, t.j
    return (
        t in A
        and (i == 1 or Elem("T", i - 1, i) not in A)
        and (j == n or Elem("R", i, j, j + 1) not in A)
    )


def wedge_candidate(A: frozenset[Elem]) -> Elem | None:
    """The transposition in A with the smallest first index, then largest second."""
    ts = t_part(A)
    if not ts:
        return None
    i = min(t.i for t in ts)
    return Elem("T", i, max(t.j for t in ts if t.i == i))


def find_wedge(A: frozenset[Elem], n: int) -> Wedge | None:
    """
    A wedge for A (side "direct") or for its inverse (side "inverse"), chosen
    as the transposition with minimal i and then maximal j.  None for the empty
    set.
    """
    t = wedge_candidate(A)
    if t is None:
        return None
    if is_wedge(A, t, n):
        return Wedge("direct", t)
    if is_wedge(invert_set(A), t, n):
        return Wedge("inverse", t)
    raise NotAdmissibleError(f"no wedge at {t}; set is not admissible")


def _require_wedge(A: frozenset[Elem], w: Elem, n: int) -> None:
    if w.kind != "T" or not is_wedge(A, w, n):
        raise ValueError(f"{w} is not a wedge for the given set")


def derived_set(A: frozenset[Elem], w: Elem, n: int) -> frozenset[Elem]:
    _require_wedge(A, w, n)
    i, j = w.i, w.j
    return frozenset(
        x
        for x in A
        if not (
            x == w
            or (x.kind == "L" and x.i == i and x.j == j)
            or (x.kind == "R" and x.i == i and x.k == j)
        )
    )


def iterated_derived_set(A: frozenset[Elem], w: Elem, n: int) -> frozenset[Elem]:
    """Everything moving ``i`` is dropped, where ``w = T(i, j)``."""
    _require_wedge(A, w, n)
    return frozenset(x for x in A if x.i != w.i)


def iterated_derived_set_stepwise(A: frozenset[Elem], w: Elem, n: int) -> frozenset[Elem]:
    for j in range(w.j, w.i, -1):
        A = derived_set(A, Elem("T", w.i, j), n)
    return A


# --- compatible orders -----------------------------------------------------------


def wedge_column(w: Elem) -> list[Elem]:
    """T(i,j), T(i,j-1), ..., T(i,i+1)."""
    return [Elem("T", w.i, m) for m in range(w.j, w.i, -1)]


def wedge_trace(A: Iterable[Elem], n: int) -> list[tuple[Wedge, frozenset[Elem]]]:
    """
    The sequence of wedges used to peel A down to the empty set, each paired
    with the set it was found in (before any inversion).
    """
    B = require_admissible(A)
    out = []
    while B:
        w = find_wedge(B, n)
        out.append((w, B))
        if w.side == "direct":
            B = iterated_derived_set(B, w.elem, n)
        else:
            B = invert_set(iterated_derived_set(invert_set(B), w.elem, n))
    return out


def compatible_order(A: Iterable[Elem], n: int) -> list[Elem]:
    """
    A compatible order on the transpositions of A.  A direct wedge puts its
    column at the end; an inverse wedge puts the reversed column at the front.
    """
    prefix: list[Elem] = []
    suffix: deque[Elem] = deque()
    for w, _ in wedge_trace(A, n):
        col = wedge_column(w.elem)
        if w.side == "direct":
            suffix.extendleft(reversed(col))
        else:
            prefix.extend(reversed(col))
    return prefix + list(suffix)


def _order_constraints(A: frozenset[Elem]):
    """(must_precede pairs, betweenness triples) for the transpositions of A."""
    ts = t_part(A)
    before: list[tuple[Elem, Elem]] = []
    between: list[tuple[Elem, Elem, Elem]] = []
    for a in ts:
        for b in ts:
            if a.j != b.i:
                continue
            i, j, k = a.i, a.j, b.j
            r, l_ = Elem("R", i, j, k) in A, Elem("L", i, j, k) in A
            if Elem("T", i, k) in A:
                between.append((a, Elem("T", i, k), b))
            elif r and not l_:
                before.append((a, b))
            elif l_ and not r:
                before.append((b, a))
    return before, between


def is_compatible_order(A: Iterable[Elem], order: Sequence[Elem]) -> bool:
    A = frozenset(A)
    if len(order) != len(set(order)) or set(order) != t_part(A):
        return False
    pos = {t: p for p, t in enumerate(order)}
    before, between = _order_constraints(A)
    if any(pos[a] > pos[b] for a, b in before):
        return False
    return all(
        pos[a] < pos[m] < pos[b] or pos[a] > pos[m] > pos[b] for a, m, b in between
    )


def enumerate_compatible_orders(A: Iterable[Elem]) -> list[list[Elem]]:
    """
    Every compatible order, found by backtracking with the conditions checked
    as soon as the relevant transpositions are placed.  Output is
    lexicographic in the canonical element order.
    """
    A = frozenset(A)
    ts = sorted(t_part(A), key=elem_key)
    before, between = _order_constraints(A)
    preds: dict[Elem, list[Elem]] = {t: [] for t in ts}
    for a, b in before:
        preds[b].append(a)
    as_middle: dict[Elem, list[tuple[Elem, Elem]]] = {t: [] for t in ts}
    as_end: dict[Elem, list[tuple[Elem, Elem]]] = {t: [] for t in ts}
    for a, m, b in between:
        as_middle[m].append((a, b))
        as_end[a].append((m, b))
        as_end[b].append((m, a))

    out: list[list[Elem]] = []
    placed: set[Elem] = set()
    current: list[Elem] = []

    def fits(t: Elem) -> bool:
        if any(p not in placed for p in preds[t]):
            return False
        if any((a in placed) == (b in placed) for a, b in as_middle[t]):
            return False
        # if the middle is already down, the far end must be too
        return all(other in placed for m, other in as_end[t] if m in placed)

    def extend() -> None:
        if len(current) == len(ts):
            out.append(list(current))
            return
        for t in ts:
            if t not in placed and fits(t):
                placed.add(t)
                current.append(t)
                extend()
                current.pop()
                placed.discard(t)

    extend()
    return out


def elementary_neighbors(A: Iterable[Elem], order: Sequence[Elem]) -> list[list[Elem]]:
    """Orders one elementary move away: a disjoint adjacent swap or a braid reversal."""
    A = frozenset(A)
    order = list(order)
    out = []
    for p in range(len(order) - 1):
        a, b = order[p], order[p + 1]
        if not set(a.indices) & set(b.indices):
            out.append(order[:p] + [b, a] + order[p + 2 :])
    for p in range(len(order) - 2):
        a, m, b = order[p : p + 3]
        first, last = (a, b) if a.i < b.i else (b, a)
        if (
            first.i == m.i
            and last.j == m.j
            and first.j == last.i
            and first.i < first.j < last.j
        ):
            out.append(order[:p] + [b, m, a] + order[p + 3 :])
    return [o for o in out if is_compatible_order(A, o)]


def compat_graph_components(A: Iterable[Elem]) -> int:
    """Number of connected components of the elementary-move graph."""
    A = frozenset(A)
    orders = [tuple(o) for o in enumerate_compatible_orders(A)]
    unseen = set(orders)
    comps = 0
    while unseen:
        comps += 1
        queue = deque([unseen.pop()])
        while queue:
            for nb in elementary_neighbors(A, queue.popleft()):
                nb = tuple(nb)
                if nb in unseen:
                    unseen.discard(nb)
                    queue.append(nb)
    return comps


def compat_graph_connected(A: Iterable[Elem]) -> bool:
    return compat_graph_components(A) == 1


# --- the reconstruction map ------------------------------------------------------


def product_along(order: Sequence[Elem], n: int) -> Perm:
    return product((elem_to_perm(t, n) for t in order), n)


def pi(A: Iterable[Elem], n: int) -> Perm:
    """
    The permutation whose 2-3 table is A: the product of its transpositions
    along a compatible order.

    >>> pi({Elem("T", 1, 2), Elem("T", 2, 3), Elem("R", 1, 2, 3)}, 3)
    (2, 3, 1)
    """
    return product_along(compatible_order(A, n), n)


def bruhat_maximum(perms: Iterable[Perm]) -> Perm | None:
    """The element above all others, or None if there is none."""
    perms = list(perms)
    for top in perms:
        if all(bruhat_leq(p, top) for p in perms):
            return top
    return None


def pi_oracle(A: Iterable[Elem], n: int) -> Perm:
    """
    Exhaustive version of ``pi``: the maximum of {t : C(t) = A}, checked to
    equal the maximum of {t : C_T(t) = A_T and C(t) within A}.
    """
    A = frozenset(A)
    at = t_part(A)
    same: list[Perm] = []
    inside: list[Perm] = []
    for t in all_perms(n):
        if table_T(t) != at:
            continue
        c = table_23(t)
        if c <= A:
            inside.append(t)
            if c == A:
                same.append(t)
    first, second = bruhat_maximum(same), bruhat_maximum(inside)
    if first is None or first != second:
        raise AssertionError(f"no common maximum for {sorted_elems(A)}")
    return first


# --- exhaustive generation -------------------------------------------------------


def staircase_functions(n: int) -> Iterator[tuple[int, ...]]:
    """Weakly increasing f on [n] with f(i) >= i, in colex order."""

    def grow(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        low = max(i, prefix[-1] if prefix else 1)
        for v in range(low, n + 1):
            prefix.append(v)
            yield from grow(prefix)
            prefix.pop()

    return grow([])


def transposition_downsets(n: int) -> Iterator[frozenset[Elem]]:
    """Every downward-closed set of transpositions (they are staircases)."""
    for f in staircase_functions(n):
        yield frozenset(
            Elem("T", i, j) for i in range(1, n + 1) for j in range(i + 1, f[i - 1] + 1)
        )


def admissible_with_table(gamma: Iterable[Elem], n: int) -> list[frozenset[Elem]]:
    """All admissible sets whose transposition part is ``gamma``."""
    gamma = frozenset(gamma)
    forced: set[Elem] = set(gamma)
    free: list[tuple[int, int, int]] = []
    for a, b in itertools.product(gamma, repeat=2):
        if a.j != b.i:
            continue
        i, j, k = a.i, a.j, b.j
        if Elem("T", i, k) in gamma:
            forced |= {Elem("R", i, j, k), Elem("L", i, j, k)}
        else:
            free.append((i, j, k))
    free.sort()
    out = []
    for choice in itertools.product("RL", repeat=len(free)):
        A = frozenset(forced | {Elem(c, *t) for c, t in zip(choice, free)})
        if is_admissible(A):
            out.append(A)
    return out


def all_admissible(n: int) -> list[frozenset[Elem]]:
    """Every admissible set in S_n, generated without reference to permutations."""
    out = []
    for gamma in transposition_downsets(n):
        out.extend(admissible_with_table(gamma, n))
    return out


def set_key(A: Iterable[Elem]) -> tuple:
    return tuple(elem_key(x) for x in sorted_elems(A))


# --- open-question probes --------------------------------------------------------


def restriction_probe(n: int) -> list[tuple[Perm, Perm]]:
    """
    Pairs s1 <= s2 of smooth permutations for which no compatible order of
    C(s2) restricts to a compatible order of C(s1).  Purely exploratory: the
    result is reported, not judged.
    """
    from .tables import is_smooth

    smooth = [s for s in all_perms(n) if is_smooth(s)]
    tables = {s: table_23(s) for s in smooth}
    orders = {s: enumerate_compatible_orders(tables[s]) for s in smooth}
    found = []
    for s1, s2 in itertools.product(smooth, repeat=2):
        if s1 == s2 or not bruhat_leq(s1, s2):
            continue
        sub = t_part(tables[s1])
        if not any(
            is_compatible_order(tables[s1], [t for t in o if t in sub]) for o in orders[s2]
        ):
            found.append((s1, s2))
    return found


__all__ = [
    "NotAdmissibleError",
    "Wedge",
    "admissibility_violation",
    "admissible_with_table",
    "all_admissible",
    "ambient_size",
    "as_set",
    "bruhat_maximum",
    "compat_graph_components",
    "compat_graph_connected",
    "compatible_order",
    "derived_set",
    "elementary_neighbors",
    "enumerate_compatible_orders",
    "find_wedge",
    "full_set",
    "invert_set",
    "is_admissible",
    "is_compatible_order",
    "is_downward_closed",
    "is_wedge",
    "iterated_derived_set",
    "iterated_derived_set_stepwise",
    "pi",
    "pi_oracle",
    "product_along",
    "require_admissible",
    "restriction_probe",
    "set_key",
    "staircase_functions",
    "transposition_downsets",
    "upend_set",
    "wedge_column",
    "wedge_trace",
]
