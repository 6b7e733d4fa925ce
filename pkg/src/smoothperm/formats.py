"""
Text and JSON forms for permutations, cycle sets, paths, grid sets and
partitions.  Every ``format_*`` has a ``parse_*`` that inverts it exactly.
"""
from __future__ import annotations

import json
import re
from typing import Any, Iterable

from .dyck import DecoratedPath, make_path
from .partitions import Partition, format_partition, normalize_partition
from .perm import Elem, GeneralCycle, Perm, check_perm, cycle_key, elem_key, general_cycle

_ELEM_RE = re.compile(r"([TRL])\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


def parse_perm(text: str) -> Perm:
    """
    One-line notation, either comma/space separated or, for n <= 9, as a
    single run of digits.

    >>> parse_perm("231"), parse_perm("2, 3, 1"), parse_perm("10 1 2 3 4 5 6 7 8 9")[0]
    ((2, 3, 1), (2, 3, 1), 10)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if text.isdigit() and len(text) <= 9 and "0" not in text:
        values = [int(c) for c in text]
    else:
        parts = [p for p in re.split(r"[\s,]+", text) if p]
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed permutation {text!r}")
        values = [int(p) for p in parts]
    try:
        return check_perm(values)
    except ValueError:
        raise ValueError(f"not a permutation of [{len(values)}]: {text!r}") from None


def format_perm(s: Perm, compact: bool = False) -> str:
    if compact and len(s) <= 9:
        return "".join(map(str, s))
    return ",".join(map(str, s))


def parse_elem(text: str) -> Elem:
    m = _ELEM_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"malformed element {text!r}")
    kind, idx = m.group(1), [int(v) for v in m.group(2).split(",")]
    if kind == "T" and len(idx) == 2 and 1 <= idx[0] < idx[1]:
        return Elem("T", *idx)
    if kind in "RL" and len(idx) == 3 and 1 <= idx[0] < idx[1] < idx[2]:
        return Elem(kind, *idx)
    raise ValueError(f"bad indices in {text!r}")


def parse_cycle(text: str) -> GeneralCycle:
    m = _ELEM_RE.fullmatch(text.strip())
    if not m or m.group(1) == "T":
        raise ValueError(f"malformed cycle {text!r}")
    return general_cycle(m.group(1), [int(v) for v in m.group(2).split(",")])


def parse_elem_list(text: str) -> frozenset[Elem]:
    """All elements mentioned in ``text`` in any layout, e.g. "T(1,2) T(2,3)"."""
    leftover = _ELEM_RE.sub("", text)
    if re.sub(r"[\s,;{}\[\]]", "", leftover):
        raise ValueError(f"unrecognised text in element list: {leftover.strip()!r}")
    return frozenset(parse_elem(m.group(0)) for m in _ELEM_RE.finditer(text))


def _header(lines: list[str]) -> tuple[int, list[str]]:
    lines = [ln.strip() for ln in lines if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ValueError('missing "n=<n>" header line')
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}") from None
    if n < 1:
        raise ValueError("n must be at least 1")
    return n, lines[1:]


def format_elems(A: Iterable[Elem], n: int) -> str:
    return "\n".join([f"n={n}", *(str(x) for x in sorted(A, key=elem_key))])


def parse_elems(text: str) -> tuple[frozenset[Elem], int]:
    n, body = _header(text.splitlines())
    A = frozenset(parse_elem(ln) for ln in body)
    if any(max(x.indices) > n for x in A):
        raise ValueError(f"element outside [{n}]")
    return A, n


def format_cycles(D: Iterable[GeneralCycle], n: int) -> str:
    return "\n".join([f"n={n}", *(str(c) for c in sorted(D, key=cycle_key))])


def parse_cycles(text: str) -> tuple[frozenset[GeneralCycle], int]:
    n, body = _header(text.splitlines())
    return frozenset(parse_cycle(ln) for ln in body), n


def format_path(p: DecoratedPath) -> str:
    return str(p)


def parse_path(text: str) -> DecoratedPath:
    """
    "f=2,3,3; g=1,0,0"; the g part may be left out for g = 0.

    >>> parse_path("f=2,3,3")
    DecoratedPath(f=(2, 3, 3), g=(0, 0, 0))
    """
    fields: dict[str, list[int]] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, val = part.partition("=")
        key = key.strip()
        if not sep or key not in ("f", "g") or key in fields:
            raise ValueError(f"malformed path {text!r}")
        try:
            fields[key] = [int(v) for v in val.split(",")]
        except ValueError:
            raise ValueError(f"malformed path {text!r}") from None
    if "f" not in fields:
        raise ValueError(f"path needs an f part: {text!r}")
    return make_path(fields["f"], fields.get("g"))


def format_grid(E: Iterable[tuple[int, int]], n: int) -> str:
    return "\n".join([f"n={n}", *(f"{i},{j}" for i, j in sorted(E))])


def parse_grid(text: str) -> tuple[frozenset[tuple[int, int]], int]:
    n, body = _header(text.splitlines())
    out = set()
    for ln in body:
        m = re.fullmatch(r"(\d+)\s*,\s*(\d+)", ln)
        if not m:
            raise ValueError(f"malformed grid point {ln!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i < n and 1 <= j < n):
            raise ValueError(f"grid point ({i},{j}) outside [{n - 1}]^2")
        out.add((i, j))
    return frozenset(out), n


def parse_partition(text: str, n: int | None = None) -> Partition:
    """
    >>> parse_partition("2|1,3")
    ((1, 3), (2,))
    """
    try:
        blocks = [[int(v) for v in b.split(",")] for b in text.strip().split("|")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return normalize_partition(blocks, n)


def to_json(kind: str, obj: Any, n: int | None = None) -> str:
    """Tagged, canonically ordered JSON for any of the carried types."""
    if kind == "perm":
        payload: Any = list(obj)
    elif kind == "elems":
        payload = [[x.kind, *x.indices] for x in sorted(obj, key=elem_key)]
    elif kind == "cycles":
        payload = [[c.direction, *c.support] for c in sorted(obj, key=cycle_key)]
    elif kind == "path":
        payload = {"f": list(obj.f), "g": list(obj.g)}
    elif kind == "grid":
        payload = [list(p) for p in sorted(obj)]
    elif kind == "partition":
        payload = [list(b) for b in obj]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    doc: dict[str, Any] = {"kind": kind}
    if n is not None:
        doc["n"] = n
    doc["value"] = payload
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> tuple[str, Any, int | None]:
    doc = json.loads(text)
    kind, value, n = doc["kind"], doc["value"], doc.get("n")
    if kind == "perm":
        return kind, check_perm(value), n
    if kind == "elems":
        return kind, frozenset(parse_elem(f"{v[0]}({','.join(map(str, v[1:]))})") for v in value), n
    if kind == "cycles":
        return kind, frozenset(general_cycle(v[0], v[1:]) for v in value), n
    if kind == "path":
        return kind, make_path(value["f"], value["g"]), n
    if kind == "grid":
        return kind, frozenset((a, b) for a, b in value), n
    if kind == "partition":
        return kind, normalize_partition(value, n), n
    raise ValueError(f"unknown kind {kind!r}")


__all__ = [
    "format_cycles",
    "format_elems",
    "format_grid",
    "format_partition",
    "format_path",
    "format_perm",
    "from_json",
    "parse_cycle",
    "parse_cycles",
    "parse_elem",
    "parse_elem_list",
    "parse_elems",
    "parse_grid",
    "parse_partition",
    "parse_path",
    "parse_perm",
    "to_json",
]
