"""Command-line interface: ``smoothperm <command> ...``."""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any, Callable, Sequence

from .admissible import (
    NotAdmissibleError,
    compat_graph_components,
    compatible_order,
    enumerate_compatible_orders,
    pi,
    require_admissible,
)
from .covexillary import ascent_chain, constructed_step, smooth_closure
from .dyck import path_from_admissible, render_path, sigma_from_path
from .enumeration import CLASSES, METHODS, catalan, count_class
from .essential import coessential_core, essential_set, in_frakE, render_grid, sigma_from_grid
from .formats import (
    format_cycles,
    format_elems,
    format_grid,
    format_partition,
    format_perm,
    parse_elem_list,
    parse_elems,
    parse_grid,
    parse_partition,
    parse_path,
    parse_perm,
)
from .partitions import maximal_elements, partition_max
from .perm import cycle_key, elem_key, is_indecomposable, length
from .tables import (
    is_covexillary,
    is_defined_by_inclusions,
    is_smooth,
    table_23,
    table_D,
    table_T,
)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3
DEFAULT_N_CAP = 6
TABLES = ("T", "C23", "D", "Dspcl", "essential", "coessential")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(args: argparse.Namespace, text: str, data: Any) -> None:
    if args.format == "json":
        print(json.dumps(data, separators=(",", ":"), sort_keys=False))
    else:
        print(text)


def _elems_json(A) -> list:
    return [[x.kind, *x.indices] for x in sorted(A, key=elem_key)]


def _read_set(args: argparse.Namespace) -> tuple[frozenset, int]:
    """An element set from --file (with its "n=" header) or inline text."""
    if args.file:
        with open(args.file) as fh:
            A, n = parse_elems(fh.read())
        if args.n is not None and args.n != n:
            raise ValueError(f"--n {args.n} disagrees with file header n={n}")
        return A, n
    A = parse_elem_list(" ".join(args.elements))
    n = args.n
    top = max((max(x.indices) for x in A), default=0)
    if n is None:
        if not A:
            raise UsageError("an empty set needs --n")
        n = top
    if top > n:
        raise ValueError(f"element index {top} exceeds n={n}")
    return A, n


def _guard(args: argparse.Namespace, n: int, estimate: Callable[[int], int], what: str) -> None:
    if n <= DEFAULT_N_CAP:
        return
    if not args.force:
        raise UsageError(f"{what} is capped at n={DEFAULT_N_CAP}; pass --force to run n={n}")
    print(f"estimated cases: {estimate(n)}", file=sys.stderr)


# --- commands --------------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    s = parse_perm(args.perm)
    flags = {
        "smooth": is_smooth(s),
        "covexillary": is_covexillary(s),
        "dbi": is_defined_by_inclusions(s),
        "indecomposable": is_indecomposable(s),
    }
    text = " ".join(f"{k}:{_yes(v)}" for k, v in flags.items())
    _emit(args, text, {"perm": list(s), **flags, "length": length(s)})
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    s = parse_perm(args.perm)
    n = len(s)
    which = args.which
    if which in ("T", "C23"):
        A = table_T(s) if which == "T" else table_23(s)
        _emit(args, format_elems(A, n), {"n": n, "table": which, "value": _elems_json(A)})
    elif which in ("D", "Dspcl"):
        D = table_D(s, special_only=which == "Dspcl")
        data = [[c.direction, *c.support] for c in sorted(D, key=cycle_key)]
        _emit(args, format_cycles(D, n), {"n": n, "table": which, "value": data})
    else:
        E = essential_set(s) if which == "essential" else coessential_core(s)
        _emit(args, format_grid(E, n), {"n": n, "table": which, "value": [list(p) for p in sorted(E)]})
    return EXIT_OK


def cmd_pi(args: argparse.Namespace) -> int:
    A, n = _read_set(args)
    A = require_admissible(A)
    s = pi(A, n)
    lines = [format_perm(s)]
    data: dict[str, Any] = {"n": n, "perm": list(s)}
    if args.order:
        order = compatible_order(A, n)
        lines.append("order: " + " ".join(map(str, order)))
        data["order"] = _elems_json_ordered(order)
    if args.word:
        word = sigma_from_path(path_from_admissible(A, n))[1]
        lines.append("word: " + " ".join(f"s{m}" for m in word))
        data["word"] = word
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def _elems_json_ordered(order) -> list:
    return [[x.kind, *x.indices] for x in order]


def cmd_compat(args: argparse.Namespace) -> int:
    A, n = _read_set(args)
    A = require_admissible(A)
    if args.all:
        _guard(args, n, lambda m: math.factorial(m * (m - 1) // 2), "enumerating compatible orders")
        orders = enumerate_compatible_orders(A)
        comps = compat_graph_components(A)
        lines = [" ".join(map(str, o)) for o in orders]
        lines.append(f"orders: {len(orders)} components: {comps}")
        data = {"n": n, "orders": [_elems_json_ordered(o) for o in orders], "components": comps}
    else:
        order = compatible_order(A, n)
        lines = [" ".join(map(str, order))]
        data = {"n": n, "order": _elems_json_ordered(order)}
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_dyck(args: argparse.Namespace) -> int:
    if args.action == "encode":
        s = parse_perm(args.value)
        if not is_smooth(s):
            raise ValueError(f"{format_perm(s)} is not smooth")
        p = path_from_admissible(table_23(s), len(s))
    else:
        p = parse_path(args.value)
        s = sigma_from_path(p)[0]
    word = sigma_from_path(p)[1]
    text = str(p) if args.action == "encode" else format_perm(s)
    if args.render:
        text += "\n" + render_path(p)
    _emit(args, text, {"f": list(p.f), "g": list(p.g), "perm": list(s), "word": word})
    return EXIT_OK


def cmd_essential(args: argparse.Namespace) -> int:
    if args.action == "encode":
        s = parse_perm(args.value)
        n = len(s)
        E = essential_set(s)
        text = format_grid(E, n)
        data: dict[str, Any] = {"n": n, "grid": [list(p) for p in sorted(E)], "perm": list(s)}
    else:
        if os.path.exists(args.value):
            with open(args.value) as fh:
                E, n = parse_grid(fh.read())
        else:
            if args.n is None:
                raise UsageError("inline grid sets need --n")
            body = args.value.replace(";", "\n")
            E, n = parse_grid(f"n={args.n}\n{body}")
        if not in_frakE(E):
            raise ValueError("grid set is not the essential set of a smooth permutation")
        s = sigma_from_grid(E, n)
        text = format_perm(s)
        data = {"n": n, "grid": [list(p) for p in sorted(E)], "perm": list(s)}
    if args.render:
        text += "\n" + render_grid(E, n)
    _emit(args, text, data)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    classes = CLASSES if args.cls == "all" else (args.cls,)
    methods = METHODS if args.method == "all" else (args.method,)
    if "patterns" in methods:
        _guard(args, args.n, math.factorial, "brute-force counting")
    if "paths" in methods:
        _guard(args, args.n, catalan, "path generation")
    rows = [
        (n, c, m, count_class(n, c, m, jobs=args.jobs))
        for n in range(1, args.n + 1)
        for c in classes
        for m in methods
    ]
    if args.rows:
        text = "\n".join(f"{n},{c},{m},{v}" for n, c, m, v in rows)
    else:
        width = max(len(str(r[3])) for r in rows)
        text = "\n".join(f"{n:>3}  {c:<15}{m:<11}{v:>{width}}" for n, c, m, v in rows)
    _emit(args, text, [{"n": n, "class": c, "method": m, "count": v} for n, c, m, v in rows])
    return EXIT_OK


def _verify_estimate(n: int) -> int:
    # the partition suite dominates: n! permutations times the Bell number
    bell = [1]
    for k in range(n):
        bell.append(sum(math.comb(k, i) * bell[i] for i in range(k + 1)))
    return math.factorial(n) * bell[n]


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("verify needs --n")
    n_min = args.n_min if args.n_min is not None else args.n
    if args.all or not args.theorem:
        theorems = list(SUITES)
    else:
        theorems = args.theorem
    _guard(args, args.n, _verify_estimate, "exhaustive verification")
    reports = run_suites(theorems, n_min, args.n, jobs=args.jobs)
    text = "\n".join(
        r.summary() + "".join(f"\n  counterexample: {f}" for f in r.failures) for r in reports
    )
    _emit(args, text, [r.as_dict() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def cmd_partition_max(args: argparse.Namespace) -> int:
    s = parse_perm(args.perm)
    P = parse_partition(args.partition, len(s))
    best = partition_max(s, P)
    if best is not None:
        _emit(args, format_perm(best), {"maximum": list(best)})
        return EXIT_OK
    tops = maximal_elements(s, P)
    text = "NO-MAXIMUM\n" + "\n".join(f"maximal: {format_perm(t)}" for t in tops)
    _emit(args, text, {"maximum": None, "maximal": [list(t) for t in tops], "partition": format_partition(P)})
    return EXIT_OK


def cmd_closure(args: argparse.Namespace) -> int:
    t = parse_perm(args.perm)
    c = smooth_closure(t)
    _emit(args, format_perm(c), {"perm": list(t), "closure": list(c)})
    return EXIT_OK


def cmd_ascend(args: argparse.Namespace) -> int:
    t = parse_perm(args.perm)
    if not is_covexillary(t):
        raise ValueError(f"{format_perm(t)} is not covexillary")
    chain = ascent_chain(t)
    lines = [format_perm(chain[0])]
    steps = []
    for u, v in zip(chain, chain[1:]):
        st = constructed_step(u)
        steps.append({"j": st.j, "k": st.k, "case": st.case, "perm": list(v)})
        lines.append(f"T({st.j},{st.k}) [{st.case}] -> {format_perm(v)}")
    _emit(args, "\n".join(lines), {"start": list(t), "steps": steps})
    return EXIT_OK


# --- parser ----------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--n", type=int, default=d(None), help="permutation size, or largest size")
    p.add_argument("--format", choices=("text", "json"), default=d("text"))
    p.add_argument("--jobs", type=int, default=d(os.cpu_count() or 1), help="worker processes")
    p.add_argument("--seed", type=int, default=d(None), help="accepted for scripting; nothing is random")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smoothperm", description="Smooth permutations and their bijections.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "smooth / covexillary / defined-by-inclusions flags")
    p.add_argument("perm")

    p = add("table", cmd_table, "tables and grid sets of a permutation")
    p.add_argument("perm")
    p.add_argument("--which", choices=TABLES, default="C23")

    for name, func, help_ in (
        ("pi", cmd_pi, "the smooth permutation of an admissible set"),
        ("compat", cmd_compat, "compatible orders of an admissible set"),
    ):
        p = add(name, func, help_)
        p.add_argument("elements", nargs="*", help='e.g. "T(1,2) T(2,3) R(1,2,3)"')
        p.add_argument("--file", help='set file with an "n=<n>" header')
        if name == "pi":
            p.add_argument("--order", action="store_true", help="also print a compatible order")
            p.add_argument("--word", action="store_true", help="also print a reduced word")
        else:
            p.add_argument("--all", action="store_true", help="every compatible order")
            p.add_argument("--force", action="store_true")

    p = add("dyck", cmd_dyck, "decorated Dyck path of a smooth permutation and back")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("value", help='a permutation, or a path like "f=2,3,3; g=1,0,0"')
    p.add_argument("--render", action="store_true")

    p = add("essential", cmd_essential, "essential set of a smooth permutation and back")
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("value", help='a permutation, a grid file, or "1,2;2,3" with --n')
    p.add_argument("--render", action="store_true")

    p = add("enumerate", cmd_enumerate, "count smooth permutations and subclasses")
    p.add_argument("--class", dest="cls", choices=(*CLASSES, "all"), default="smooth")
    p.add_argument("--method", choices=(*METHODS, "all"), default="recurrence")
    p.add_argument("--rows", action="store_true", help='rows "n,class,method,count"')
    p.add_argument("--force", action="store_true")

    p = add("verify", cmd_verify, "exhaustive theorem checks")
    p.add_argument("--n-min", type=int, default=None, help="smallest n (default: --n)")
    p.add_argument("--theorem", action="append", choices=sorted(SUITES))
    p.add_argument("--all", action="store_true")
    p.add_argument("--force", action="store_true")

    p = add("partition-max", cmd_partition_max, "maximum below a permutation in a block group")
    p.add_argument("perm")
    p.add_argument("partition", help='blocks like "1,3,4|2"')

    p = add("closure", cmd_closure, "least smooth permutation above a covexillary one")
    p.add_argument("perm")

    p = add("ascend", cmd_ascend, "covexillary ascent steps up to the smooth closure")
    p.add_argument("perm")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"smoothperm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, NotAdmissibleError, OSError) as exc:
        print(f"smoothperm: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
