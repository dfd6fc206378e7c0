"""Command-line front end.

Verbs: build, table, verify, zeros, star, classify, suite, numtheory.
Exit codes: 0 when everything succeeds or passes, 1 when a computation or
check fails (details on the error stream), 2 on usage errors.  All output is
deterministic for a fixed seed; reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chartab import (
    BudgetExceeded,
    CharacterTable,
    Degenerate,
    TableFileError,
    character_table,
    table_from_text,
    table_to_text,
    verify_table,
)
from .constructions import RegistryError, ValidationFailed, build, registry_names
from .groupcore import Group, GroupFileError, format_group_file, parse_group_file
from .numtheory import (
    NotPrimePower,
    PreconditionViolated,
    UnsupportedFamily,
    diophantine_solutions,
    outer_bound_sweep,
    torus_orders,
    zsigmondy,
)
from .vanishing import (
    burnside_check,
    classify_one_class,
    simple_one_class_survey,
    star_check,
    star_survey,
    two_prime_degree_check,
    vanishing_classes,
)

DEFAULT_MAX_ORDER = 200_000
DEFAULT_MAX_CLASSES = 64


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None, summary: str | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    if summary:
        print(f"wrote {out} ({summary})")


def _load_group(target: str) -> Group:
    if target in registry_names():
        return build(target)
    p = Path(target)
    if p.is_file():
        return parse_group_file(p.read_text())
    raise RegistryError(
        f"{target!r} is neither a registry group nor a readable file; "
        f"known groups: {', '.join(sorted(registry_names()))}")


def _compute_table(g: Group, args) -> CharacterTable:
    if g.order > args.max_order:
        raise BudgetExceeded(
            f"group order {g.order} exceeds budget {args.max_order} "
            f"(raise with --max-order)")
    return character_table(g, seed=args.seed, class_budget=args.max_classes)


def _obtain_table(target: str, args) -> CharacterTable:
    """Registry name: build and compute.  File: a table file if it starts
    with '{', otherwise a group file to compute from."""
    if target in registry_names():
        return _compute_table(build(target), args)
    p = Path(target)
    if p.is_file():
        text = p.read_text()
        if text.lstrip().startswith("{"):
            return table_from_text(text)
        return _compute_table(parse_group_file(text), args)
    raise RegistryError(
        f"{target!r} is neither a registry group nor a readable file; "
        f"known groups: {', '.join(sorted(registry_names()))}")


# -- verb handlers ---------------------------------------------------------------


def _cmd_build(args) -> int:
    g = build(args.group)
    _emit(format_group_file(g), args.out,
          f"{g.name}: order {g.order}, degree {g.degree}")
    return 0


def _cmd_table(args) -> int:
    t = _obtain_table(args.target, args)
    _emit(table_to_text(t), args.out,
          f"{t.group}: order {t.order}, {len(t.classes)} classes")
    return 0


def _cmd_verify(args) -> int:
    try:
        t = table_from_text(Path(args.file).read_text())
    except TableFileError as exc:
        print(f"{args.file}: malformed table file: {exc}", file=sys.stderr)
        return 1
    rep = verify_table(t)
    if args.format == "json":
        sys.stdout.write(_json({"group": t.group, "ok": rep.ok,
                                "violations": list(rep.violations)}))
    elif rep.ok:
        print(f"{t.group}: table ok ({len(t.classes)} classes, "
              f"orthogonality exact)")
    if not rep.ok:
        for v in rep.violations:
            print(f"{t.group}: {v}", file=sys.stderr)
        return 1
    return 0


def _cmd_zeros(args) -> int:
    t = _obtain_table(args.target, args)
    rows = range(len(t.rows)) if args.row is None else [args.row]
    if args.row is not None and not 0 <= args.row < len(t.rows):
        print(f"error: row {args.row} out of range 0..{len(t.rows) - 1}",
              file=sys.stderr)
        return 2
    entries = []
    for i in rows:
        zs = vanishing_classes(t, i)
        entries.append((i, t.degree(i),
                        [(j, t.classes[j].element_order) for j in zs]))
    if args.format == "json":
        sys.stdout.write(_json({
            "group": t.group, "order": t.order,
            "rows": [{"row": i, "degree": d,
                      "zeros": [list(z) for z in zs]}
                     for i, d, zs in entries]}))
        return 0
    print(f"{t.group}: order {t.order}, {len(t.classes)} classes")
    for i, d, zs in entries:
        where = (", ".join(f"{j} (order {o})" for j, o in zs)
                 if zs else "none")
        print(f"row {i} degree {d}: zeros on classes: {where}")
    return 0


def _cmd_star(args) -> int:
    t = _obtain_table(args.target, args)
    if args.row is not None:
        if not 0 <= args.row < len(t.rows):
            print(f"error: row {args.row} out of range 0..{len(t.rows) - 1}",
                  file=sys.stderr)
            return 2
        reports = [star_check(t, args.row, out_order=args.out_order)]
    else:
        reports = list(star_survey(t, out_order=args.out_order))
    if args.format == "json":
        sys.stdout.write(_json([r.to_obj() for r in reports]))
    else:
        sys.stdout.write("\n\n".join(r.text() for r in reports) + "\n")
    return 0


def _cmd_classify(args) -> int:
    t = _obtain_table(args.target, args)
    rep = classify_one_class(t)
    if args.format == "json":
        sys.stdout.write(_json(rep.to_obj()))
    else:
        print(rep.text())
    return 1 if rep.match is False else 0


def _suite_rows(args, failures: list[str]):
    rows = []
    simple_tables = []
    for name in sorted(registry_names()):
        g = build(name)
        t = _compute_table(g, args)
        rep = verify_table(t)
        burn = burnside_check(t)
        two = two_prime_degree_check(t)
        cls = classify_one_class(t)
        held = sorted({r.degree for r in star_survey(t) if r.holds})
        if not rep.ok:
            failures.extend(f"{name}: {v}" for v in rep.violations)
        if not burn.ok:
            failures.extend(f"{name}: degree-{d} row {i} never vanishes"
                            for i, d in burn.violations)
        if not two.ok:
            failures.append(f"{name}: unexcused two-prime-degree row "
                            f"with a single vanishing class")
        if cls.match is False:
            failures.append(
                f"{name}: one-class degrees {list(cls.observed)} != "
                f"expected {list(cls.expected)}")
        if g.is_simple and not g.is_abelian:
            simple_tables.append(t)
        rows.append({
            "group": name, "order": g.order, "classes": len(t.classes),
            "table_ok": rep.ok, "burnside_ok": burn.ok, "two_prime_ok": two.ok,
            "classify": cls.match, "star_degrees": held,
        })
        if args.dir:
            fname = "".join(c if c.isalnum() else "_" for c in name) + ".tbl"
            (Path(args.dir) / fname).write_text(table_to_text(t))
    survey = simple_one_class_survey(simple_tables)
    for e in survey.entries:
        if not e.ok:
            failures.append(f"{e.group}: survey violation: one-class degrees "
                            f"{[d for _, d in e.one_class_rows]} not in "
                            f"{list(e.allowed)}")
    return rows, survey


def _cmd_suite(args) -> int:
    if args.dir:
        Path(args.dir).mkdir(parents=True, exist_ok=True)
    failures: list[str] = []
    rows, survey = _suite_rows(args, failures)
    if args.format == "json":
        report = _json({"seed": args.seed, "groups": rows,
                        "survey": survey.to_obj(), "ok": not failures})
    else:
        flag = {True: "ok", False: "FAIL", None: "--"}
        lines = [f"{'group':<12} {'order':>6} {'cls':>3} {'table':<5} "
                 f"{'burnside':<8} {'twoprime':<8} {'classify':<8} star-degrees"]
        for r in rows:
            stars = ",".join(map(str, r["star_degrees"])) or "--"
            lines.append(
                f"{r['group']:<12} {r['order']:>6} {r['classes']:>3} "
                f"{flag[r['table_ok']]:<5} {flag[r['burnside_ok']]:<8} "
                f"{flag[r['two_prime_ok']]:<8} "
                f"{flag[r['classify']] if r['classify'] is not None else 'none':<8} "
                f"{stars}")
        lines.append(f"simple-group survey over {len(survey.entries)} groups: "
                     + ("ok" if survey.ok else "FAILED"))
        lines.append(f"suite: {len(rows)} groups, "
                     + ("all checks passed" if not failures
                        else f"{len(failures)} failures"))
        report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    if args.dir:
        (Path(args.dir) / "report.txt").write_text(report)
    for f in failures:
        print(f, file=sys.stderr)
    return 1 if failures else 0


_DIOPHANTINE_SHAPES = {
    "A": lambda s: f"q = {s.q}: q-1 = 2^{s.c}, q+1 = 2^{s.a} 3^{s.b}",
    "B": lambda s: f"q = {s.q}: q-1 = 2^{s.a}, q+1 = 2^{s.b} 5^{s.c}",
    "C": lambda s: f"q = {s.q}: q-1 = 2^{s.a} 5^{s.b}, q+1 = 2^{s.c}",
}


def _cmd_diophantine(args) -> int:
    res = diophantine_solutions(args.part, args.bound)
    if args.format == "json":
        sys.stdout.write(_json({
            "part": res.part, "bound": res.bound,
            "values": list(res.values),
            "solutions": [{"q": s.q, "a": s.a, "b": s.b, "c": s.c}
                          for s in res.solutions]}))
        return 0
    shown = "{" + ", ".join(map(str, res.values)) + "}"
    print(f"part {res.part}, bound {res.bound}: q in {shown}")
    for s in res.solutions:
        print("  " + _DIOPHANTINE_SHAPES[res.part](s))
    return 0


def _cmd_outer_bound(args) -> int:
    bad = outer_bound_sweep(args.bound)
    if args.format == "json":
        sys.stdout.write(_json({
            "bound": args.bound, "ok": not bad,
            "violations": [{"p": p, "f": f, "part": part}
                           for p, f, part in bad]}))
    else:
        if not bad:
            print(f"both inequalities hold for every prime power q <= "
                  f"{args.bound} in their domains (A: q > 11; B: odd q >= 7)")
    if bad:
        for p, f, part in bad:
            print(f"part {part} fails at q = {p}^{f}", file=sys.stderr)
        return 1
    return 0


def _cmd_zsigmondy(args) -> int:
    out = zsigmondy(args.q, args.n)
    if args.format == "json":
        sys.stdout.write(_json({"q": out.q, "n": out.n, "prime": out.prime,
                                "exception_reason": out.exception_reason}))
        return 0
    if out.prime is not None:
        print(f"least primitive prime divisor of {out.q}^{out.n} - 1: "
              f"{out.prime}")
    elif out.exception_reason == "Q2N6":
        print("no primitive prime divisor: (q, n) = (2, 6)")
    else:
        print(f"no primitive prime divisor: n = 2 and q + 1 = {out.q + 1} "
              f"is a power of two")
    return 0


def _cmd_torus(args) -> int:
    rows = torus_orders(args.family, args.n, args.q)
    if args.format == "json":
        sys.stdout.write(_json([
            {"label": r.label, "order": r.order, "zsig_n": r.zsig_n,
             "zsig_prime": None if r.zsig is None else r.zsig.prime,
             "zsig_exception": None if r.zsig is None
             else r.zsig.exception_reason}
            for r in rows]))
        return 0
    print(f"family {args.family}, n = {args.n}, q = {args.q}:")
    for r in rows:
        if r.zsig is None:
            tail = f"l({r.zsig_n}) not applicable"
        elif r.zsig.prime is not None:
            tail = f"l({r.zsig_n}) = {r.zsig.prime}"
        else:
            tail = f"l({r.zsig_n}) exception ({r.zsig.exception_reason})"
        print(f"  {r.label}: order {r.order}, {tail}")
    return 0


# -- argument parsing ------------------------------------------------------------


def _add_format(p) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _add_budgets(p) -> None:
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the table-splitting randomness (default 0)")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help=f"largest allowed group order "
                        f"(default {DEFAULT_MAX_ORDER})")
    p.add_argument("--max-classes", type=int, default=DEFAULT_MAX_CLASSES,
                   help=f"largest allowed class count "
                        f"(default {DEFAULT_MAX_CLASSES})")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charzeros",
        description="Exact character tables and vanishing-class analysis")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="construct a registry group file")
    p.add_argument("group")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("table", help="compute a character table")
    p.add_argument("target", help="registry group name or group file path")
    p.add_argument("--out")
    _add_budgets(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="check a table file's orthogonality")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("zeros", help="list each row's vanishing classes")
    p.add_argument("target", help="registry group, group file, or table file")
    p.add_argument("--row", type=int)
    _add_format(p)
    _add_budgets(p)
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("star", help="vanishing-pattern reports per row")
    p.add_argument("target", help="registry group, group file, or table file")
    p.add_argument("--row", type=int)
    p.add_argument("--out-order", type=int,
                   help="outer-automorphism bound override")
    _add_format(p)
    _add_budgets(p)
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("classify",
                       help="faithful single-vanishing-class degrees")
    p.add_argument("target", help="registry group, group file, or table file")
    _add_format(p)
    _add_budgets(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("suite", help="run every registry group through "
                                     "table, verification, and checks")
    p.add_argument("--dir", help="directory for table files and report.txt")
    _add_format(p)
    _add_budgets(p)
    p.set_defaults(func=_cmd_suite)

    p = sub.add_parser("numtheory", help="integer-arithmetic reports")
    nsub = p.add_subparsers(dest="subverb", required=True)

    q = nsub.add_parser("diophantine",
                        help="prime powers with constrained q-1/q+1 "
                             "factorizations")
    q.add_argument("--part", type=str.upper, choices=("A", "B", "C"),
                   required=True)
    q.add_argument("--bound", type=int, default=1_000_000)
    _add_format(q)
    q.set_defaults(func=_cmd_diophantine)

    q = nsub.add_parser("outer-bound",
                        help="sweep both automorphism-count inequalities")
    q.add_argument("--bound", type=int, default=1_000_000)
    _add_format(q)
    q.set_defaults(func=_cmd_outer_bound)

    q = nsub.add_parser("zsigmondy", help="least primitive prime divisor")
    q.add_argument("q", type=int)
    q.add_argument("n", type=int)
    _add_format(q)
    q.set_defaults(func=_cmd_zsigmondy)

    q = nsub.add_parser("torus", help="maximal-torus orders for a family")
    q.add_argument("family")
    q.add_argument("n", type=int)
    q.add_argument("q", type=int)
    _add_format(q)
    q.set_defaults(func=_cmd_torus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValidationFailed, Degenerate, BudgetExceeded,
            TableFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (RegistryError, GroupFileError, FileNotFoundError,
            NotPrimePower, PreconditionViolated, UnsupportedFamily,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
