"""Command-line interface: ``spjacquet <command> ...``.

Exit status is 2 for parse or validation errors, 1 when a verification
finds violations (or a fixture differs) and 0 otherwise.
"""

from __future__ import annotations

import argparse
import difflib
import json
import shlex
import sys
from importlib import resources
from pathlib import Path

from .analysis import (
    NotInMIrr,
    check_distinctness,
    check_lemma_heredity,
    check_theorem_main,
    enumerate_mirr,
    multiplicity_table,
)
from .core import GLClass, SpClass, SpCuspidalLabel
from .hopf import M_star, comult_gl, iter_graded, jacquet_gl_direct, jacquet_sp, mu_star
from .parsing import (
    DeclarationError,
    ParseError,
    SessionDeclarations,
    parse_declarations,
    parse_expression,
)
from .render import render, render_text, sort_terms, to_json_obj

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _declarations(args, expr: str | None = None) -> SessionDeclarations:
    text = ""
    if getattr(args, "decls", None):
        text += Path(args.decls).read_text() + "\n"
    if getattr(args, "labels", None):
        text += args.labels
    if text.strip():
        return parse_declarations(text)
    if expr is not None:
        return SessionDeclarations.implicit(expr)
    return SessionDeclarations()


def _parse(args):
    return parse_expression(args.expr, _declarations(args, args.expr))


def _report_lines(report) -> list[str]:
    lines = [f"{mult:>3}  {render_text(e)}" for e, mult in sort_terms(report.table)]
    lines.append(f"max multiplicity: {report.max_multiplicity}")
    if report.max_multiplicity:
        witnesses = set(report.witnesses)
        for e, _ in sort_terms(report.table):
            if e in witnesses:
                lines.append(f"  witness: {render_text(e)}")
    for e in report.irreducibility_flags:
        lines.append(f"  reducible factor: {render_text(e)}")
    return lines


def _report_obj(report) -> dict:
    return {
        "kind": "multiplicity_report",
        "input": to_json_obj(report.input),
        "levi_rank": report.levi_rank,
        "table": to_json_obj(report.table),
        "max_multiplicity": report.max_multiplicity,
        "witnesses": [to_json_obj(w) for w in report.witnesses],
        "irreducibility_flags": [to_json_obj(w) for w in report.irreducibility_flags],
    }


def cmd_mstar(args) -> tuple[int, str]:
    x = _parse(args)
    if not isinstance(x, GLClass):
        raise UsageError("mstar expects a GL product, not an induced Sp class")
    pieces = dict(iter_graded(comult_gl(x)))
    if args.format == "json":
        body = {str(q): to_json_obj(pieces.get(q, jacquet_gl_direct(x, q)))
                for q in range(x.gl_rank + 1)}
        return EXIT_OK, json.dumps({"kind": "graded", "pieces": body}, sort_keys=True,
                                   ensure_ascii=False)
    lines = [f"q={q}: {render_text(pieces[q]) if q in pieces else '0'}"
             for q in range(x.gl_rank + 1)]
    return EXIT_OK, "\n".join(lines)


def cmd_Mstar(args) -> tuple[int, str]:
    x = _parse(args)
    if not isinstance(x, GLClass):
        raise UsageError("Mstar expects a GL product, not an induced Sp class")
    return EXIT_OK, render(M_star(x), args.format)


def cmd_mustar(args) -> tuple[int, str]:
    x = _parse(args)
    if not isinstance(x, SpClass):
        raise UsageError("mustar expects an induced class 'pi |x sigma'")
    return EXIT_OK, render(mu_star(x), args.format)


def cmd_jacquet(args) -> tuple[int, str]:
    x = _parse(args)
    l = args.levi
    if isinstance(x, GLClass):
        if not 0 <= l <= x.gl_rank:
            raise UsageError(f"--levi {l} outside [0, {x.gl_rank}]")
        return EXIT_OK, render(jacquet_gl_direct(x, l), args.format)
    if not 0 <= l <= x.sp_rank:
        raise UsageError(f"--levi {l} outside [0, {x.sp_rank}]")
    table = jacquet_sp(x, l)
    try:
        report = multiplicity_table(x, l)
    except NotInMIrr as exc:
        report, note = None, str(exc)
    if args.format == "json":
        out = {"kind": "jacquet", "levi_rank": l, "sum": to_json_obj(table),
               "report": _report_obj(report) if report else None}
        if report is None:
            out["note"] = note
        return EXIT_OK, json.dumps(out, sort_keys=True, ensure_ascii=False)
    lines = [render_text(table)]
    if report is None:
        lines.append(f"no multiplicity report: {note}")
    else:
        lines.extend(_report_lines(report))
    return EXIT_OK, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    decls = _declarations(args)
    if args.self_dual:
        for name in args.self_dual:
            if name not in decls.gl_labels:
                raise UsageError(f"--self-dual: unknown GL label {name!r}")
            lab = decls.gl_labels[name]
            if lab.dual_id != lab.id and lab.dual_id in decls.gl_labels:
                raise UsageError(f"--self-dual: {name} is declared dual to {lab.dual_id}")
            decls.gl_labels[name] = lab._replace(dual_id=name)
    gl = decls.all_gl()
    sp = decls.all_sp() or [SpCuspidalLabel("sigma", 1)]
    min_exp = -args.max_exp if args.min_exp is None else args.min_exp
    bounds = (gl, sp, min_exp, args.max_exp, args.max_segs, args.max_rank)
    result = check_theorem_main(*bounds, jobs=args.jobs, dual_lines=args.dual_lines)
    instances = enumerate_mirr(*bounds, dual_lines=args.dual_lines)
    heredity = check_lemma_heredity(min_exp, args.max_exp, gl or None)
    distinct_failures = []
    n_distinct = 0
    for x in instances:
        n_distinct += 1
        res = check_distinctness(x)
        if not res:
            distinct_failures.append((x, res))
    counts = result.counts()
    failed = bool(result.violations or heredity or distinct_failures)
    if args.format == "json":
        out = {
            "kind": "verification_report",
            "instances": result.instances,
            "reports": result.reports,
            "max_multiplicity": result.max_multiplicity,
            "multiplicity_two_witnesses": result.multiplicity_two_witnesses,
            "violations": counts,
            "violation_examples": [
                {"kind": v.kind, "input": to_json_obj(v.input), "levi_rank": v.levi_rank,
                 "witness": to_json_obj(v.witness), "multiplicity": v.multiplicity}
                for v in _examples(result.violations)],
            "heredity_violations": len(heredity),
            "distinctness_failures": len(distinct_failures),
            "distinctness_examples": [
                {"input": to_json_obj(x), "term": to_json_obj(r.counterexample),
                 "reason": r.reason} for x, r in distinct_failures[:5]],
            "ok": not failed,
        }
        return (EXIT_VIOLATION if failed else EXIT_OK), json.dumps(
            out, sort_keys=True, ensure_ascii=False)
    lines = [
        f"instances: {result.instances}",
        f"levi reports: {result.reports}",
        f"max multiplicity observed: {result.max_multiplicity}",
        f"multiplicity-2 constituents: {result.multiplicity_two_witnesses}",
    ]
    if result.first_multiplicity_two:
        x, l, k = result.first_multiplicity_two
        lines.append(f"  first: l={l} {render_text(k)}  in  {render_text(x)}")
    lines.append(f"multiplicity > 2: {counts.get('multiplicity>2', 0)}")
    lines.append(f"multiplicity 2 with non-self-dual GL factor: "
                 f"{counts.get('non-self-dual multiplicity 2', 0)}")
    for v in _examples(result.violations):
        lines.append(f"  {v.kind}: l={v.levi_rank} {v.multiplicity}*"
                     f"{render_text(v.witness)}  in  {render_text(v.input)}")
    lines.append(f"heredity violations: {len(heredity)}")
    lines.append(f"distinctness failures: {len(distinct_failures)} of {n_distinct}")
    for x, r in distinct_failures[:3]:
        lines.append(f"  {r.reason}: {render_text(r.counterexample)}"
                     f"  in  {render_text(x)}")
    lines.append("FAIL" if failed else "OK")
    return (EXIT_VIOLATION if failed else EXIT_OK), "\n".join(lines)


def _examples(violations, per_kind: int = 3):
    seen: dict[str, int] = {}
    out = []
    for v in violations:
        if seen.get(v.kind, 0) < per_kind:
            seen[v.kind] = seen.get(v.kind, 0) + 1
            out.append(v)
    return out


# -- fixtures ----------------------------------------------------------------

def load_fixture(path: Path) -> tuple[list[str], str]:
    """Read a ``.case`` file: a ``command:`` line, then ``--- expected`` and the output."""
    text = Path(path).read_text()
    head, sep, expected = text.partition("--- expected\n")
    if not sep:
        raise ValueError(f"{path}: missing '--- expected' separator")
    command = None
    for line in head.splitlines():
        if line.startswith("command:"):
            command = shlex.split(line[len("command:"):])
    if command is None:
        raise ValueError(f"{path}: missing 'command:' line")
    return command, expected


def fixture_dir() -> Path:
    return Path(str(resources.files("spjacquet") / "fixtures"))


def cmd_fixtures(args) -> tuple[int, str]:
    directory = Path(args.dir) if args.dir else fixture_dir()
    lines, failed = [], 0
    for path in sorted(directory.glob("*.case")):
        argv, expected = load_fixture(path)
        _, output = run_command(argv)
        actual = output + "\n"
        if args.update:
            head = path.read_text().partition("--- expected\n")[0]
            path.write_text(head + "--- expected\n" + actual)
            lines.append(f"updated {path.name}")
        elif actual == expected:
            lines.append(f"ok    {path.name}")
        else:
            failed += 1
            lines.append(f"FAIL  {path.name}")
            lines.extend("      " + d.rstrip("\n") for d in difflib.unified_diff(
                expected.splitlines(True), actual.splitlines(True), "expected", "actual"))
    if not args.update:
        lines.append(f"{failed} fixture(s) differ" if failed else "all fixtures match")
    return (EXIT_VIOLATION if failed else EXIT_OK), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--decls", metavar="FILE", help="declaration file")
    common.add_argument("--labels", metavar="SPEC",
                        help='inline declarations, e.g. "rho:GL(1) self-dual; sigma:Sp(1)"')
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="spjacquet",
        description="Jacquet modules of Z(D1) x ... x Z(Dr) |x sigma for symplectic groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (("mstar", cmd_mstar, "m* by graded rank"),
                            ("Mstar", cmd_Mstar, "the twisted comultiplication M*"),
                            ("mustar", cmd_mustar, "the coaction mu*")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("expr")
        p.set_defaults(func=fn)

    p = sub.add_parser("jacquet", parents=[common],
                       help="Jacquet module for the Levi GL_L x G_{n-L}")
    p.add_argument("expr")
    p.add_argument("--levi", type=int, required=True)
    p.set_defaults(func=cmd_jacquet)

    p = sub.add_parser("verify", parents=[common], help="exhaustive multiplicity sweep")
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--min-exp", type=int, default=None, help="defaults to -MAX_EXP")
    p.add_argument("--max-segs", type=int, required=True)
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--self-dual", action="append", metavar="NAME")
    p.add_argument("--no-dual-lines", dest="dual_lines", action="store_false",
                   help="only place segments on the declared labels, not their duals")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", parents=[common], help="replay the fixture corpus")
    p.add_argument("--dir", default=None)
    p.add_argument("--update", action="store_true", help="rewrite expected outputs")
    p.set_defaults(func=cmd_fixtures)
    return parser


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns ``(exit code, output text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), ""
    try:
        return args.func(args)
    except (ParseError, DeclarationError, UsageError, NotInMIrr, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    code, output = run_command(sys.argv[1:] if argv is None else argv)
    if output:
        stream = sys.stderr if code == EXIT_USAGE else sys.stdout
        print(output, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
