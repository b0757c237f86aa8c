"""Command line interface.

Three subcommands:

``gint run <script.gint>``
    Parse and execute a script, print a text report, optionally write the
    JSON report.

``gint corpus list | run <name> | run-all``
    Enumerate or execute the scripts bundled with the package.

``gint invariants <script.gint> --module M``
    Execute only the declarations of a script and dump the homological
    invariants (Hilbert data, Betti table, depth, Ext dimensions) of one
    named module.

Exit codes: 0 all asserts pass, 1 assertion failure, 2 usage or parse
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .errors import (
    DegreeCapExceededError,
    GintError,
    ParseError,
    StabilizationError,
    VariableCapExceededError,
)
from .modalg import ext_module
from .script import SCHEMA_VERSION, RunReport, collect_modules, run_script

EXIT_PASS = 0
EXIT_ASSERT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_HF_RANGE = range(0, 9)


# -- corpus access -----------------------------------------------------------------------


def corpus_names() -> list[str]:
    """Names of the bundled scripts, sorted."""
    root = resources.files("gint").joinpath("corpus")
    return sorted(
        e.name[: -len(".gint")] for e in root.iterdir() if e.name.endswith(".gint")
    )


def corpus_text(name: str) -> str:
    path = resources.files("gint").joinpath("corpus").joinpath(f"{name}.gint")
    if not path.is_file():
        known = ", ".join(corpus_names())
        raise GintError(f"unknown corpus script {name!r} (have: {known})")
    return path.read_text(encoding="utf-8")


# -- report rendering --------------------------------------------------------------------


def _print_report(report: RunReport, verbose: bool, out=None) -> None:
    out = out or sys.stdout
    seed = "" if report.seed is None else f"  seed={report.seed}"
    print(f"== {report.script} ({report.sha256[:12]}){seed} ==", file=out)
    checks = asserts = failed = 0
    for e in report.statements:
        if e["kind"] == "check":
            checks += 1
            print(f"  {e['statement']} -> {e['conclusion']}", file=out)
            if verbose:
                for h in e["hypotheses"]:
                    mark = "ok " if h["holds"] else "NOT"
                    print(f"      [{mark}] {h['name']} ({h['evidence']})", file=out)
                if e["evidence"]:
                    ev = ", ".join(f"{k}={v}" for k, v in e["evidence"].items())
                    print(f"      evidence: {ev}", file=out)
        else:
            asserts += 1
            if e["conclusion"] != "pass":
                failed += 1
            print(
                f"  {e['statement']} -> {e['conclusion']}"
                f" [observed {e['observed']}]",
                file=out,
            )
    timing = "" if report.elapsed is None else f"  ({report.elapsed:.2f}s)"
    print(
        f"overall {report.overall}  checks={checks} asserts={asserts}"
        f" failed={failed}{timing}",
        file=out,
    )


def _write_json(payload: dict, path: str) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _apply_degree_cap(args) -> None:
    if getattr(args, "degree_cap", None) is not None:
        os.environ["GINT_DEGREE_CAP"] = str(args.degree_cap)


def _field_arg(args):
    if getattr(args, "field", None) is None:
        return None
    return args.field if args.field == "QQ" else int(args.field)


# -- subcommands -------------------------------------------------------------------------


def _cmd_run(args) -> int:
    _apply_degree_cap(args)
    with open(args.script, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(args.script))[0]
    report = run_script(text, name=name, seed=args.seed, field=_field_arg(args))
    _print_report(report, args.verbose)
    if args.json:
        _write_json(report.to_json_dict(), args.json)
    return EXIT_PASS if report.ok else EXIT_ASSERT_FAILURE


def _cmd_corpus(args) -> int:
    _apply_degree_cap(args)
    if args.action == "list":
        for name in corpus_names():
            print(name)
        return EXIT_PASS
    if args.action == "run":
        if not args.name:
            print("error: corpus run needs a script name", file=sys.stderr)
            return EXIT_USAGE
        report = run_script(
            corpus_text(args.name),
            name=args.name,
            seed=args.seed,
            field=_field_arg(args),
        )
        _print_report(report, args.verbose)
        if args.json:
            _write_json(report.to_json_dict(), args.json)
        return EXIT_PASS if report.ok else EXIT_ASSERT_FAILURE
    # run-all
    reports = []
    for name in corpus_names():
        report = run_script(
            corpus_text(name), name=name, seed=args.seed, field=_field_arg(args)
        )
        _print_report(report, args.verbose)
        reports.append(report)
    overall = "pass" if all(r.ok for r in reports) else "fail"
    print(f"corpus overall: {overall} ({len(reports)} scripts)")
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "reports": [r.to_json_dict() for r in reports],
            "overall": overall,
        }
        _write_json(payload, args.json)
    return EXIT_PASS if overall == "pass" else EXIT_ASSERT_FAILURE


def _cmd_invariants(args) -> int:
    _apply_degree_cap(args)
    with open(args.script, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(args.script))[0]
    modules = collect_modules(text, seed=args.seed, field=_field_arg(args))
    if args.module not in modules:
        known = ", ".join(sorted(modules)) or "none"
        print(
            f"error: no module {args.module!r} in {args.script} (have: {known})",
            file=sys.stderr,
        )
        return EXIT_USAGE
    m = modules[args.module]
    hom = m.homological()
    nv = m.ring.nvars
    ext_dims = {}
    for i in range(nv + 1):
        e = ext_module(m, i)
        ext_dims[str(i)] = -1 if e.is_zero() else e.dim()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "script": name,
        "module": args.module,
        "ambient_twists": list(m.generators.twists),
        "invariants": hom.as_dict(),
        "hilbert_function": {str(t): m.hilbert_function(t) for t in _HF_RANGE},
        "ext_dims": ext_dims,
    }
    print(f"== {name}:{args.module} ==")
    print(
        f"dim {hom.dim}  degree {hom.degree}  depth {hom.depth}  pd {hom.pd}"
        f"  cm {'yes' if hom.is_cm else 'no'}  type {hom.cm_type}"
    )
    print("betti:")
    for line in hom.betti.text().splitlines():
        print(f"  {line}")
    hf = " ".join(str(m.hilbert_function(t)) for t in _HF_RANGE)
    print(f"hilbert function (t=0..8): {hf}")
    ext_line = " ".join(f"{i}:{d}" for i, d in ext_dims.items())
    print(f"ext dims (i:dim, -1 means zero): {ext_line}")
    if args.json:
        _write_json(payload, args.json)
    return EXIT_PASS


# -- entry point -------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    p.add_argument("--seed", type=int, help="seed for randomized statements")
    p.add_argument("--degree-cap", type=int, help="override the global degree cap")
    p.add_argument("--field", help="override the coefficient field (a prime, or QQ)")
    p.add_argument("--verbose", action="store_true", help="print hypothesis and evidence tables")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gint",
        description="Graded-module intersection invariants: run scripts and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a script file")
    p_run.add_argument("script", help="path to a .gint script")
    _add_common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_corpus = sub.add_parser("corpus", help="list or run the bundled scripts")
    p_corpus.add_argument(
        "action", choices=("list", "run", "run-all"), help="what to do"
    )
    p_corpus.add_argument("name", nargs="?", help="script name for 'run'")
    _add_common(p_corpus)
    p_corpus.set_defaults(func=_cmd_corpus)

    p_inv = sub.add_parser(
        "invariants", help="dump invariants of one module defined in a script"
    )
    p_inv.add_argument("script", help="path to a .gint script")
    p_inv.add_argument("--module", required=True, help="module name to inspect")
    _add_common(p_inv)
    p_inv.set_defaults(func=_cmd_invariants)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved_cap = os.environ.get("GINT_DEGREE_CAP")
    try:
        return args.func(args)
    except (DegreeCapExceededError, VariableCapExceededError, StabilizationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GintError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if saved_cap is None:
            os.environ.pop("GINT_DEGREE_CAP", None)
        else:
            os.environ["GINT_DEGREE_CAP"] = saved_cap


if __name__ == "__main__":
    sys.exit(main())
