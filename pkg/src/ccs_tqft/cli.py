"""Command-line front end.

    ccs-tqft invariant --surface torus --module X2-S3
    ccs-tqft matrix --surface cylinder --module X4 --output csv
    ccs-tqft classes --module X4
    ccs-tqft verify [--module X1]
    ccs-tqft report [--module X5]

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 unknown fixture, 4 size limit, 5 invalid input (axiom or complex).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .analysis import class_report
from .crossed import ALIASES, FIXTURES, CrossedModule, fixture
from .errors import (
    AxiomViolation,
    CcsError,
    IdentityViolation,
    InvalidComplex,
    ParseError,
    SizeLimit,
    UnknownFixture,
)
from .formats import dumps, load_json, module_from_dict, surface_from_dict, surface_to_dict
from .invariant import invariant
from .surface import CATALOGUE, SurfaceComplex, catalogue_surface, validate
from .tqft import matrix_of
from .verify import run_all

EXIT_FAIL, EXIT_PARSE, EXIT_FIXTURE, EXIT_SIZE, EXIT_INVALID = 1, 2, 3, 4, 5


def resolve_module(src: str) -> CrossedModule:
    if src in FIXTURES or src in ALIASES:
        return fixture(src)
    if Path(src).exists():
        return module_from_dict(load_json(src))
    raise UnknownFixture(f"{src!r} is neither a fixture name nor a readable file")


def resolve_surface(src: str) -> SurfaceComplex:
    if src in CATALOGUE:
        return catalogue_surface(src)
    if Path(src).exists():
        return surface_from_dict(load_json(src))
    raise UnknownFixture(f"{src!r} is neither a catalogue surface nor a readable file")


def _tuple(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad colour tuple {text!r}") from exc


def _modules(args) -> list[CrossedModule]:
    if args.module:
        return [resolve_module(args.module)]
    return [fixture(n) for n in FIXTURES]


def _apply_caps(args) -> None:
    if args.max_fast_states:
        os.environ["CCS_TQFT_MAX_FAST_STATES"] = str(args.max_fast_states)
    if args.max_oracle_states:
        os.environ["CCS_TQFT_MAX_ORACLE_STATES"] = str(args.max_oracle_states)


def _scalar_out(z, args) -> str:
    if args.output == "json":
        d = z.to_json()
        if args.float:
            d["approx"] = float(z)
        return dumps(d)
    return f"{float(z):.12g}\n" if args.float else z.render() + "\n"


def _checks_doc(results) -> dict:
    return {suite: [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
            for suite, checks in results.items()}


def _checks_text(name: str, results) -> str:
    lines = [f"== {name}"]
    for suite, checks in results.items():
        for c in checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{tag}] {suite}: {c.name}" + (f" ({c.detail})" if c.detail else ""))
    return "\n".join(lines) + "\n"


def cmd_invariant(args, out) -> int:
    cm, s = resolve_module(args.module or "X1"), resolve_surface(args.surface)
    z = invariant(s, cm, _tuple(args.g_in), _tuple(args.g_out), mode=args.mode, workers=args.workers)
    out.write(_scalar_out(z, args))
    return 0


def cmd_matrix(args, out) -> int:
    cm, s = resolve_module(args.module or "X1"), resolve_surface(args.surface)
    z = matrix_of(s, cm, mode=args.mode, workers=args.workers)
    if args.output == "csv":
        out.write(z.to_csv(as_float=args.float))
    elif args.output == "text":
        out.write(f"Z[{s.name}] over {cm.name}: {z.shape[0]}x{z.shape[1]}\n" + z.to_csv(args.float))
    else:
        out.write(dumps(z.to_json()))
    return 0


def cmd_classes(args, out) -> int:
    docs = [class_report(cm) for cm in _modules(args)]
    if args.output == "json":
        out.write(dumps(docs if len(docs) > 1 else docs[0]))
        return 0
    for d in docs:
        out.write(f"{d['module']}: |G|={d['order_g']} |H|={d['order_h']} "
                  f"classes={d['n_classes']} gcf={d['gcf']} "
                  f"gcf*|G|={d['gcf_times_order']} holds={d['proposition_holds']}\n")
        for c in d["classes"]:
            out.write(f"  {c['members']} size={c['size']} C(g,g)={c['c_gg']}\n")
    return 0


def _verify_results(args):
    return [(cm, run_all(cm, sequences=args.sequences, seed=args.seed)) for cm in _modules(args)]


def cmd_verify(args, out) -> int:
    results = _verify_results(args)
    ok = all(c.passed for _, r in results for cs in r.values() for c in cs)
    if args.output == "json":
        out.write(dumps({cm.name: _checks_doc(r) for cm, r in results} | {"passed": ok}))
    else:
        for cm, r in results:
            out.write(_checks_text(cm.name, r))
        out.write("ALL PASSED\n" if ok else "FAILURES\n")
    return 0 if ok else EXIT_FAIL


def cmd_report(args, out) -> int:
    doc = {"modules": {}}
    ok = True
    for cm, r in _verify_results(args):
        matrices = {}
        for name in CATALOGUE:
            s = catalogue_surface(name)
            matrices[name] = {"validation": validate(s).__dict__, "surface": surface_to_dict(s),
                              "matrix": matrix_of(s, cm).to_json()}
        passed = all(c.passed for cs in r.values() for c in cs)
        ok &= passed
        doc["modules"][cm.name] = {
            "classes": class_report(cm),
            "matrices": matrices,
            "checks": _checks_doc(r),
            "passed": passed,
        }
    doc["passed"] = ok
    if args.output == "json":
        out.write(dumps(doc))
    else:
        for name, m in doc["modules"].items():
            c = m["classes"]
            out.write(f"== {name}: classes={c['n_classes']} gcf={c['gcf']} passed={m['passed']}\n")
            for sname, mm in m["matrices"].items():
                ents = [e["coeff"] + ("·√" + str(e["base"]) if e["half_power"] else "")
                        for row in mm["matrix"]["entries"] for e in row]
                out.write(f"  Z[{sname}] = {ents}\n")
        out.write("ALL PASSED\n" if ok else "FAILURES\n")
    return 0 if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ccs-tqft", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--module", help="fixture name (X1..X5, aliases like X2-S3) or JSON file")
    common.add_argument("--output", choices=["json", "csv", "text"], default="text")
    common.add_argument("--float", action="store_true", help="decimal approximations, for reading only")
    common.add_argument("--mode", choices=["fast", "oracle", "both"], default="fast")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--max-fast-states", type=int)
    common.add_argument("--max-oracle-states", type=int)
    common.add_argument("--sequences", type=int, default=20, help="random move sequences per surface")
    common.add_argument("--seed", type=int, default=0)
    for name in ("invariant", "matrix"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--surface", required=True, help=f"one of {sorted(CATALOGUE)} or a JSON file")
        if name == "invariant":
            sp.add_argument("--in", dest="g_in", help="comma-separated in-boundary colours")
            sp.add_argument("--out", dest="g_out", help="comma-separated out-boundary colours")
    for name in ("classes", "verify", "report"):
        sub.add_parser(name, parents=[common])
    return p


COMMANDS = {"invariant": cmd_invariant, "matrix": cmd_matrix, "classes": cmd_classes,
            "verify": cmd_verify, "report": cmd_report}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    saved = {k: os.environ.get(k) for k in ("CCS_TQFT_MAX_FAST_STATES", "CCS_TQFT_MAX_ORACLE_STATES")}
    _apply_caps(args)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnknownFixture as exc:
        print(f"unknown fixture: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except SizeLimit as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except IdentityViolation as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (AxiomViolation, InvalidComplex, CcsError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        # caps are per invocation; do not leak them into a host process
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
