"""Command line front end: ``aytwist family | verify | dump``.

Every command writes one JSON document.  Verification reports keep the
deterministic payload under ``report`` and wall-clock figures under
``timing`` so two runs can be compared by diffing ``report`` alone.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .ayfamily import nonorientable_instance, orientable_lift
from .checks import DEFAULT_CHECKS, REGISTRY, CheckResult, run_check
from .curveweb import CurveSystem, SurfaceClass
from .interchange import DocumentError, dumps, matrix_document
from .penner import Twist, TwistWord, penner_check, pf_analysis, word_action
from .strips import ay_strip, first_return

OUTPUT_DIR_ENV = "AYTWIST_OUTPUT_DIR"
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# argument helpers


def _genus(text: str) -> int:
    try:
        g = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"genus must be an integer, got {text!r}")
    if g < 3:
        raise argparse.ArgumentTypeError(f"genus must be at least 3, got {g}")
    return g


def _genus_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    a, b = _genus(lo), _genus(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty genus range {text!r}")
    return list(range(a, b + 1))


def _check_names(text: str) -> list[str]:
    names = [n.strip() for n in text.split(",") if n.strip()]
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown check(s) {', '.join(unknown)}; known: {', '.join(REGISTRY)}"
        )
    return names


def _instance(g: int, model: str):
    inst = nonorientable_instance(g)
    return orientable_lift(inst) if model == "orientable" else inst


def _emit(text: str, output: str | None, default_name: str) -> None:
    if output is None:
        env = os.environ.get(OUTPUT_DIR_ENV)
        if not env:
            sys.stdout.write(text)
            return
        path = Path(env) / default_name
    elif output == "-":
        sys.stdout.write(text)
        return
    else:
        path = Path(output)
        if path.is_dir():
            path = path / default_name
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}", file=sys.stderr)


# --------------------------------------------------------------------------
# family


def cmd_family(args) -> int:
    g = args.genus
    inst = _instance(g, args.model)
    action = word_action(inst.system, inst.word)
    pf = pf_analysis(action)
    doc = {
        "tool_version": __version__,
        "genus": g,
        "model": args.model,
        "instance": inst.to_document(),
        "matrix": matrix_document(action.matrix, inst.system.labels, inst.word),
        "char_poly": {"coeffs": pf.char_poly.to_json(), "text": str(pf.char_poly)},
        "pf": pf.to_json(args.precision),
    }
    _emit(dumps(doc), args.output, f"family-{args.model}-g{g}.json")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def _timed_check(job: tuple[str, int, int]) -> tuple[CheckResult, float]:
    name, g, precision = job
    t0 = time.perf_counter()
    res = run_check(name, g, precision)
    return res, time.perf_counter() - t0


def instance_penner_result(doc: dict) -> CheckResult:
    """Penner conditions for a curve system supplied as a document.

    A family-instance document carries its expected surface and, for the
    orientable model, the A/B partition; a bare curve-system document is
    checked for intersections and orientation data only.
    """
    if doc.get("schema") == "aytwist.family-instance":
        cs = CurveSystem.from_document(doc["system"])
        exp = doc.get("expected_surface")
        expected = SurfaceClass(int(exp["euler_characteristic"]), bool(exp["orientable"])) if exp else None
        part = doc.get("partition")
        partition = (tuple(part["A"]), tuple(part["B"])) if part else None
    else:
        cs = CurveSystem.from_document(doc)
        expected, partition = None, None
    if partition is None:
        word = TwistWord([Twist(i) for i in range(cs.curve_count)])
    else:
        word = TwistWord([Twist(i, 1) for i in partition[0]] + [Twist(j, -1) for j in partition[1]])
    report = penner_check(cs, partition=partition, word=word, expected=expected)
    return CheckResult("penner", cs.curve_count, report.verdict, {"source": "instance", "report": report.to_json()})


def _read_instance(source: str) -> dict:
    import json

    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"instance is not a JSON document: {exc}")
    if not isinstance(doc, dict):
        raise UsageError("instance document must be a JSON object")
    return doc


def verify(genera: list[int], checks: list[str], precision: int = 12, jobs: int = 1) -> dict:
    """Run ``checks`` for each genus; returns ``{"report": ..., "timing": ...}``."""
    todo = [(name, g, precision) for g in genera for name in checks]
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(_timed_check, todo))
    else:
        done = [_timed_check(job) for job in todo]
    entries = [res.to_json() for res, _ in done]
    timing = {f"{res.name}@{res.genus}": round(dt, 6) for res, dt in done}
    report = {
        "tool_version": __version__,
        "genera": genera,
        "checks": entries,
        "passed": all(res.passed for res, _ in done),
    }
    return {"report": report, "timing": timing}


def cmd_verify(args) -> int:
    if args.genus_range is not None:
        genera = args.genus_range
    elif args.genus is not None:
        genera = [args.genus]
    else:
        genera = [] if args.instance else [3]
    checks = list(DEFAULT_CHECKS) if args.checks is None else args.checks
    t0 = time.perf_counter()
    out = verify(genera, checks, args.precision, args.jobs)
    if args.instance is not None:
        try:
            res = instance_penner_result(_read_instance(args.instance))
        except (DocumentError, ValueError, KeyError, TypeError) as exc:
            if isinstance(exc, UsageError):
                raise
            res = CheckResult("penner", 0, False, {"source": "instance", "error": str(exc)})
        out["report"]["checks"].append(res.to_json())
        out["report"]["passed"] = out["report"]["passed"] and res.passed
    out["timing"]["total"] = round(time.perf_counter() - t0, 6)
    _emit(dumps(out), args.output, "verify.json")
    if not args.quiet:
        for entry in out["report"]["checks"]:
            print(f"{entry['verdict'].upper():4}  g={entry['genus']:<3} {entry['name']}", file=sys.stderr)
    return EXIT_OK if out["report"]["passed"] else EXIT_FAILED


# --------------------------------------------------------------------------
# dump


def dump_document(g: int, what: str, model: str = "nonorientable") -> dict:
    if what == "system":
        return _instance(g, model).system.to_document()
    if what == "matrix":
        inst = _instance(g, model)
        return matrix_document(word_action(inst.system, inst.word).matrix, inst.system.labels, inst.word)
    if what == "strip":
        return ay_strip(g).to_json()
    if what == "iet":
        return first_return(ay_strip(g)).to_json()
    raise UsageError(f"unknown object kind {what!r}")


def cmd_dump(args) -> int:
    doc = dump_document(args.genus, args.what, args.model)
    _emit(dumps(doc), args.output, f"{args.what}-g{args.genus}.json")
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aytwist", description="Exact checks for the Arnoux-Yoccoz twist family.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, precision=True):
        sp.add_argument("--output", help=f"file or directory; '-' for stdout (default: ${OUTPUT_DIR_ENV} or stdout)")
        if precision:
            sp.add_argument("--precision", type=int, default=12, help="decimal digits in renderings (default 12)")

    fam = sub.add_parser("family", help="emit a family instance with its matrix and PF data")
    fam.add_argument("--genus", type=_genus, required=True)
    fam.add_argument("--model", choices=("nonorientable", "orientable"), default="nonorientable")
    common(fam)
    fam.set_defaults(func=cmd_family)

    ver = sub.add_parser("verify", help="run acceptance checks and report pass/fail")
    g = ver.add_mutually_exclusive_group()
    g.add_argument("--genus", type=_genus)
    g.add_argument("--genus-range", type=_genus_range, metavar="A..B")
    ver.add_argument("--checks", type=_check_names, help=f"comma separated subset of: {', '.join(REGISTRY)}")
    ver.add_argument("--instance", metavar="FILE", help="also run the Penner check on this document ('-' = stdin)")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    ver.add_argument("--quiet", action="store_true", help="no per-check summary on stderr")
    common(ver)
    ver.set_defaults(func=cmd_verify)

    dmp = sub.add_parser("dump", help="write one object as an interchange document")
    dmp.add_argument("--genus", type=_genus, required=True)
    dmp.add_argument("--what", choices=("system", "strip", "iet", "matrix"), required=True)
    dmp.add_argument("--model", choices=("nonorientable", "orientable"), default="nonorientable")
    common(dmp, precision=False)
    dmp.set_defaults(func=cmd_dump)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"aytwist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"aytwist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
