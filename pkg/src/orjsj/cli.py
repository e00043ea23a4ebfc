"""Command line front end.

Exit codes: 0 success, 1 internal error, 2 parse error, 3 input outside the
scope of the recognition theorems (not one-ended, or unsupported).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import engine, oracle
from .engine import Assumptions, Case, Verdict
from .errors import (
    EmptyWordError,
    NotInDerivedSubgroupError,
    OrjsjError,
    ParseError,
)
from .parsing import parse_relator
from .polytope import ft_polytope
from .svg import render_svg
from .whitehead import minimize, shortest_orbit_set
from .words import CyclicWord

EXIT_OK, EXIT_INTERNAL, EXIT_PARSE, EXIT_INAPPLICABLE = 0, 1, 2, 3

COMMANDS = ("detect", "jsj", "out", "polytope", "minimize", "orbit", "analyze")
INAPPLICABLE = (Case.NotOneEnded, Case.Unsupported)


@dataclass
class Outcome:
    code: int = EXIT_OK
    text: str = ""
    record: dict = field(default_factory=dict)
    error: str = ""


def _head(text, R, t=None):
    rec = {"input": text, "relator": R.letters}
    if t is not None:
        rec.update(
            root=t.root.letters,
            exponent=t.exponent,
            applicability=t.case.value,
        )
    return rec


def _inapplicable(rec, t):
    rec["warnings"] = [t.reason]
    return Outcome(EXIT_INAPPLICABLE, "", rec, f"unknown: {t.reason}")


def _cmd_detect(text, R, assume, fmt):
    t = engine.triage(R, assume)
    rec = _head(text, R, t)
    if t.case in INAPPLICABLE:
        rec["detection"] = Verdict.Unknown.value
        return _inapplicable(rec, t)
    verdict = engine.detect(R, assume)
    rec["detection"] = verdict.value
    return Outcome(EXIT_OK, "yes" if verdict is Verdict.NonTrivial else "no", rec)


def _cmd_jsj(text, R, assume, fmt):
    t = engine.triage(R, assume)
    rec = _head(text, R, t)
    if t.case in INAPPLICABLE:
        rec["decomposition"] = None
        return _inapplicable(rec, t)
    d = engine.compute(R, assume)
    rec["decomposition"] = d.to_json()
    return Outcome(EXIT_OK, d.describe(), rec)


def _cmd_out(text, R, assume, fmt):
    t = engine.triage(R, assume)
    rec = _head(text, R, t)
    if t.case in INAPPLICABLE:
        rec["out_class"] = None
        return _inapplicable(rec, t)
    oc = engine.out_class(R, assume)
    rec["out_class"] = oc.value
    return Outcome(EXIT_OK, oc.value, rec)


def _cmd_polytope(text, R, assume, fmt):
    try:
        p = ft_polytope(R)
    except (NotInDerivedSubgroupError, EmptyWordError) as e:
        return Outcome(EXIT_INAPPLICABLE, "", _head(text, R), str(e))
    rec = _head(text, R)
    rec["polytope"] = p.to_json()
    if fmt == "svg":
        return Outcome(EXIT_OK, render_svg(R), rec)
    verts = " ".join(f"({v.x},{v.y})" for v in p.vertices)
    return Outcome(EXIT_OK, f"{p.to_json()['class']}: {verts}", rec)


def _cmd_minimize(text, R, assume, fmt):
    res = minimize(CyclicWord.of(R))
    rec = _head(text, R)
    rec.update(
        min=res.min.letters,
        length=len(res.min),
        witness=[aut.name for aut in res.witness],
    )
    lines = [res.min.letters or "1"] + [f"  {aut.name}" for aut in res.witness]
    return Outcome(EXIT_OK, "\n".join(lines), rec)


def _cmd_orbit(text, R, assume, fmt):
    orbit = shortest_orbit_set(CyclicWord.of(R))
    rec = _head(text, R)
    rec.update(min_length=orbit.min_length, members=orbit.to_json())
    return Outcome(EXIT_OK, "\n".join(orbit.to_json()), rec)


def _cmd_analyze(text, R, assume, fmt):
    report = engine.analyze(R, assume, text=text)
    rec = report.to_json()
    lines = [
        f"relator: {R.letters or '1'}",
        f"applicability: {rec['applicability']}",
        f"detection: {rec['detection']}",
    ]
    if report.decomposition is not None:
        lines.append("decomposition: " + report.decomposition.describe())
    if report.out_class is not None:
        lines.append(f"out: {report.out_class.value}")
    if rec["polytope"] is not None:
        lines.append(f"polytope: {rec['polytope']['class']} {rec['polytope']['vertices']}")
    lines += [f"warning: {w}" for w in report.warnings]
    return Outcome(EXIT_OK, "\n".join(lines), rec)


_HANDLERS = {
    "detect": _cmd_detect,
    "jsj": _cmd_jsj,
    "out": _cmd_out,
    "polytope": _cmd_polytope,
    "minimize": _cmd_minimize,
    "orbit": _cmd_orbit,
    "analyze": _cmd_analyze,
}


def run_one(command: str, text: str, assume: Assumptions, fmt: str) -> Outcome:
    try:
        R = parse_relator(text)
    except ParseError as e:
        return Outcome(EXIT_PARSE, "", {"input": text, "error": str(e)}, f"parse error {e}")
    if fmt == "svg" and command != "polytope":
        return Outcome(EXIT_PARSE, "", {"input": text}, "--format svg is only valid for polytope")
    try:
        return _HANDLERS[command](text, R, assume, fmt)
    except OrjsjError as e:
        return Outcome(EXIT_INTERNAL, "", {"input": text, "error": str(e)}, f"error: {e}")


def _run_job(job):
    return run_one(*job)


def _severity(code):
    return {EXIT_INTERNAL: 3, EXIT_PARSE: 2, EXIT_INAPPLICABLE: 1, EXIT_OK: 0}[code]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orjsj",
        description="Z_max-JSJ decompositions of two-generator one-relator groups <a, b | R>.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="{" + ",".join(COMMANDS) + "}")
    helps = {
        "detect": "print yes if the Z_max-JSJ decomposition is non-trivial, no otherwise",
        "jsj": "compute the Z_max-JSJ decomposition",
        "out": "classify Out(G) as finite, virtually-Z or GL2(Z)",
        "polytope": "Friedl-Tillmann polytope of a relator in F'",
        "minimize": "Whitehead-minimize the relator",
        "orbit": "all shortest elements of the Aut(F)-orbit",
        "analyze": "full report",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("relator", nargs="?", help="relator or presentation; '-' reads stdin")
        p.add_argument("--format", choices=("text", "json", "svg"), default="text")
        p.add_argument("--assume-hyperbolic", action="store_true")
        p.add_argument("--assume-rg", action="store_true")
        p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
        p.add_argument("--batch", metavar="FILE", help="one relator per line")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")

    p = sub.add_parser("oracle")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    return parser


def _oracle_report(args) -> dict:
    report = oracle.exhaustive_agreement(args.max_length, lambda c: minimize(c).min)
    mismatched = []
    for i in range(args.samples):
        R = oracle.random_derived_word(args.seed * 100_003 + i, 4 + 2 * (i % 6))
        c = CyclicWord.of(R)
        bfs = oracle.bfs_orbit(c, len(c))
        fast = shortest_orbit_set(c)
        if bfs.minimal != fast.members or bfs.min_length != fast.min_length:
            mismatched.append(c.letters)
    report["orbit_set_samples"] = args.samples
    report["orbit_set_mismatches"] = mismatched
    report["ok"] = not report["disagreements"] and not mismatched
    return report


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "oracle":
        report = _oracle_report(args)
        _emit(args, json.dumps(report, indent=2) + "\n")
        return EXIT_OK if report["ok"] else EXIT_INTERNAL

    assume = Assumptions(args.assume_hyperbolic, args.assume_rg)
    if args.batch is not None:
        with open(args.batch, encoding="utf-8") as f:
            lines = [ln.strip() for ln in f if ln.strip()]
        batch = True
    elif args.relator in (None, "-"):
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
        batch = len(lines) != 1
    else:
        lines = [args.relator]
        batch = False
    if args.format == "svg" and batch:
        sys.stderr.write("--format svg takes a single relator\n")
        return EXIT_PARSE

    jobs = [(args.command, ln, assume, args.format) for ln in lines]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_run_job, jobs))
    else:
        outcomes = [_run_job(j) for j in jobs]

    chunks = []
    for o in outcomes:
        if o.error:
            sys.stderr.write(o.error + "\n")
        if args.format == "json":
            rec = dict(o.record, exit_code=o.code) if batch else o.record
            if batch:
                chunks.append(json.dumps(rec, ensure_ascii=False) + "\n")
            elif o.code in (EXIT_OK, EXIT_INAPPLICABLE):
                chunks.append(json.dumps(rec, indent=2, ensure_ascii=False) + "\n")
        elif o.text:
            chunks.append(o.text if o.text.endswith("\n") else o.text + "\n")
    _emit(args, "".join(chunks))
    return max((o.code for o in outcomes), key=_severity, default=EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())
