"""Command-line front end.

Exit status: 0 when the verdict holds (or a classification matches), 1 when
it fails, 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from . import criteria
from .classify import PLANS, PRUNER_NAMES, enumerate_pure_2complexes, verify_classification
from .complex import ComplexError, SimplicialComplex, from_facets, load_complex
from .covers import Decomposer
from .graphs import ramsey43_cycle_property
from .homology import normalize_field
from .ideal import powers_equal
from .verdict import ConsistencyError, Verdict, VerdictReport, jsonable

SCHEMA = "srpowers/1"
VERBS = ("check", "equality", "cm", "enumerate", "verify")


@dataclass
class Command:
    verb: str
    complex: SimplicialComplex | None = None
    source: str | None = None
    m: int | None = None
    field: Any = "Q"
    theorem: str | None = None
    n: int | None = None
    pruner: str = "none"
    brute_force: bool = False
    json: bool = False
    timings: bool = False
    threads: int = 1
    options: dict = dc_field(default_factory=dict)


class UsageError(Exception):
    pass


def parse_facets(text: str, n: int | None = None) -> SimplicialComplex:
    """``"1 2 3; 1 2 4"`` (commas also separate vertices)."""
    facets = []
    for chunk in text.split(";"):
        chunk = chunk.replace(",", " ").strip()
        if chunk:
            try:
                facets.append([int(tok) for tok in chunk.split()])
            except ValueError as exc:
                raise ComplexError(f"malformed facet {chunk!r}") from exc
    if not facets:
        raise ComplexError("no facets given")
    return from_facets(n if n is not None else max(max(f) for f in facets), facets)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
    common.add_argument("--threads", type=int, default=1, help="parallelism cap (work runs in one process)")
    common.add_argument("--seed", type=int, default=None, help="accepted and ignored; everything is deterministic")
    common.add_argument("--timings", action="store_true", help="include wall-clock times in reports")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--file", help="complex as JSON ({n, facets}) or the n=/line format")
    source.add_argument("--facets", help='inline facets, e.g. "1 2 3; 1 2 4"')
    source.add_argument("--n", type=int, default=None, help="vertex count for --facets")

    p = argparse.ArgumentParser(prog="srpowers", description="Symbolic and ordinary powers of Stanley-Reisner ideals.")
    sub = p.add_subparsers(dest="verb", required=True)

    eq = sub.add_parser("equality", parents=[common, source], help="is I^(m) = I^m?")
    eq.add_argument("--m", type=int, required=True)
    eq.add_argument("--brute-force", action="store_true", help="cover decomposition only, no criterion")

    cm = sub.add_parser("cm", parents=[common, source], help="is I^m Cohen-Macaulay? (dimension 1 or 2)")
    cm.add_argument("--m", type=int, default=2)
    cm.add_argument("--field", default="q", help="q for the rationals or a prime p")

    ck = sub.add_parser("check", parents=[common, source], help="run one criterion")
    ck.add_argument("--theorem", required=True, choices=sorted(CHECKS))
    ck.add_argument("--m", type=int, default=None)
    ck.add_argument("--field", default="q")

    en = sub.add_parser("enumerate", parents=[common], help="list complexes up to isomorphism")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--pruner", default="none", choices=PRUNER_NAMES)

    vf = sub.add_parser("verify", parents=[common], help="re-derive a classification")
    vf.add_argument("--theorem", required=True, choices=sorted(PLANS))
    vf.add_argument("--max-n", type=int, default=None, help="skip vertex counts above this")
    vf.add_argument("--pruner", default=None, choices=PRUNER_NAMES)
    return p


def _load(ns: argparse.Namespace) -> tuple[SimplicialComplex, str]:
    if bool(ns.file) == bool(ns.facets):
        raise UsageError("give exactly one of --file or --facets")
    if ns.file:
        return load_complex(ns.file), ns.file
    return parse_facets(ns.facets, ns.n), "inline"


def parse_args(argv: Sequence[str]) -> Command:
    """Validate argv; raises UsageError (argparse itself exits with status 2)."""
    ns = _parser().parse_args(list(argv))
    if getattr(ns, "m", None) is not None and ns.m < 1:
        raise UsageError("--m must be at least 1")
    if ns.threads < 1:
        raise UsageError("--threads must be at least 1")
    cmd = Command(verb=ns.verb, json=ns.json, timings=ns.timings, threads=ns.threads)
    if ns.verb in ("equality", "cm", "check"):
        try:
            cmd.complex, cmd.source = _load(ns)
        except OSError as exc:
            raise UsageError(f"cannot read {ns.file}: {exc}") from exc
        cmd.m = ns.m
    if ns.verb in ("cm", "check"):
        try:
            cmd.field = normalize_field(None if ns.field.lower() == "q" else ns.field)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if ns.verb == "equality":
        cmd.brute_force = ns.brute_force
    if ns.verb == "check":
        cmd.theorem = ns.theorem
        if ns.theorem in NEEDS_M and ns.m is None:
            raise UsageError(f"--theorem {ns.theorem} needs --m")
    if ns.verb == "enumerate":
        cmd.n, cmd.pruner = ns.n, ns.pruner
    if ns.verb == "verify":
        cmd.theorem = ns.theorem
        cmd.pruner = ns.pruner
        cmd.options["max_n"] = ns.max_n
    return cmd


# -- checks ---------------------------------------------------------------------------------


def _ramsey_check(cx: SimplicialComplex, cmd: Command) -> VerdictReport:
    return ramsey43_cycle_property(cx.edge_graph())


CHECKS = {
    "1.3": lambda cx, c: criteria.prop_1_3(cx),
    "1.4-1.8": lambda cx, c: criteria.structural_lemmas(cx, c.m),
    "1.10": _ramsey_check,
    "2.1": lambda cx, c: criteria.thm_2_1(cx),
    "2.2": lambda cx, c: criteria.thm_2_2(cx),
    "2.3": lambda cx, c: criteria.thm_2_3(cx),
    "2.5": lambda cx, c: criteria.thm_2_5(cx),
    "2.6": lambda cx, c: criteria.thm_2_6(cx, c.m),
    "3.1": lambda cx, c: criteria.symbolic_cm2_by_subcomplexes(cx, c.field),
    "3.2": lambda cx, c: criteria.is_matroid(cx),
    "3.4": lambda cx, c: criteria.symbolic_cm2(cx, c.field),
    "3.5": lambda cx, c: criteria.matroid_clauses_dim2(cx),
    "3.7": lambda cx, c: criteria.dim1_cm_power(cx, c.m),
}
NEEDS_M = {"1.4-1.8", "2.6", "3.7"}


def _equality(cmd: Command) -> tuple[int, dict]:
    cx = cmd.complex
    oracle = powers_equal(cx, cmd.m, Decomposer(cx))
    if cmd.brute_force:
        out = {"verdict": oracle.equal, "route": "cover decomposition",
               "witness": None if oracle.witness is None else list(oracle.witness)}
        return (0 if oracle.equal else 1), out
    rep = criteria.equality_verdict(cx, cmd.m)
    out = rep.to_dict()
    if rep.verdict is Verdict.NOT_APPLICABLE:
        out["fallback"] = "cover decomposition"
    elif rep.holds != oracle.equal:
        raise ConsistencyError(f"criterion {rep.theorem} and cover decomposition disagree")
    out["verdict"] = oracle.equal
    out["cover_witness"] = None if oracle.witness is None else list(oracle.witness)
    return (0 if oracle.equal else 1), out


def _verify(cmd: Command) -> tuple[int, dict]:
    plan_ns = PLANS[cmd.theorem].ns
    max_n = cmd.options.get("max_n")
    ns = [n for n in plan_ns if max_n is None or n <= max_n]
    if not ns:
        raise UsageError(f"--max-n leaves no vertex count to check (available: {plan_ns})")
    rep = verify_classification(cmd.theorem, ns, pruner=cmd.pruner)
    out = rep.to_dict()
    if not cmd.timings:
        for r in out["results"]:
            r.pop("elapsed", None)
    return (0 if rep.matched else 1), out


def run(cmd: Command) -> tuple[int, dict]:
    """Execute a parsed command; returns (exit status, JSON-ready report)."""
    if cmd.verb == "equality":
        return _equality(cmd)
    if cmd.verb == "cm":
        rep = criteria.cm_power_verdict(cmd.complex, cmd.m, cmd.field)
        return (0 if rep.holds else 1), rep.to_dict()
    if cmd.verb == "check":
        rep = CHECKS[cmd.theorem](cmd.complex, cmd)
        status = 0 if rep.holds else 1 if rep.fails else 2
        return status, rep.to_dict()
    if cmd.verb == "enumerate":
        cxs = [c.to_dict() for c in enumerate_pure_2complexes(cmd.n, cmd.pruner)]
        return 0, {"n": cmd.n, "pruner": cmd.pruner, "count": len(cxs), "complexes": cxs}
    if cmd.verb == "verify":
        return _verify(cmd)
    raise UsageError(f"unknown verb {cmd.verb!r}")


def _render_text(cmd: Command, status: int, report: dict) -> str:
    if cmd.verb == "enumerate":
        lines = [f"{report['count']} complexes on {report['n']} vertices (pruner {report['pruner']})"]
        lines += [" ".join("{" + ",".join(map(str, f)) + "}" for f in c["facets"]) for c in report["complexes"]]
        return "\n".join(lines)
    if cmd.verb == "verify":
        lines = [f"theorem {report['theorem']}: {'matched' if report['matched'] else 'MISMATCH'}"]
        for r in report["results"]:
            lines.append(f"  n={r['n']}: {len(r['survivors'])} survivors, "
                         f"{'matched' if r['matched'] else 'mismatch'} (pruner {r['pruner']})")
            lines += ["    " + " ".join("{" + ",".join(map(str, f)) + "}" for f in s) for s in r["survivors"]]
        return "\n".join(lines)
    word = {0: "holds", 1: "fails", 2: "not applicable"}[status]
    lines = [f"{cmd.verb}: {word}"]
    for key in ("theorem", "route", "conditions", "witness", "cover_witness", "fallback"):
        if report.get(key) not in (None, {}, "none"):
            lines.append(f"  {key}: {json.dumps(report[key], sort_keys=True)}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    err = sys.stderr
    try:
        cmd = parse_args(argv)
        status, report = run(cmd)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"srpowers: usage error: {exc}", file=err)
        return 2
    except (ComplexError, ValueError, KeyError, OSError, ConsistencyError, NotImplementedError) as exc:
        print(f"srpowers: error: {exc}", file=err)
        return 2
    if cmd.json:
        payload = {"schema": SCHEMA, "command": cmd.verb, "status": status, "report": jsonable(report)}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(_render_text(cmd, status, report))
    return status


if __name__ == "__main__":
    sys.exit(main())
