"""Command-line front end.

    chainasl <verb> --input fig1|fig2|fig3|chains:2,1|path [options]

Exit codes: 0 success, 2 parse error, 3 budget exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import asl_enum, birkhoff, geometry, poset, toric
from .errors import ChainASLError, ParseError, VerificationFailure

SCHEMA = "chainasl.report/1"
VERBS = ("ideals", "antichains", "lattice", "relations", "hilbert", "ehrhart",
         "idp", "triangulate", "enumerate", "conjecture")


@dataclass
class Report:
    command: dict
    poset: dict | None
    result: dict
    schema: str = SCHEMA
    error: dict | None = field(default=None)

    def to_json(self) -> dict:
        out = {"schema": self.schema, "command": self.command, "poset": self.poset, "result": self.result}
        if self.error is not None:
            out["error"] = self.error
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        return cls(data["command"], data["poset"], data["result"], data["schema"], data.get("error"))


def poset_summary(P: poset.Poset) -> dict:
    return {"d": P.d, "covers": [list(c) for c in P.sorted_covers()]}


def _subsets(masks) -> list[list[int]]:
    return [list(poset.members(m)) for m in masks]


def _lattice_payload(L: birkhoff.DistLattice) -> dict:
    return {
        "elements": list(L.elements),
        "ideals": _subsets(L.elements),
        "covers": [[L.elements[a], L.elements[b]] for a, b in L.cover_pairs()],
        "incomparable_pairs": [[L.elements[a], L.elements[b]] for a, b in birkhoff.incomparable_pairs(L)],
        "maximal_chains": len(birkhoff.maximal_lattice_chains(L)),
    }


def _system_payload(s: asl_enum.CompatibleASL, L) -> dict:
    return {
        "tag": s.tag,
        "symmetric": s.symmetric,
        "relations": s.system.to_json(),
        "witness": s.witness.to_json(L),
    }


def _do_enumerate(P, args) -> dict:
    L = birkhoff.build_lattice(P, args.lattice_bound)
    systems = asl_enum.enumerate_compatible(L, args.degree_bound, args.candidate_budget)
    return {
        "degree_bound": args.degree_bound,
        "candidates": asl_enum.candidate_count(L),
        "count": len(systems),
        "symmetric_count": sum(s.symmetric for s in systems),
        "tags": [s.tag for s in systems],
        "systems": [_system_payload(s, L) for s in systems],
    }


def execute(args) -> Report:
    command = {
        "verb": args.verb,
        "input": args.input,
        "ring": args.ring,
        "polytope": args.polytope,
        "max_degree": args.max_degree,
        "max_dilate": args.max_dilate,
        "degree_bound": args.degree_bound,
    }
    if args.verb == "conjecture":
        if not args.lengths:
            raise ParseError("conjecture needs --lengths, e.g. --lengths 2,2")
        try:
            lengths = [int(x) for x in args.lengths.split(",")]
        except ValueError:
            raise ParseError(f"bad --lengths {args.lengths!r}") from None
        command["lengths"] = lengths
        P = poset.disjoint_union_of_chains(lengths)
        rep = asl_enum.conjecture_report(lengths, args.degree_bound, args.candidate_budget)
        L = birkhoff.build_lattice(P)
        result = rep.to_json()
        result["systems"] = [_system_payload(s, L) for s in rep.systems]
        return Report(command, poset_summary(P), result)

    if args.input is None:
        raise ParseError(f"{args.verb} needs --input")
    P = poset.load_poset(args.input)
    verb = args.verb
    if verb == "ideals":
        result = {"ideals": _subsets(poset.ideals(P))}
    elif verb == "antichains":
        result = {"antichains": _subsets(poset.antichains(P))}
    elif verb == "lattice":
        result = _lattice_payload(birkhoff.build_lattice(P, args.lattice_bound))
    elif verb == "relations":
        L = birkhoff.build_lattice(P, args.lattice_bound)
        result = toric.verify_straightening(toric.ring_spec(L, args.ring)).to_json()
    elif verb == "hilbert":
        L = birkhoff.build_lattice(P, args.lattice_bound)
        spec = toric.ring_spec(L, args.ring)
        result = toric.standard_basis_check(spec, args.max_degree, max(args.max_degree, toric.DEGREE_BOUND)).to_json()
        result["hilbert"] = [1] + [d["hilbert_dim"] for d in result["degrees"]]
    elif verb == "ehrhart":
        spec = geometry.PolytopeSpec(P, args.polytope)
        result = {"polytope": args.polytope, "counts": geometry.ehrhart_table(spec, args.max_dilate, args.box_budget)}
    elif verb == "idp":
        spec = geometry.PolytopeSpec(P, args.polytope)
        checks = [geometry.idp_check(spec, n, args.box_budget) for n in range(1, args.max_dilate + 1)]
        result = {
            "polytope": args.polytope,
            "ok": all(c.ok for c in checks),
            "levels": [{"n": c.n, "ok": c.ok, "sums": c.counts[-1],
                        "witness": list(c.witness) if c.witness else None} for c in checks],
        }
        if not result["ok"]:
            bad = next(c for c in checks if not c.ok)
            raise VerificationFailure("integer decomposition fails", witness={"n": bad.n, "point": list(bad.witness)})
    elif verb == "triangulate":
        tri = geometry.canonical_triangulation(P)
        rep = geometry.verify_triangulation(P, tri, args.max_dilate, args.box_budget)
        result = {"simplices": [[list(v) for v in s.vertices] for s in tri], "check": rep.to_json()}
    elif verb == "enumerate":
        result = _do_enumerate(P, args)
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown verb {verb!r}")
    return Report(command, poset_summary(P), result)


def render_text(report: Report) -> str:
    if report.error is not None:
        lines = [f"error ({report.error['type']}): {report.error['message']}"]
        if report.error.get("witness") is not None:
            lines.append(f"witness: {json.dumps(report.error['witness'], sort_keys=True)}")
        return "\n".join(lines) + "\n"
    cmd, r = report.command, report.result
    lines = []
    if report.poset:
        covers = ", ".join(f"{i}<{j}" for i, j in report.poset["covers"]) or "none"
        lines.append(f"poset: d={report.poset['d']} covers: {covers}")
    verb = cmd["verb"]
    fmt = lambda s: "{" + ",".join(map(str, s)) + "}"
    if verb in ("ideals", "antichains"):
        items = r[verb]
        lines.append(f"{len(items)} {verb}:")
        lines += ["  " + fmt(s) for s in items]
    elif verb == "lattice":
        lines.append(f"{len(r['ideals'])} ideals:")
        lines += ["  " + fmt(s) for s in r["ideals"]]
        lines.append(f"incomparable pairs: {len(r['incomparable_pairs'])}")
        lines.append(f"maximal chains: {r['maximal_chains']}")
    elif verb == "relations":
        lines.append(f"ring {r['kind']}: {len(r['pairs'])} straightening relations")
        for p in r["pairs"]:
            a, b = (fmt(poset.members(m)) for m in p["pair"])
            lo, hi = fmt(poset.members(p["low"])), fmt(poset.members(p["high"]))
            lines.append(f"  {a} * {b} = {lo} * {hi}   [{p['lhs']}]  {'ok' if p['ok'] else 'FAIL'}")
    elif verb == "hilbert":
        lines.append(f"ring {r['kind']}: Hilbert function {r['hilbert']}  basis check {'ok' if r['ok'] else 'FAIL'}")
    elif verb == "ehrhart":
        lines.append(f"{r['polytope']} polytope lattice-point counts: {r['counts']}")
    elif verb == "idp":
        lines.append(f"{r['polytope']} polytope IDP up to n={len(r['levels'])}: {'ok' if r['ok'] else 'FAIL'}")
    elif verb == "triangulate":
        c = r["check"]
        lines.append(f"{c['simplices']} unimodular simplices, volume {c['volume_sum']} = {c['ehrhart_volume']}, "
                     f"flag cliques {c['flag_cliques']}")
        for s in r["simplices"]:
            lines.append("  " + " ".join("(" + ",".join(map(str, v)) + ")" for v in s))
    elif verb in ("enumerate", "conjecture"):
        lines.append(f"{r['count']} compatible ASLs at degree bound {r['degree_bound']}: {', '.join(r['tags'])}")
        if verb == "enumerate":
            lines.append(f"fixed by all lattice automorphisms: {r['symmetric_count']}")
        else:
            lines.append(f"canonical trio distinct: {r['canonical_distinct']}; "
                         f"enumerated set equals canonical trio: {r['equals_canonical_trio']}")
    return "\n".join(lines) + "\n"


def emit(report: Report, fmt: str = "text", path: str | None = None) -> None:
    if fmt == "json":
        text = json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(report)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _positive(x: str) -> int:
    v = int(x)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {x}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chainasl", description="Order/chain polytopes and straightening laws on J(P).")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--input", "-i", help="fig1, fig2, fig3, chains:l1,l2,... or a poset file")
    p.add_argument("--lengths", help="chain lengths for the conjecture verb, e.g. 2,2")
    p.add_argument("--ring", choices=toric.KINDS, default="order")
    p.add_argument("--polytope", choices=geometry.POLYTOPE_KINDS, default="order")
    p.add_argument("--max-degree", type=_positive, default=3)
    p.add_argument("--max-dilate", type=_positive, default=2)
    p.add_argument("--degree-bound", type=int, default=asl_enum.ENUM_DEGREE_BOUND)
    p.add_argument("--candidate-budget", type=_positive, default=asl_enum.CANDIDATE_BUDGET)
    p.add_argument("--box-budget", type=_positive, default=geometry.BOX_BUDGET)
    p.add_argument("--lattice-bound", type=_positive, default=birkhoff.LATTICE_BOUND)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o")
    return p


def run(argv: list[str] | None = None) -> tuple[int, Report]:
    args = build_parser().parse_args(argv)
    try:
        if args.degree_bound < 2:
            raise ParseError("--degree-bound must be at least 2")
        report = execute(args)
        code = 0
    except ChainASLError as exc:
        report = Report(
            {"verb": args.verb, "input": args.input},
            None,
            {},
            error={"type": type(exc).__name__, "message": str(exc), "witness": getattr(exc, "witness", None)},
        )
        code = exc.exit_code
    return code, report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code, report = run(argv)
    emit(report, args.format, args.output)
    if code:
        print(f"chainasl: {report.error['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
