"""Command-line front end: ``python3 -m stackytoric <command> FILE``.

Exit codes: 0 success, 2 usage or schema problems, 3 mathematical
precondition failures.  Reports are sorted-key JSON so identical jobs give
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from fractions import Fraction

from . import io
from .crossedmod import morita_invariants, quasilattice_iso
from .errors import DataError, FreenessViolation, StackyError
from .fingroupoid import (check_principal,
                          classify_action_groupoid, finite_morita_moves, groupoid_invariants,
                          isotropy_report, leafwise_transitive, obstruction_groupoid,
                          quotient_map, reduction_groupoid, regular_action, validate_action)
from .polytope import is_simple
from .prato import SamplingConfig, analyze, build_prato_data, dh_scan

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 2, 3


class UsageError(io.SchemaError):
    def to_json(self) -> dict:
        return {"error": "usage", "message": self.message, "details": {}}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stackytoric", description="Exact checks for stacky toric data.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("input", help="JSON file, or - for stdin")
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    a = sub.add_parser("analyze", help="full analysis of a stacky polytope")
    common(a)
    a.add_argument("--seed", type=_int, default=0x5EED)
    a.add_argument("--samples", type=int, default=10_000)
    a.add_argument("--grid", default="1/100", help="grid spacing h (a rational)")

    d = sub.add_parser("dh-scan", help="slice volumes along a direction")
    common(d)
    d.add_argument("--xi", required=True, help="direction: 1,0 or a JSON list of literals")
    d.add_argument("--grid", type=int, default=None,
                   help="sample points per chamber (default dim + 2)")
    d.add_argument("--csv", help="write the CSV here")

    f = sub.add_parser("finite-check", help="check a finite crossed-module action")
    common(f)

    m = sub.add_parser("morita", help="Morita equivalence of two quasi-lattices")
    common(m)
    m.add_argument("--bound", type=int, default=3)
    return p


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise io.SchemaError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def _source(path: str) -> str:
    return "<stdin>" if path == "-" else path


# -- commands -------------------------------------------------------------------

def cmd_analyze(args) -> dict:
    S, cover, Z = io.parse_stacky(_load(args.input))
    try:
        h = Fraction(args.grid)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--grid must be a rational, got {args.grid!r}") from None
    if h <= 0 or args.samples < 0:
        raise UsageError("--grid must be positive and --samples non-negative")
    cfg = SamplingConfig(seed=args.seed, samples=args.samples, grid=h)
    rep = analyze(S, cover, Z, cfg)
    if not rep["validity"]["valid"]:
        problems = rep["validity"]["problems"]
        raise DataError("; ".join(problems), problems=problems)
    if not rep["validity"]["bounded"]:
        raise DataError("polytope is unbounded")
    summary = {"classification": rep["classification"]["classification"],
               "rational": rep["classification"]["image_discrete"],
               "simple": is_simple(S.P)}
    red = rep.get("reduction")
    summary["reduction"] = "not applicable" if red is None else (
        "exists" if red["exists"] else "obstructed")
    mi = rep["moment_image"]
    verdict = "verified" if mi["ok"] else "not verified"
    pts = [v["point"] for v in rep["vertices"]]
    if S.P.dim == 1 and pts:
        summary["image"] = f"[{pts[0][0]},{pts[-1][0]}] {verdict}"
    else:
        summary["image"] = f"polytope with {len(pts)} vertices {verdict}"
    rep["summary"] = summary
    rep["job"] = {"command": "analyze", "input": _source(args.input), "seed": args.seed,
                  "samples": args.samples, "grid": str(h), "cover": cover or "labels",
                  "rng": mi["monte_carlo"]["rng"], "shard_size": cfg.shard_size}
    return rep


def _parse_xi(text: str, d: int) -> list:
    text = text.strip()
    try:
        items = json.loads(text) if text.startswith("[") else text.split(",")
    except json.JSONDecodeError:
        raise UsageError(f"cannot parse --xi {text!r}") from None
    try:
        return [io.parse_literal(x.strip() if isinstance(x, str) else x, d) for x in items]
    except (ValueError, ZeroDivisionError, KeyError, TypeError):
        raise UsageError(f"cannot parse --xi {text!r}") from None


def cmd_dh_scan(args) -> dict:
    doc = _load(args.input)
    S, cover, Z = io.parse_stacky(doc)
    xi = _parse_xi(args.xi, doc["field_d"])
    D = build_prato_data(S, cover, Z)
    rep = dh_scan(D, S, xi, args.grid)
    out = rep.as_dict()
    out["chambers"] = [{k: v for k, v in c.items()} for c in rep.chambers]
    out["samples"] = [{"u": u, "chamber_id": cid, "V": V} for u, cid, V in rep.rows]
    out["job"] = {"command": "dh-scan", "input": _source(args.input),
                  "xi": [x.literal() for x in xi], "cover": cover or "labels",
                  "grid": args.grid if args.grid is not None else S.P.dim + 2}
    if args.csv:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(rep.csv_rows())
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
        out["job"]["csv"] = args.csv
    return out


def cmd_finite_check(args) -> dict:
    cm, X, a, moves = io.parse_finite(_load(args.input))
    cm.check()
    rep: dict = {"crossed_module": {"G_order": len(cm.G), "H_order": len(cm.H),
                                    "kernel": sorted(cm.kernel()), "image": sorted(cm.image())},
                 "groupoid": {"objects": len(X.objects), "arrows": len(X.arrows)}}
    act = validate_action(cm, X, a)
    rep["action"] = act.as_dict()
    if not act.ok:
        raise DataError("not a crossed-module action", law=act.law, instance=act.instance)
    rep["leafwise_transitive"] = leafwise_transitive(cm, X, a)
    rep["regularity"] = regular_action(cm, X, a).as_dict()
    try:
        nf = classify_action_groupoid(cm, X, a)
        rep["normal_form"] = None if nf is None else nf.as_dict()
    except StackyError as exc:
        rep["normal_form"] = {"unavailable": exc.message}
    try:
        Rq = reduction_groupoid(cm, X, a)
    except FreenessViolation as exc:
        rep["reduction"] = {"exists": False, "witness": exc.details.get("witness")}
        rep["principal"] = {"ok": False, "reason": "H does not act freely on arrows"}
        Y = obstruction_groupoid(cm, X, a)
        rep["obstruction"] = isotropy_report(Y)
    else:
        psi = quotient_map(cm, X, a, Rq)
        rep["reduction"] = {"exists": True, "objects": len(Rq.objects),
                            "arrows": len(Rq.arrows), **groupoid_invariants(Rq)}
        rep["principal"] = check_principal(psi, cm, a).as_dict()
        rep["isotropy"] = isotropy_report(Rq)
    kw = {}
    if "subgroup" in moves:
        kw["subgroup"] = moves["subgroup"]
    if "normal" in moves:
        kw["normal"] = moves["normal"]
    rep["morita_moves"] = {k: v.as_dict() for k, v in finite_morita_moves(cm, **kw).items()}
    rep["job"] = {"command": "finite-check", "input": _source(args.input),
                  "moves": {"subgroup": kw.get("subgroup", "G"),
                            "normal": kw.get("normal", "trivial"), "cover": "identity"}}
    return rep


def cmd_morita(args) -> dict:
    Q1, Q2, cert = io.parse_morita(_load(args.input))
    if args.bound < 0:
        raise UsageError("--bound must be non-negative")
    res = quasilattice_iso(Q1, Q2, cert, bound=args.bound)
    verdict = res.status if res.status != "inequivalent" else \
        f"inequivalent: {res.reason.split(': ', 1)[-1]}"
    out = {"verdict": verdict, "status": res.status, "reason": res.reason,
           "certificate": res.certificate, "searched": res.searched,
           "invariants": {"source": morita_invariants(Q1).as_dict(),
                          "target": morita_invariants(Q2).as_dict()},
           "job": {"command": "morita", "input": _source(args.input), "bound": args.bound,
                   "certificate_supplied": cert is not None}}
    if res.certificate is not None:
        out["certificate_literal"] = {"U": res.certificate["U"],
                                      "T": [[x.literal() for x in r]
                                            for r in res.certificate["T"].rows]}
    return out


COMMANDS = {"analyze": cmd_analyze, "dh-scan": cmd_dh_scan,
            "finite-check": cmd_finite_check, "morita": cmd_morita}


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = None
    try:
        args = build_parser().parse_args(argv)
        report = COMMANDS[args.command](args)
    except io.SchemaError as exc:
        sys.stdout.write(io.dumps(exc.to_json()))
        return EXIT_USAGE
    except StackyError as exc:
        sys.stdout.write(io.dumps(exc.to_json()))
        return EXIT_MATH
    _emit(io.dumps(report), args.out)
    return EXIT_OK
