"""Batch command-line front end.

Subcommands: compute | verify | congruence | series. Exit codes: 0 all
checks pass, 1 verified failure(s), 2 usage/config error. Every rational is
printed as "num/den" in lowest terms; no floating point appears anywhere.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import classical, congr, fps, identities, polybern, seqcore

SEQUENCES = ("bernoulli", "euler", "cauchy1", "stirling1", "stirling2",
             "harmonic", "dibernoulli", "hw", "poly_bernoulli")


def rat_str(r) -> str:
    if r is None:
        return "indeterminate"
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _params_json(params: dict) -> dict:
    return {k: (v if isinstance(v, int) else rat_str(v))
            for k, v in params.items()}


def _emit(payload: dict, args) -> None:
    if not args.no_meta:
        payload = {"meta": {"generated_at": time.strftime("%Y-%m-%dT%H:%M:%S")},
                   **payload}
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        text = _to_csv(payload)
    else:
        text = _to_markdown(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _to_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    if "values" in payload:
        w.writerow(["index", "value"])
        for i, v in enumerate(payload["values"]):
            w.writerow([i, v])
    elif "rows" in payload:
        w.writerow(["n", "row"])
        for n, row in enumerate(payload["rows"]):
            w.writerow([n, " ".join(str(v) for v in row)])
    else:
        w.writerow(["suite", payload.get("suite", "")])
        w.writerow(["cases", payload.get("cases", 0)])
        w.writerow(["id", "params", "lhs", "rhs"])
        for f in payload.get("failures", []):
            w.writerow([f["id"], json.dumps(f["params"], sort_keys=True),
                        json.dumps(f["lhs"]), json.dumps(f["rhs"])])
        for note in payload.get("notes", []):
            w.writerow(["note", note])
    return buf.getvalue()


def _to_markdown(payload: dict) -> str:
    lines = []
    if "values" in payload:
        lines.append(f"## {payload.get('sequence', payload.get('series', ''))}")
        lines.append("")
        lines.append("| n | value |")
        lines.append("|---|-------|")
        for i, v in enumerate(payload["values"]):
            lines.append(f"| {i} | {v} |")
    elif "rows" in payload:
        lines.append(f"## {payload['sequence']}")
        lines.append("")
        for n, row in enumerate(payload["rows"]):
            lines.append(f"- row {n}: {' '.join(str(v) for v in row)}")
    else:
        lines.append(f"## suite: {payload['suite']}")
        lines.append("")
        lines.append(f"- cases: {payload['cases']}")
        lines.append(f"- failures: {len(payload.get('failures', []))}")
        for f in payload.get("failures", []):
            lines.append(f"  - {f['id']} {json.dumps(f['params'], sort_keys=True)}"
                         f": lhs={f['lhs']} rhs={f['rhs']}")
        for note in payload.get("notes", []):
            lines.append(f"- note: {note}")
    return "\n".join(lines) + "\n"


def _cmd_compute(args) -> int:
    name = args.sequence
    if name not in SEQUENCES:
        print(f"unknown sequence {name!r}", file=sys.stderr)
        return 2
    n_max = args.n_max
    if n_max < 0:
        print("--n-max must be >= 0", file=sys.stderr)
        return 2
    payload: dict = {"sequence": name}
    if name in ("stirling1", "stirling2"):
        fn = seqcore.stirling1 if name == "stirling1" else seqcore.stirling2
        payload["rows"] = [[fn(n, k) for k in range(n + 1)]
                           for n in range(n_max + 1)]
    else:
        fns = {
            "bernoulli": classical.bernoulli,
            "euler": classical.euler_number,
            "cauchy1": classical.cauchy1,
            "harmonic": seqcore.harmonic,
            "dibernoulli": polybern.dibernoulli,
            "hw": lambda n: classical.hw(max(n, 1), args.x) if n >= 1 else None,
            "poly_bernoulli": lambda n: polybern.poly_bernoulli(n, args.p, args.x),
        }
        fn = fns[name]
        values = []
        for n in range(n_max + 1):
            v = fn(n)
            values.append(rat_str(v) if v is not None else "undefined")
        payload["values"] = values
    _emit(payload, args)
    return 0


def _bounds_from(args) -> identities.SweepBounds:
    return identities.SweepBounds(
        n_max=args.n_max, m_max=args.m_max,
        j_min=args.j_min if args.j_min is not None else 0,
        j_max=args.j_max,
        include_j_equals_n=args.include_j_equals_n)


def _cmd_verify(args) -> int:
    ids = list(identities.IDENTITY_IDS) if args.identity == "all" \
        else [args.identity]
    for id in ids:
        if id not in identities.CATALOG:
            print(f"unknown identity {id!r}", file=sys.stderr)
            return 2
    bounds = _bounds_from(args)
    reports = identities.verify_all(bounds, ids)
    failures = []
    notes = []
    cases = 0
    for rep in reports:
        cases += rep.cases
        notes.extend(f"{rep.id}: {note}" for note in rep.notes)
        for f in rep.failures:
            failures.append({
                "id": rep.id,
                "params": _params_json(f["params"]),
                "lhs": rat_str(f["lhs"]),
                "rhs": rat_str(f["rhs"]),
            })
    payload = {"suite": "identities", "cases": cases,
               "failures": failures, "notes": notes}
    _emit(payload, args)
    return 1 if failures else 0


def _cmd_congruence(args) -> int:
    ids = list(congr.CONGRUENCE_IDS) if args.congruence == "all" \
        else [args.congruence]
    for id in ids:
        if id not in congr.CONGRUENCE_IDS:
            print(f"unknown congruence {id!r}", file=sys.stderr)
            return 2
    if args.p_max < 3:
        print("--p-max must be >= 3", file=sys.stderr)
        return 2
    report = congr.prime_sweep(ids, args.p_max)
    failures = [{
        "id": res.id,
        "params": {"p": res.p, "case": res.label},
        "lhs": {"value": res.lhs.value, "modulus": res.lhs.modulus},
        "rhs": {"value": res.rhs.value, "modulus": res.rhs.modulus},
    } for res in report.failures]
    notes = [f"skipped: {s}" for s in report.skipped] + report.notes
    payload = {"suite": "congruence", "cases": report.cases,
               "failures": failures, "notes": notes}
    _emit(payload, args)
    return 1 if failures else 0


def _cmd_series(args) -> int:
    if args.series not in fps.SERIES_NAMES:
        print(f"unknown series {args.series!r}", file=sys.stderr)
        return 2
    if args.order < 1:
        print("--order must be >= 1", file=sys.stderr)
        return 2
    series = fps.named_series(args.series, args.order, k=args.k, p=args.p,
                              x=args.x)
    payload = {
        "series": args.series,
        "order": series.order,
        "ordinary": [rat_str(series.coeff(n)) for n in range(series.order + 1)],
        "egf": [rat_str(series.egf(n)) for n in range(series.order + 1)],
    }
    payload["values"] = payload["ordinary"]
    _emit(payload, args)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "markdown"),
                   default="json")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--no-meta", action="store_true",
                   help="omit the timestamped metadata header")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernkit",
        description="Exact Bernoulli/Stirling/harmonic toolkit and verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print a sequence over a range")
    p.add_argument("sequence")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--x", type=_parse_rational, default=Fraction(0),
                   help="rational argument for hw / poly_bernoulli")
    p.add_argument("--p", type=int, default=2, help="polylog order")
    _add_common(p)
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("verify", help="sweep identity catalog entries")
    p.add_argument("identity", help="catalog id or 'all'")
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("--j-min", type=int, default=None)
    p.add_argument("--j-max", type=int, default=None)
    p.add_argument("--include-j-equals-n", action="store_true",
                   help="include the documented j=n exclusion of MAIN")
    _add_common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("congruence", help="sweep prime congruences")
    p.add_argument("congruence", help="catalog id or 'all'")
    p.add_argument("--p-max", type=int, default=101)
    _add_common(p)
    p.set_defaults(fn=_cmd_congruence)

    p = sub.add_parser("series", help="dump a catalog generating function")
    p.add_argument("series")
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--k", type=int, default=1, help="Stirling EGF column")
    p.add_argument("--p", type=int, default=2, help="polylog order")
    p.add_argument("--x", type=_parse_rational, default=Fraction(0))
    _add_common(p)
    p.set_defaults(fn=_cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
