"""Command-line front end.

Each subcommand parses a polynomial (inline or from a file), dispatches to
the library, and emits a report as text, JSON, or CSV.  JSON is the
canonical machine format, carries a versioned "schema" field, and every
polynomial it contains re-parses to the identical polynomial over the
variable names printed next to it.  Exit codes separate failure kinds:
0 the computation completed (verdict content never affects the code),
2 usage, 3 parse failure, 4 desk-scale guard, 5 internal invariant breach.

The survey subcommand generates its own inputs: seeded random Perazzo forms
per degree (or the three canonical minimal families when --samples 0),
fanned out over a process pool and reduced to per-degree tallies of
h-vector strata, classification cases, Lefschetz verdicts, and
extremal-bound violations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import GuardError, InternalError, ParseError
from .forms import (
    PerazzoForm,
    algebraic_relation,
    classify,
    classify_polynomial,
    h_via_ranks,
    is_cone,
    max_hvector,
    min_hvector,
    osculating_family,
    random_perazzo_form,
    secant_membership,
    tangent_point_family,
    three_points_family,
    waring_rank,
)
from .inverse_systems import ann_basis, h_vector, is_osequence
from .lefschetz import has_slp, has_wlp, hessian
from .parsing import parse_poly
from .poly import (
    ROLE_PLAIN,
    ROLE_UV,
    ROLE_X,
    HomogeneousPoly,
    VariableSet,
)

SCHEMA = "perazzo-report/1"

_FORM_COMMANDS = (
    "hvector",
    "ann",
    "wlp",
    "slp",
    "hessian",
    "classify",
    "waring",
    "relation",
)
_BINARY_DEFAULT = ("waring", "relation")


def _variable_set(names_text: str) -> VariableSet:
    names = tuple(n.strip() for n in names_text.split(","))
    if any(not n for n in names):
        raise ValueError("empty variable name in --vars")
    if len(names) == 5:
        roles = (ROLE_X,) * 3 + (ROLE_UV,) * 2
    elif len(names) == 2:
        roles = (ROLE_UV, ROLE_UV)
    else:
        roles = (ROLE_PLAIN,) * len(names)
    return VariableSet(names, roles)


def _read_source(args) -> tuple[str, str]:
    """The polynomial text and where it came from; exactly one source."""
    inline = getattr(args, "expression", None)
    if inline is not None and args.file:
        raise ValueError("give an inline expression or --file, not both")
    if inline is not None:
        return inline, "inline"
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read().strip(), args.file
    raise ValueError("an input polynomial is required (inline or --file)")


def _fr(x: Fraction) -> str:
    return str(x)


def _report(command: str, args, input_text: str | None, source: str | None,
            vars: VariableSet | None) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "input": input_text,
        "source": source,
        "vars": list(vars.names) if vars is not None else None,
        "seed": args.seed,
        "results": {},
        "timing_ms": None,
    }


# -- subcommand payloads ----------------------------------------------------


def cmd_hvector(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "x0,x1,x2,u,v")
    f = parse_poly(text, ring)
    hv = h_vector(f, max_degree=args.max_degree)
    report = _report("hvector", args, text, source, ring)
    res = report["results"]
    res["h"] = list(hv.entries)
    res["socle_degree"] = f.degree
    res["symmetric"] = hv.entries == hv.entries[::-1]
    res["osequence"] = is_osequence(hv)
    try:
        pf = PerazzoForm.from_polynomial(f, max_degree=args.max_degree)
    except ValueError:
        pf = None
    if pf is not None:
        bounds = h_via_ranks(pf)
        res["perazzo_bounds"] = {
            "lower": list(bounds.lower.entries),
            "upper": list(bounds.upper.entries),
            "exact": list(bounds.exact.entries) if bounds.exact else None,
        }
    return report


def cmd_ann(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "x0,x1,x2,u,v")
    f = parse_poly(text, ring)
    if args.t is None:
        raise ValueError("ann requires --t (operator degree)")
    ops = ann_basis(f, args.t, max_degree=args.max_degree)
    report = _report("ann", args, text, source, ring)
    report["results"] = {
        "t": args.t,
        "dimension": len(ops),
        "operator_vars": list(ring.dual().names),
        "operators": [op.render() for op in ops],
    }
    return report


def cmd_wlp(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "x0,x1,x2,u,v")
    f = parse_poly(text, ring)
    verdict = has_wlp(f, seed=args.seed, max_degree=args.max_degree)
    report = _report("wlp", args, text, source, ring)
    report["results"] = {
        "holds": verdict.holds,
        "failing_degree": verdict.failing_degree,
        "certificate": verdict.certificate,
        "witness_vars": list(ring.dual().names),
        "witness": verdict.witness.render() if verdict.witness else None,
    }
    return report


def cmd_slp(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "x0,x1,x2,u,v")
    f = parse_poly(text, ring)
    verdict = has_slp(f, full=True, max_degree=args.max_degree)
    report = _report("slp", args, text, source, ring)
    report["results"] = {
        "holds": verdict.holds,
        "failing_degree": verdict.failing_degree,
        "certificate": verdict.certificate,
        "vanishing_orders": list(verdict.vanishing_orders),
    }
    return report


def cmd_hessian(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "x0,x1,x2,u,v")
    f = parse_poly(text, ring)
    if args.t is None:
        raise ValueError("hessian requires --t (Hessian order)")
    rep = hessian(f, args.t, max_degree=args.max_degree)
    dual = ring.dual()
    report = _report("hessian", args, text, source, ring)
    res = report["results"]
    res["t"] = args.t
    res["dimension"] = len(rep.basis)
    res["basis_vars"] = list(dual.names)
    res["basis"] = [
        HomogeneousPoly.monomial(dual, e).render() for e in rep.basis
    ]
    res["vanishes"] = rep.vanishes
    res["determinant"] = rep.determinant.render()
    if args.matrix:
        res["matrix"] = [
            [entry.render() for entry in row] for row in rep.matrix.rows
        ]
    return report


def cmd_classify(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "x0,x1,x2,u,v")
    f = parse_poly(text, ring)
    cl = classify_polynomial(f, max_degree=args.max_degree)
    report = _report("classify", args, text, source, ring)
    res = report["results"]
    res["case"] = cl.case.value
    res["divisor_vars"] = ["s", "t"]
    res["divisor"] = cl.divisor.render() if cl.divisor is not None else None
    res["divisor_pattern"] = (
        list(cl.divisor_pattern) if cl.divisor_pattern is not None else None
    )
    res["g_compatible"] = cl.g_compatible
    if cl.normalization is not None:
        nm = cl.normalization
        res["normalization"] = {
            "first": nm.first.render(),
            "second": nm.second.render(),
            "lam": _fr(nm.lam) if nm.lam is not None else None,
            "mu": _fr(nm.mu) if nm.mu is not None else None,
        }
    else:
        res["normalization"] = None
    res["cone"] = is_cone(f, max_degree=args.max_degree)
    return report


def cmd_waring(args) -> dict:
    text, source = _read_source(args)
    ring = _variable_set(args.vars or "u,v")
    p = parse_poly(text, ring)
    result = waring_rank(p, max_degree=args.max_degree)
    report = _report("waring", args, text, source, ring)
    res = report["results"]
    res["rank"] = result.rank
    res["border_rank"] = result.border_rank
    if result.decomposition_witness is not None:
        res["witness"] = [
            {"form": form.render(), "coefficient": _fr(lam)}
            for form, lam in result.decomposition_witness
        ]
    else:
        res["witness"] = None
    if args.secant is not None:
        res["secant_index"] = args.secant
        res["in_secant"] = secant_membership(
            p, args.secant, max_degree=args.max_degree
        )
    return report


def cmd_relation(args) -> dict:
    text, source = _read_source(args)
    if ";" in text:
        ring = _variable_set(args.vars or "u,v")
        pieces = [piece.strip() for piece in text.split(";")]
        if len(pieces) != 3:
            raise ValueError("relation expects exactly three ';'-separated forms")
        p0, p1, p2 = (parse_poly(piece, ring) for piece in pieces)
    else:
        ring = _variable_set(args.vars or "x0,x1,x2,u,v")
        f = parse_poly(text, ring)
        pf = PerazzoForm.from_polynomial(f, max_degree=args.max_degree)
        p0, p1, p2 = pf.p0, pf.p1, pf.p2
    rel = algebraic_relation(
        p0, p1, p2, max_relation_degree=args.max_relation_degree
    )
    report = _report("relation", args, text, source, ring)
    report["results"] = {
        "relation_vars": ["z0", "z1", "z2"],
        "degree": rel.degree if rel is not None else None,
        "relation": rel.render() if rel is not None else None,
    }
    return report


# -- survey -------------------------------------------------------------------


_FAMILY_BUILDERS = (
    ("osculating", osculating_family),
    ("tangent-point", tangent_point_family),
    ("three-points", three_points_family),
)


def _survey_sample(task: tuple) -> dict:
    kind, d, index, seed, bound = task
    if kind == "family":
        label, builder = _FAMILY_BUILDERS[index]
        pf = builder(d)
    else:
        label = None
        pf = random_perazzo_form(d, seed=seed, bound=bound)
    f = pf.to_polynomial()
    hv = h_vector(f)
    h = hv.entries
    record = {
        "degree": d,
        "index": index,
        "seed": seed,
        "family": label,
        "h": list(h),
    }
    if d >= 4:
        lo, hi = min_hvector(d).entries, max_hvector(d).entries
        record["minimal"] = h == lo
        record["maximal"] = h == hi
        record["bound_ok"] = all(
            lo[i] <= h[i] <= hi[i] for i in range(len(h))
        )
    else:
        record["minimal"] = None
        record["maximal"] = None
        record["bound_ok"] = True
    record["case"] = classify(pf).case.value if d >= 5 else None
    record["wlp"] = has_wlp(f, seed=seed).holds
    record["slp"] = has_slp(f).holds
    return record


def _parse_degree_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 3 or hi < lo:
        raise ValueError(f"bad degree range {text!r} (need 3 <= lo <= hi)")
    return list(range(lo, hi + 1))


def cmd_survey(args) -> dict:
    if args.file or getattr(args, "expression", None):
        raise ValueError("survey generates its own inputs; drop the polynomial")
    degrees = _parse_degree_range(args.degrees)
    samples = args.samples
    if samples < 0:
        raise ValueError("--samples must be nonnegative")
    tasks: list[tuple] = []
    for d in degrees:
        if samples == 0:
            for index in range(len(_FAMILY_BUILDERS)):
                tasks.append(("family", d, index, args.seed, args.bound))
        else:
            for index in range(samples):
                derived = args.seed * 1000003 + d * 1009 + index
                tasks.append(("random", d, index, derived, args.bound))
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_survey_sample, tasks))
    else:
        records = [_survey_sample(t) for t in tasks]
    records.sort(key=lambda r: (r["degree"], r["index"]))
    summary: dict[str, dict] = {}
    violations = 0
    for d in degrees:
        of_degree = [r for r in records if r["degree"] == d]
        strata: dict[str, int] = {}
        for r in of_degree:
            key = ",".join(str(x) for x in r["h"])
            strata[key] = strata.get(key, 0) + 1
        bad = sum(1 for r in of_degree if not r["bound_ok"])
        violations += bad
        summary[str(d)] = {
            "count": len(of_degree),
            "strata": dict(sorted(strata.items())),
            "wlp_true": sum(1 for r in of_degree if r["wlp"]),
            "slp_true": sum(1 for r in of_degree if r["slp"]),
            "bound_violations": bad,
        }
    report = _report("survey", args, None, None, None)
    report["results"] = {
        "degrees": degrees,
        "samples": samples,
        "bound": args.bound,
        "records": records,
        "summary": summary,
        "bound_violations": violations,
    }
    return report


# -- rendering ----------------------------------------------------------------


def _text_lines(report: dict) -> list[str]:
    cmd = report["command"]
    res = report["results"]
    lines = [f"command: {cmd}"]
    if report["input"] is not None:
        lines.append(f"input: {report['input']}")
    if report["vars"] is not None:
        lines.append(f"vars: {', '.join(report['vars'])}")
    lines.append(f"seed: {report['seed']}")
    if cmd == "hvector":
        lines.append("h: (" + ", ".join(str(x) for x in res["h"]) + ")")
        lines.append(f"symmetric: {res['symmetric']}  osequence: {res['osequence']}")
        if "perazzo_bounds" in res:
            b = res["perazzo_bounds"]
            lines.append(f"block lower bound: {b['lower']}")
            lines.append(f"block upper bound: {b['upper']}")
            lines.append(f"block exact:       {b['exact']}")
    elif cmd == "ann":
        lines.append(f"t: {res['t']}  dimension: {res['dimension']}")
        for op in res["operators"]:
            lines.append(f"  {op}")
    elif cmd == "wlp":
        lines.append(f"WLP holds: {res['holds']}")
        if res["failing_degree"] is not None:
            lines.append(f"failing degree: {res['failing_degree']}")
        lines.append(f"certificate: {res['certificate']}")
        if res["witness"]:
            lines.append(f"witness L = {res['witness']}")
    elif cmd == "slp":
        lines.append(f"SLP holds: {res['holds']}")
        if res["failing_degree"] is not None:
            lines.append(f"failing degree: {res['failing_degree']}")
        if res["vanishing_orders"]:
            orders = ", ".join(str(t) for t in res["vanishing_orders"])
            lines.append(f"identically vanishing Hessian orders: {orders}")
    elif cmd == "hessian":
        lines.append(f"t: {res['t']}  dimension: {res['dimension']}")
        lines.append(f"basis: {', '.join(res['basis'])}")
        lines.append(f"vanishes identically: {res['vanishes']}")
        lines.append(f"determinant: {res['determinant']}")
        if "matrix" in res:
            for row in res["matrix"]:
                lines.append("  [" + ", ".join(row) + "]")
    elif cmd == "classify":
        lines.append(f"case: {res['case']}")
        if res["divisor"] is not None:
            lines.append(f"divisor: {res['divisor']}")
            lines.append(f"pattern: {res['divisor_pattern']}")
        lines.append(f"g compatible: {res['g_compatible']}")
        if res["normalization"]:
            nm = res["normalization"]
            lines.append(f"normal form: first = {nm['first']}, second = {nm['second']}")
            if nm["lam"] is not None:
                lines.append(f"middle point: lam = {nm['lam']}, mu = {nm['mu']}")
        lines.append(f"cone: {res['cone']}")
    elif cmd == "waring":
        lines.append(f"rank: {res['rank']}  border rank: {res['border_rank']}")
        if res["witness"]:
            for item in res["witness"]:
                lines.append(f"  {item['coefficient']} * ({item['form']})^e")
        else:
            lines.append("  no rational decomposition found")
        if "in_secant" in res:
            lines.append(
                f"in secant sigma_{res['secant_index']}: {res['in_secant']}"
            )
    elif cmd == "relation":
        if res["relation"] is None:
            lines.append("no relation up to the degree cap")
        else:
            lines.append(f"relation degree: {res['degree']}")
            lines.append(f"relation: {res['relation']}")
    elif cmd == "survey":
        lines.append(
            f"degrees: {res['degrees']}  samples: {res['samples']}  bound: {res['bound']}"
        )
        for d, row in res["summary"].items():
            lines.append(
                f"d={d}: n={row['count']} wlp={row['wlp_true']} "
                f"slp={row['slp_true']} violations={row['bound_violations']}"
            )
            for h, count in row["strata"].items():
                lines.append(f"    ({h}) x{count}")
        lines.append(f"total bound violations: {res['bound_violations']}")
    lines.append(f"timing_ms: {report['timing_ms']}")
    return lines


def _flatten(prefix: str, value, out: dict) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            out[prefix] = " ".join(str(x) for x in value)
        else:
            for i, v in enumerate(value):
                _flatten(f"{prefix}.{i}", v, out)
    else:
        out[prefix] = value


def _csv_text(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if report["command"] == "survey":
        fields = [
            "degree",
            "index",
            "seed",
            "family",
            "h",
            "case",
            "wlp",
            "slp",
            "minimal",
            "maximal",
            "bound_ok",
        ]
        writer.writerow(fields)
        for r in report["results"]["records"]:
            row = dict(r)
            row["h"] = " ".join(str(x) for x in r["h"])
            writer.writerow([row[f] for f in fields])
    else:
        flat: dict = {}
        for key in ("command", "input", "seed"):
            flat[key] = report[key]
        _flatten("", report["results"], flat)
        writer.writerow(list(flat))
        writer.writerow([flat[k] for k in flat])
    return buf.getvalue()


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _csv_text(report)
    return "\n".join(_text_lines(report)) + "\n"


# -- entry point ----------------------------------------------------------------


_DISPATCH = {
    "hvector": cmd_hvector,
    "ann": cmd_ann,
    "wlp": cmd_wlp,
    "slp": cmd_slp,
    "hessian": cmd_hessian,
    "classify": cmd_classify,
    "waring": cmd_waring,
    "relation": cmd_relation,
    "survey": cmd_survey,
}


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--vars",
        help="comma-separated variable names; 5 names split 3+2 into the "
        "x-block and uv-block, 2 names form the binary block "
        "(default: x0,x1,x2,u,v; u,v for waring/relation)",
    )
    shared.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--bound", type=int, default=9)
    shared.add_argument("--jobs", type=int, default=None)
    shared.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="raise the desk-scale degree guard",
    )
    shared.add_argument(
        "--matrix", action="store_true", help="include matrix entries (hessian)"
    )
    shared.add_argument("--file", help="read the polynomial from a UTF-8 file")
    shared.add_argument("--out", help="write the report to this file")

    parser = argparse.ArgumentParser(
        prog="perazzo",
        description="Exact invariants of forms: h-vectors, Lefschetz "
        "properties, higher Hessians, and the Perazzo 3-fold toolbox.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "hvector": "h-vector of S/Ann(f), with block-rank bounds for Perazzo forms",
        "ann": "basis of the degree-t piece of the annihilator",
        "wlp": "weak Lefschetz property verdict",
        "slp": "strong Lefschetz property verdict via higher Hessians",
        "hessian": "t-th Hessian determinant",
        "classify": "Perazzo classification: divisor, case, g-compatibility",
        "waring": "Waring rank and border rank of a binary form",
        "relation": "algebraic relation among three binary forms",
        "survey": "sweep degrees and seeds; tabulate h-vectors and verdicts",
    }
    for name in _FORM_COMMANDS:
        p = sub.add_parser(name, parents=[shared], help=helps[name])
        p.add_argument("expression", nargs="?", help="polynomial text")
        if name in ("ann", "hessian"):
            p.add_argument("--t", type=int, default=None, help="operator degree")
        if name == "waring":
            p.add_argument(
                "--secant",
                type=int,
                default=None,
                help="also test membership in the r-th secant variety",
            )
        if name == "relation":
            p.add_argument(
                "--max-relation-degree",
                type=int,
                default=None,
                help="cap on the relation degree searched",
            )
    p = sub.add_parser("survey", parents=[shared], help=helps["survey"])
    p.add_argument(
        "--degrees", default="4..8", help="degree or range, e.g. 5 or 4..8"
    )
    p.add_argument(
        "--samples",
        type=int,
        default=10,
        help="random samples per degree; 0 runs the three minimal families",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report = _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 4
    except InternalError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 5
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    report["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    text = _render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
