"""Batch command-line front end with JSON input and output.

Commands
    check      validate a tuple, test simplicity, run the rigidity count and
               the rank-2 classification
    mon        per-puncture characteristic polynomials, eigenvalues, determinants
    classify   component membership of eigenvalue data over all triples
    construct  build the rigid tuple realizing admissible eigenvalue data
    derham     residue exponents, bundle degree, Hilbert polynomial
    orbit      Galois orbit of the eigenvalue data plus the torsion verdict
    tori       torsion-coset operations and formula evaluation

Exit status: 0 success, 1 parse or schema failure, 2 mathematical
precondition violation, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import serialize as wire
from .errors import BudgetExceeded, MathError, SchemaError
from .galois import absolute_point_test, galois_orbit_eigen
from .moduli import all_component_specs, component_membership, construct_representative, trace_chart
from .monodromy import det_data, katz_report, mon, rank2_classify
from .residues import deligne_residues, fuchs_degree, hilbert_poly
from .tori import (coset_intersect, coset_membership, enumerate_torsion, formula_eval,
                   monomial_preimage, nonsimple_locus_formula)

COMMANDS = ("check", "mon", "classify", "construct", "derham", "orbit", "tori")

SCHEMAS = {
    "check": {"r": 2, "s": 3, "matrices": ["<matrix: {rows, cols, entries: [cycnum]}>"]},
    "mon": {"r": 2, "s": 3, "matrices": ["<matrix>"]},
    "classify": {"r": 2, "s": "<punctures>", "points": [["<cycnum>", "<cycnum>"]]},
    "construct": {"eigen": {"r": 2, "s": "<punctures>", "points": [["<cycnum>", "<cycnum>"]]},
                  "spec": {"s": "<punctures>", "triple": [1, 2, 3]}},
    "derham": {"eigen": {"r": 2, "s": "<punctures>", "points": [["<cycnum>", "<cycnum>"]]},
               "geometry": {"genus": 0, "degH": 1}},
    "orbit": {"r": 2, "s": 3, "matrices": ["<matrix>"]},
    "tori": {"op": "membership|intersect|preimage|enumerate|formula|nonsimple_locus",
             "...": "op-specific keys: coset/a/b/matrix/point/formula/s/triple/order_bound"},
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_source: str
    output: str | None
    order_bound: int
    conductor_cap: int
    batch: bool


def _load_input(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _enforce_conductor_cap(values, cap: int):
    n = 1
    for v in values:
        n = math.lcm(n, v.conductor)
        if n > cap:
            raise BudgetExceeded(
                f"working conductor {n} exceeds the cap of {cap}")


def _tuple_scalars(t):
    return (v for m in t.matrices for v in m.entries)


def _eigen_scalars(e):
    return (v for pt in e.points for v in pt)


def _run_check(payload, cfg: RunConfig) -> dict:
    t = wire.tuple_from_json(payload)
    _enforce_conductor_cap(_tuple_scalars(t), cfg.conductor_cap)
    rep = katz_report(t)
    out = {"r": t.rank, "s": t.punctures,
           "is_irreducible": rep.is_irreducible,
           "katz": wire.report_to_json(rep)}
    if t.rank == 2 and rep.is_irreducible:
        out["rank2"] = wire.classification_to_json(rank2_classify(t))
    else:
        out["rank2"] = {"applicable": False,
                        "reason": "reducible" if t.rank == 2 else "rank != 2"}
    if t.rank == 2 and t.punctures == 3:
        out["trace_chart"] = wire.chart_to_json(trace_chart(t))
    return out


def _run_mon(payload, cfg: RunConfig) -> dict:
    t = wire.tuple_from_json(payload)
    _enforce_conductor_cap(_tuple_scalars(t), cfg.conductor_cap)
    data = mon(t)
    return {"charpolys": [wire.polynomial_to_json(p) for p in data.charpolys],
            "eigen": wire.eigen_to_json(data.eigen) if data.eigen else None,
            "det": [wire.cyc_to_json(d) for d in det_data(t)]}


def _run_classify(payload, cfg: RunConfig) -> dict:
    e = wire.eigen_from_json(payload)
    _enforce_conductor_cap(_eigen_scalars(e), cfg.conductor_cap)
    comps = []
    for spec in all_component_specs(e.punctures):
        comps.append({"triple": sorted(spec.triple),
                      "member": component_membership(e, spec)})
    return {"s": e.punctures, "components": comps}


def _run_construct(payload, cfg: RunConfig) -> dict:
    obj = wire._check_keys(payload, {"eigen", "spec"}, "construct input")
    e = wire.eigen_from_json(obj.get("eigen"))
    spec = wire.spec_from_json(obj.get("spec"))
    _enforce_conductor_cap(_eigen_scalars(e), cfg.conductor_cap)
    t = construct_representative(e, spec)
    return wire.tuple_to_json(t)


def _run_derham(payload, cfg: RunConfig) -> dict:
    obj = wire._check_keys(payload, {"eigen", "geometry"}, "derham input")
    e = wire.eigen_from_json(obj.get("eigen"))
    geom = wire.geometry_from_json(obj.get("geometry"))
    _enforce_conductor_cap(_eigen_scalars(e), cfg.conductor_cap)
    rd = deligne_residues(e)
    deg = fuchs_degree(rd)
    return {"residues": wire.residues_to_json(rd),
            "degE": wire.rational_to_json(deg.value),
            "degE_integral": deg.integral,
            "hilbert": wire.rational_polynomial_to_json(hilbert_poly(rd, geom))}


def _run_orbit(payload, cfg: RunConfig) -> dict:
    t = wire.tuple_from_json(payload)
    _enforce_conductor_cap(_tuple_scalars(t), cfg.conductor_cap)
    verdict = absolute_point_test(t)
    eigen = mon(t).eigen
    orbit = sorted(galois_orbit_eigen(eigen), key=wire.eigen_sort_key)
    return {"orbit": [wire.eigen_to_json(e) for e in orbit],
            "absolute": wire.verdict_to_json(verdict)}


def _run_tori(payload, cfg: RunConfig) -> dict:
    if not isinstance(payload, dict) or "op" not in payload:
        raise SchemaError("tori input: needs an 'op' key")
    op = payload["op"]
    if op == "membership":
        obj = wire._check_keys(payload, {"op", "coset", "point"}, "tori membership")
        c = wire.coset_from_json(obj.get("coset"))
        q = wire.point_from_json(obj.get("point"))
        return {"member": coset_membership(q, c)}
    if op == "intersect":
        obj = wire._check_keys(payload, {"op", "a", "b"}, "tori intersect")
        out = coset_intersect(wire.coset_from_json(obj.get("a")),
                              wire.coset_from_json(obj.get("b")))
        return {"coset": wire.coset_to_json(out)}
    if op == "preimage":
        obj = wire._check_keys(payload, {"op", "coset", "matrix"}, "tori preimage")
        mat = obj.get("matrix")
        if not (isinstance(mat, list) and
                all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in mat)):
            raise SchemaError("tori preimage: 'matrix' must be a list of integer rows")
        out = monomial_preimage(wire.coset_from_json(obj.get("coset")), mat)
        return {"coset": wire.coset_to_json(out)}
    if op == "enumerate":
        obj = wire._check_keys(payload, {"op", "coset", "order_bound"}, "tori enumerate")
        c = wire.coset_from_json(obj.get("coset"))
        bound = obj.get("order_bound", cfg.order_bound)
        if not isinstance(bound, int) or bound < 1:
            raise SchemaError("tori enumerate: 'order_bound' must be a positive integer")
        pts = enumerate_torsion(c, bound)
        return {"points": sorted([wire.rational_to_json(x) for x in p] for p in pts)}
    if op == "formula":
        obj = wire._check_keys(payload, {"op", "formula", "point"}, "tori formula")
        f = wire.formula_from_json(obj.get("formula"))
        q = wire.point_from_json(obj.get("point"))
        return {"value": formula_eval(f, q)}
    if op == "nonsimple_locus":
        obj = wire._check_keys(payload, {"op", "s", "triple", "point"}, "tori nonsimple_locus")
        s, triple = obj.get("s"), obj.get("triple")
        if not (isinstance(s, int) and isinstance(triple, list)):
            raise SchemaError("tori nonsimple_locus: needs integer 's' and list 'triple'")
        f = nonsimple_locus_formula(s, triple)
        q = wire.point_from_json(obj.get("point"))
        return {"value": formula_eval(f, q)}
    raise SchemaError(f"tori input: unknown op {op!r}")


_RUNNERS = {
    "check": _run_check,
    "mon": _run_mon,
    "classify": _run_classify,
    "construct": _run_construct,
    "derham": _run_derham,
    "orbit": _run_orbit,
    "tori": _run_tori,
}


def run(cfg: RunConfig) -> tuple[int, dict | list]:
    """Execute one configured run; returns (exit status, JSON report)."""
    try:
        payload = _load_input(cfg.input_source)
    except (OSError, json.JSONDecodeError) as exc:
        return 1, {"error": "parse-error", "message": str(exc)}
    runner = _RUNNERS[cfg.command]
    if cfg.batch:
        if not isinstance(payload, list):
            return 1, {"error": "schema-error",
                       "message": "batch mode expects a JSON list of inputs"}
        reports = []
        status = 0
        for item in payload:
            code, rep = _run_one(runner, item, cfg)
            if code == 0:
                reports.append({"ok": True, "report": rep})
            else:
                reports.append({"ok": False, **rep})
                if status == 0:
                    status = code
        return status, reports
    return _run_one(runner, payload, cfg)


def _run_one(runner, payload, cfg: RunConfig) -> tuple[int, dict]:
    try:
        return 0, runner(payload, cfg)
    except SchemaError as exc:
        return 1, {"error": exc.code, "message": str(exc)}
    except (MathError, ZeroDivisionError) as exc:
        code = getattr(exc, "code", "arithmetic-error")
        return 2, {"error": code, "message": str(exc)}
    except BudgetExceeded as exc:
        return 3, {"error": exc.code, "message": str(exc)}


def _emit(report, output: str | None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


class _Parser(argparse.ArgumentParser):
    # Usage errors belong to the parse-failure exit family, not argparse's 2.
    def error(self, message):
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rigidmono",
        description="Exact computations with rank-2 monodromy tuples: rigidity, "
                    "moduli coordinates, residues, Galois transport, torsion tori.")
    parser.add_argument("command", nargs="?", choices=COMMANDS,
                        help="what to compute")
    parser.add_argument("--input", "-i", default="-",
                        help="input file, inline JSON, or '-' for stdin")
    parser.add_argument("--output", "-o", default=None,
                        help="output file (default: stdout)")
    parser.add_argument("--order-bound", type=int, default=12,
                        help="torsion order bound for enumeration (default 12)")
    parser.add_argument("--conductor-cap", type=int, default=240,
                        help="largest working conductor accepted (default 240)")
    parser.add_argument("--batch", action="store_true",
                        help="treat the input as a list and map the command over it")
    parser.add_argument("--describe-schema", metavar="COMMAND", choices=COMMANDS,
                        help="print the expected input schema for a command and exit")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.describe_schema:
        _emit(SCHEMAS[args.describe_schema], args.output)
        return 0
    if not args.command:
        parser.error("a command is required (or use --describe-schema)")
    if args.order_bound < 1 or args.conductor_cap < 1:
        parser.error("budgets must be positive")
    cfg = RunConfig(args.command, args.input, args.output,
                    args.order_bound, args.conductor_cap, args.batch)
    status, report = run(cfg)
    _emit(report, cfg.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
