"""JSON wire formats for every domain type.

All rationals travel as strings so no reader ever rounds them; multisets are
serialized in the canonical order (conductor, then coordinates), making
reports byte-stable.  Parsers are strict: unknown keys are rejected.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, GaloisElement, sort_key
from .errors import SchemaError
from .galois import AbsoluteVerdict
from .linalg import Matrix, Polynomial
from .moduli import ComponentSpec, TraceChartPoint
from .monodromy import EigenData, MonodromyTuple, Rank2Classification, RigidityReport
from .residues import CurveGeometry, ResidueData
from .tori import TorsionCoset, TorusFormula


def _require(cond: bool, msg: str):
    if not cond:
        raise SchemaError(msg)


def _check_keys(obj, allowed: set[str], what: str) -> dict:
    _require(isinstance(obj, dict), f"{what}: expected a JSON object")
    unknown = set(obj) - allowed
    _require(not unknown, f"{what}: unknown keys {sorted(unknown)}")
    return obj


# -- rationals ---------------------------------------------------------------

def rational_to_json(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def rational_from_json(obj, what: str = "rational") -> Fraction:
    try:
        if isinstance(obj, str):
            return Fraction(obj)
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, list) and len(obj) == 2:
            return Fraction(int(obj[0]), int(obj[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{what}: bad fraction {obj!r}") from exc
    raise SchemaError(f"{what}: expected a fraction string, got {obj!r}")


# -- scalars -----------------------------------------------------------------

def cyc_to_json(z: CycNum) -> dict:
    return {"n": z.conductor,
            "c": [[str(c.numerator), str(c.denominator)] for c in z.coeffs]}


def cyc_from_json(obj, what: str = "cyclotomic number") -> CycNum:
    if isinstance(obj, (str, int)):
        return CycNum(1, (rational_from_json(obj, what),))
    _check_keys(obj, {"n", "c"}, what)
    _require("n" in obj and "c" in obj, f"{what}: needs keys 'n' and 'c'")
    n = obj["n"]
    _require(isinstance(n, int) and n >= 1, f"{what}: bad conductor {n!r}")
    _require(isinstance(obj["c"], list), f"{what}: 'c' must be a list")
    coeffs = [rational_from_json(c, what) for c in obj["c"]]
    return CycNum.from_coeffs(coeffs, n)


def galois_to_json(g: GaloisElement) -> dict:
    return {"n": g.conductor, "k": g.exponent}


def galois_from_json(obj) -> GaloisElement:
    _check_keys(obj, {"n", "k"}, "galois element")
    _require(isinstance(obj.get("n"), int) and isinstance(obj.get("k"), int),
             "galois element: 'n' and 'k' must be integers")
    return GaloisElement(obj["n"], obj["k"])


# -- matrices and tuples -----------------------------------------------------

def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [cyc_to_json(v) for v in m.entries]}


def matrix_from_json(obj) -> Matrix:
    _check_keys(obj, {"rows", "cols", "entries"}, "matrix")
    rows, cols = obj.get("rows"), obj.get("cols")
    _require(isinstance(rows, int) and isinstance(cols, int),
             "matrix: 'rows' and 'cols' must be integers")
    ent = obj.get("entries")
    _require(isinstance(ent, list) and len(ent) == rows * cols,
             f"matrix: expected {rows * cols} entries")
    return Matrix(rows, cols, tuple(cyc_from_json(v, "matrix entry") for v in ent))


def tuple_to_json(t: MonodromyTuple) -> dict:
    return {"r": t.rank, "s": t.punctures,
            "matrices": [matrix_to_json(m) for m in t.matrices]}


def tuple_from_json(obj) -> MonodromyTuple:
    _check_keys(obj, {"r", "s", "matrices"}, "monodromy tuple")
    mats = obj.get("matrices")
    _require(isinstance(mats, list) and mats, "monodromy tuple: 'matrices' must be a non-empty list")
    t = MonodromyTuple.of([matrix_from_json(m) for m in mats])
    if "r" in obj:
        _require(obj["r"] == t.rank, f"monodromy tuple: declared rank {obj['r']} != {t.rank}")
    if "s" in obj:
        _require(obj["s"] == t.punctures,
                 f"monodromy tuple: declared punctures {obj['s']} != {t.punctures}")
    return t


# -- eigenvalue and residue data ---------------------------------------------

def eigen_to_json(e: EigenData) -> dict:
    return {"r": e.rank, "s": e.punctures,
            "points": [[cyc_to_json(v) for v in pt] for pt in e.points]}


def eigen_from_json(obj) -> EigenData:
    _check_keys(obj, {"r", "s", "points"}, "eigenvalue data")
    pts = obj.get("points")
    _require(isinstance(pts, list) and pts, "eigenvalue data: 'points' must be a non-empty list")
    e = EigenData.of([[cyc_from_json(v, "eigenvalue") for v in pt] for pt in pts])
    if "r" in obj:
        _require(obj["r"] == e.rank, "eigenvalue data: declared rank disagrees")
    if "s" in obj:
        _require(obj["s"] == e.punctures, "eigenvalue data: declared point count disagrees")
    return e


def residues_to_json(rd: ResidueData) -> dict:
    return {"r": rd.rank, "s": rd.punctures,
            "points": [[rational_to_json(a) for a in pt] for pt in rd.points]}


def residues_from_json(obj) -> ResidueData:
    _check_keys(obj, {"r", "s", "points"}, "residue data")
    pts = obj.get("points")
    _require(isinstance(pts, list) and pts, "residue data: 'points' must be a non-empty list")
    rd = ResidueData.of([[rational_from_json(a, "residue") for a in pt] for pt in pts])
    if "r" in obj:
        _require(obj["r"] == rd.rank, "residue data: declared rank disagrees")
    if "s" in obj:
        _require(obj["s"] == rd.punctures, "residue data: declared point count disagrees")
    return rd


def geometry_from_json(obj) -> CurveGeometry:
    _check_keys(obj, {"genus", "degH"}, "curve geometry")
    _require(isinstance(obj.get("genus"), int) and isinstance(obj.get("degH"), int),
             "curve geometry: 'genus' and 'degH' must be integers")
    return CurveGeometry(obj["genus"], obj["degH"])


def geometry_to_json(geom: CurveGeometry) -> dict:
    return {"genus": geom.genus, "degH": geom.deg_h}


def spec_to_json(spec: ComponentSpec) -> dict:
    return {"s": spec.punctures, "triple": sorted(spec.triple)}


def spec_from_json(obj) -> ComponentSpec:
    _check_keys(obj, {"s", "triple"}, "component spec")
    _require(isinstance(obj.get("s"), int), "component spec: 's' must be an integer")
    tri = obj.get("triple")
    _require(isinstance(tri, list) and all(isinstance(i, int) for i in tri),
             "component spec: 'triple' must be a list of integers")
    return ComponentSpec.of(obj["s"], tri)


# -- polynomials and reports --------------------------------------------------

def polynomial_to_json(p: Polynomial) -> list:
    return [cyc_to_json(c) for c in p.coeffs]


def rational_polynomial_to_json(p: Polynomial) -> list[str]:
    return [rational_to_json(c.as_rational()) for c in p.coeffs]


def report_to_json(rep: RigidityReport) -> dict:
    return {"centralizer_dims": list(rep.centralizer_dims),
            "sum": rep.total,
            "threshold": rep.threshold,
            "defect": rep.defect,
            "is_irreducible": rep.is_irreducible,
            "verdict": rep.verdict}


def classification_to_json(cls: Rank2Classification) -> dict:
    return {"nonscalar_points": sorted(cls.nonscalar_points),
            "rigid": cls.rigid,
            "component_triple": sorted(cls.component_triple)
            if cls.component_triple is not None else None}


def verdict_to_json(v: AbsoluteVerdict) -> dict:
    return {"is_rigid": v.is_rigid,
            "det_torsion": v.det_torsion,
            "mon_torsion": v.mon_torsion,
            "verdict": v.verdict}


def chart_to_json(cp: TraceChartPoint) -> dict:
    return {"tr_g1": cyc_to_json(cp.t1), "tr_g2": cyc_to_json(cp.t2),
            "tr_g1g2": cyc_to_json(cp.t12),
            "det_g1_inv": cyc_to_json(cp.d1inv), "det_g2_inv": cyc_to_json(cp.d2inv)}


# -- tori ----------------------------------------------------------------------

def coset_to_json(c: TorsionCoset) -> dict:
    out = {"N": c.dim,
           "L": [list(row) for row in c.relations],
           "tau": [rational_to_json(t) for t in c.translate]}
    if c.empty:
        out["empty"] = True
    return out


def coset_from_json(obj) -> TorsionCoset:
    _check_keys(obj, {"N", "L", "tau", "empty"}, "torsion coset")
    n = obj.get("N")
    _require(isinstance(n, int) and n >= 1, "torsion coset: bad ambient dimension")
    rel = obj.get("L", [])
    _require(isinstance(rel, list), "torsion coset: 'L' must be a list of rows")
    for row in rel:
        _require(isinstance(row, list) and all(isinstance(x, int) for x in row),
                 "torsion coset: relation rows must be integer lists")
    tau = obj.get("tau")
    _require(isinstance(tau, list), "torsion coset: 'tau' must be a list")
    if obj.get("empty"):
        return TorsionCoset.empty_set(n)
    return TorsionCoset.of(n, rel, [rational_from_json(t, "translate") for t in tau])


def formula_to_json(f: TorusFormula) -> dict:
    if f.op == "leaf":
        return coset_to_json(f.coset)
    return {"op": f.op, "args": [formula_to_json(g) for g in f.args]}


def formula_from_json(obj) -> TorusFormula:
    _require(isinstance(obj, dict), "formula: expected a JSON object")
    if "op" not in obj:
        return TorusFormula.leaf(coset_from_json(obj))
    _check_keys(obj, {"op", "args"}, "formula")
    op = obj["op"]
    _require(op in ("union", "intersection", "complement"),
             f"formula: unknown operation {op!r}")
    args = obj.get("args")
    _require(isinstance(args, list) and args, "formula: 'args' must be a non-empty list")
    parsed = tuple(formula_from_json(a) for a in args)
    return TorusFormula(op, parsed)


def point_from_json(obj, what: str = "torsion point") -> list[Fraction]:
    _require(isinstance(obj, list), f"{what}: expected a list of fractions")
    return [rational_from_json(x, what) for x in obj]


def eigen_sort_key(e: EigenData):
    return tuple(tuple(sort_key(v) for v in pt) for pt in e.points)
