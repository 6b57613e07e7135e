"""Residue bookkeeping for logarithmic connections on curves.

Quasi-unipotent local eigenvalue data corresponds, through z -> e^(2 pi i z),
to rational residue exponents normalized into [0, 1) (the canonical extension
choice).  On a curve the residues determine the degree of the underlying
bundle, deg E = -sum of residues, and the Hilbert polynomial
r deg(H) t + r (1 - g) - sum of residue traces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cyclotomic import rational, unit_exp, unit_log
from .errors import NotQuasiUnipotent, ShapeError
from .linalg import Polynomial
from .monodromy import EigenData


@dataclass(frozen=True)
class ResidueData:
    """Per-puncture multisets of rational residue exponents in [0, 1)."""

    rank: int
    punctures: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.points) != self.punctures:
            raise ShapeError(f"expected {self.punctures} points, got {len(self.points)}")
        for pt in self.points:
            if len(pt) != self.rank:
                raise ShapeError("each point needs one residue per rank")
            if any(not (0 <= a < 1) for a in pt):
                raise ShapeError("residues must lie in [0, 1)")

    @classmethod
    def of(cls, points) -> ResidueData:
        pts = tuple(tuple(sorted(Fraction(a) for a in pt)) for pt in points)
        if not pts:
            raise ShapeError("empty residue data")
        return cls(len(pts[0]), len(pts), pts)


@dataclass(frozen=True)
class CurveGeometry:
    """Genus and polarization degree of the compactified curve."""

    genus: int
    deg_h: int

    def __post_init__(self):
        if self.genus < 0:
            raise ShapeError("genus must be non-negative")
        if self.deg_h < 1:
            raise ShapeError("polarization degree must be positive")


def deligne_residues(e: EigenData) -> ResidueData:
    """Residue exponents a with e^(2 pi i a) the eigenvalue and a in [0, 1).

    Every eigenvalue must be a root of unity; a non-torsion eigenvalue has no
    rational logarithm and is rejected.
    """
    pts = []
    for pt in e.points:
        res = []
        for v in pt:
            a = unit_log(v)
            if a is None:
                raise NotQuasiUnipotent(f"eigenvalue {v!r} is not a root of unity")
            res.append(a)
        pts.append(res)
    return ResidueData.of(pts)


def exp_residues(rd: ResidueData) -> EigenData:
    """Entry-wise e^(2 pi i a); exact inverse of deligne_residues."""
    return EigenData.of([[unit_exp(a) for a in pt] for pt in rd.points])


class FuchsDegree(NamedTuple):
    value: Fraction
    integral: bool


def residue_trace_sum(rd: ResidueData) -> Fraction:
    return sum((a for pt in rd.points for a in pt), Fraction(0))


def fuchs_degree(rd: ResidueData) -> FuchsDegree:
    """deg E = -sum of all residues; flags a non-integer value, which cannot
    come from an actual connection."""
    total = -residue_trace_sum(rd)
    return FuchsDegree(total, total.denominator == 1)


def hilbert_poly(rd: ResidueData, geom: CurveGeometry) -> Polynomial:
    """The linear polynomial r deg(H) t + r(1 - g) - sum of residue traces."""
    lead = Fraction(rd.rank * geom.deg_h)
    const = Fraction(rd.rank * (1 - geom.genus)) - residue_trace_sum(rd)
    return Polynomial.of([rational(const), rational(lead)])
