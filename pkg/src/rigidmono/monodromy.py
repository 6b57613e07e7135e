"""Analysis of monodromy tuples on the punctured projective line.

A monodromy tuple is a list of s invertible r x r matrices whose ordered
product is the identity; it presents a framed local system on the projective
line minus s points.  This module provides the simplicity (irreducibility)
test, local centralizer dimensions, the rigidity count
sum(dim Z_i) = (s-2) r^2 + 2, the rank-2 classification by non-scalar points,
and the passage to local eigenvalue data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import CycNum, rational, sort_key, zero
from .errors import NotApplicable, NotInvertible, RelationViolation, ShapeError
from .linalg import Matrix, Polynomial, charpoly, eigenvalues_split, rank_and_kernel_dim


@dataclass(frozen=True)
class MonodromyTuple:
    """s invertible r x r matrices g_1, ..., g_s with g_1 g_2 ... g_s = I.

    Construction validates the shape, the invertibility of every factor, and
    the product relation, so every instance in hand is a valid tuple.
    """

    rank: int
    punctures: int
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        r, s = self.rank, self.punctures
        if s < 3:
            raise ShapeError(f"need at least 3 punctures, got {s}")
        if len(self.matrices) != s:
            raise ShapeError(f"expected {s} matrices, got {len(self.matrices)}")
        for i, g in enumerate(self.matrices):
            if not (g.is_square() and g.rows == r):
                raise ShapeError(f"matrix {i + 1} is not {r}x{r}")
            if not g.det():
                raise NotInvertible(f"matrix {i + 1} is singular")
        prod = Matrix.identity(r)
        for g in self.matrices:
            prod = prod @ g
        if not prod.is_identity():
            raise RelationViolation("ordered product of the tuple is not the identity")

    @classmethod
    def of(cls, matrices) -> MonodromyTuple:
        matrices = tuple(matrices)
        if not matrices:
            raise ShapeError("empty tuple")
        return cls(matrices[0].rows, len(matrices), matrices)

    def conjugated(self, h: Matrix) -> MonodromyTuple:
        """The tuple h g_i h^-1, a point in the same moduli class."""
        hinv = h.inverse()
        return MonodromyTuple(self.rank, self.punctures,
                              tuple(h @ g @ hinv for g in self.matrices))


@dataclass(frozen=True)
class EigenData:
    """Per-puncture unordered multisets of nonzero eigenvalues.

    Each point stores its r eigenvalues sorted by the canonical scalar order,
    so equality and hashing behave as multiset comparisons.
    """

    rank: int
    punctures: int
    points: tuple[tuple[CycNum, ...], ...]

    def __post_init__(self):
        if len(self.points) != self.punctures:
            raise ShapeError(f"expected {self.punctures} points, got {len(self.points)}")
        for pt in self.points:
            if len(pt) != self.rank:
                raise ShapeError("each point needs one eigenvalue per rank")
            if any(not v for v in pt):
                raise ShapeError("eigenvalues must be nonzero")

    @classmethod
    def of(cls, points) -> EigenData:
        pts = tuple(
            tuple(sorted((v if isinstance(v, CycNum) else rational(v) for v in pt),
                         key=sort_key))
            for pt in points)
        if not pts:
            raise ShapeError("empty eigenvalue data")
        return cls(len(pts[0]), len(pts), pts)

    def conductor(self) -> int:
        return math.lcm(*[v.conductor for pt in self.points for v in pt])


@dataclass(frozen=True)
class RigidityReport:
    """The rigidity count: per-point centralizer dimensions against the
    threshold (s-2) r^2 + 2, plus the simplicity verdict."""

    centralizer_dims: tuple[int, ...]
    total: int
    threshold: int
    defect: int
    is_irreducible: bool
    verdict: str  # "rigid" | "not-rigid" | "not-applicable(reducible)"


@dataclass(frozen=True)
class Rank2Classification:
    nonscalar_points: frozenset[int]  # 1-based indices
    rigid: bool
    component_triple: frozenset[int] | None


def centralizer_dim(a: Matrix) -> int:
    """Dimension of {X : XA = AX}, as the kernel of X -> XA - AX on r x r
    matrices (an r^2 x r^2 exact kernel computation)."""
    if not a.is_square():
        raise ShapeError("centralizer of a non-square matrix")
    r = a.rows
    z = zero()
    rows = []
    for i in range(r):
        for j in range(r):
            row = [z] * (r * r)
            for k in range(r):
                # d(XA - AX)_{ij} / dX_{ik} and / dX_{kj}
                row[i * r + k] = row[i * r + k] + a[k, j]
                row[k * r + j] = row[k * r + j] - a[i, k]
            rows.append(row)
    _, kdim = rank_and_kernel_dim(Matrix.from_rows(rows))
    return kdim


class _SpanBasis:
    # Incrementally row-reduced basis of a subspace of r x r matrices.
    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, list[CycNum]]] = []  # (pivot index, vector)

    def add(self, mat: Matrix) -> bool:
        vec = list(mat.entries)
        for piv, base in self.rows:
            c = vec[piv]
            if c:
                bp = base[piv]
                vec = [bp * x - c * y for x, y in zip(vec, base)]
        for piv in range(self.dim):
            if vec[piv]:
                self.rows.append((piv, vec))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    def size(self) -> int:
        return len(self.rows)


def is_irreducible(t: MonodromyTuple) -> bool:
    """Burnside criterion: the words in the g_i and their inverses span the
    full r x r matrix algebra exactly when the tuple is irreducible."""
    r = t.rank
    gens = list(t.matrices) + [g.inverse() for g in t.matrices]
    basis = _SpanBasis(r * r)
    queue = [Matrix.identity(r)]
    basis.add(queue[0])
    while queue and basis.size() < r * r:
        b = queue.pop()
        for g in gens:
            cand = g @ b
            if basis.add(cand):
                queue.append(cand)
                if basis.size() == r * r:
                    break
    return basis.size() == r * r


def common_eigenvector_exists(t: MonodromyTuple) -> bool | None:
    """Rank-2 cross-check: whether the matrices share an eigenvector.

    Returns None when some factor's eigenvalues do not split over the working
    field; in that case the Burnside test remains authoritative.
    """
    if t.rank != 2:
        raise ShapeError("common-eigenvector search implemented for rank 2")
    first = next((g for g in t.matrices if not g.is_scalar()), None)
    if first is None:
        return True
    ev = eigenvalues_split(first)
    if ev is None:
        return None
    lines = []
    for lam in set(ev):
        a = first[0, 0] - lam
        b = first[0, 1]
        c = first[1, 0]
        d = first[1, 1] - lam
        # A nonzero kernel vector of the singular 2x2 matrix [[a, b], [c, d]].
        lines.append((b, -a) if (a or b) else (d, -c))

    def is_eigvec(g: Matrix, v) -> bool:
        x = g[0, 0] * v[0] + g[0, 1] * v[1]
        y = g[1, 0] * v[0] + g[1, 1] * v[1]
        return not (x * v[1] - y * v[0])

    return any(all(is_eigvec(g, v) for g in t.matrices) for v in lines)


def katz_report(t: MonodromyTuple) -> RigidityReport:
    """Rigidity by the centralizer count: a simple tuple is rigid exactly when
    sum(dim Z_i) reaches (s-2) r^2 + 2; reducible tuples get no verdict."""
    dims = tuple(centralizer_dim(g) for g in t.matrices)
    total = sum(dims)
    threshold = (t.punctures - 2) * t.rank * t.rank + 2
    irr = is_irreducible(t)
    if not irr:
        verdict = "not-applicable(reducible)"
    elif total == threshold:
        verdict = "rigid"
    else:
        verdict = "not-rigid"
    return RigidityReport(dims, total, threshold, threshold - total, irr, verdict)


def scalar_points(t: MonodromyTuple) -> frozenset[int]:
    """1-based indices of the punctures with (nonzero) scalar local monodromy."""
    return frozenset(i + 1 for i, g in enumerate(t.matrices) if g.is_scalar())


def rank2_classify(t: MonodromyTuple) -> Rank2Classification:
    """Rank-2 classification: rigid iff exactly 3 punctures carry non-scalar
    local monodromy; the triple names the moduli component."""
    if t.rank != 2:
        raise ShapeError("classification requires rank 2")
    if not is_irreducible(t):
        raise NotApplicable("classification applies to irreducible tuples only")
    nonscalar = frozenset(range(1, t.punctures + 1)) - scalar_points(t)
    rigid = len(nonscalar) == 3
    return Rank2Classification(nonscalar, rigid, nonscalar if rigid else None)


@dataclass(frozen=True)
class MonData:
    charpolys: tuple[Polynomial, ...]
    eigen: EigenData | None


def mon(t: MonodromyTuple) -> MonData:
    """Per-puncture characteristic polynomials of the local monodromy, plus
    the eigenvalue data when every factor splits over the working field."""
    polys = tuple(charpoly(g) for g in t.matrices)
    evs = [eigenvalues_split(g) for g in t.matrices]
    eigen = None
    if all(e is not None for e in evs):
        eigen = EigenData.of(evs)
    return MonData(polys, eigen)


def det_data(t: MonodromyTuple) -> tuple[CycNum, ...]:
    """The determinant local system (det g_1, ..., det g_s); product is 1."""
    return tuple(g.det() for g in t.matrices)
