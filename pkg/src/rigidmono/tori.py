"""Torsion-translated subtori of (C*)^N, in exponent coordinates.

A coset is carried by an integer relation matrix L and a rational translate
t: the set {z : z^v = e^(2 pi i <t, v>) for every row v}.  A torsion point
e^(2 pi i q) with rational q lies on it iff <q - t, v> is an integer for all
rows.  Relation rows need not be saturated, so finite subgroup factors (for
instance preimages under non-injective monomial maps) stay single objects.
Intersections merge relation rows and solve the combined congruence system by
Smith normal form; inconsistent systems yield the canonical empty coset.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import BudgetExceeded, ShapeError

DEFAULT_GRID_BUDGET = 2_000_000


# ---------------------------------------------------------------------------
# Integer Smith normal form.

def smith_normal_form(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(S, U, V) with S = U mat V, U and V unimodular, S diagonal with
    divisibility d1 | d2 | ... along the diagonal."""
    a = [row[:] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        # Find the smallest nonzero entry in the remaining block.
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        again = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = -(a[i][t] // a[t][t])
                add_row(t, i, q)
                if a[i][t]:
                    again = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = -(a[t][j] // a[t][t])
                add_col(t, j, q)
                if a[t][j]:
                    again = True
        if again:
            continue
        # Enforce divisibility of the rest of the block by the pivot.
        bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                    if a[i][j] % a[t][t]), None)
        if bad is not None:
            add_row(bad[0], t, 1)
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def solve_congruences(rows: list[list[int]], targets: list[Fraction], n: int) -> list[Fraction] | None:
    """A rational x with <x, row_i> = targets_i (mod 1) for all i, or None."""
    if not rows:
        return [Fraction(0)] * n
    s, u, v = smith_normal_form(rows)
    m = len(rows)
    ud = [sum(Fraction(u[i][j]) * targets[j] for j in range(m)) for i in range(m)]
    y = [Fraction(0)] * n
    for i in range(m):
        d = s[i][i] if i < min(m, n) else 0
        if d:
            y[i] = ud[i] / d
        elif ud[i].denominator != 1:
            return None
    x = [sum(Fraction(v[i][j]) * y[j] for j in range(n)) % 1 for i in range(n)]
    return x


# ---------------------------------------------------------------------------
# Cosets.

@dataclass(frozen=True)
class TorsionCoset:
    """A torsion-translated subtorus of (C*)^N.

    ``relations`` rows are the exponent vectors v; ``translate`` is the
    rational vector t mod 1.  The flag ``empty`` marks the canonical empty
    coset produced by an inconsistent intersection (the (L, t) form itself
    always contains the witness point e^(2 pi i t)).
    """

    dim: int
    relations: tuple[tuple[int, ...], ...]
    translate: tuple[Fraction, ...]
    empty: bool = field(default=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError("ambient dimension must be positive")
        if len(self.translate) != self.dim:
            raise ShapeError("translate length must equal the ambient dimension")
        for row in self.relations:
            if len(row) != self.dim:
                raise ShapeError("relation row length must equal the ambient dimension")

    @classmethod
    def of(cls, dim: int, relations, translate) -> TorsionCoset:
        rel = tuple(tuple(int(x) for x in row) for row in relations)
        tra = tuple(Fraction(x) % 1 for x in translate)
        return cls(dim, rel, tra)

    @classmethod
    def empty_set(cls, dim: int) -> TorsionCoset:
        return cls(dim, ((0,) * dim,), (Fraction(0),) * dim, empty=True)

    @classmethod
    def full_torus(cls, dim: int) -> TorsionCoset:
        return cls(dim, (), (Fraction(0),) * dim)

    def is_empty(self) -> bool:
        return self.empty


def coset_membership(q, c: TorsionCoset) -> bool:
    """Whether the torsion point e^(2 pi i q) lies on the coset."""
    q = [Fraction(x) for x in q]
    if len(q) != c.dim:
        raise ShapeError(f"point has dimension {len(q)}, coset ambient is {c.dim}")
    if c.empty:
        return False
    for row in c.relations:
        val = sum((x - t) * v for x, t, v in zip(q, c.translate, row))
        if val.denominator != 1:
            return False
    return True


def coset_intersect(a: TorsionCoset, b: TorsionCoset) -> TorsionCoset:
    """Stack the relation rows and re-solve for a common translate; an
    inconsistent congruence system gives the canonical empty coset."""
    if a.dim != b.dim:
        raise ShapeError("cosets live in different ambient tori")
    if a.empty or b.empty:
        return TorsionCoset.empty_set(a.dim)
    rows = [list(r) for r in a.relations] + [list(r) for r in b.relations]
    targets = [sum(t * v for t, v in zip(a.translate, r)) for r in a.relations] + \
              [sum(t * v for t, v in zip(b.translate, r)) for r in b.relations]
    tau = solve_congruences(rows, targets, a.dim)
    if tau is None:
        return TorsionCoset.empty_set(a.dim)
    return TorsionCoset.of(a.dim, rows, tau)


def monomial_preimage(c: TorsionCoset, a_matrix: list[list[int]]) -> TorsionCoset:
    """Preimage of c under z -> (z^(row 1), ..., z^(row M)) for an M x N
    integer matrix; relations pull back to L A, and the translate is re-solved
    (the image of the map need not meet c, so the preimage may be empty)."""
    m = len(a_matrix)
    if m != c.dim:
        raise ShapeError(f"map has {m} target coordinates, coset ambient is {c.dim}")
    n = len(a_matrix[0]) if m else 0
    if any(len(r) != n for r in a_matrix):
        raise ShapeError("ragged exponent matrix")
    if c.empty:
        return TorsionCoset.empty_set(n)
    rows = []
    targets = []
    for v in c.relations:
        rows.append([sum(v[i] * a_matrix[i][j] for i in range(m)) for j in range(n)])
        targets.append(sum(t * x for t, x in zip(c.translate, v)))
    tau = solve_congruences(rows, targets, n)
    if tau is None:
        return TorsionCoset.empty_set(n)
    return TorsionCoset.of(n, rows, tau)


def enumerate_torsion(c: TorsionCoset, order_bound: int,
                      grid_budget: int = DEFAULT_GRID_BUDGET) -> set[tuple[Fraction, ...]]:
    """All torsion points of exponent dividing order_bound on the coset, by
    scanning the grid (1/order_bound) Z^N in [0, 1)^N."""
    if order_bound < 1:
        raise ShapeError("order bound must be positive")
    b = order_bound
    if b ** c.dim > grid_budget:
        raise BudgetExceeded(
            f"grid of {b}^{c.dim} points exceeds the budget of {grid_budget}")
    if c.empty:
        return set()
    # Integer form of each condition: sum(i_j v_j) * (M/b) = M * <t, v> (mod M).
    conds = []
    for row in c.relations:
        t = sum(x * v for x, v in zip(c.translate, row))
        m = lcm(b, t.denominator)
        conds.append((row, m // b, int(t * m), m))
    out = set()
    for idx in itertools.product(range(b), repeat=c.dim):
        ok = True
        for row, scale, target, mod in conds:
            acc = 0
            for i, v in zip(idx, row):
                if v:
                    acc += i * v
            if (acc * scale - target) % mod:
                ok = False
                break
        if ok:
            out.add(tuple(Fraction(i, b) for i in idx))
    return out


# ---------------------------------------------------------------------------
# Boolean formulas over cosets.

@dataclass(frozen=True)
class TorusFormula:
    """A finite union/intersection/complement tree over coset leaves."""

    op: str  # "union" | "intersection" | "complement" | "leaf"
    args: tuple = ()
    coset: TorsionCoset | None = None

    def __post_init__(self):
        if self.op == "leaf":
            if self.coset is None:
                raise ShapeError("leaf formula needs a coset")
        elif self.op in ("union", "intersection"):
            if not self.args:
                raise ShapeError(f"{self.op} needs at least one argument")
        elif self.op == "complement":
            if len(self.args) != 1:
                raise ShapeError("complement takes exactly one argument")
        else:
            raise ShapeError(f"unknown formula operation {self.op!r}")

    @classmethod
    def leaf(cls, coset: TorsionCoset) -> TorusFormula:
        return cls("leaf", (), coset)

    @classmethod
    def union(cls, *args: TorusFormula) -> TorusFormula:
        return cls("union", tuple(args))

    @classmethod
    def intersection(cls, *args: TorusFormula) -> TorusFormula:
        return cls("intersection", tuple(args))

    @classmethod
    def complement(cls, arg: TorusFormula) -> TorusFormula:
        return cls("complement", (arg,))


def formula_eval(f: TorusFormula, q) -> bool:
    """Evaluate the Boolean tree at the torsion point e^(2 pi i q)."""
    if f.op == "leaf":
        return coset_membership(q, f.coset)
    if f.op == "union":
        return any(formula_eval(g, q) for g in f.args)
    if f.op == "intersection":
        return all(formula_eval(g, q) for g in f.args)
    return not formula_eval(f.args[0], q)


def nonsimple_locus_formula(s: int, triple) -> TorusFormula:
    """The non-simple locus for rank-2 eigenvalue data with s punctures, as a
    formula in the 2s exponent coordinates (a_11, a_12, ..., a_s1, a_s2).

    The locus is the union, over one eigenvalue choice at each triple point
    and a common column choice at the others, of the subtorus where the chosen
    monomial is 1, intersected with the all-coordinates-product subtorus and
    the scalar-equality subtori of the non-triple points.
    """
    triple = frozenset(triple)
    if len(triple) != 3 or not all(1 <= i <= s for i in triple):
        raise ShapeError("triple must pick 3 distinct points in 1..s")
    n = 2 * s
    zeros = (Fraction(0),) * n
    parts = [TorusFormula.leaf(TorsionCoset.of(n, ((1,) * n,), zeros))]
    rest = [i for i in range(1, s + 1) if i not in triple]
    for i in rest:
        row = [0] * n
        row[2 * (i - 1)] = 1
        row[2 * (i - 1) + 1] = -1
        parts.append(TorusFormula.leaf(TorsionCoset.of(n, (row,), zeros)))
    i1, i2, i3 = sorted(triple)
    choices = []
    cols = [(j, k, l, m) for j in (0, 1) for k in (0, 1) for l in (0, 1)
            for m in ((0, 1) if rest else (0,))]
    for j, k, l, m in cols:
        row = [0] * n
        row[2 * (i1 - 1) + j] += 1
        row[2 * (i2 - 1) + k] += 1
        row[2 * (i3 - 1) + l] += 1
        for i in rest:
            row[2 * (i - 1) + m] += 1
        choices.append(TorusFormula.leaf(TorsionCoset.of(n, (row,), zeros)))
    parts.append(TorusFormula.union(*choices))
    return TorusFormula.intersection(*parts)


def residue_vector(points) -> tuple[Fraction, ...]:
    """Flatten per-point residue pairs into the 2s exponent coordinates."""
    return tuple(Fraction(a) for pt in points for a in pt)
