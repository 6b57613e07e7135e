import random
from fractions import Fraction

import pytest

from conftest import legendre_eigen, random_member_eigen
from rigidmono import (CurveGeometry, EigenData, Polynomial, ResidueData, deligne_residues,
                       exp_residues, fuchs_degree, hilbert_poly, rational, zeta)
from rigidmono.errors import NotQuasiUnipotent, ShapeError

F = Fraction


def test_deligne_single_values():
    assert deligne_residues(EigenData.of([[1, 1]])).points == ((F(0), F(0)),)
    assert deligne_residues(EigenData.of([[-1, -1]])).points == ((F(1, 2), F(1, 2)),)
    assert deligne_residues(EigenData.of([[zeta(3, 2), zeta(3, 2)]])).points == \
        ((F(2, 3), F(2, 3)),)


def test_deligne_legendre():
    rd = deligne_residues(legendre_eigen())
    assert rd.points == ((F(1, 2), F(1, 2)), (F(0), F(0)), (F(0), F(0)))


def test_deligne_rejects_nontorsion():
    with pytest.raises(NotQuasiUnipotent):
        deligne_residues(EigenData.of([[2, F(1, 2)]]))


def test_exp_residues_examples():
    rd = ResidueData.of([[F(1, 2), F(0)]])
    e = exp_residues(rd)
    assert e.points == ((rational(-1), rational(1)),)
    leg = ResidueData.of([[F(1, 2)] * 2, [0, 0], [0, 0]])
    assert exp_residues(leg) == legendre_eigen()


def test_exp_deligne_roundtrip():
    rng = random.Random(31)
    for _ in range(30):
        e = random_member_eigen(rng, 3, (1, 2, 3))
        rd = deligne_residues(e)
        assert exp_residues(rd) == e
        assert deligne_residues(exp_residues(rd)) == rd


def test_residue_range_validation():
    with pytest.raises(ShapeError):
        ResidueData.of([[F(3, 2), F(0)]])
    with pytest.raises(ShapeError):
        ResidueData.of([[F(-1, 2), F(0)]])


def test_fuchs_degree_examples():
    zero_rd = ResidueData.of([[0, 0]] * 3)
    assert fuchs_degree(zero_rd) == (F(0), True)
    leg = ResidueData.of([[F(1, 2)] * 2, [0, 0], [0, 0]])
    assert fuchs_degree(leg) == (F(-1), True)
    third = ResidueData.of([[F(1, 3), F(2, 3)], [0, 0], [0, 0]])
    assert fuchs_degree(third) == (F(-1), True)
    half = ResidueData.of([[F(1, 2), 0], [0, 0], [0, 0]])
    assert fuchs_degree(half) == (F(-1, 2), False)


def test_fuchs_degree_permutation_invariant():
    rng = random.Random(32)
    pts = [[F(1, 3), F(1, 2)], [F(0), F(5, 6)], [F(1, 4), F(3, 4)]]
    base = fuchs_degree(ResidueData.of(pts)).value
    for _ in range(5):
        rng.shuffle(pts)
        shuffled = [list(pt) for pt in pts]
        for pt in shuffled:
            rng.shuffle(pt)
        assert fuchs_degree(ResidueData.of(shuffled)).value == base


def test_hilbert_poly_examples():
    geom = CurveGeometry(0, 1)
    zero_rd = ResidueData.of([[0, 0]] * 3)
    assert hilbert_poly(zero_rd, geom) == Polynomial.of([2, 2])
    leg = ResidueData.of([[F(1, 2)] * 2, [0, 0], [0, 0]])
    assert hilbert_poly(leg, geom) == Polynomial.of([1, 2])
    genus1 = CurveGeometry(1, 1)
    assert hilbert_poly(zero_rd, genus1) == Polynomial.of([0, 2])


def test_hilbert_constant_matches_fuchs():
    rng = random.Random(33)
    for _ in range(20):
        pts = [[F(rng.randint(0, 5), 6), F(rng.randint(0, 5), 6)] for _ in range(3)]
        rd = ResidueData.of(pts)
        geom = CurveGeometry(rng.randint(0, 2), rng.randint(1, 3))
        p = hilbert_poly(rd, geom)
        const = p.coeffs[0].as_rational() if p.coeffs else F(0)
        assert const - rd.rank * (1 - geom.genus) == fuchs_degree(rd).value


def test_trivial_bundle_polynomial():
    # Zero residues give r((deg H) t + 1 - g) exactly.
    for r, g, d in ((2, 0, 1), (2, 1, 2), (3, 2, 1)):
        rd = ResidueData.of([[0] * r] * 3)
        p = hilbert_poly(rd, CurveGeometry(g, d))
        assert p == Polynomial.of([r * (1 - g), r * d])


def test_geometry_validation():
    with pytest.raises(ShapeError):
        CurveGeometry(-1, 1)
    with pytest.raises(ShapeError):
        CurveGeometry(0, 0)
