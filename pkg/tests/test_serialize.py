import random
from fractions import Fraction

import pytest

from conftest import legendre_eigen, legendre_tuple, random_member_eigen, random_tuple
from rigidmono import (ComponentSpec, GaloisElement, TorsionCoset, TorusFormula, deligne_residues,
                       rational, zeta)
from rigidmono import serialize as wire
from rigidmono.errors import SchemaError

F = Fraction


def test_rational_strings():
    assert wire.rational_to_json(F(-1)) == "-1"
    assert wire.rational_to_json(F(2, 3)) == "2/3"
    assert wire.rational_from_json("2/3") == F(2, 3)
    assert wire.rational_from_json("-5") == F(-5)
    assert wire.rational_from_json(["3", "4"]) == F(3, 4)
    with pytest.raises(SchemaError):
        wire.rational_from_json("x/y")
    with pytest.raises(SchemaError):
        wire.rational_from_json("1/0")


def test_cyc_roundtrip():
    vals = [rational(F(3, 7)), zeta(12) + rational(1), zeta(8) ** 3, zeta(3) * rational(F(-2, 5))]
    for v in vals:
        assert wire.cyc_from_json(wire.cyc_to_json(v)) == v


def test_cyc_accepts_abbreviations():
    assert wire.cyc_from_json("3/4") == rational(F(3, 4))
    assert wire.cyc_from_json(7) == rational(7)
    assert wire.cyc_from_json({"n": 4, "c": ["0", "1"]}) == zeta(4)


def test_cyc_rejects_unknown_keys():
    with pytest.raises(SchemaError):
        wire.cyc_from_json({"n": 4, "c": ["0", "1"], "extra": 1})


def test_matrix_and_tuple_roundtrip():
    t = legendre_tuple()
    again = wire.tuple_from_json(wire.tuple_to_json(t))
    assert again.matrices == t.matrices
    rng = random.Random(61)
    for _ in range(5):
        t = random_tuple(rng, 4)
        assert wire.tuple_from_json(wire.tuple_to_json(t)).matrices == t.matrices


def test_tuple_rejects_wrong_declared_shape():
    obj = wire.tuple_to_json(legendre_tuple())
    obj["s"] = 4
    with pytest.raises(SchemaError):
        wire.tuple_from_json(obj)


def test_eigen_and_residue_roundtrip():
    rng = random.Random(62)
    e = random_member_eigen(rng, 4, (1, 2, 3))
    assert wire.eigen_from_json(wire.eigen_to_json(e)) == e
    rd = deligne_residues(e)
    assert wire.residues_from_json(wire.residues_to_json(rd)) == rd


def test_eigen_points_serialized_in_canonical_order():
    e = legendre_eigen()
    obj = wire.eigen_to_json(e)
    assert obj["points"][0][0] == {"n": 1, "c": [["-1", "1"]]}


def test_galois_and_spec_roundtrip():
    g = GaloisElement(12, 5)
    assert wire.galois_from_json(wire.galois_to_json(g)) == g
    spec = ComponentSpec.of(5, [2, 3, 5])
    assert wire.spec_from_json(wire.spec_to_json(spec)) == spec


def test_coset_roundtrip():
    c = TorsionCoset.of(3, [[1, -2, 0], [0, 1, 1]], [F(1, 2), F(0), F(2, 3)])
    assert wire.coset_from_json(wire.coset_to_json(c)) == c
    empty = TorsionCoset.empty_set(2)
    back = wire.coset_from_json(wire.coset_to_json(empty))
    assert back.is_empty()


def test_formula_roundtrip():
    a = TorsionCoset.of(2, [[1, 0]], [0, 0])
    b = TorsionCoset.of(2, [[0, 1]], [F(1, 2), 0])
    f = TorusFormula.union(TorusFormula.leaf(a),
                           TorusFormula.complement(TorusFormula.leaf(b)))
    assert wire.formula_from_json(wire.formula_to_json(f)) == f


def test_formula_rejects_bad_op():
    with pytest.raises(SchemaError):
        wire.formula_from_json({"op": "xor", "args": [{"N": 1, "L": [[1]], "tau": ["0"]}]})
