"""Smoke tests for the qmon python module."""

import os

import pytest

import qmon

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data")


def test_catalog_table():
    q = qmon.catalog("dihedral:3")
    assert len(q) == 3
    assert q.rhd(0, 1) == 2  # 2*1 - 0 mod 3
    assert q.unrhd(q.rhd(0, 1), 1) == 0
    assert qmon.axioms_ok(q)
    assert any("dihedral" in n for n in qmon.catalog_names())


def test_table_roundtrip_and_violations():
    q = qmon.catalog("transposition:3")
    again = qmon.Quandle.from_json(q.to_json())
    assert again == q
    assert again.table() == q.table()

    broken = qmon.Quandle([[1, 1], [0, 0]])
    assert not qmon.axioms_ok(broken)
    laws = [law for law, witness in qmon.axiom_violations(broken)]
    assert laws  # at least the idempotence failure at 0


def test_homs_and_orbits():
    r3 = qmon.catalog("dihedral:3")
    assert len(qmon.homs(r3, r3)) == 9
    assert qmon.orbit_count(r3) == 1
    assert qmon.orbit_count(qmon.catalog("trivial:4")) == 4
    assert qmon.orbit_count(qmon.catalog("genus2-quotient")) == 3

    assert qmon.subquandle(r3, [0]) == [0]
    assert qmon.subquandle(r3, [0, 1]) == [0, 1, 2]

    doubled = qmon.achiral_double(r3)
    assert len(doubled) == 6
    assert qmon.axioms_ok(doubled)


def test_hurwitz():
    t3 = qmon.catalog("transposition:3")
    members, truncated = qmon.hurwitz_orbit(t3, [0, 1, 0, 1])
    assert len(members) == 27
    assert not truncated
    assert [0, 1, 0, 1] in members

    moved = qmon.hurwitz_move(t3, [0, 1], 0, right=True)
    assert moved == [1, t3.rhd(0, 1)]
    assert qmon.hurwitz_move(t3, moved, 0, right=False) == [0, 1]

    members, truncated = qmon.hurwitz_orbit(t3, [0, 1, 0, 1], max_size=5)
    assert len(members) == 5 and truncated


def test_counting():
    r3 = qmon.catalog("dihedral:3")
    assert qmon.count_colorings(r3, 2, "sphere") == 3
    assert qmon.count_colorings(r3, 5, "disk") == 243
    assert qmon.count_colorings(r3, 0, "sphere") == 1
    with pytest.raises(qmon.StructuralError):
        qmon.count_colorings(r3, 2, "torus")


def test_homology():
    r3 = qmon.catalog("dihedral:3")
    assert qmon.homology(r3, 1) == (1, [], "Z")
    assert qmon.homology(r3, 2) == (0, [], "0")
    assert qmon.homology(r3, 3) == (0, [3], "Z/3")
    free, torsion, pretty = qmon.homology(qmon.catalog("trivial:2"), 4, "rack", bound=5)
    assert (free, torsion) == (16, [])
    with pytest.raises(qmon.CapacityError):
        qmon.homology(r3, 4)  # needs the degree-5 boundary, over the default bound


def test_slopes():
    a = qmon.Slope.make(1, 0)
    b = qmon.Slope.make(0, 1)
    assert str(a) == "0/1" and str(b) == "1/0"
    assert str(a.rhd(b)) == "1/1"
    assert str(a.unrhd(b)) == "-1/1"
    assert a.rhd(b).unrhd(b) == a
    assert qmon.slope_rhd(a, b) == a.rhd(b)
    assert qmon.twist_matrix(a) == (1, 1, 0, 1)
    assert qmon.twist_matrix(b) == (1, 0, -1, 1)

    one = qmon.Slope.parse("I")
    assert one.contractible
    assert a.rhd(one) == a and one.rhd(a) == one
    with pytest.raises(qmon.StructuralError):
        qmon.Slope.parse("a/b")
    with pytest.raises(qmon.StructuralError):
        qmon.Slope.make(2, 4)


def test_validate_file():
    valid, checks = qmon.validate_file(os.path.join(DATA, "e1.json"))
    assert valid and checks
    assert all(passed for name, passed, detail in checks)

    valid, checks = qmon.validate_file(os.path.join(DATA, "conic.json"), projective=True)
    assert valid
    assert "closing exponent is 1" in [name for name, passed, detail in checks]

    with pytest.raises(qmon.StructuralError):
        qmon.validate_file(os.path.join(DATA, "no_such_tuple.json"))


def test_errors():
    with pytest.raises(qmon.StructuralError):
        qmon.catalog("nonsense:7")
    with pytest.raises(qmon.StructuralError):
        qmon.catalog("torus-dehn")  # infinite: no finite table
    with pytest.raises(qmon.StructuralError):
        qmon.Quandle([[0, 0], [0, 1]])  # column 0 is not a bijection
