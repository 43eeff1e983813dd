"""Smoke tests for the python bindings."""

from fractions import Fraction

import superder


def test_catalog():
    names = superder.catalog_names()
    assert "super-schrodinger" in names
    alg = superder.catalog("super-schrodinger")
    assert alg.dimension == 9
    assert alg.is_valid()
    assert [p for _, p in alg.basis()] == [0, 0, 0, 0, 0, 0, 1, 1, 1]


def test_bracket():
    alg = superder.catalog("super-schrodinger")
    he = alg.bracket({"h": "1"}, {"e": "1"})
    assert [Fraction(c) for c in he] == [2, 0, 0, 0, 0, 0, 0, 0, 0]
    ee = alg.bracket({"E": "1"}, {"E": "1"})
    assert Fraction(ee[0]) == 2


def test_center_and_ideal():
    alg = superder.catalog("super-schrodinger")
    assert alg.center_dim() == 1
    assert alg.is_ideal(["p", "q", "z", "G"])
    assert not alg.is_ideal(["e"])


def test_derivations():
    alg = superder.catalog("super-schrodinger")
    rep = superder.derivations(alg)
    assert rep["dims"]["total"] == 9
    assert rep["dims"]["inner"] == 8
    assert rep["der_decomposition"]["all"] is True
    thm = superder.verify_der_decomposition(alg)
    assert thm["dim_der"] == 9 and thm["dim_inner"] == 8


def test_is_derivation():
    alg = superder.catalog("super-schrodinger")
    delta = superder.delta_matrix()
    assert superder.is_derivation(alg, delta)["ok"]
    identity = [["1" if i == j else "0" for j in range(9)] for i in range(9)]
    chk = superder.is_derivation(alg, identity)
    assert not chk["ok"]
    assert chk["counterexample"][:2] == ("e", "f")


def test_certify():
    alg = superder.catalog("super-schrodinger")
    rep = superder.certify(alg)
    assert rep["verdict"] == "certified"
    assert rep["dims"] == {"der": 9, "closure": 9}
    weak = superder.certify(alg, probes=[{"z": "1"}], refute_trials=20, seed=3)
    assert weak["verdict"] == "inconclusive"
    assert weak["dims"]["closure"] == 73


def test_replay():
    alg = superder.catalog("super-schrodinger")
    rep = superder.replay(alg)
    assert rep["passed"] is True
    assert rep["final"]["dim"] == 2
    assert rep["final"]["matches_ad_span"] is True


def test_round_trip_and_errors():
    alg = superder.catalog("osp12")
    again = superder.algebra_from_json(alg.to_json())
    assert again.dimension == 5
    assert again.is_valid()
    try:
        superder.catalog("not-a-thing")
    except superder.AlgebraFormatError:
        pass
    else:
        raise AssertionError("expected AlgebraFormatError")


def test_determinism():
    alg = superder.catalog("super-schrodinger")
    a = superder.certify(alg)
    b = superder.certify(alg)
    assert a == b
