from fractions import Fraction

import pytest

import ech


def test_index_and_profile():
    assert ech.index("e(5,2)^2") == 56
    assert ech.profile("e(1,0)^2 e(3,1) h(1,1)")["h"] == 1


def test_action_is_exact():
    assert ech.action("P(3/2,1)", "e(5,2)") == Fraction(8)
    assert ech.action("E(2,1)", "e(1,0)") == Fraction(1)


def test_capacities():
    assert ech.capacities("P(3/2,1)", 3) == [0, 1, 2, Fraction(5, 2)]


def test_ratio():
    r = ech.ratio("P(3/2,1)", "E(2,1)", 100)
    assert r["max_ratio"] == Fraction(5, 4)
    assert r["argmax_k"] == 3


def test_obstruct():
    r = ech.obstruct(Fraction(4, 3), 3, 3)
    assert r["outcome"] == "obstructed"
    assert r["bound"] == Fraction(17, 9)
    r = ech.obstruct("4/3", 3, 1, c=Fraction(17, 9))
    assert r["outcome"] == "not_obstructed"
    assert ech.obstruct(Fraction(4, 3), 3, 3, node_limit=10)["outcome"] == "inconclusive"


def test_witness():
    w = ech.witness("B", 2)
    assert w["generator"] == "e(1,0)^13 e(1,1)"
    assert w["le_check"]["ok"]
    assert w["c"] == Fraction(63, 40)


def test_errors_become_value_error():
    with pytest.raises(ValueError):
        ech.index("h(1,0)")
    with pytest.raises(ValueError):
        ech.witness("Z", 2)
