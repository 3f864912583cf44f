import os
from fractions import Fraction

import pytest

import dynkin_frieze as df

DATA = os.environ.get(
    "FRIEZE_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data")
)


def fixture(name):
    return df.load(os.path.join(DATA, name))


def test_cartan_and_inverse():
    assert df.cartan_matrix("G2") == [[2, -1], [-3, 2]]
    assert df.inverse_cartan("A2") == [
        [Fraction(2, 3), Fraction(1, 3)],
        [Fraction(1, 3), Fraction(2, 3)],
    ]
    assert df.inverse_cartan("E8")[7] == [2, 3, 4, 6, 5, 4, 3, 2]
    prof = df.type_profile("E8")
    assert prof["b"] == [46, 68, 91, 135, 110, 84, 57, 29]
    assert prof["d"] == [1, 1, 2, 3, 2, 2, 2, 1]
    assert prof["period_cap"] == 32


def test_bad_type():
    with pytest.raises(ValueError):
        df.cartan_matrix("E9")


def test_e8_fixture():
    f = fixture("e8_example.frieze")
    assert f.dynkin == "E8"
    assert f.period == 4
    assert f.verify() == []
    a, ca = f.a_vector(16)
    assert a[3] == pytest.approx(5.10777, abs=1e-4)
    assert ca[7] == pytest.approx(0.27776, abs=1e-4)
    assert f.lemma(16)["passed"]
    assert f.check_bounds(16)


def test_perturbed_fixture_fails():
    f = fixture("a2_perturbed.frieze")
    violations = f.verify()
    assert violations
    assert {"vertex", "column", "lhs", "rhs"} <= set(violations[0])


def test_round_trip_text():
    f = df.Frieze("A2", [[1, 3, 1, 2, 2], [1, 2, 2, 1, 3]])
    text = df.emit_frieze(f)
    assert text == "dynkin A2\nperiod 5\nrow 1 3 1 2 2\nrow 1 2 2 1 3\n"
    assert df.parse_frieze(text) == f
    with pytest.raises(ValueError):
        df.parse_frieze("dynkin A2\nperiod 5\nrow 1 3\n")


def test_propagation_and_period():
    assert df.propagate_forward("A2", [1, 1]) == [3, 2]
    assert df.propagate_backward("A2", [3, 2]) == [1, 1]
    assert df.propagate_forward("A2", [2, 2]) is None
    r = df.detect_period("A2", [1, 1])
    assert r["status"] == "period" and r["period"] == 5
    assert df.detect_period("A2", [2, 2])["status"] == "dead_end"


def test_bounds():
    r = df.bounds("E8", 16)
    assert r["count_bound_exponent"] == 158720
    assert r["entry_cap_exponents"][7] == 464
    assert r["unit_exponent_base"] == Fraction(151875, 16384)
    assert r["refined_flat_log2"] == pytest.approx(51.40, abs=0.01)
    assert r["refined_formula_log2"][7] == pytest.approx(164.24, abs=0.01)


@pytest.mark.parametrize("rank,count", [(1, 2), (2, 5), (3, 14)])
def test_catalan_counts(rank, count):
    assert df.enumerate(f"A{rank}")["frieze_count"] == count


def test_strategies_agree():
    a = df.enumerate("G2", strategy="column_dfs")
    b = df.enumerate("G2", strategy="row_seeded")
    assert a["frieze_count"] == b["frieze_count"] == 9
    assert [o.rows for o in a["orbits"]] == [o.rows for o in b["orbits"]]


def test_truncated_search():
    r = df.enumerate("D4", cap=3)
    assert not r["complete"]
    assert all(o.verify() == [] for o in r["orbits"])


def test_big_integers_survive():
    huge = 10**40 + 7
    f = df.Frieze("A1", [[huge]])
    assert f.rows == [[huge]]
    assert f.verify()[0]["lhs"] == huge * huge


def test_quiver_dot():
    dot = df.quiver_dot("A2", 0, 0)
    assert dot.startswith("digraph")
    assert dot.count(" -> ") == 2
