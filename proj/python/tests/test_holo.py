from fractions import Fraction

import pytest

import holo

J = [["0", "-1"], ["1", "0"]]
TYPE4 = {
    "n": 3,
    "generators": [
        {"A": [[0, -1, 0], [1, 0, 0], [0, 0, 0]], "X": "e3"},
        {"X": "e1"},
        {"X": "e2"},
    ],
}


def test_version():
    assert holo.__version__ == "0.1.0"


def test_bracket_matches_commutator():
    # [(1, 0, 0), (0, 0, X)] = (0, 0, X)
    r = holo.bracket(2, {"a": "1"}, {"X": ["3", "-1/2"]})
    assert r["X"] == ["3", "-1/2"]
    assert r["a"] == "0"
    r = holo.bracket(2, {"A": J}, {"X": "e1"})
    assert r["X"] == ["0", "1"]


def test_chart():
    assert holo.line_of_chart(2, "e1") == ["-1/2", "1", "0", "1"]
    assert holo.chart_of_line(2, ["-1", "2", "0", "2"]) == ["1", "0"]
    with pytest.raises(ValueError):
        holo.chart_of_line(2, "p")


def test_closure(validate):
    r = validate(holo.closure({"n": 2, "generators": [{"A": J}, {"X": "e1"}]}), "closure_report.schema.json")
    assert r["algebra"]["dim"] == 3
    assert r["input_closed"] is False


def test_check_wi(validate):
    validate({"n": 2, "generators": [{"X": "e1"}]}, "algebra_input.schema.json")
    r = validate(holo.check_wi({"n": 2, "generators": [{"X": "e1"}]}), "check_wi_report.schema.json")
    assert r["verdict"] == "REDUCIBLE"
    assert r["sides_agree"]
    assert r["e_side"]["certificate"]["kind"] == "affine-subspace"
    r = validate(holo.check_wi({"n": 2, "generators": [{"X": "e1"}, {"X": "e2"}]}), "check_wi_report.schema.json")
    assert r["verdict"] == "WEAKLY_IRREDUCIBLE"


def test_classify_type3(validate):
    r = validate(holo.classify({"n": 2, "generators": [{"a": 1, "A": J}, {"X": "e1"}, {"X": "e2"}]}),
                 "classify_report.schema.json")
    assert r["type"] == 3
    assert r["phi"]["values"] == ["1"]
    assert r["group"]["form"] == "(A^Phi x H) x| E"


def test_classify_type4(validate):
    validate(TYPE4, "algebra_input.schema.json")
    r = validate(holo.classify(TYPE4), "classify_report.schema.json")
    assert r["type"] == 4
    assert r["U"] == ["e3"]
    assert r["W"] == ["e1", "e2"]
    assert r["psi"]["values"] == ["e3"]
    assert r["group"]["screw"]["variant"] == "U^Psi"


def test_classify_rejects_reducible():
    with pytest.raises(holo.ClassificationError) as info:
        holo.classify({"n": 2, "generators": [{"X": "e1"}]})
    assert info.value.reason == "NotWeaklyIrreducible"
    with pytest.raises(holo.ClassificationError) as info:
        holo.classify({"n": 1, "matrices": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]})
    assert info.value.reason == "NotInNormalPosition"


def test_bad_input():
    with pytest.raises(ValueError):
        holo.closure({"n": 2})
    with pytest.raises(ValueError):
        holo.closure("{not json")
    with pytest.raises(ValueError):
        holo.closure({"n": 2, "generators": [{"A": [["0", "1"], ["1", "0"]]}]})


@pytest.mark.parametrize("type_,B,n", [(1, "so2", 2), (2, "so3", 3), (3, "so2+so2", 4), (4, "so2", 3)])
def test_make_round_trip(validate, type_, B, n):
    made = validate(holo.make(type_, B, n, seed=3), "make_report.schema.json")
    assert made["construction"]["type"] == type_
    r = holo.classify({"n": made["n"], "generators": made["generators"]})
    assert r["type"] == type_


def test_make_non_surjective():
    made = holo.make(4, "so2", 3, surjective=False, seed=1)
    assert made["construction"]["psi_surjective"] is False
    assert holo.check_wi({"n": 3, "generators": made["generators"]})["verdict"] == "REDUCIBLE"


def test_boundary_act(validate):
    data = {"n": 2, "g": [["2", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1/2"]],
            "Y": ["1", "-3"]}
    validate(data, "boundary_act_input.schema.json")
    r = validate(holo.boundary_act(data), "boundary_act_report.schema.json")
    assert r["images"] == [["2", "-6"]]
    assert r["sim"]["lambda"] == pytest.approx(2.0)
    r = validate(holo.boundary_act({"n": 2, "triple": {"A": J}, "Y": [1.0, 0.0], "s": 0.5}),
                 "boundary_act_report.schema.json")
    assert max(r["flow_residuals"]) <= 1e-6


def test_transport_worked_example(validate):
    data = {"n": 2, "v": {"x": "1", "alpha": ["0", "0"], "y": "-1/2"}, "w": {"x": "1", "alpha": "e1", "y": "-1"}}
    validate(data, "transport_input.schema.json")
    r = validate(holo.transport(data), "transport_report.schema.json")
    assert r["exact"]
    assert r["factors"]["N"] == ["-2", "0"]
    assert r["factors"]["A"] == "1/2"
    g = [[Fraction(c) for c in row] for row in r["matrix"]]
    v = [Fraction(1), 0, 0, Fraction(-1, 2)]
    assert [sum(a * b for a, b in zip(row, v)) for row in g] == [1, 1, 0, -1]


def test_screw_transport(validate):
    data = {"n": 2, "v": [1, 0, 0, "-1/2"], "w": [2, 1, 1, "-3/4"], "group": {"variant": "Aphi|N", "Z": J}}
    validate(data, "transport_input.schema.json")
    r = validate(holo.transport(data), "transport_report.schema.json")
    assert not r["exact"]
    assert r["residual"] <= 1e-9


def test_selftest(validate):
    r = validate(holo.selftest(seed=1, scale=0.05), "selftest_report.schema.json")
    assert r["passed"]
    assert [c["id"] for c in r["criteria"]] == list(range(1, 9))


def test_import_location():
    import os
    if os.environ.get("HOLO_INPLACE"):
        assert holo._core.__file__.startswith(os.environ["PYTHONPATH"].split(os.pathsep)[0])
