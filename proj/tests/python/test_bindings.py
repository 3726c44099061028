import json

import pytest

import toric_deform as td


def test_presets():
    assert "p11222-resolved" in td.preset_names()
    m = td.Model.preset("p11222-resolved")
    assert m.rank == 4
    assert len(m.rays) == 6
    assert m.divisor == [1] * 6
    assert len(m.hash) == 16


def test_example_reports():
    m = td.load("p11222-resolved")
    roots = td.run("roots", m)
    us = [r["u"] for r in roots["result"]["pairs"][0]["roots"]]
    assert us == [[-1, 1, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1]]
    deform = td.run("deform", m, root=0)
    assert deform["result"]["composite_transition"] == "x6 -> x6 - 2*t*x3/(x1*x2)"
    assert deform["result"]["pole_check"][0]["passed"]
    dims = td.run("dims", m)
    assert (dims["result"]["polynomial"], dims["result"]["total"]) == (83, 86)
    assert m.dim_R1() == 83


def test_quintic():
    q = td.Model.preset("quintic")
    assert q.dim_R1() == 101


def test_load_from_text():
    text = json.dumps({"rank": 1, "rays": [[1], [-1]], "cones": [[1], [2]],
                       "polynomial": [{"coefficient": "1", "exponents": [2, 0]},
                                      {"coefficient": "1", "exponents": [0, 2]}]})
    m = td.load(text)
    assert m.dim_R1() == 0


def test_errors():
    with pytest.raises(ValueError):
        td.Model.from_json('{"rank": 1')
    with pytest.raises(ValueError):
        td.run("deform", td.load("quintic"), root=0)


def test_smith_and_points():
    s = td.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert s["elementary_divisors"] == [2, 6, 12]
    pts = td.lattice_points([([1, 0], 0), ([0, 1], 0), ([-1, -1], -2)], 2)
    assert len(pts) == 6
