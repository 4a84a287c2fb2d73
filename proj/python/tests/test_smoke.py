import pytest

import crsym


def test_bounds_table():
    b = crsym.bounds(2, 0)
    assert (b["max"], b["submax"]) == (15, 7)
    assert crsym.bounds(2, 1)["submax"] == 8
    assert crsym.bounds(1, 0)["submax"] == 3


def test_catalog_counts_and_tangency():
    assert len(crsym.catalog("indefinite", 3, "+")) == 13
    assert len(crsym.catalog("definite", 2)) == 7
    assert crsym.all_tangent("indefinite", 4, "+-")
    assert crsym.all_tangent("definite", 3)


def test_solver_and_signature():
    assert crsym.solve_dimension("definite", 2, 3) == 7
    assert crsym.solve_dimension("flat", 2, 2, "++") == 15
    assert crsym.levi_signature("indefinite", 3, "+") == (2, 1, 0)


def test_graded_and_kostant():
    assert crsym.graded_dims(1, 4) == [1, 6, 10, 6, 1]
    words = crsym.hasse_words(5)
    assert [w["word"] for w in words] == [(1, 2), (5, 4), (1, 5)]
    assert words[2]["marks"] == [-3, 2, 0, 2, -3]
    assert crsym.satake_diagram(0, 3).startswith("nodes: x-*-*-x")


def test_run_reports():
    r = crsym.run("verify", "--family", "indefinite", "--n", "3", "--eps", "+")
    assert r["status"] == "ok"
    assert r["result"]["allTangent"] is True
    assert r["result"]["count"] == 13
    assert crsym.run("prolong", "--p", "1", "--q", "3")["result"]["dims"] == [4, 1, 0]


def test_errors():
    with pytest.raises(crsym.CommandError) as e:
        crsym.run("satake", "--n", "3", "--k", "2")
    assert e.value.code == 1
    with pytest.raises(crsym.CommandError) as e:
        crsym.run("satake", "--n", "3")
    assert e.value.code == 2
    assert crsym.run("bounds", "--n", "0", "--k", "0", check=False)["status"] == "error"
    with pytest.raises(ValueError):
        crsym.bounds(3, 2)
    with pytest.raises(ValueError):
        crsym.catalog("definite", 1)


def test_loaded_from_expected_place():
    import os

    build = os.environ.get("CRSYM_PYTHON_BUILD")
    if build:
        assert crsym._core.__file__.startswith(build)
