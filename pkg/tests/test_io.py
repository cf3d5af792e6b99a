import json
from fractions import Fraction

import numpy as np
import pytest

from conftest import catalog_params, exact_catalog
from metriclie import MetricLieAlgebra, StructuralError, build_lie_hypersurface, soliton_solve
from metriclie.io import (
    ParseError,
    algebra_from_dict,
    algebra_to_dict,
    dumps,
    load_algebra,
    save_algebra,
    soliton_to_dict,
)

F = Fraction

EXAMPLE = {"dim": 3, "basis": ["A0", "Y1", "Z0"], "gram": None, "brackets": [
    {"i": 0, "j": 1, "terms": [{"k": 1, "v": "1/2"}]},
    {"i": 0, "j": 2, "terms": [{"k": 2, "v": "1"}]},
]}


def test_example_file_parses_exact():
    m = algebra_from_dict(EXAMPLE)
    assert m.exact and m.is_orthonormal
    assert m.algebra.structure == {(0, 1): {1: F(1, 2)}, (0, 2): {2: F(1)}}


def test_decimal_file_is_float():
    data = json.loads(json.dumps(EXAMPLE).replace('"1/2"', '"0.5"'))
    m = algebra_from_dict(data)
    assert not m.exact
    assert m.algebra.structure[(0, 1)][1] == 0.5


def test_integers_only_default_to_exact():
    data = json.loads(json.dumps(EXAMPLE).replace('"1/2"', '"2"'))
    assert algebra_from_dict(data).exact


def test_mixed_file_rejected():
    data = json.loads(json.dumps(EXAMPLE))
    data["brackets"][0]["terms"][0]["v"] = "0.5"
    data["brackets"][1]["terms"][0]["v"] = "1/3"
    with pytest.raises(ParseError):
        algebra_from_dict(data)


@pytest.mark.parametrize("entry", [
    {"i": 1, "j": 0, "terms": [{"k": 1, "v": "1"}]},
    {"i": 1, "j": 1, "terms": [{"k": 1, "v": "1"}]},
    {"i": 0, "j": 3, "terms": [{"k": 1, "v": "1"}]},
    {"i": 0, "j": 1, "terms": [{"k": -1, "v": "1"}]},
])
def test_bad_indices_rejected(entry):
    data = {"dim": 3, "gram": None, "brackets": [entry]}
    with pytest.raises(StructuralError):
        algebra_from_dict(data)


def test_duplicate_pair_rejected():
    data = json.loads(json.dumps(EXAMPLE))
    data["brackets"].append(data["brackets"][0])
    with pytest.raises(StructuralError):
        algebra_from_dict(data)


@pytest.mark.parametrize("bad", [{}, {"dim": 2, "brackets": [{"i": 0}]}, {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "v": "x"}]}]}])
def test_malformed_input(bad):
    with pytest.raises(ParseError):
        algebra_from_dict(bad)


def test_gram_parsing():
    data = {"dim": 2, "basis": ["a", "b"], "gram": [["2", "1/2"], ["1/2", "1"]], "brackets": []}
    m = algebra_from_dict(data)
    assert m.gram[0, 1] == F(1, 2) and not m.is_orthonormal
    assert algebra_to_dict(m)["gram"] == [["2", "1/2"], ["1/2", "1"]]


@pytest.mark.parametrize("m", catalog_params(exact_catalog(3)))
def test_round_trip_exact(m, tmp_path):
    path = tmp_path / "alg.json"
    save_algebra(m, path)
    back = load_algebra(path)
    assert back.algebra.structure == m.algebra.structure
    assert back.basis_names == m.basis_names
    assert np.all(back.gram == m.gram)


def test_round_trip_float_is_lossless(tmp_path):
    m = build_lie_hypersurface(3, 0.7).metric_algebra
    path = tmp_path / "alg.json"
    save_algebra(m, path)
    back = load_algebra(path)
    assert not back.exact
    assert back.algebra.structure == m.algebra.structure


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_algebra(path)


def test_soliton_dict_infeasible():
    m = build_lie_hypersurface(4, cos=F(3, 5), sin=F(4, 5)).metric_algebra
    out = soliton_to_dict(soliton_solve(m), m.basis_names)
    assert out["status"] == "infeasible"
    assert out["c"] is None and out["D"] is None
    assert out["residual_squared"] == "6654873/3470000"
    assert out["obstruction"] == {"row": "Y1", "col": "Z0", "value": "24/25"}


def test_dumps_newline_terminated():
    text = dumps({"b": 1, "a": [F(1, 2).__str__()]})
    assert text.endswith("\n") and text.index('"a"') < text.index('"b"')


def test_abelian_dict_has_no_brackets():
    from metriclie import LieAlgebra

    d = algebra_to_dict(MetricLieAlgebra(LieAlgebra.abelian(2)))
    assert d["brackets"] == [] and d["gram"] is None
