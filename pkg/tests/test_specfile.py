import json

import pytest

from tautilt.specfile import FIXTURES, SpecError, algebra_from_spec, fixture, load_spec, resolve


@pytest.mark.parametrize("name,dim", [("a2", 3), ("a3", 6), ("a3-rad2", 5), ("dual-numbers", 2), ("r-xy", 4),
                                      ("example-7", 12), ("a2-dual-numbers", 6), ("a3-dual-numbers", 12)])
def test_fixture_dimensions(name, dim):
    assert fixture(name).dim == dim


def test_fixture_cached():
    assert fixture("a2") is fixture("a2")


def test_unknown_fixture():
    with pytest.raises(SpecError):
        fixture("nope")


def test_round_trip_through_file(tmp_path):
    p = tmp_path / "alg.json"
    p.write_text(json.dumps(FIXTURES["a3-rad2"]))
    A = load_spec(p)
    assert A.dim == 5
    assert resolve(str(p)).dim == 5


def test_tensor_spec_names():
    A = algebra_from_spec(FIXTURES["example-7"])
    assert A.name == "Lambda"
    assert A.tensor.hereditary.name == "kA2"


BASE = {"vertices": ["1", "2"], "arrows": [{"label": "a", "src": "1", "tgt": "2"}]}


@pytest.mark.parametrize("bad", [
    {**BASE, "colour": "red"},
    {"vertices": ["1"]},
    {"vertices": ["1", "1"], "arrows": []},
    {"vertices": [], "arrows": []},
    {"vertices": ["1"], "arrows": [{"label": "a", "src": "1", "tgt": "9"}]},
    {"vertices": ["1"], "arrows": [{"label": "a", "src": "1", "tgt": "1", "weight": 2}]},
    {"vertices": ["1", "2"], "arrows": [{"label": "a", "src": "1", "tgt": "2"}, {"label": "a", "src": "1", "tgt": "2"}]},
    {**BASE, "relations": [[{"coeff": 1, "path": ["zz"]}]], "nilpotency_bound": 2},
    {**BASE, "relations": [[{"coeff": 1.5, "path": ["a"]}]], "nilpotency_bound": 2},
    {**BASE, "relations": [[{"coeff": "1/0", "path": ["a"]}]], "nilpotency_bound": 2},
    {**BASE, "relations": [[{"coeff": 1, "path": ["a"]}]]},
    {**BASE, "nilpotency_bound": 0},
    {**BASE, "nilpotency_bound": True},
    {"vertices": ["1"], "arrows": [{"label": "x", "src": "1", "tgt": "1"}]},
    {"local": FIXTURES["r-xy"], "quiver": BASE, "extra": 1},
    {"local": FIXTURES["r-xy"]},
    {"local": FIXTURES["r-xy"], "quiver": {**BASE, "relations": [[{"coeff": 1, "path": ["a"]}]],
                                            "nilpotency_bound": 2}},
    {"local": FIXTURES["r-xy"], "quiver": {"vertices": ["1"], "arrows": [{"label": "z", "src": "1", "tgt": "1"}],
                                            "nilpotency_bound": 2}},
    [],
])
def test_rejects_bad_specs(bad):
    with pytest.raises(SpecError):
        algebra_from_spec(bad)


def test_invalid_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(SpecError):
        load_spec(p)


def test_missing_file():
    with pytest.raises(SpecError):
        resolve("/nonexistent/alg.json")


def test_fractional_coefficients():
    spec = {"vertices": ["1"], "arrows": [{"label": "x", "src": "1", "tgt": "1"}, {"label": "y", "src": "1", "tgt": "1"}],
            "relations": [[{"coeff": 1, "path": ["x", "x"]}], [{"coeff": 1, "path": ["y", "y"]}],
                          [{"coeff": "1/2", "path": ["x", "y"]}, {"coeff": "-1/2", "path": ["y", "x"]}]],
            "nilpotency_bound": 3}
    A = algebra_from_spec(spec)
    assert A.dim == 4 and A.is_commutative()
