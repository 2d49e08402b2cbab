"""Built-in fixtures and the JSON algebra spec format.

Grammar (JSON object, unknown fields rejected)::

    algebra  := quiver_spec | tensor_spec
    quiver_spec := {
        "name":             string,                       optional
        "vertices":         [string, ...],                required, distinct
        "arrows":           [{"label": s, "src": v, "tgt": v}, ...],   required
        "relations":        [[{"coeff": c, "path": [label, ...]}, ...], ...],  optional
        "nilpotency_bound": int >= 1                      required when relations are given
                                                          or the quiver has an oriented cycle
    }
    tensor_spec := {"name": string (optional), "local": quiver_spec, "quiver": quiver_spec}

A relation is a list of terms; ``path`` lists arrow labels in traversal order
(``["a", "b"]`` means *a then b*), ``coeff`` is an integer or a ``"p/q"``
string.  In a tensor spec the local part must have one vertex and the quiver
part must be acyclic without relations.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import (Algebra, AlgebraError, Arrow, Quiver, Relation, build_algebra, linear_quiver, path_algebra,
                      tensor_construction)


class SpecError(ValueError):
    pass


QUIVER_FIELDS = {"name", "vertices", "arrows", "relations", "nilpotency_bound"}
TENSOR_FIELDS = {"name", "local", "quiver"}
ARROW_FIELDS = {"label", "src", "tgt"}
TERM_FIELDS = {"coeff", "path"}


def _coeff(c) -> Fraction:
    if isinstance(c, bool) or not isinstance(c, (int, str)):
        raise SpecError(f"coefficient must be an integer or 'p/q' string, got {c!r}")
    try:
        return Fraction(c)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"bad coefficient {c!r}") from exc


def _check_fields(d, allowed: set, required: set, where: str) -> None:
    if not isinstance(d, dict):
        raise SpecError(f"{where}: expected an object")
    extra = set(d) - allowed
    if extra:
        raise SpecError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = required - set(d)
    if missing:
        raise SpecError(f"{where}: missing field(s) {sorted(missing)}")


def parse_quiver_spec(d: dict, where: str = "algebra") -> tuple[Quiver, list[Relation], int | None, str]:
    _check_fields(d, QUIVER_FIELDS, {"vertices", "arrows"}, where)
    verts = d["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, (str, int)) for v in verts):
        raise SpecError(f"{where}.vertices: expected a list of names")
    verts = [str(v) for v in verts]
    if len(set(verts)) != len(verts) or not verts:
        raise SpecError(f"{where}.vertices: must be nonempty and distinct")
    arrows = []
    for k, a in enumerate(d["arrows"] if isinstance(d["arrows"], list) else [None]):
        _check_fields(a, ARROW_FIELDS, ARROW_FIELDS, f"{where}.arrows[{k}]")
        src, tgt = str(a["src"]), str(a["tgt"])
        if src not in verts or tgt not in verts:
            raise SpecError(f"{where}.arrows[{k}]: unknown vertex")
        arrows.append(Arrow(str(a["label"]), src, tgt))
    labels = [a.label for a in arrows]
    if len(set(labels)) != len(labels):
        raise SpecError(f"{where}.arrows: duplicate labels")
    rels = []
    for k, r in enumerate(d.get("relations", [])):
        if not isinstance(r, list) or not r:
            raise SpecError(f"{where}.relations[{k}]: expected a nonempty list of terms")
        terms = []
        for j, t in enumerate(r):
            _check_fields(t, TERM_FIELDS, TERM_FIELDS, f"{where}.relations[{k}][{j}]")
            path = t["path"]
            if not isinstance(path, list) or not path or any(p not in labels for p in path):
                raise SpecError(f"{where}.relations[{k}][{j}].path: expected arrow labels")
            terms.append((_coeff(t["coeff"]), tuple(path)))
        rels.append(Relation.of(*terms))
    bound = d.get("nilpotency_bound")
    if bound is not None and (not isinstance(bound, int) or isinstance(bound, bool) or bound < 1):
        raise SpecError(f"{where}.nilpotency_bound: expected a positive integer")
    try:
        quiver = Quiver(tuple(verts), tuple(arrows))
    except AlgebraError as exc:
        raise SpecError(f"{where}: {exc}") from exc
    return quiver, rels, bound, str(d.get("name", ""))


def algebra_from_spec(d: dict) -> Algebra:
    if not isinstance(d, dict):
        raise SpecError("algebra spec must be an object")
    try:
        if "local" in d or "quiver" in d:
            _check_fields(d, TENSOR_FIELDS, {"local", "quiver"}, "tensor")
            local = _build(*parse_quiver_spec(d["local"], "tensor.local"))
            q, rels, _, qname = parse_quiver_spec(d["quiver"], "tensor.quiver")
            if rels:
                raise SpecError("tensor.quiver: relations are not allowed")
            lam = tensor_construction(local, q, name=str(d.get("name", "")) or f"{local.name}(x){qname or 'kQ'}")
            if qname:
                lam.tensor.hereditary.name = qname
            return lam
        return _build(*parse_quiver_spec(d))
    except AlgebraError as exc:
        raise SpecError(str(exc)) from exc


def _build(quiver: Quiver, rels, bound, name) -> Algebra:
    if bound is None:
        if rels or not quiver.is_acyclic():
            raise SpecError("nilpotency_bound is required with relations or oriented cycles")
        return path_algebra(quiver, name=name)
    return build_algebra(quiver, rels, bound, name=name)


def load_spec(path: str | Path) -> Algebra:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc})") from exc
    return algebra_from_spec(data)


# ---------------------------------------------------------------------------
# fixtures

def _linear_spec(n: int) -> dict:
    q = linear_quiver(n)
    return {"vertices": list(q.vertices),
            "arrows": [{"label": a.label, "src": a.source, "tgt": a.target} for a in q.arrows]}


DUAL_NUMBERS = {"name": "k[x]/(x^2)", "vertices": ["1"], "arrows": [{"label": "x", "src": "1", "tgt": "1"}],
                "relations": [[{"coeff": 1, "path": ["x", "x"]}]], "nilpotency_bound": 2}
R_XY = {"name": "R", "vertices": ["1"],
        "arrows": [{"label": "x", "src": "1", "tgt": "1"}, {"label": "y", "src": "1", "tgt": "1"}],
        "relations": [[{"coeff": 1, "path": ["x", "x"]}], [{"coeff": 1, "path": ["y", "y"]}],
                      [{"coeff": 1, "path": ["x", "y"]}, {"coeff": -1, "path": ["y", "x"]}]],
        "nilpotency_bound": 3}

FIXTURES: dict[str, dict] = {
    "a2": {"name": "kA2", **_linear_spec(2)},
    "a3": {"name": "kA3", **_linear_spec(3)},
    "a3-rad2": {"name": "kA3/rad^2", **_linear_spec(3),
                "relations": [[{"coeff": 1, "path": ["a", "b"]}]], "nilpotency_bound": 2},
    "dual-numbers": DUAL_NUMBERS,
    "r-xy": R_XY,
    "example-7": {"name": "Lambda", "local": R_XY, "quiver": {"name": "kA2", **_linear_spec(2)}},
    "a2-dual-numbers": {"name": "k[x]/(x^2)(x)kA2", "local": DUAL_NUMBERS, "quiver": {"name": "kA2", **_linear_spec(2)}},
    "a3-dual-numbers": {"name": "k[x]/(x^2)(x)kA3", "local": DUAL_NUMBERS, "quiver": {"name": "kA3", **_linear_spec(3)}},
}

_BUILT: dict[str, Algebra] = {}


def fixture(name: str) -> Algebra:
    """Built-in algebras; each is built once per process."""
    if name not in FIXTURES:
        raise SpecError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    if name not in _BUILT:
        _BUILT[name] = algebra_from_spec(FIXTURES[name])
    return _BUILT[name]


def resolve(source: str) -> Algebra:
    """A fixture name or a path to a JSON spec file."""
    if source in FIXTURES:
        return fixture(source)
    p = Path(source)
    if not p.exists():
        raise SpecError(f"{source!r} is neither a fixture nor a file")
    return load_spec(p)
