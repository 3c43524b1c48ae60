"""JSON interchange for groupoids, descent data, categories, and Kan inputs.

Documents use string ids throughout.  Schemas are validated before any
computation; violations raise :class:`SchemaError` with the offending key.
"""

from __future__ import annotations

import json
from typing import Mapping

from .category import CatFunctor, FiniteCategory, cat_functor, validate_category
from .errors import SchemaError
from .groupoid import FiniteGroupoid, GroupoidFunctor, functor, validate_groupoid
from .kan import (
    FinSetFiber,
    IndexedCategory,
    Lift,
    PullbackFunctor,
    constant_pullback,
    fib_mor,
    identity_pullback,
    indexed_category,
    lift,
    make_fiber,
    relabel_pullback,
)
from .spans import MorphismClass, morphism_class
from .torsor import Cocycle, covered_space, validate_cocycle


def _require(doc: Mapping, key: str, kind: type):
    if key not in doc:
        raise SchemaError(f"missing key {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaError(f"key {key!r} must be {kind.__name__}, got {type(value).__name__}")
    return value


def load_json(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError(f"{path}: top level must be an object")
    return doc


def groupoid_from_json(doc: Mapping) -> FiniteGroupoid:
    objects = _require(doc, "objects", list)
    arrows_doc = _require(doc, "arrows", list)
    arrows, src, tgt = [], {}, {}
    for entry in arrows_doc:
        if not isinstance(entry, dict):
            raise SchemaError("arrows entries must be objects with id/src/tgt")
        a = _require(entry, "id", str)
        arrows.append(a)
        src[a] = _require(entry, "src", str)
        tgt[a] = _require(entry, "tgt", str)
    comp_doc = _require(doc, "comp", list)
    comp = {}
    for entry in comp_doc:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SchemaError("comp entries must be triples [a, b, ab]")
        comp[(entry[0], entry[1])] = entry[2]
    ident = _require(doc, "id", dict)
    inv = _require(doc, "inv", dict)
    return validate_groupoid(objects, arrows, src, tgt, comp, ident, inv)


def groupoid_to_json(g: FiniteGroupoid) -> dict:
    names = {x: str(x) for x in g.objects}
    names.update({a: str(a) for a in g.arrows})
    if len(set(names.values())) != len(names):
        raise SchemaError("ids do not stringify injectively")
    return {
        "objects": [names[x] for x in g.objects],
        "arrows": [{"id": names[a], "src": names[g.src[a]], "tgt": names[g.tgt[a]]}
                   for a in g.arrows],
        "comp": [[names[a], names[b], names[c]] for (a, b), c in sorted(
            g.comp.items(), key=lambda kv: (str(kv[0][0]), str(kv[0][1])))],
        "id": {names[x]: names[g.ident[x]] for x in g.objects},
        "inv": {names[a]: names[g.inv[a]] for a in g.arrows},
    }


def groupoid_functor_from_json(doc: Mapping) -> GroupoidFunctor:
    source = groupoid_from_json(_require(doc, "source", dict))
    target = groupoid_from_json(_require(doc, "target", dict))
    return functor(source, target, _require(doc, "objects", dict), _require(doc, "arrows", dict))


def cocycle_from_json(doc: Mapping, target: FiniteGroupoid) -> Cocycle:
    points = _require(doc, "W", list)
    cover_doc = _require(doc, "cover", dict)
    cov = covered_space(points, {i: set(part) for i, part in cover_doc.items()})
    a_doc = _require(doc, "a", dict)
    gamma_doc = _require(doc, "gamma", dict)
    gamma = {}
    for key, table in gamma_doc.items():
        parts = key.split(",")
        if len(parts) != 2:
            raise SchemaError(f"gamma key {key!r} must look like 'i,j'")
        gamma[(parts[0], parts[1])] = dict(table)
    return validate_cocycle(cov, target, {i: dict(t) for i, t in a_doc.items()}, gamma)


def cocycle_to_json(c: Cocycle) -> dict:
    return {
        "W": [str(w) for w in c.cov.points],
        "cover": {str(i): [str(w) for w in sorted(c.cov.cover[i], key=str)]
                  for i in c.cov.indices()},
        "a": {str(i): {str(w): str(x) for w, x in sorted(c.a[i].items(), key=lambda kv: str(kv[0]))}
              for i in c.cov.indices()},
        "gamma": {f"{i},{j}": {str(w): str(arrow) for w, arrow in
                               sorted(table.items(), key=lambda kv: str(kv[0]))}
                  for (i, j), table in sorted(c.gamma.items(), key=lambda kv: str(kv[0]))},
    }


def category_from_json(doc: Mapping) -> FiniteCategory:
    objects = _require(doc, "objects", list)
    mor_doc = _require(doc, "morphisms", list)
    morphisms, src, tgt = [], {}, {}
    for entry in mor_doc:
        m = _require(entry, "id", str)
        morphisms.append(m)
        src[m] = _require(entry, "src", str)
        tgt[m] = _require(entry, "tgt", str)
    comp = {}
    for entry in _require(doc, "comp", list):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SchemaError("comp entries must be triples [f, g, fg]")
        comp[(entry[0], entry[1])] = entry[2]
    ident = _require(doc, "id", dict)
    return validate_category(objects, morphisms, src, tgt, comp, ident)


def cat_functor_from_json(doc: Mapping, source: FiniteCategory, target: FiniteCategory) -> CatFunctor:
    return cat_functor(source, target, _require(doc, "objects", dict), _require(doc, "morphisms", dict))


def morphism_class_from_json(doc: Mapping, cat: FiniteCategory) -> MorphismClass:
    members = set(_require(doc, "members", list))
    oracle = None
    if "pullbacks" in doc:
        oracle = {}
        for entry in _require(doc, "pullbacks", list):
            cospan = _require(entry, "cospan", list)
            if len(cospan) != 2:
                raise SchemaError("cospan must have two morphisms")
            oracle[(cospan[0], cospan[1])] = (
                _require(entry, "apex", str),
                _require(entry, "proj1", str),
                _require(entry, "proj2", str),
            )
    return morphism_class(cat, members, oracle)


def fiber_from_json(doc: Mapping) -> FinSetFiber:
    return make_fiber({name: list(elems) for name, elems in doc.items()})


def _pullback_from_json(doc: Mapping, source: FinSetFiber, target: FinSetFiber) -> PullbackFunctor:
    kind = _require(doc, "kind", str)
    if kind == "identity":
        return identity_pullback(source)
    if kind == "constant":
        return constant_pullback(source, target, _require(doc, "at", str))
    if kind == "relabel":
        return relabel_pullback(source, target,
                                _require(doc, "objects", dict),
                                {k: dict(v) for k, v in _require(doc, "carriers", dict).items()})
    raise SchemaError(f"unknown pullback kind {kind!r}")


def indexed_category_from_json(doc: Mapping, base: FiniteCategory) -> IndexedCategory:
    fibers_doc = _require(doc, "fibers", dict)
    fibers = {b: fiber_from_json(d) for b, d in fibers_doc.items()}
    for b in base.objects:
        if b not in fibers:
            raise SchemaError(f"missing fiber for base object {b!r}")
    pulls_doc = _require(doc, "pulls", dict)
    pulls = {}
    for m in base.morphisms:
        if m not in pulls_doc:
            raise SchemaError(f"missing pullback functor for base morphism {m!r}")
        pulls[m] = _pullback_from_json(pulls_doc[m], fibers[base.tgt[m]], fibers[base.src[m]])
    return indexed_category(base, fibers, pulls)


def lift_from_json(doc: Mapping, ic: IndexedCategory, shape: FiniteCategory,
                   anchor: CatFunctor) -> Lift:
    objects = _require(doc, "objects", dict)
    morphisms = {}
    for m, entry in _require(doc, "morphisms", dict).items():
        morphisms[m] = fib_mor(_require(entry, "src", str), _require(entry, "tgt", str),
                               dict(_require(entry, "map", dict)))
    return lift(ic, shape, anchor, objects, morphisms)
