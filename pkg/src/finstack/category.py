"""Finite categories given by explicit tables, and functors between them.

Same diagrammatic composition convention as the groupoid module:
``comp[(f, g)]`` is "f then g", defined exactly when ``tgt(f) == src(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import AxiomViolation, DanglingId, MismatchedTarget, NoFinalObject
from .groupoid import sorted_ids


@dataclass(frozen=True)
class FiniteCategory:
    objects: tuple
    morphisms: tuple
    src: Mapping
    tgt: Mapping
    comp: Mapping
    ident: Mapping

    def compose(self, f, g):
        return self.comp[(f, g)]

    def identity(self, x):
        return self.ident[x]

    def is_identity(self, f) -> bool:
        return self.ident[self.src[f]] == f

    def hom(self, x, y) -> tuple:
        return tuple(m for m in self.morphisms if self.src[m] == x and self.tgt[m] == y)

    def morphisms_from(self, x) -> tuple:
        return tuple(m for m in self.morphisms if self.src[m] == x)

    def morphisms_into(self, x) -> tuple:
        return tuple(m for m in self.morphisms if self.tgt[m] == x)

    def final_object(self):
        for t in self.objects:
            if all(len(self.hom(x, t)) == 1 for x in self.objects):
                return t
        raise NoFinalObject("category has no final object")


def validate_category(objects, morphisms, src, tgt, comp, ident) -> FiniteCategory:
    """Check the category axioms exhaustively and return the validated value."""
    objects = sorted_ids(objects)
    morphisms = sorted_ids(morphisms)
    obj_set, mor_set = set(objects), set(morphisms)
    if len(obj_set) != len(objects) or len(mor_set) != len(morphisms):
        raise AxiomViolation("distinct-ids", None)
    for m in morphisms:
        if src.get(m) not in obj_set:
            raise DanglingId("src", m, src.get(m))
        if tgt.get(m) not in obj_set:
            raise DanglingId("tgt", m, tgt.get(m))
    for x in objects:
        e = ident.get(x)
        if e not in mor_set:
            raise DanglingId("id", x, e)
        if src[e] != x or tgt[e] != x:
            raise AxiomViolation("identity-endpoints", (x, e))
    for (f, g), h in comp.items():
        if f not in mor_set or g not in mor_set or h not in mor_set:
            raise DanglingId("comp", (f, g))
        if tgt[f] != src[g]:
            raise AxiomViolation("comp-domain", (f, g))
        if src[h] != src[f] or tgt[h] != tgt[g]:
            raise AxiomViolation("comp-endpoints", (f, g, h))
    for f in morphisms:
        for g in morphisms:
            if tgt[f] == src[g] and (f, g) not in comp:
                raise DanglingId("comp (missing entry)", (f, g))
    for f in morphisms:
        if comp[(ident[src[f]], f)] != f or comp[(f, ident[tgt[f]])] != f:
            raise AxiomViolation("unit", f)
    for f in morphisms:
        for g in morphisms:
            if tgt[f] != src[g]:
                continue
            fg = comp[(f, g)]
            for h in morphisms:
                if tgt[g] != src[h]:
                    continue
                if comp[(fg, h)] != comp[(f, comp[(g, h)])]:
                    raise AxiomViolation("associativity", (f, g, h))
    return FiniteCategory(objects=objects, morphisms=morphisms,
                          src=dict(src), tgt=dict(tgt), comp=dict(comp), ident=dict(ident))


def discrete_category(objects) -> FiniteCategory:
    objects = sorted_ids(objects)
    return validate_category(
        objects,
        [("id", x) for x in objects],
        {("id", x): x for x in objects},
        {("id", x): x for x in objects},
        {((("id", x)), (("id", x))): ("id", x) for x in objects},
        {x: ("id", x) for x in objects},
    )


def chain_category(n: int) -> FiniteCategory:
    """The poset category 0 -> 1 -> ... -> n, one morphism (i, j) per i <= j."""
    objects = list(range(n + 1))
    morphisms = [(i, j) for i in objects for j in objects if i <= j]
    return validate_category(
        objects,
        morphisms,
        {(i, j): i for i, j in morphisms},
        {(i, j): j for i, j in morphisms},
        {((i, j), (j2, k)): (i, k) for i, j in morphisms for j2, k in morphisms if j == j2},
        {i: (i, i) for i in objects},
    )


def poset_category(objects, relation) -> FiniteCategory:
    """Finite poset as a category; ``relation(x, y)`` decides x <= y."""
    objects = sorted_ids(objects)
    morphisms = [(x, y) for x in objects for y in objects if relation(x, y)]
    return validate_category(
        objects,
        morphisms,
        {m: m[0] for m in morphisms},
        {m: m[1] for m in morphisms},
        {((x, y), (y2, z)): (x, z) for x, y in morphisms for y2, z in morphisms if y == y2},
        {x: (x, x) for x in objects},
    )


@dataclass(frozen=True)
class CatFunctor:
    source: FiniteCategory
    target: FiniteCategory
    obj_map: Mapping
    mor_map: Mapping

    def on_obj(self, x):
        return self.obj_map[x]

    def on_mor(self, m):
        return self.mor_map[m]

    def then(self, other: CatFunctor) -> CatFunctor:
        if self.target != other.source:
            raise MismatchedTarget("functors not composable")
        return cat_functor(
            self.source, other.target,
            {x: other.obj_map[self.obj_map[x]] for x in self.source.objects},
            {m: other.mor_map[self.mor_map[m]] for m in self.source.morphisms},
        )


def cat_functor(source: FiniteCategory, target: FiniteCategory, obj_map, mor_map) -> CatFunctor:
    for x in source.objects:
        if obj_map.get(x) not in set(target.objects):
            raise DanglingId("obj_map", x, obj_map.get(x))
    for m in source.morphisms:
        fm = mor_map.get(m)
        if fm not in set(target.morphisms):
            raise DanglingId("mor_map", m, fm)
        if target.src[fm] != obj_map[source.src[m]] or target.tgt[fm] != obj_map[source.tgt[m]]:
            raise AxiomViolation("functor-endpoints", m)
    for x in source.objects:
        if mor_map[source.ident[x]] != target.ident[obj_map[x]]:
            raise AxiomViolation("functor-identity", x)
    for (f, g), h in source.comp.items():
        if target.comp[(mor_map[f], mor_map[g])] != mor_map[h]:
            raise AxiomViolation("functor-composition", (f, g))
    return CatFunctor(source, target, dict(obj_map), dict(mor_map))


def identity_cat_functor(c: FiniteCategory) -> CatFunctor:
    return cat_functor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms})


def comma_category(d, f: CatFunctor) -> FiniteCategory:
    """The comma category (d down F) for F: E -> D and an object d of D.

    Objects are pairs (e, alpha: d -> F(e)); a morphism (alpha, gamma) with
    gamma: e -> e' runs to (e', alpha . F(gamma)).  Discrete E gives a
    discrete comma category.
    """
    e_cat, d_cat = f.source, f.target
    if d not in set(d_cat.objects):
        raise DanglingId("comma", d)
    objects = [(e, alpha) for e in e_cat.objects for alpha in d_cat.hom(d, f.obj_map[e])]
    morphisms = [(alpha, gamma)
                 for gamma in e_cat.morphisms
                 for alpha in d_cat.hom(d, f.obj_map[e_cat.src[gamma]])]

    def m_src(mm):
        alpha, gamma = mm
        return (e_cat.src[gamma], alpha)

    def m_tgt(mm):
        alpha, gamma = mm
        return (e_cat.tgt[gamma], d_cat.compose(alpha, f.mor_map[gamma]))

    comp = {}
    for m1 in morphisms:
        for m2 in morphisms:
            if m_tgt(m1) == m_src(m2):
                comp[(m1, m2)] = (m1[0], e_cat.compose(m1[1], m2[1]))
    return validate_category(
        objects,
        morphisms,
        {m: m_src(m) for m in morphisms},
        {m: m_tgt(m) for m in morphisms},
        comp,
        {(e, alpha): (alpha, e_cat.ident[e]) for e, alpha in objects},
    )
