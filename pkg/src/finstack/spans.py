"""Localization by a calculus of right fractions: spans, components, homotopy.

A morphism class R must contain all identities and be closed under
composition; base-extension closure is checked against whatever pullbacks the
supplied oracle knows.  Localized hom-sets are connected components of span
categories, computed by exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .category import FiniteCategory
from .errors import HypothesisFails, InvalidClass, OracleMissing
from .groupoid import idkey, sorted_ids


@dataclass(frozen=True)
class Span:
    """Left leg lands in the inverted class; both legs share the apex."""

    apex: object
    left: object
    right: object

    def key(self):
        return (idkey(self.apex), idkey(self.left), idkey(self.right))


@dataclass(frozen=True)
class MorphismClass:
    category: FiniteCategory
    members: frozenset
    oracle: Mapping | None = None  # (f, g) cospan -> (apex, proj to src f, proj to src g)

    def __contains__(self, m) -> bool:
        return m in self.members

    def pullback(self, f, g):
        if self.oracle is None or (f, g) not in self.oracle:
            raise OracleMissing((f, g))
        return self.oracle[(f, g)]


def _check_pullback_square(cat: FiniteCategory, f, g, apex, pf, pg) -> None:
    if cat.src[pf] != apex or cat.src[pg] != apex:
        raise InvalidClass("oracle projections must leave the apex", (f, g))
    if cat.tgt[pf] != cat.src[f] or cat.tgt[pg] != cat.src[g]:
        raise InvalidClass("oracle projections land wrong", (f, g))
    if cat.compose(pf, f) != cat.compose(pg, g):
        raise InvalidClass("oracle square does not commute", (f, g))
    for x in cat.objects:
        for q1 in cat.hom(x, cat.src[f]):
            for q2 in cat.hom(x, cat.src[g]):
                if cat.compose(q1, f) != cat.compose(q2, g):
                    continue
                mediators = [u for u in cat.hom(x, apex)
                             if cat.compose(u, pf) == q1 and cat.compose(u, pg) == q2]
                if len(mediators) != 1:
                    raise InvalidClass("oracle output fails the universal property",
                                       (f, g, x, q1, q2))


def close_composition(cat: FiniteCategory, members) -> frozenset:
    """Transitive closure of a generating set under composition, with identities."""
    closed = set(members) | {cat.ident[x] for x in cat.objects}
    grew = True
    while grew:
        grew = False
        for r1 in sorted(closed, key=idkey):
            for r2 in sorted(closed, key=idkey):
                if cat.tgt[r1] == cat.src[r2]:
                    composite = cat.compose(r1, r2)
                    if composite not in closed:
                        closed.add(composite)
                        grew = True
    return frozenset(closed)


def morphism_class(cat: FiniteCategory, members, oracle: Mapping | None = None) -> MorphismClass:
    """Build the class generated by ``members``: identities are added and the
    composition closure is computed eagerly; base-extension closure is then
    checked against the oracle's pullbacks."""
    members = frozenset(members)
    if not members <= set(cat.morphisms):
        raise InvalidClass("members outside the category", sorted_ids(members - set(cat.morphisms)))
    members = close_composition(cat, members)
    if oracle is not None:
        for (f, g), (apex, pf, pg) in oracle.items():
            if cat.tgt[f] != cat.tgt[g]:
                raise InvalidClass("oracle key is not a cospan", (f, g))
            _check_pullback_square(cat, f, g, apex, pf, pg)
            if f in members and pg not in members:
                raise InvalidClass("not closed under base extension", (f, g, pg))
            if g in members and pf not in members:
                raise InvalidClass("not closed under base extension", (g, f, pf))
    return MorphismClass(category=cat, members=members, oracle=oracle)


def identities_class(cat: FiniteCategory) -> MorphismClass:
    return morphism_class(cat, {cat.ident[x] for x in cat.objects})


def all_spans(rcls: MorphismClass, x, y) -> tuple:
    cat = rcls.category
    spans = [Span(v, r, g)
             for v in cat.objects
             for r in cat.hom(v, x) if r in rcls
             for g in cat.hom(v, y)]
    return tuple(sorted(spans, key=Span.key))


def span_morphisms(cat: FiniteCategory, source: Span, target: Span) -> tuple:
    """Apex maps from source to target commuting with both legs."""
    return tuple(h for h in cat.hom(source.apex, target.apex)
                 if cat.compose(h, target.left) == source.left
                 and cat.compose(h, target.right) == source.right)


@dataclass(frozen=True)
class SpanClasses:
    """Connected components of a span category, with canonical representatives."""

    source: object
    target: object
    classes: tuple  # tuple of tuples of spans, each sorted; classes sorted by representative

    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    def class_index(self, span: Span) -> int:
        for i, component in enumerate(self.classes):
            if span in component:
                return i
        raise KeyError(span)

    def same_class(self, s1: Span, s2: Span) -> bool:
        return self.class_index(s1) == self.class_index(s2)

    def __len__(self) -> int:
        return len(self.classes)


def span_pi0(rcls: MorphismClass, x, y) -> SpanClasses:
    """Localized hom-set from x to y as components of the span category."""
    cat = rcls.category
    spans = all_spans(rcls, x, y)
    position = {s: i for i, s in enumerate(spans)}
    parent = list(range(len(spans)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for s1 in spans:
        for s2 in spans:
            if s1 is s2:
                continue
            if span_morphisms(cat, s1, s2):
                r1, r2 = find(position[s1]), find(position[s2])
                if r1 != r2:
                    parent[max(r1, r2)] = min(r1, r2)
    buckets: dict = {}
    for s in spans:
        buckets.setdefault(find(position[s]), []).append(s)
    classes = sorted((tuple(sorted(v, key=Span.key)) for v in buckets.values()),
                     key=lambda c: c[0].key())
    return SpanClasses(source=x, target=y, classes=tuple(classes))


def compose_spans(rcls: MorphismClass, s1: Span, s2: Span) -> Span:
    """Composite through the oracle pullback of (right leg of s1, left leg of s2)."""
    cat = rcls.category
    apex, p1, p2 = rcls.pullback(s1.right, s2.left)
    return Span(apex, cat.compose(p1, s1.left), cat.compose(p2, s2.right))


def identity_span(cat: FiniteCategory, x) -> Span:
    return Span(x, cat.ident[x], cat.ident[x])


def r_homotopic(rcls: MorphismClass, f, f2) -> bool:
    """One-step homotopy: a common R-cover of the source with two sections.

    Searches exhaustively for V, r: V -> X in R, sections t, t' of r, and
    g: V -> Y with g after t = f and g after t' = f2.
    """
    cat = rcls.category
    x, y = cat.src[f], cat.tgt[f]
    if cat.src[f2] != x or cat.tgt[f2] != y:
        return False
    for v in cat.objects:
        for r in cat.hom(v, x):
            if r not in rcls:
                continue
            sections = [t for t in cat.hom(x, v) if cat.compose(t, r) == cat.ident[x]]
            for g in cat.hom(v, y):
                hits_f = [t for t in sections if cat.compose(t, g) == f]
                hits_f2 = [t for t in sections if cat.compose(t, g) == f2]
                if hits_f and hits_f2:
                    return True
    return False


def r_homotopy_classes(rcls: MorphismClass, x, y) -> tuple:
    """Hom(x, y) modulo the equivalence generated by one-step homotopies."""
    cat = rcls.category
    homs = cat.hom(x, y)
    position = {m: i for i, m in enumerate(homs)}
    parent = list(range(len(homs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for f in homs:
        for f2 in homs:
            if idkey(f) < idkey(f2) and r_homotopic(rcls, f, f2):
                r1, r2 = find(position[f]), find(position[f2])
                if r1 != r2:
                    parent[max(r1, r2)] = min(r1, r2)
    buckets: dict = {}
    for m in homs:
        buckets.setdefault(find(position[m]), []).append(m)
    return tuple(sorted((tuple(sorted(v, key=idkey)) for v in buckets.values()),
                        key=lambda c: idkey(c[0])))


@dataclass(frozen=True)
class ZigzagReport:
    source: object
    target: object
    homotopy_class_count: int
    span_class_count: int
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


def zigzag_check(rcls: MorphismClass, x, y) -> ZigzagReport:
    """Compare Hom(x, y)/homotopy with the localized hom-set via f -> (id, f).

    Requires every R-morphism into x to admit a section; raises
    :class:`HypothesisFails` with a sectionless witness otherwise.
    """
    cat = rcls.category
    for r in cat.morphisms_into(x):
        if r in rcls and not any(cat.compose(t, r) == cat.ident[x]
                                 for t in cat.hom(x, cat.src[r])):
            raise HypothesisFails(r)
    hclasses = r_homotopy_classes(rcls, x, y)
    sclasses = span_pi0(rcls, x, y)
    image = [sclasses.class_index(Span(x, cat.ident[x], c[0])) for c in hclasses]
    injective = len(set(image)) == len(image)
    surjective = set(image) == set(range(len(sclasses)))
    return ZigzagReport(
        source=x,
        target=y,
        homotopy_class_count=len(hclasses),
        span_class_count=len(sclasses),
        injective=injective,
        surjective=surjective,
    )


def theta_span(rcls: MorphismClass, f, phi_x, phi_y) -> Span:
    """Localized image of f between chosen covers: pull the target cover back.

    ``phi_x`` and ``phi_y`` are R-morphisms onto the source and target of f;
    the span is the pullback of (phi_x . f, phi_y), whose left projection is
    again in R by base-extension closure.
    """
    cat = rcls.category
    if phi_x not in rcls or phi_y not in rcls:
        raise InvalidClass("cover morphisms must belong to R", (phi_x, phi_y))
    if cat.tgt[phi_x] != cat.src[f]:
        raise InvalidClass("phi_x must cover the source of f", (f, phi_x))
    if cat.tgt[phi_y] != cat.tgt[f]:
        raise InvalidClass("phi_y must cover the target of f", (f, phi_y))
    composite = cat.compose(phi_x, f)
    apex, p1, p2 = rcls.pullback(composite, phi_y)
    if p1 not in rcls:
        raise InvalidClass("pullback projection escaped R", p1)
    return Span(apex, p1, p2)


def well_defined_on_classes(rcls: MorphismClass, x, y, z) -> bool:
    """Composition descends to span classes: exhaustive check on one triple.

    For every pair of composable spans and every class-equivalent replacement
    of either factor, the composites land in one class.
    """
    left = span_pi0(rcls, x, y)
    right = span_pi0(rcls, y, z)
    out = span_pi0(rcls, x, z)
    for component_l in left.classes:
        for component_r in right.classes:
            composites = []
            for s1 in component_l:
                for s2 in component_r:
                    try:
                        composites.append(out.class_index(compose_spans(rcls, s1, s2)))
                    except OracleMissing:
                        return False
            if len(set(composites)) > 1:
                return False
    return True
