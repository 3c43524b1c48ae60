"""Strict indexed categories with finite-set fibers and relative right Kan extensions.

A fiber over a base object is the category of a few named finite sets with
all functions between them; pullback functors along base morphisms are
explicit tables, strictly compatible with composition.  Limits in a fiber are
computed concretely as cone sets, a limit is *global* when every pullback
functor carries it to a limit again, and the right Kan extension of a lift is
assembled pointwise from global limits over comma categories.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .category import CatFunctor, FiniteCategory, comma_category
from .errors import (
    AxiomViolation,
    DanglingId,
    NotALimit,
    NotFComplete,
    NotFunctorial,
)
from .groupoid import (
    GroupoidFunctor,
    fiber_product_2_projections,
    functor,
    idkey,
    sorted_ids,
)


@dataclass(frozen=True)
class FibMor:
    """A function between two named finite sets of one fiber."""

    src: object
    tgt: object
    mapping: tuple  # sorted tuple of (element, image) pairs

    def apply(self, x):
        for k, v in self.mapping:
            if k == x:
                return v
        raise KeyError(x)

    def as_dict(self) -> dict:
        return dict(self.mapping)


def fib_mor(src, tgt, mapping: Mapping) -> FibMor:
    return FibMor(src=src, tgt=tgt,
                  mapping=tuple(sorted(mapping.items(), key=lambda kv: idkey(kv[0]))))


@dataclass(frozen=True)
class FinSetFiber:
    """Named finite sets; the morphisms are all functions between them."""

    sets: dict  # name -> tuple of elements

    def names(self) -> tuple:
        return sorted_ids(self.sets)

    def elems(self, name) -> tuple:
        return self.sets[name]

    def identity(self, name) -> FibMor:
        return fib_mor(name, name, {x: x for x in self.sets[name]})

    def compose(self, m1: FibMor, m2: FibMor) -> FibMor:
        d2 = m2.as_dict()
        return fib_mor(m1.src, m2.tgt, {x: d2[y] for x, y in m1.mapping})

    def morphisms_between(self, o1, o2) -> tuple:
        source = self.sets[o1]
        values = self.sets[o2]
        if not source:
            return (fib_mor(o1, o2, {}),)
        out = []
        for images in itertools.product(values, repeat=len(source)):
            out.append(fib_mor(o1, o2, dict(zip(source, images))))
        return tuple(out)

    def all_morphisms(self) -> tuple:
        out = []
        for o1 in self.names():
            for o2 in self.names():
                out.extend(self.morphisms_between(o1, o2))
        return tuple(out)


def make_fiber(sets: Mapping) -> FinSetFiber:
    return FinSetFiber(sets={name: sorted_ids(elems) for name, elems in sets.items()})


@dataclass(frozen=True)
class PullbackFunctor:
    obj_map: dict          # target-fiber object name -> source-fiber object name
    mor_map: dict          # FibMor of the target fiber -> FibMor of the source fiber

    def on_obj(self, name):
        return self.obj_map[name]

    def on_mor(self, m: FibMor) -> FibMor:
        return self.mor_map[m]


def identity_pullback(fiber: FinSetFiber) -> PullbackFunctor:
    return PullbackFunctor(
        obj_map={name: name for name in fiber.names()},
        mor_map={m: m for m in fiber.all_morphisms()},
    )


def constant_pullback(source_fiber: FinSetFiber, target_fiber: FinSetFiber,
                      at) -> PullbackFunctor:
    """Constant functor at one object; breaks limits whenever ``at`` has the
    wrong cardinality for them (e.g. a doubleton never preserves products)."""
    ident = target_fiber.identity(at)
    return PullbackFunctor(
        obj_map={name: at for name in source_fiber.names()},
        mor_map={m: ident for m in source_fiber.all_morphisms()},
    )


def relabel_pullback(source_fiber: FinSetFiber, target_fiber: FinSetFiber,
                     obj_map: Mapping, carriers: Mapping) -> PullbackFunctor:
    """Functor induced by per-object element bijections ``carriers[name]``."""
    mor_map = {}
    for m in source_fiber.all_morphisms():
        c_src = carriers[m.src]
        c_tgt = carriers[m.tgt]
        mor_map[m] = fib_mor(obj_map[m.src], obj_map[m.tgt],
                             {c_src[x]: c_tgt[y] for x, y in m.mapping})
    return PullbackFunctor(obj_map=dict(obj_map), mor_map=mor_map)


def validate_pullback_functor(source: FinSetFiber, target: FinSetFiber,
                              pf: PullbackFunctor) -> None:
    """Totality and functoriality of one pullback table, checked exhaustively."""
    for name in source.names():
        if pf.obj_map.get(name) not in set(target.names()):
            raise DanglingId("pullback obj_map", name, pf.obj_map.get(name))
    for m in source.all_morphisms():
        image = pf.mor_map.get(m)
        if image is None:
            raise DanglingId("pullback mor_map", m)
        if image.src != pf.obj_map[m.src] or image.tgt != pf.obj_map[m.tgt]:
            raise AxiomViolation("pullback-endpoints", m)
    for name in source.names():
        if pf.on_mor(source.identity(name)) != target.identity(pf.obj_map[name]):
            raise AxiomViolation("pullback-identity", name)
    for o1 in source.names():
        for o2 in source.names():
            for m1 in source.morphisms_between(o1, o2):
                for o3 in source.names():
                    for m2 in source.morphisms_between(o2, o3):
                        if pf.on_mor(source.compose(m1, m2)) != \
                                target.compose(pf.on_mor(m1), pf.on_mor(m2)):
                            raise AxiomViolation("pullback-composition", (m1, m2))


@dataclass(frozen=True)
class IndexedCategory:
    """Strict contravariant assignment of finite-set fibers to a finite base."""

    base: FiniteCategory
    fibers: dict  # base object -> FinSetFiber
    pulls: dict   # base morphism -> PullbackFunctor

    def fiber(self, b) -> FinSetFiber:
        return self.fibers[b]

    def pull(self, base_morphism) -> PullbackFunctor:
        return self.pulls[base_morphism]


def indexed_category(base: FiniteCategory, fibers: Mapping, pulls: Mapping) -> IndexedCategory:
    """Validate fibers, pullback functoriality, and strict composition compatibility."""
    for b in base.objects:
        if b not in fibers:
            raise DanglingId("fibers", b)
    for m in base.morphisms:
        if m not in pulls:
            raise DanglingId("pulls", m)
        validate_pullback_functor(fibers[base.tgt[m]], fibers[base.src[m]], pulls[m])
    for b in base.objects:
        pf = pulls[base.ident[b]]
        fiber = fibers[b]
        for name in fiber.names():
            if pf.on_obj(name) != name:
                raise AxiomViolation("strict-identity-pullback", (b, name))
        for m in fiber.all_morphisms():
            if pf.on_mor(m) != m:
                raise AxiomViolation("strict-identity-pullback", (b, m))
    for f in base.morphisms:
        for g in base.morphisms:
            if base.tgt[f] != base.src[g]:
                continue
            fg = base.comp[(f, g)]
            far = fibers[base.tgt[g]]
            for name in far.names():
                if pulls[fg].on_obj(name) != pulls[f].on_obj(pulls[g].on_obj(name)):
                    raise AxiomViolation("strict-composition", (f, g, name))
            for m in far.all_morphisms():
                if pulls[fg].on_mor(m) != pulls[f].on_mor(pulls[g].on_mor(m)):
                    raise AxiomViolation("strict-composition", (f, g, m))
    return IndexedCategory(base=base, fibers=dict(fibers), pulls=dict(pulls))


def trivial_indexed_category(base: FiniteCategory, sets: Mapping) -> IndexedCategory:
    """Same fiber over every base object, every pullback the identity."""
    fiber = make_fiber(sets)
    ident = identity_pullback(fiber)
    return indexed_category(
        base,
        {b: fiber for b in base.objects},
        {m: ident for m in base.morphisms},
    )


@dataclass(frozen=True)
class Lift:
    """A strict lift of the anchor functor through the indexed category.

    ``objects[d]`` names an object of the fiber over anchor(d);
    ``morphisms[f]``, for f: a -> b in the shape, is the fiber morphism
    P(a) -> pull(anchor(f))(P(b)) living over anchor(a).
    """

    ic: IndexedCategory
    shape: FiniteCategory
    anchor: CatFunctor
    objects: dict
    morphisms: dict


def lift(ic: IndexedCategory, shape: FiniteCategory, anchor: CatFunctor,
         objects: Mapping, morphisms: Mapping) -> Lift:
    """Validate endpoints and strict functoriality of lift data."""
    if anchor.source != shape or anchor.target != ic.base:
        raise NotFunctorial("anchor must map the shape into the base")
    for d in shape.objects:
        fiber = ic.fiber(anchor.obj_map[d])
        if objects.get(d) not in set(fiber.names()):
            raise DanglingId("lift objects", d, objects.get(d))
    for f in shape.morphisms:
        a, b = shape.src[f], shape.tgt[f]
        m = morphisms.get(f)
        if m is None:
            raise DanglingId("lift morphisms", f)
        expected_tgt = ic.pull(anchor.mor_map[f]).on_obj(objects[b])
        if m.src != objects[a] or m.tgt != expected_tgt:
            raise AxiomViolation("lift-endpoints", f)
    for d in shape.objects:
        fiber = ic.fiber(anchor.obj_map[d])
        if morphisms[shape.ident[d]] != fiber.identity(objects[d]):
            raise AxiomViolation("lift-identity", d)
    for (f, g), fg in shape.comp.items():
        fiber = ic.fiber(anchor.obj_map[shape.src[f]])
        via = fiber.compose(morphisms[f], ic.pull(anchor.mor_map[f]).on_mor(morphisms[g]))
        if morphisms[fg] != via:
            raise AxiomViolation("lift-composition", (f, g))
    return Lift(ic=ic, shape=shape, anchor=anchor,
                objects=dict(objects), morphisms=dict(morphisms))


def precompose_lift(f: CatFunctor, p_lift: Lift) -> Lift:
    """Restrict a lift over D to a lift over E along F: E -> D."""
    return lift(
        p_lift.ic,
        f.source,
        f.then(p_lift.anchor),
        {e: p_lift.objects[f.obj_map[e]] for e in f.source.objects},
        {m: p_lift.morphisms[f.mor_map[m]] for m in f.source.morphisms},
    )


@dataclass(frozen=True)
class FiberDiagram:
    """A functor from a finite shape into one fiber, as explicit tables."""

    shape: FiniteCategory
    on_obj: dict  # shape object -> fiber object name
    on_mor: dict  # shape morphism -> FibMor


def fiber_diagram(fiber: FinSetFiber, shape: FiniteCategory,
                  on_obj: Mapping, on_mor: Mapping) -> FiberDiagram:
    for x in shape.objects:
        if on_obj.get(x) not in set(fiber.names()):
            raise DanglingId("diagram on_obj", x, on_obj.get(x))
    for m in shape.morphisms:
        fm = on_mor.get(m)
        if fm is None or fm.src != on_obj[shape.src[m]] or fm.tgt != on_obj[shape.tgt[m]]:
            raise AxiomViolation("diagram-endpoints", m)
    for x in shape.objects:
        if on_mor[shape.ident[x]] != fiber.identity(on_obj[x]):
            raise NotFunctorial(("identity", x))
    for (m1, m2), m12 in shape.comp.items():
        if on_mor[m12] != fiber.compose(on_mor[m1], on_mor[m2]):
            raise NotFunctorial(("composition", m1, m2))
    return FiberDiagram(shape=shape, on_obj=dict(on_obj), on_mor=dict(on_mor))


@dataclass(frozen=True)
class LimitCone:
    """All cones over a finite-set diagram, as tuples aligned with shape_objects."""

    shape_objects: tuple
    cones: tuple

    def component(self, cone: tuple, shape_obj):
        return cone[self.shape_objects.index(shape_obj)]


def finset_limit(fiber: FinSetFiber, diagram: FiberDiagram) -> LimitCone:
    """Enumerate all compatible families; the empty diagram has one empty cone."""
    shape_objects = tuple(diagram.shape.objects)
    pools = [fiber.elems(diagram.on_obj[x]) for x in shape_objects]
    position = {x: i for i, x in enumerate(shape_objects)}
    cones = []
    for candidate in itertools.product(*pools):
        ok = True
        for m in diagram.shape.morphisms:
            fm = diagram.on_mor[m]
            if fm.apply(candidate[position[diagram.shape.src[m]]]) != \
                    candidate[position[diagram.shape.tgt[m]]]:
                ok = False
                break
        if ok:
            cones.append(candidate)
    cones.sort(key=idkey)
    return LimitCone(shape_objects=shape_objects, cones=tuple(cones))


@dataclass(frozen=True)
class LimitCandidate:
    """A fiber object with projection morphisms, proposed as the limit."""

    obj: object
    projections: dict  # shape object -> FibMor


def is_limit_cone(fiber: FinSetFiber, diagram: FiberDiagram,
                  candidate: LimitCandidate) -> bool:
    """The canonical comparison into the cone set must be a bijection."""
    cone_set = finset_limit(fiber, diagram)
    seen = set()
    for x in fiber.elems(candidate.obj):
        image = tuple(candidate.projections[s].apply(x) for s in cone_set.shape_objects)
        if image not in set(cone_set.cones):
            return False
        seen.add(image)
    return len(seen) == len(fiber.elems(candidate.obj)) == len(cone_set.cones)


def pull_diagram(ic: IndexedCategory, base_morphism, diagram: FiberDiagram) -> FiberDiagram:
    pf = ic.pull(base_morphism)
    return FiberDiagram(
        shape=diagram.shape,
        on_obj={x: pf.on_obj(name) for x, name in diagram.on_obj.items()},
        on_mor={m: pf.on_mor(fm) for m, fm in diagram.on_mor.items()},
    )


def is_global_limit(ic: IndexedCategory, b, diagram: FiberDiagram,
                    candidate: LimitCandidate) -> bool:
    """Check the candidate limit survives every pullback functor out of b.

    Raises :class:`NotALimit` when the candidate is not even a limit in the
    fiber over b; returns False when some base morphism breaks globality.
    """
    if not is_limit_cone(ic.fiber(b), diagram, candidate):
        raise NotALimit((b, candidate.obj))
    for f in ic.base.morphisms_into(b):
        a = ic.base.src[f]
        pf = ic.pull(f)
        pulled_candidate = LimitCandidate(
            obj=pf.on_obj(candidate.obj),
            projections={x: pf.on_mor(m) for x, m in candidate.projections.items()},
        )
        if not is_limit_cone(ic.fiber(a), pull_diagram(ic, f, diagram), pulled_candidate):
            return False
    return True


@dataclass(frozen=True)
class RightKanResult:
    """The extended lift together with its limit cones and projections."""

    lift: Lift
    along: CatFunctor
    commas: dict        # d -> comma category (d down E)
    diagrams: dict      # d -> FiberDiagram over the fiber at anchor(d)
    cones: dict         # d -> LimitCone
    element_of_cone: dict  # d -> {cone tuple: element of RF(d)}
    projections: dict   # d -> {comma object: FibMor RF(d) -> diagram value}


def _comma_fiber_diagram(ic: IndexedCategory, f: CatFunctor, p: CatFunctor,
                         p_lift: Lift, d) -> tuple[FiniteCategory, FiberDiagram]:
    comma = comma_category(d, f)
    on_obj = {}
    on_mor = {}
    for (e, alpha) in comma.objects:
        on_obj[(e, alpha)] = ic.pull(p.mor_map[alpha]).on_obj(p_lift.objects[e])
    for (alpha, gamma) in comma.morphisms:
        on_mor[(alpha, gamma)] = ic.pull(p.mor_map[alpha]).on_mor(p_lift.morphisms[gamma])
    diagram = fiber_diagram(ic.fiber(p.obj_map[d]), comma, on_obj, on_mor)
    return comma, diagram


def right_kan(ic: IndexedCategory, f: CatFunctor, p: CatFunctor, p_lift: Lift) -> RightKanResult:
    """Pointwise relative right Kan extension of a lift along F: E -> D.

    For each object d the value is a fiber object realizing the cone set of
    the comma-shaped diagram alpha |-> pull(p(alpha))(P(e)); the value on a
    shape morphism is induced by the universal property of the (global)
    limit at its target.  Raises :class:`NotFComplete` when a required limit
    is missing or fails to be global.
    """
    d_cat = f.target
    commas: dict = {}
    diagrams: dict = {}
    cones: dict = {}
    objects: dict = {}
    element_of_cone: dict = {}
    cone_of_element: dict = {}
    projections: dict = {}

    for d in d_cat.objects:
        comma, diagram = _comma_fiber_diagram(ic, f, p, p_lift, d)
        fiber = ic.fiber(p.obj_map[d])
        cone_set = finset_limit(fiber, diagram)
        size = len(cone_set.cones)
        chosen = next((name for name in fiber.names() if len(fiber.elems(name)) == size), None)
        if chosen is None:
            raise NotFComplete(d, f"no fiber object of size {size}")
        elems = fiber.elems(chosen)
        to_cone = dict(zip(elems, cone_set.cones))
        of_cone = dict(zip(cone_set.cones, elems))
        projs = {}
        for i, comma_obj in enumerate(cone_set.shape_objects):
            projs[comma_obj] = fib_mor(chosen, diagram.on_obj[comma_obj],
                                       {x: to_cone[x][i] for x in elems})
        candidate = LimitCandidate(obj=chosen, projections=projs)
        if not is_global_limit(ic, p.obj_map[d], diagram, candidate):
            raise NotFComplete(d, "fiber limit is not global")
        commas[d] = comma
        diagrams[d] = diagram
        cones[d] = cone_set
        objects[d] = chosen
        element_of_cone[d] = of_cone
        cone_of_element[d] = to_cone
        projections[d] = projs

    morphisms: dict = {}
    for m in d_cat.morphisms:
        a, b = d_cat.src[m], d_cat.tgt[m]
        pf = ic.pull(p.mor_map[m])
        target_name = pf.on_obj(objects[b])
        target_elems = ic.fiber(p.obj_map[a]).elems(target_name)
        comma_b_objects = cones[b].shape_objects
        comma_a_index = {obj: i for i, obj in enumerate(cones[a].shape_objects)}
        mapping = {}
        for x in ic.fiber(p.obj_map[a]).elems(objects[a]):
            cone_x = cone_of_element[a][x]
            matches = []
            for y in target_elems:
                if all(pf.on_mor(projections[b][(e, beta)]).apply(y)
                       == cone_x[comma_a_index[(e, d_cat.compose(m, beta))]]
                       for (e, beta) in comma_b_objects):
                    matches.append(y)
            if len(matches) != 1:
                raise NotFComplete(a, f"universal factorization failed along {m!r}")
            mapping[x] = matches[0]
        morphisms[m] = fib_mor(objects[a], target_name, mapping)

    extended = lift(ic, d_cat, p, objects, morphisms)
    return RightKanResult(lift=extended, along=f, commas=commas, diagrams=diagrams,
                          cones=cones, element_of_cone=element_of_cone,
                          projections=projections)


def counit(rf: RightKanResult, p_lift: Lift) -> dict:
    """Component at e: project the limit at F(e) onto the (e, id) coordinate."""
    f = rf.along
    d_cat = f.target
    return {e: rf.projections[f.obj_map[e]][(e, d_cat.ident[f.obj_map[e]])]
            for e in f.source.objects}


def lift_morphisms(l1: Lift, l2: Lift) -> tuple:
    """All vertical natural transformations between two lifts of one anchor."""
    ic = l1.ic
    shape = l1.shape
    options = []
    for d in shape.objects:
        fiber = ic.fiber(l1.anchor.obj_map[d])
        options.append(fiber.morphisms_between(l1.objects[d], l2.objects[d]))
    found = []
    shape_objs = list(shape.objects)
    for combo in itertools.product(*options):
        nu = dict(zip(shape_objs, combo))
        ok = True
        for m in shape.morphisms:
            a, b = shape.src[m], shape.tgt[m]
            fiber = ic.fiber(l1.anchor.obj_map[a])
            lhs = fiber.compose(nu[a], l2.morphisms[m])
            rhs = fiber.compose(l1.morphisms[m], ic.pull(l1.anchor.mor_map[m]).on_mor(nu[b]))
            if lhs != rhs:
                ok = False
                break
        if ok:
            found.append(nu)
    return tuple(found)


@dataclass(frozen=True)
class AdjunctionReport:
    left_size: int   # morphisms Q => RF(P) over D
    right_size: int  # morphisms F*(Q) => P over E
    bijective: bool
    witness: str

    def ok(self) -> bool:
        return self.bijective


def adjunction_check(ic: IndexedCategory, f: CatFunctor, p: CatFunctor,
                     p_lift: Lift, q_lift: Lift,
                     rf: RightKanResult | None = None) -> AdjunctionReport:
    """Verify Hom(Q, RF(P)) matches Hom(F*(Q), P) under whiskering with the counit."""
    if rf is None:
        rf = right_kan(ic, f, p, p_lift)
    eps = counit(rf, p_lift)
    restricted_q = precompose_lift(f, q_lift)
    left = lift_morphisms(q_lift, rf.lift)
    right = lift_morphisms(restricted_q, p_lift)

    right_set = {tuple(sorted(nu.items(), key=lambda kv: idkey(kv[0]))) for nu in right}
    images = set()
    for nu in left:
        sigma = {}
        for e in f.source.objects:
            fiber = ic.fiber(restricted_q.anchor.obj_map[e])
            sigma[e] = fiber.compose(nu[f.obj_map[e]], eps[e])
        images.add(tuple(sorted(sigma.items(), key=lambda kv: idkey(kv[0]))))

    if len(images) != len(left):
        return AdjunctionReport(len(left), len(right), False, "transport not injective")
    if images != right_set:
        return AdjunctionReport(len(left), len(right), False, "transport not surjective")
    return AdjunctionReport(len(left), len(right), True, "")


@dataclass(frozen=True)
class GroupoidDiagram:
    """A functor from a finite shape category into finite groupoids."""

    shape: FiniteCategory
    nodes: dict   # shape object -> FiniteGroupoid
    arrows: dict  # shape morphism -> GroupoidFunctor


def groupoid_diagram(shape: FiniteCategory, nodes: Mapping, arrows: Mapping) -> GroupoidDiagram:
    for x in shape.objects:
        if x not in nodes:
            raise DanglingId("diagram nodes", x)
    for m in shape.morphisms:
        fm = arrows.get(m)
        if fm is None:
            raise DanglingId("diagram arrows", m)
        if fm.source != nodes[shape.src[m]] or fm.target != nodes[shape.tgt[m]]:
            raise NotFunctorial(("endpoints", m))
    for x in shape.objects:
        gid = arrows[shape.ident[x]]
        g = nodes[x]
        if gid.obj_map != {o: o for o in g.objects} or gid.arr_map != {a: a for a in g.arrows}:
            raise NotFunctorial(("identity", x))
    for (m1, m2), m12 in shape.comp.items():
        composed = arrows[m1].then(arrows[m2])
        if composed.obj_map != arrows[m12].obj_map or composed.arr_map != arrows[m12].arr_map:
            raise NotFunctorial(("composition", m1, m2))
    return GroupoidDiagram(shape=shape, nodes=dict(nodes), arrows=dict(arrows))


@dataclass(frozen=True)
class SpecialDiagram:
    """Base extension of a cover over the final object across a whole diagram."""

    star: object
    pulled: GroupoidDiagram      # d -> X_d
    to_base: dict                # d -> GroupoidFunctor X_d -> P(d)
    to_cover: dict               # d -> GroupoidFunctor X_d -> X_star


def diagram_special(diagram: GroupoidDiagram, cover: GroupoidFunctor) -> SpecialDiagram:
    """Base extend a cover of the final node along every structure map.

    Each X_d is the iso-comma fiber product of P(d) -> P(star) with the
    cover; shape morphisms act on the first coordinate only, so arrow-level
    properties of P that are stable under base change transfer to the pulled
    diagram.
    """
    shape = diagram.shape
    star = shape.final_object()
    if cover.target != diagram.nodes[star]:
        raise NotFunctorial("cover must land in the final node")
    to_star = {d: shape.hom(d, star)[0] for d in shape.objects}

    nodes: dict = {}
    to_base: dict = {}
    to_cover: dict = {}
    for d in shape.objects:
        prod, p1, p2 = fiber_product_2_projections(diagram.arrows[to_star[d]], cover)
        nodes[d] = prod
        to_base[d] = p1
        to_cover[d] = p2

    arrows: dict = {}
    for m in shape.morphisms:
        a, b = shape.src[m], shape.tgt[m]
        pf = diagram.arrows[m]
        arrows[m] = functor(
            nodes[a], nodes[b],
            {(g, h, k): (pf.obj_map[g], h, k) for (g, h, k) in nodes[a].objects},
            {(ar, br, k): (pf.arr_map[ar], br, k) for (ar, br, k) in nodes[a].arrows},
        )
    pulled = groupoid_diagram(shape, nodes, arrows)
    return SpecialDiagram(star=star, pulled=pulled, to_base=to_base, to_cover=to_cover)
