"""Descent data over a finite covered set: 1-cocycles, torsors, and morphisms.

The base set carries the discrete topology, so every cover is open and all
compatibility conditions are pointwise equalities between arrows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    C1Violation,
    C2Violation,
    DanglingId,
    MismatchedTarget,
    TorsorViolation,
)
from .groupoid import FiniteGroupoid, idkey, sorted_ids

DEFAULT_SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class CoveredSpace:
    points: tuple
    cover: dict  # index -> frozenset of points

    def indices(self) -> tuple:
        return sorted_ids(self.cover)

    def overlap(self, *labels) -> tuple:
        pts = set(self.points)
        for i in labels:
            pts &= self.cover[i]
        return sorted_ids(pts)


def covered_space(points, cover: dict) -> CoveredSpace:
    points = sorted_ids(points)
    point_set = set(points)
    fixed = {}
    for i, part in cover.items():
        part = frozenset(part)
        if not part <= point_set:
            raise DanglingId("cover", i, sorted_ids(part - point_set))
        fixed[i] = part
    covered = set().union(*fixed.values()) if fixed else set()
    if covered != point_set:
        raise DanglingId("cover (not covering)", sorted_ids(point_set - covered))
    return CoveredSpace(points=points, cover=fixed)


@dataclass(frozen=True)
class Cocycle:
    cov: CoveredSpace
    target: FiniteGroupoid
    a: dict      # i -> {w: object}
    gamma: dict  # (i, j) -> {w: arrow}

    def transition_data(self) -> dict:
        """Forgetful export: the transition arrows only, without the anchor maps."""
        return {ij: dict(table) for ij, table in self.gamma.items()}


def validate_cocycle(cov: CoveredSpace, target: FiniteGroupoid, a: dict, gamma: dict) -> Cocycle:
    """Check the source/target condition and the multiplication law pointwise."""
    indices = cov.indices()
    objects = set(target.objects)
    for i in indices:
        table = a.get(i)
        if table is None or set(table) != set(cov.cover[i]):
            raise DanglingId("a (domain mismatch)", i)
        for w, x in table.items():
            if x not in objects:
                raise DanglingId("a", (i, w), x)
    for i in indices:
        for j in indices:
            overlap = set(cov.overlap(i, j))
            table = gamma.get((i, j))
            if table is None:
                table = {}
            if set(table) != overlap:
                raise DanglingId("gamma (domain mismatch)", (i, j))
            for w, arrow in table.items():
                if arrow not in set(target.arrows):
                    raise DanglingId("gamma", (i, j, w), arrow)
                if target.src[arrow] != a[i][w] or target.tgt[arrow] != a[j][w]:
                    raise C1Violation(w, i, j)
    for i in indices:
        for j in indices:
            for k in indices:
                for w in cov.overlap(i, j, k):
                    lhs = target.compose(gamma[(i, j)][w], gamma[(j, k)][w])
                    if lhs != gamma[(i, k)][w]:
                        raise C2Violation(w, i, j, k)
    return Cocycle(cov=cov, target=target,
                   a={i: dict(a[i]) for i in indices},
                   gamma={(i, j): dict(gamma.get((i, j), {})) for i in indices for j in indices})


@dataclass(frozen=True)
class Torsor:
    """A total set over W with fiberwise pairing into the groupoid and sections."""

    cov: CoveredSpace
    target: FiniteGroupoid
    elements: tuple
    p: dict         # element -> point of W
    f: dict         # element -> object of the target groupoid
    delta: dict     # (u, v) with p(u) == p(v) -> arrow
    sections: dict  # i -> {w: element} for w in U_i

    def fiber(self, w) -> tuple:
        return tuple(t for t in self.elements if self.p[t] == w)


def validate_torsor(t: Torsor) -> Torsor:
    """Exhaustively check section, pairing, and cartesianness laws."""
    g = t.target
    for i, table in t.sections.items():
        if set(table) != set(t.cov.cover[i]):
            raise TorsorViolation("section-domain", i)
        for w, u in table.items():
            if t.p[u] != w:
                raise TorsorViolation("section", (i, w))
    fibers = {w: t.fiber(w) for w in t.cov.points}
    expected_pairs = {(u, v) for fiber in fibers.values() for u in fiber for v in fiber}
    if set(t.delta) != expected_pairs:
        raise TorsorViolation("pairing-domain", set(t.delta) ^ expected_pairs)
    for (u, v), arrow in t.delta.items():
        if g.src[arrow] != t.f[u] or g.tgt[arrow] != t.f[v]:
            raise TorsorViolation("pairing-endpoints", (u, v))
    for fiber in fibers.values():
        for u in fiber:
            if t.delta[(u, u)] != g.ident[t.f[u]]:
                raise TorsorViolation("pairing-unit", u)
            for v in fiber:
                for w2 in fiber:
                    if g.compose(t.delta[(u, v)], t.delta[(v, w2)]) != t.delta[(u, w2)]:
                        raise TorsorViolation("pairing-composition", (u, v, w2))
            for rho in g.arrows_from(t.f[u]):
                matches = [v for v in fiber if t.delta[(u, v)] == rho]
                if len(matches) != 1:
                    raise TorsorViolation("cartesianness", (u, rho, matches))
    return t


def cocycle_to_torsor(c: Cocycle) -> Torsor:
    """Glue the chart pieces U_i x_{a_i} R along the transition arrows.

    Chart points (i, w, alpha) with src(alpha) = a_i(w) are identified when
    alpha = gamma_ij(w) . beta; the pairing of two classes compares their
    arrows inside any common chart.
    """
    g = c.target
    indices = c.cov.indices()
    chart_points = [(i, w, alpha)
                    for i in indices
                    for w in sorted_ids(c.cov.cover[i])
                    for alpha in g.arrows_from(c.a[i][w])]
    parent = {pt: pt for pt in chart_points}

    def find(pt):
        while parent[pt] != pt:
            parent[pt] = parent[parent[pt]]
            pt = parent[pt]
        return pt

    def union(p1, p2):
        r1, r2 = find(p1), find(p2)
        if r1 != r2:
            parent[max(r1, r2, key=idkey)] = min(r1, r2, key=idkey)

    for i, w, alpha in chart_points:
        for j in indices:
            if w in c.cov.cover[j]:
                beta = g.compose(g.inv[c.gamma[(i, j)][w]], alpha)
                union((i, w, alpha), (j, w, beta))

    members: dict = {}
    for pt in chart_points:
        members.setdefault(find(pt), []).append(pt)
    elements = sorted_ids(members)
    chart_arrow = {}
    for rep, pts in members.items():
        for i, w, alpha in pts:
            chart_arrow[(rep, i)] = alpha

    p = {rep: rep[1] for rep in elements}
    f = {rep: g.tgt[chart_arrow[(rep, rep[0])]] for rep in elements}
    delta = {}
    for w in c.cov.points:
        fiber = [rep for rep in elements if p[rep] == w]
        for u in fiber:
            i = u[0]
            for v in fiber:
                delta[(u, v)] = g.compose(g.inv[chart_arrow[(u, i)]], chart_arrow[(v, i)])
    sections = {i: {w: find((i, w, g.ident[c.a[i][w]])) for w in c.cov.cover[i]}
                for i in indices}
    return validate_torsor(Torsor(cov=c.cov, target=g, elements=elements,
                                  p=p, f=f, delta=delta, sections=sections))


def torsor_to_cocycle(t: Torsor) -> Cocycle:
    """Read the descent data off the section witnesses."""
    indices = t.cov.indices()
    a = {i: {w: t.f[t.sections[i][w]] for w in t.cov.cover[i]} for i in indices}
    gamma = {(i, j): {w: t.delta[(t.sections[i][w], t.sections[j][w])]
                      for w in t.cov.overlap(i, j)}
             for i in indices for j in indices}
    return validate_cocycle(t.cov, t.target, a, gamma)


@dataclass(frozen=True)
class CocycleMorphism:
    source: Cocycle
    target_cocycle: Cocycle
    delta: dict  # (i, k) -> {w: arrow} on U_i of source and U'_k of target


def cocycle_morphism_violations(c: Cocycle, c2: Cocycle, delta: dict) -> list:
    """Witnesses of M1/M2 failures for candidate morphism data; empty means valid."""
    if c.cov.points != c2.cov.points:
        raise MismatchedTarget("cocycles live over different base sets")
    if c.target != c2.target:
        raise MismatchedTarget("cocycles have different target groupoids")
    g = c.target
    bad = []
    for i in c.cov.indices():
        for k in c2.cov.indices():
            overlap = set(c.cov.cover[i]) & set(c2.cov.cover[k])
            table = delta.get((i, k), {})
            if set(table) != overlap:
                bad.append(("domain", i, k))
                continue
            for w in overlap:
                arrow = table[w]
                if g.src[arrow] != c.a[i][w] or g.tgt[arrow] != c2.a[k][w]:
                    bad.append(("M1", w, i, k))
    if bad:
        return bad
    for i in c.cov.indices():
        for k in c2.cov.indices():
            for l in c2.cov.indices():
                for w in set(c.cov.cover[i]) & set(c2.cov.cover[k]) & set(c2.cov.cover[l]):
                    if g.compose(delta[(i, k)][w], c2.gamma[(k, l)][w]) != delta[(i, l)][w]:
                        bad.append(("M2-right", w, i, k, l))
            for j in c.cov.indices():
                for w in set(c.cov.cover[i]) & set(c.cov.cover[j]) & set(c2.cov.cover[k]):
                    if g.compose(c.gamma[(i, j)][w], delta[(j, k)][w]) != delta[(i, k)][w]:
                        bad.append(("M2-left", w, i, j, k))
    return bad


def check_cocycle_morphism(c: Cocycle, c2: Cocycle, delta: dict) -> bool:
    return not cocycle_morphism_violations(c, c2, delta)


def find_cocycle_morphism(c: Cocycle, c2: Cocycle,
                          budget: int = DEFAULT_SEARCH_BUDGET) -> CocycleMorphism | None:
    """Brute-force search for morphism data; None when no assignment satisfies M1/M2."""
    g = c.target
    slots = []
    for i in c.cov.indices():
        for k in c2.cov.indices():
            for w in sorted_ids(set(c.cov.cover[i]) & set(c2.cov.cover[k])):
                options = g.hom(c.a[i][w], c2.a[k][w])
                if not options:
                    return None
                slots.append(((i, k, w), options))
    tried = 0
    for choice in itertools.product(*[options for _, options in slots]):
        tried += 1
        if tried > budget:
            raise BudgetExceeded(f"morphism search exceeded {budget} assignments")
        delta: dict = {}
        for ((i, k, w), _), arrow in zip(slots, choice):
            delta.setdefault((i, k), {})[w] = arrow
        for i in c.cov.indices():
            for k in c2.cov.indices():
                delta.setdefault((i, k), {})
        if check_cocycle_morphism(c, c2, delta):
            return CocycleMorphism(source=c, target_cocycle=c2, delta=delta)
    return None


def torsor_isomorphic(t1: Torsor, t2: Torsor, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Whether a fiberwise bijection over W commutes with both f and the pairing."""
    if t1.cov.points != t2.cov.points:
        raise MismatchedTarget("torsors live over different base sets")
    if t1.target != t2.target:
        raise MismatchedTarget("torsors have different target groupoids")
    g = t1.target
    tried = 0
    for w in t1.cov.points:
        fiber1 = t1.fiber(w)
        fiber2 = t2.fiber(w)
        if len(fiber1) != len(fiber2):
            return False
        if not fiber1:
            continue
        u0 = fiber1[0]
        found = False
        for v0 in fiber2:
            tried += 1
            if tried > budget:
                raise BudgetExceeded(f"isomorphism search exceeded {budget} attempts")
            if t2.f[v0] != t1.f[u0]:
                continue
            image = {}
            ok = True
            for u in fiber1:
                rho = t1.delta[(u0, u)]
                matches = [v for v in fiber2 if t2.delta[(v0, v)] == rho]
                if len(matches) != 1 or t2.f[matches[0]] != t1.f[u]:
                    ok = False
                    break
                image[u] = matches[0]
            if ok and len(set(image.values())) == len(fiber2):
                if all(t2.delta[(image[u], image[v])] == t1.delta[(u, v)]
                       for u in fiber1 for v in fiber1):
                    found = True
                    break
        if not found:
            return False
    return True
