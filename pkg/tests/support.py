"""Shared instance zoo for the test suite."""

from __future__ import annotations

import finstack as fs
from finstack.category import validate_category
from finstack.groupoid import sorted_ids


def z2():
    return fs.cyclic_groupoid(2)


def z3():
    return fs.cyclic_groupoid(3)


def s3():
    return fs.symmetric_groupoid(3)


def pair2():
    return fs.pair_groupoid([1, 2])


def pt():
    return fs.point_groupoid()


def swap_action():
    """Z/2 acting on two points by the swap: connected, trivial isotropy."""
    g = z2()
    return fs.action_groupoid([1, 2], g, lambda x, k: x if k == 0 else (3 - x))


def self_action(group=None):
    """A finite group acting on itself by right translation."""
    g = group or z2()
    return fs.action_groupoid(list(g.arrows), g, lambda x, k: g.compose(x, k))


def groupoid_zoo():
    return [
        ("Z2", z2()),
        ("Z3", z3()),
        ("pair", pair2()),
        ("swap-action", swap_action()),
    ]


def point_inclusion(target, obj):
    p = pt()
    return fs.functor(p, target, {"pt": obj}, {("pt", "pt"): target.ident[obj]})


def weak_equivalence_zoo():
    """Named weak equivalences used by the Morita-invariance tests."""
    pairs = []
    pairs.append(("pt->pair", point_inclusion(pair2(), 1)))
    sa = self_action()
    pairs.append(("pt->selfaction", point_inclusion(sa, 0)))

    # discrete 2-point groupoid into Z/2 acting freely on Z/2 x {a, b}
    g = z2()
    points = [(h, y) for h in (0, 1) for y in ("a", "b")]
    free = fs.action_groupoid(points, g, lambda x, k: ((x[0] + k) % 2, x[1]))
    disc = fs.validate_groupoid(
        ["a", "b"],
        ["ea", "eb"],
        {"ea": "a", "eb": "b"},
        {"ea": "a", "eb": "b"},
        {("ea", "ea"): "ea", ("eb", "eb"): "eb"},
        {"a": "ea", "b": "eb"},
        {"ea": "ea", "eb": "eb"},
    )
    incl = fs.functor(disc, free,
                      {"a": (0, "a"), "b": (0, "b")},
                      {"ea": ((0, "a"), 0), "eb": ((0, "b"), 0)})
    pairs.append(("orbits->free-action", incl))
    return pairs


def cylinder_category():
    """Five objects; V covers X with two sections, making f and f2 homotopic.

    R is {identities, r}.  The two isolated objects keep the instance honest
    about components that play no role.
    """
    objects = ["A", "B", "V", "X", "Y"]
    ids = {x: ("id", x) for x in objects}
    morphisms = list(ids.values()) + ["r", "t", "t2", "e1", "e2", "g", "f", "f2", "h1", "h2"]
    src = {m: m[1] for m in ids.values()}
    tgt = {m: m[1] for m in ids.values()}
    src.update({"r": "V", "t": "X", "t2": "X", "e1": "V", "e2": "V",
                "g": "V", "f": "X", "f2": "X", "h1": "V", "h2": "V"})
    tgt.update({"r": "X", "t": "V", "t2": "V", "e1": "V", "e2": "V",
                "g": "Y", "f": "Y", "f2": "Y", "h1": "Y", "h2": "Y"})
    comp = {}
    for m in morphisms:
        comp[(ids[src[m]], m)] = m
        comp[(m, ids[tgt[m]])] = m
    comp.update({
        ("t", "r"): ("id", "X"), ("t2", "r"): ("id", "X"),
        ("t", "e1"): "t", ("t", "e2"): "t2", ("t2", "e1"): "t", ("t2", "e2"): "t2",
        ("t", "g"): "f", ("t2", "g"): "f2",
        ("t", "h1"): "f", ("t", "h2"): "f2", ("t2", "h1"): "f", ("t2", "h2"): "f2",
        ("r", "t"): "e1", ("r", "t2"): "e2", ("r", "f"): "h1", ("r", "f2"): "h2",
        ("e1", "r"): "r", ("e2", "r"): "r",
        ("e1", "e1"): "e1", ("e1", "e2"): "e2", ("e2", "e1"): "e1", ("e2", "e2"): "e2",
        ("e1", "g"): "h1", ("e2", "g"): "h2",
        ("e1", "h1"): "h1", ("e1", "h2"): "h2", ("e2", "h1"): "h1", ("e2", "h2"): "h2",
    })
    cat = validate_category(objects, morphisms, src, tgt, comp, ids)
    rcls = fs.morphism_class(cat, set(ids.values()) | {"r"})
    return cat, rcls


def subset_poset(n=2):
    """Poset of subsets of {0..n-1} with the full meet-pullback oracle."""
    universe = list(range(n))
    subsets = []
    for mask in range(1 << n):
        subsets.append(frozenset(i for i in universe if mask & (1 << i)))
    cat = fs.poset_category(subsets, lambda a, b: a <= b)
    oracle = {}
    for f in cat.morphisms:
        for g in cat.morphisms:
            if cat.tgt[f] != cat.tgt[g]:
                continue
            a, b = cat.src[f], cat.src[g]
            meet = a & b
            oracle[(f, g)] = (meet, (meet, a), (meet, b))
    return cat, oracle


def all_morphisms_class(cat, oracle=None):
    return fs.morphism_class(cat, set(cat.morphisms), oracle)


def gauge_cocycle(target, cover_sets, anchor, gauges):
    """Deterministic valid cocycle from per-chart gauge arrows.

    ``anchor[w]`` is an object; ``gauges[(i, w)]`` is an arrow with source
    anchor[w].  Then a_i = tgt(gauge) and gamma_ij = inv(gauge_i) . gauge_j,
    which satisfies both cocycle conditions by construction.
    """
    cov = fs.covered_space(sorted_ids({w for part in cover_sets.values() for w in part}),
                           cover_sets)
    a = {i: {w: target.tgt[gauges[(i, w)]] for w in cov.cover[i]} for i in cov.indices()}
    gamma = {}
    for i in cov.indices():
        for j in cov.indices():
            gamma[(i, j)] = {w: target.compose(target.inv[gauges[(i, w)]], gauges[(j, w)])
                             for w in cov.overlap(i, j)}
    return fs.validate_cocycle(cov, target, a, gamma)


def cocycle_zoo():
    """Generated descent data over small bases, at least five instances."""
    instances = []

    g2 = z2()
    instances.append(("trivial-two-charts", gauge_cocycle(
        g2,
        {"0": {"u", "v"}, "1": {"v"}},
        {"u": "*", "v": "*"},
        {("0", "u"): 0, ("0", "v"): 0, ("1", "v"): 0},
    )))
    instances.append(("z2-gauge-mix", gauge_cocycle(
        g2,
        {"0": {"u", "v", "w"}, "1": {"v", "w"}, "2": {"w"}},
        {"u": "*", "v": "*", "w": "*"},
        {("0", "u"): 0, ("0", "v"): 1, ("0", "w"): 0,
         ("1", "v"): 0, ("1", "w"): 1, ("2", "w"): 0},
    )))

    g3 = z3()
    instances.append(("z3-three-charts", gauge_cocycle(
        g3,
        {"0": {"p", "q"}, "1": {"q", "r"}, "2": {"p", "r"}},
        {"p": "*", "q": "*", "r": "*"},
        {("0", "p"): 1, ("0", "q"): 2, ("1", "q"): 0,
         ("1", "r"): 1, ("2", "p"): 0, ("2", "r"): 2},
    )))

    pg = pair2()
    instances.append(("pair-groupoid-base4", gauge_cocycle(
        pg,
        {"0": {"w0", "w1", "w2", "w3"}, "1": {"w1", "w3"}},
        {"w0": 1, "w1": 2, "w2": 1, "w3": 1},
        {("0", "w0"): (1, 1), ("0", "w1"): (2, 1), ("0", "w2"): (1, 2), ("0", "w3"): (1, 1),
         ("1", "w1"): (2, 2), ("1", "w3"): (1, 2)},
    )))

    du = fs.disjoint_union(z2(), pt())
    instances.append(("disconnected-target", gauge_cocycle(
        du,
        {"0": {"u"}, "1": {"u"}},
        {"u": (0, "*")},
        {("0", "u"): (0, 0), ("1", "u"): (0, 1)},
    )))

    s = s3()
    e = tuple(range(3))
    tr = (1, 2, 0)
    instances.append(("s3-two-points", gauge_cocycle(
        s,
        {"0": {"x", "y"}, "1": {"x", "y"}},
        {"x": "*", "y": "*"},
        {("0", "x"): e, ("0", "y"): tr, ("1", "x"): tr, ("1", "y"): e},
    )))
    return instances
