"""Truncated simplicial sets and the nerve of a finite groupoid."""

from __future__ import annotations

from dataclasses import dataclass

from .groupoid import FiniteGroupoid, idkey


@dataclass(frozen=True)
class TruncatedSimplicialSet:
    """Simplices in degrees <= cap with face and degeneracy tables.

    ``faces[(n, i)]`` sends an n-simplex to its i-th face (1 <= n <= cap);
    ``degeneracies[(n, i)]`` sends an n-simplex to an (n+1)-simplex (n < cap).
    ``degenerate[n]`` flags the simplices lying in the image of a degeneracy.
    """

    cap: int
    simplices: dict
    faces: dict
    degeneracies: dict
    degenerate: dict

    def face(self, n: int, i: int, simplex):
        return self.faces[(n, i)][simplex]

    def degeneracy(self, n: int, i: int, simplex):
        return self.degeneracies[(n, i)][simplex]

    def is_degenerate(self, n: int, simplex) -> bool:
        return simplex in self.degenerate[n]

    def count(self, n: int) -> int:
        return len(self.simplices.get(n, ()))

    def count_nondegenerate(self, n: int) -> int:
        return self.count(n) - len(self.degenerate.get(n, frozenset()))


def make_simplicial_set(cap: int, simplices: dict, faces: dict, degeneracies: dict) -> TruncatedSimplicialSet:
    """Assemble a truncated simplicial set, computing the degenerate flags."""
    degenerate = {0: frozenset()}
    for n in range(1, cap + 1):
        image = set()
        for i in range(n):
            image.update(degeneracies[(n - 1, i)].values())
        degenerate[n] = frozenset(image)
    return TruncatedSimplicialSet(
        cap=cap,
        simplices={n: tuple(simplices[n]) for n in range(cap + 1)},
        faces=dict(faces),
        degeneracies=dict(degeneracies),
        degenerate=degenerate,
    )


def simplicial_identity_violations(s: TruncatedSimplicialSet) -> list:
    """Exhaustively check the simplicial identities inside the truncation window.

    Returns witnesses (kind, n, i, j, simplex); an empty list means all
    identities hold wherever both sides are defined.
    """
    bad = []
    for n in range(2, s.cap + 1):
        for x in s.simplices[n]:
            for j in range(n + 1):
                for i in range(j):
                    if s.face(n - 1, i, s.face(n, j, x)) != s.face(n - 1, j - 1, s.face(n, i, x)):
                        bad.append(("dd", n, i, j, x))
    for n in range(0, s.cap - 1):
        for x in s.simplices[n]:
            for i in range(n + 1):
                for j in range(i, n + 1):
                    if s.degeneracy(n + 1, j + 1, s.degeneracy(n, i, x)) != \
                            s.degeneracy(n + 1, i, s.degeneracy(n, j, x)):
                        bad.append(("ss", n, i, j, x))
    for n in range(0, s.cap):
        for x in s.simplices[n]:
            for j in range(n + 1):
                sx = s.degeneracy(n, j, x)
                for i in range(n + 2):
                    got = s.face(n + 1, i, sx)
                    if i == j or i == j + 1:
                        want = x
                    elif i < j:
                        want = s.degeneracy(n - 1, j - 1, s.face(n, i, x))
                    else:
                        want = s.degeneracy(n - 1, j, s.face(n, i - 1, x))
                    if got != want:
                        bad.append(("ds", n, i, j, x))
    return bad


def nerve(g: FiniteGroupoid, cap: int) -> TruncatedSimplicialSet:
    """The nerve: n-simplices are length-n composable arrow strings.

    d_0 drops the first arrow, d_n the last, and inner faces compose
    neighbouring arrows; degeneracies insert identities.  0-simplices are the
    objects themselves.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    simplices: dict = {0: tuple(g.objects)}
    for n in range(1, cap + 1):
        strings = []
        for prefix in simplices[n - 1] if n > 1 else [()]:
            start_options = g.arrows_from(g.tgt[prefix[-1]]) if n > 1 else g.arrows
            for a in start_options:
                strings.append(prefix + (a,))
        strings.sort(key=idkey)
        simplices[n] = tuple(strings)

    faces: dict = {}
    degeneracies: dict = {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            table = {}
            for x in simplices[n]:
                if n == 1:
                    table[x] = g.tgt[x[0]] if i == 0 else g.src[x[0]]
                elif i == 0:
                    table[x] = x[1:]
                elif i == n:
                    table[x] = x[:-1]
                else:
                    table[x] = x[:i - 1] + (g.compose(x[i - 1], x[i]),) + x[i + 1:]
            faces[(n, i)] = table
    for n in range(0, cap):
        for i in range(n + 1):
            table = {}
            for x in simplices[n]:
                if n == 0:
                    table[x] = (g.ident[x],)
                else:
                    vertex = g.src[x[0]] if i == 0 else g.tgt[x[i - 1]]
                    table[x] = x[:i] + (g.ident[vertex],) + x[i:]
            degeneracies[(n, i)] = table
    return make_simplicial_set(cap, simplices, faces, degeneracies)


def graph_simplicial_set(vertices, edges: dict) -> TruncatedSimplicialSet:
    """The 2-truncated simplicial set of a directed multigraph.

    ``edges[e] = (source, target)``.  Every 2-simplex is degenerate, so the
    realization is the graph itself; this is the generic source of
    nondegenerate-1-dimensional examples (circles, wedges).
    """
    vertices = tuple(sorted(vertices, key=idkey))
    edge_ids = tuple(sorted(edges, key=idkey))
    one = edge_ids + tuple(("s0", v) for v in vertices)
    d0 = {e: edges[e][1] for e in edge_ids}
    d1 = {e: edges[e][0] for e in edge_ids}
    for v in vertices:
        d0[("s0", v)] = v
        d1[("s0", v)] = v

    # s_0 s_0 = s_1 s_0 forces the two degeneracies of a degenerate edge to agree
    def s_of(i, e):
        if e in edges:
            return ("s", i, e)
        return ("ss", e[1])

    two = tuple(("s", i, e) for e in edge_ids for i in (0, 1)) + \
        tuple(("ss", v) for v in vertices)
    faces2: dict = {(2, 0): {}, (2, 1): {}, (2, 2): {}}
    for e in edge_ids:
        faces2[(2, 0)][("s", 0, e)] = e
        faces2[(2, 1)][("s", 0, e)] = e
        faces2[(2, 2)][("s", 0, e)] = ("s0", d1[e])
        faces2[(2, 0)][("s", 1, e)] = ("s0", d0[e])
        faces2[(2, 1)][("s", 1, e)] = e
        faces2[(2, 2)][("s", 1, e)] = e
    for v in vertices:
        for i in range(3):
            faces2[(2, i)][("ss", v)] = ("s0", v)
    return make_simplicial_set(
        2,
        {0: vertices, 1: one, 2: two},
        {(1, 0): d0, (1, 1): d1, **faces2},
        {
            (0, 0): {v: ("s0", v) for v in vertices},
            (1, 0): {e: s_of(0, e) for e in one},
            (1, 1): {e: s_of(1, e) for e in one},
        },
    )


def simplicial_circle() -> TruncatedSimplicialSet:
    """Two vertices joined by two parallel nondegenerate edges: a circle."""
    return graph_simplicial_set(["p", "q"], {"a": ("p", "q"), "b": ("p", "q")})
