"""Truncated combinatorial model of the universal bundle and its quotient.

The level-capped model keeps levels 0..N.  A k-simplex of the total complex
is a sequence ((i_0, a_0), ..., (i_k, a_k)) with strictly increasing levels
and all arrows sharing one source; continuous join coordinates are replaced
by which levels are active.  The quotient complex divides by the free
diagonal translation g . (i, a) = (i, compose(g, a)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import LevelInactive, NonFreeAction, NotSameOrbit
from .groupoid import FiniteGroupoid, idkey
from .homology import ChainComplex, zero_matrix


def _delete(simplex: tuple, j: int) -> tuple:
    return simplex[:j] + simplex[j + 1:]


@dataclass(frozen=True)
class JoinComplex:
    """Semi-simplicial total space: faces delete entries, no degeneracies."""

    groupoid: FiniteGroupoid
    levels: int
    simplices: dict

    def face(self, k: int, j: int, simplex: tuple) -> tuple:
        return _delete(simplex, j)

    def common_source(self, simplex: tuple):
        return self.groupoid.src[simplex[0][1]]

    def count(self, k: int) -> int:
        return len(self.simplices.get(k, ()))


@dataclass(frozen=True)
class MilnorBComplex:
    """Orbits of the total complex under diagonal translation, faces induced."""

    groupoid: FiniteGroupoid
    levels: int
    simplices: dict
    orbit: dict
    total: JoinComplex

    def face(self, k: int, j: int, rep: tuple) -> tuple:
        return self.orbit[k - 1][_delete(rep, j)]

    def count(self, k: int) -> int:
        return len(self.simplices.get(k, ()))


def milnor_E(g: FiniteGroupoid, levels: int) -> JoinComplex:
    """(levels+1)-fold join model of the universal bundle."""
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    simplices: dict = {}
    for k in range(levels + 1):
        found = []
        for x in g.objects:
            outgoing = g.arrows_from(x)
            if not outgoing:
                continue
            for level_choice in itertools.combinations(range(levels + 1), k + 1):
                for arrows in itertools.product(outgoing, repeat=k + 1):
                    found.append(tuple(zip(level_choice, arrows)))
        found.sort(key=idkey)
        simplices[k] = tuple(found)
    return JoinComplex(groupoid=g, levels=levels, simplices=simplices)


def translate(g: FiniteGroupoid, gamma, simplex: tuple) -> tuple:
    """Diagonal action: compose every arrow of the simplex with gamma on the left."""
    return tuple((i, g.compose(gamma, a)) for i, a in simplex)


def milnor_B(g: FiniteGroupoid, levels: int) -> MilnorBComplex:
    """Quotient by the diagonal action, with lexicographically least representatives."""
    total = milnor_E(g, levels)
    simplices: dict = {}
    orbit: dict = {}
    for k in range(levels + 1):
        orbit_k: dict = {}
        reps = []
        for simplex in total.simplices[k]:
            if simplex in orbit_k:
                continue
            x = total.common_source(simplex)
            members = [translate(g, gamma, simplex) for gamma in g.arrows_into(x)]
            if len(set(members)) != len(members):
                raise NonFreeAction(simplex)
            rep = min(members, key=idkey)
            for member in members:
                orbit_k[member] = rep
            reps.append(rep)
        reps.sort(key=idkey)
        simplices[k] = tuple(reps)
        orbit[k] = orbit_k
    return MilnorBComplex(groupoid=g, levels=levels, simplices=simplices, orbit=orbit, total=total)


def milnor_section(b: MilnorBComplex, rep: tuple, level: int) -> tuple:
    """The unique orbit representative whose arrow at ``level`` is an identity."""
    g = b.groupoid
    for i, a in rep:
        if i == level:
            return translate(g, g.inv[a], rep)
    raise LevelInactive(level, rep)


def milnor_pairing(g: FiniteGroupoid, e1: tuple, e2: tuple):
    """The unique arrow gamma with e1 = gamma . e2; raises NotSameOrbit otherwise."""
    if tuple(i for i, _ in e1) != tuple(i for i, _ in e2):
        raise NotSameOrbit(f"levels differ: {e1!r} vs {e2!r}")
    if g.tgt[e1[0][1]] != g.tgt[e2[0][1]]:
        raise NotSameOrbit(f"targets differ: {e1!r} vs {e2!r}")
    gamma = g.compose(e1[0][1], g.inv[e2[0][1]])
    if translate(g, gamma, e2) != e1:
        raise NotSameOrbit(f"no single translation relates {e1!r} and {e2!r}")
    return gamma


def milnor_to_nerve(g: FiniteGroupoid, simplex: tuple):
    """Image of a total-space simplex in the nerve: consecutive arrow quotients.

    A vertex goes to the target object of its arrow; in higher degrees entry
    j-1 and entry j contribute the arrow inv(a_{j-1}) . a_j.  The value is
    unchanged under diagonal translation, so it descends to orbits.
    """
    if len(simplex) == 1:
        return g.tgt[simplex[0][1]]
    return tuple(g.compose(g.inv[simplex[j - 1][1]], simplex[j][1])
                 for j in range(1, len(simplex)))


def delta_chain_complex(simplices: dict, face) -> ChainComplex:
    """Chains of a semi-simplicial complex; the top degree is genuine, not a cut."""
    top = max(simplices)
    basis = {k: tuple(simplices[k]) for k in range(top + 1)}
    index = {k: {x: i for i, x in enumerate(basis[k])} for k in range(top + 1)}
    boundary = {}
    for k in range(1, top + 1):
        mat = zero_matrix(len(basis[k - 1]), len(basis[k]))
        for col, simplex in enumerate(basis[k]):
            for j in range(k + 1):
                mat[index[k - 1][face(k, j, simplex)]][col] += -1 if j % 2 else 1
        boundary[k] = mat
    return ChainComplex(basis=basis, boundary=boundary, complete_above=True)


def chain_complex_E(e: JoinComplex) -> ChainComplex:
    return delta_chain_complex(e.simplices, e.face)


def chain_complex_B(b: MilnorBComplex) -> ChainComplex:
    return delta_chain_complex(b.simplices, b.face)


def comparison_chain_map(b: MilnorBComplex, nerve_cx: ChainComplex) -> dict:
    """Degreewise matrices of the orbit-to-nerve map into normalized nerve chains.

    Images that are degenerate nerve simplices are sent to zero.  Defined in
    degrees 0..min(levels, nerve cap).
    """
    g = b.groupoid
    top = min(b.levels, nerve_cx.top_degree)
    maps = {}
    for k in range(top + 1):
        rows = {x: i for i, x in enumerate(nerve_cx.basis[k])}
        mat = zero_matrix(len(nerve_cx.basis[k]), len(b.simplices[k]))
        for col, rep in enumerate(b.simplices[k]):
            image = milnor_to_nerve(g, rep)
            row = rows.get(image)
            if row is not None:
                mat[row][col] = 1
        maps[k] = mat
    return maps
