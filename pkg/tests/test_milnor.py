from __future__ import annotations

import pytest

import finstack as fs
from finstack.errors import LevelInactive, NotSameOrbit
from finstack.homology import mat_mul
from finstack.milnor import translate
from support import groupoid_zoo, pair2, pt, z2, z3


def test_join_counts_octahedron():
    e = fs.milnor_E(z2(), 2)
    assert [e.count(k) for k in range(3)] == [6, 12, 8]


def test_join_point_interval():
    e = fs.milnor_E(pt(), 1)
    cx = fs.chain_complex_E(e)
    assert fs.homology(cx, 0).pair() == (1, ())
    assert fs.homology(cx, 1).pair() == (0, ())


def test_join_pair_groupoid_level_zero():
    e = fs.milnor_E(pair2(), 0)
    assert e.count(0) == 4
    by_source = {}
    for ((_, arrow),) in e.simplices[0]:
        by_source.setdefault(pair2().src[arrow], 0)
        by_source[pair2().src[arrow]] += 1
    assert sorted(by_source.values()) == [2, 2]


def test_total_space_sphere_homology():
    for levels in (2, 3):
        cx = fs.chain_complex_E(fs.milnor_E(z2(), levels))
        assert fs.homology(cx, 0).pair() == (1, ())
        for k in range(1, levels):
            assert fs.homology(cx, k).pair() == (0, ())
        assert fs.homology(cx, levels).pair() == (1, ())


def test_total_space_connectivity_window_z3():
    cx = fs.chain_complex_E(fs.milnor_E(z3(), 3))
    assert fs.homology(cx, 0).pair() == (1, ())
    for k in range(1, 3):
        assert fs.homology(cx, k).pair() == (0, ())


def test_quotient_projective_spaces():
    expected = {
        2: [(1, ()), (0, (2,)), (0, ())],
        3: [(1, ()), (0, (2,)), (0, ()), (1, ())],
        4: [(1, ()), (0, (2,)), (0, ()), (0, (2,)), (0, ())],
    }
    for levels, values in expected.items():
        cx = fs.chain_complex_B(fs.milnor_B(z2(), levels))
        for k, pair in enumerate(values):
            assert fs.homology(cx, k).pair() == pair


def test_quotient_of_contractible_groupoid():
    cx = fs.chain_complex_B(fs.milnor_B(pair2(), 2))
    assert fs.homology(cx, 0).pair() == (1, ())
    assert fs.homology(cx, 1).pair() == (0, ())


def test_orbits_are_free():
    g = z2()
    b = fs.milnor_B(g, 2)
    for k, orbit_map in b.orbit.items():
        for simplex, rep in orbit_map.items():
            members = {translate(g, gamma, simplex)
                       for gamma in g.arrows_into(b.total.common_source(simplex))}
            assert rep in members
            assert len(members) == len(g.arrows_into(b.total.common_source(simplex)))


def test_section_normalizes_requested_level():
    g = z2()
    b = fs.milnor_B(g, 2)
    rep = b.orbit[0][((0, 1),)]
    section = fs.milnor_section(b, rep, 0)
    assert section == ((0, 0),)
    # already normalized stays put
    assert fs.milnor_section(b, ((0, 0),), 0) == ((0, 0),)
    with pytest.raises(LevelInactive):
        fs.milnor_section(b, ((0, 0), (2, 1)), 1)


def test_section_is_unique_identity_representative():
    g = z3()
    b = fs.milnor_B(g, 2)
    for rep in b.simplices[1]:
        levels = [i for i, _ in rep]
        for level in levels:
            section = fs.milnor_section(b, rep, level)
            arrow = dict(section)[level]
            assert g.is_identity(arrow)
            assert b.orbit[1][section] == b.orbit[1][rep]


def test_pairing_values_and_laws():
    g = z2()
    assert fs.milnor_pairing(g, ((0, 1),), ((0, 0),)) == 1
    assert fs.milnor_pairing(g, ((0, 1),), ((0, 1),)) == 0
    with pytest.raises(NotSameOrbit):
        fs.milnor_pairing(g, ((0, 0),), ((1, 0),))


def test_pairing_composition_law_exhaustive():
    g = z3()
    e = fs.milnor_E(g, 1)
    b = fs.milnor_B(g, 1)
    for k, simplices in e.simplices.items():
        orbits: dict = {}
        for s in simplices:
            orbits.setdefault(b.orbit[k][s], []).append(s)
        for members in orbits.values():
            for e1 in members:
                assert g.is_identity(fs.milnor_pairing(g, e1, e1))
                for e2 in members:
                    for e3 in members:
                        left = g.compose(fs.milnor_pairing(g, e1, e2),
                                         fs.milnor_pairing(g, e2, e3))
                        assert left == fs.milnor_pairing(g, e1, e3)
                    gamma = fs.milnor_pairing(g, e1, e2)
                    assert translate(g, gamma, e2) == e1


def test_projection_to_nerve_values():
    g = z2()
    assert fs.milnor_to_nerve(g, ((0, 1),)) == "*"
    assert fs.milnor_to_nerve(g, ((0, 0), (1, 1))) == (1,)
    # representative independence on a translated edge
    assert fs.milnor_to_nerve(g, ((0, 1), (1, 0))) == fs.milnor_to_nerve(g, ((0, 0), (1, 1)))


@pytest.mark.parametrize("name,g", groupoid_zoo())
def test_projection_representative_independent(name, g):
    levels = 2
    b = fs.milnor_B(g, levels)
    for k, orbit_map in b.orbit.items():
        for simplex, rep in orbit_map.items():
            assert fs.milnor_to_nerve(g, simplex) == fs.milnor_to_nerve(g, rep)


@pytest.mark.parametrize("name,g", groupoid_zoo())
def test_projection_commutes_with_faces(name, g):
    levels = 2
    e = fs.milnor_E(g, levels)
    s = fs.nerve(g, levels)
    for k in range(1, levels + 1):
        for simplex in e.simplices[k]:
            image = fs.milnor_to_nerve(g, simplex)
            for j in range(k + 1):
                face_then_project = fs.milnor_to_nerve(g, e.face(k, j, simplex))
                project_then_face = s.face(k, j, image)
                assert face_then_project == project_then_face


@pytest.mark.parametrize("name,g", groupoid_zoo())
def test_comparison_map_is_chain_map(name, g):
    levels = 3
    b = fs.milnor_B(g, levels)
    ncx = fs.chain_complex(fs.nerve(g, levels))
    bcx = fs.chain_complex_B(b)
    cmap = fs.comparison_chain_map(b, ncx)
    for k in range(1, levels + 1):
        assert mat_mul(ncx.boundary_matrix(k), cmap[k]) == mat_mul(cmap[k - 1], bcx.boundary[k])


@pytest.mark.parametrize("name,g", groupoid_zoo())
def test_comparison_induces_homology_isomorphisms(name, g):
    levels = 3
    b = fs.milnor_B(g, levels)
    ncx = fs.chain_complex(fs.nerve(g, levels))
    bcx = fs.chain_complex_B(b)
    cmap = fs.comparison_chain_map(b, ncx)
    for n in range(levels - 1):
        assert fs.induced_map_is_isomorphism(bcx, ncx, cmap, n)
