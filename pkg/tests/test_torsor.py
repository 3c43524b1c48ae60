from __future__ import annotations

import pytest

import finstack as fs
from finstack.errors import C1Violation, C2Violation, DanglingId, TorsorViolation
from support import cocycle_zoo, gauge_cocycle, pair2, pt, z2


def one_chart_cocycle():
    g = z2()
    cov = fs.covered_space(["u", "v"], {"0": {"u", "v"}})
    return fs.validate_cocycle(cov, g, {"0": {"u": "*", "v": "*"}},
                               {("0", "0"): {"u": 0, "v": 0}})


def twist_cocycle():
    """Two charts over one point with transition g; valid by C2 since g.g = e."""
    g = z2()
    cov = fs.covered_space(["w"], {"0": {"w"}, "1": {"w"}})
    return fs.validate_cocycle(
        cov, g,
        {"0": {"w": "*"}, "1": {"w": "*"}},
        {("0", "0"): {"w": 0}, ("0", "1"): {"w": 1},
         ("1", "0"): {"w": 1}, ("1", "1"): {"w": 0}},
    )


def test_cover_must_cover():
    with pytest.raises(DanglingId):
        fs.covered_space(["u", "v"], {"0": {"u"}})


def test_one_chart_cocycle_valid():
    c = one_chart_cocycle()
    assert c.cov.indices() == ("0",)


def test_twist_cocycle_valid():
    twist_cocycle()


def test_c2_violation_witness():
    g = z2()
    cov = fs.covered_space(["w"], {"0": {"w"}, "1": {"w"}})
    with pytest.raises(C2Violation) as err:
        fs.validate_cocycle(
            cov, g,
            {"0": {"w": "*"}, "1": {"w": "*"}},
            {("0", "0"): {"w": 0}, ("0", "1"): {"w": 1},
             ("1", "0"): {"w": 0}, ("1", "1"): {"w": 0}},
        )
    assert err.value.witness == ("w", "0", "1", "0")


def test_c1_violation():
    g = pair2()
    cov = fs.covered_space(["w"], {"0": {"w"}, "1": {"w"}})
    with pytest.raises(C1Violation):
        fs.validate_cocycle(
            cov, g,
            {"0": {"w": 1}, "1": {"w": 1}},
            {("0", "0"): {"w": (1, 1)}, ("0", "1"): {"w": (2, 2)},
             ("1", "0"): {"w": (1, 1)}, ("1", "1"): {"w": (1, 1)}},
        )


def test_trivial_cover_torsor_is_product():
    c = one_chart_cocycle()
    t = fs.cocycle_to_torsor(c)
    assert len(t.elements) == 4
    for w in c.cov.points:
        fiber = t.fiber(w)
        assert len(fiber) == 2
        u = fiber[0]
        for v in fiber:
            delta = t.delta[(u, v)]
            assert c.target.src[delta] == t.f[u]
            assert c.target.tgt[delta] == t.f[v]


def test_twist_torsor_size_and_cartesianness():
    t = fs.cocycle_to_torsor(twist_cocycle())
    assert len(t.elements) == 2
    fs.validate_torsor(t)


def test_empty_base_torsor():
    g = z2()
    cov = fs.covered_space([], {})
    c = fs.validate_cocycle(cov, g, {}, {})
    t = fs.cocycle_to_torsor(c)
    assert t.elements == ()
    assert fs.torsor_to_cocycle(t).cov.points == ()


def test_roundtrip_reproduces_cocycle_on_the_nose():
    for name, c in cocycle_zoo():
        c2 = fs.torsor_to_cocycle(fs.cocycle_to_torsor(c))
        assert c2.a == c.a, name
        assert c2.gamma == c.gamma, name


def test_roundtrip_admits_morphism_both_ways():
    for name, c in cocycle_zoo():
        c2 = fs.torsor_to_cocycle(fs.cocycle_to_torsor(c))
        assert fs.find_cocycle_morphism(c, c2) is not None, name
        assert fs.find_cocycle_morphism(c2, c) is not None, name


def test_identity_morphism_from_gamma():
    for name, c in cocycle_zoo():
        delta = {(i, j): dict(table) for (i, j), table in c.gamma.items()}
        assert fs.check_cocycle_morphism(c, c, delta), name


def test_torsor_invariants_exhaustive():
    for name, c in cocycle_zoo():
        fs.validate_torsor(fs.cocycle_to_torsor(c))


def test_corrupted_pairing_caught():
    t = fs.cocycle_to_torsor(one_chart_cocycle())
    u, v = t.fiber("u")[0], t.fiber("u")[1]
    bad_delta = dict(t.delta)
    bad_delta[(u, v)] = t.delta[(u, u)]
    broken = fs.Torsor(cov=t.cov, target=t.target, elements=t.elements,
                       p=t.p, f=t.f, delta=bad_delta, sections=t.sections)
    with pytest.raises(TorsorViolation):
        fs.validate_torsor(broken)


def test_point_cocycles_over_group_are_all_equivalent():
    # over a discrete base a group-valued twist trivializes chartwise
    c1 = twist_cocycle()
    g = z2()
    cov = fs.covered_space(["w"], {"0": {"w"}, "1": {"w"}})
    trivial = fs.validate_cocycle(
        cov, g,
        {"0": {"w": "*"}, "1": {"w": "*"}},
        {("0", "0"): {"w": 0}, ("0", "1"): {"w": 0},
         ("1", "0"): {"w": 0}, ("1", "1"): {"w": 0}},
    )
    assert fs.find_cocycle_morphism(c1, trivial) is not None
    assert fs.torsor_isomorphic(fs.cocycle_to_torsor(c1), fs.cocycle_to_torsor(trivial))


def test_component_obstruction_blocks_morphisms():
    # disconnected target: descent data anchored in different components
    du = fs.disjoint_union(z2(), pt())
    c_left = gauge_cocycle(du, {"0": {"u"}}, {"u": (0, "*")}, {("0", "u"): (0, 0)})
    c_right = gauge_cocycle(du, {"0": {"u"}}, {"u": (1, "pt")}, {("0", "u"): (1, ("pt", "pt"))})
    assert fs.find_cocycle_morphism(c_left, c_right) is None
    assert not fs.torsor_isomorphic(fs.cocycle_to_torsor(c_left), fs.cocycle_to_torsor(c_right))


def test_morphism_transport_to_torsor_isomorphism():
    for name, c in cocycle_zoo():
        c2 = fs.torsor_to_cocycle(fs.cocycle_to_torsor(c))
        if fs.find_cocycle_morphism(c, c2) is not None:
            assert fs.torsor_isomorphic(fs.cocycle_to_torsor(c), fs.cocycle_to_torsor(c2)), name


def test_torsor_isomorphic_reflexive():
    t = fs.cocycle_to_torsor(twist_cocycle())
    assert fs.torsor_isomorphic(t, t)


def test_transition_data_export():
    c = twist_cocycle()
    data = c.transition_data()
    assert set(data) == {("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")}
    assert data[("0", "1")] == {"w": 1}
