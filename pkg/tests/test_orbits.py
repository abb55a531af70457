import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exceptional import e6ops as E
from exceptional import jordan as Jm
from exceptional import octonion as O
from exceptional import orbits as Orb
from exceptional.e6ops import HeisenbergElement
from exceptional.exactla import Mat, det
from exceptional.octonion import Octonion

CAT = Orb.orbit_catalog()
zero = Octonion.zero()
seeds = st.integers(0, 10 ** 6)


def test_catalog_shape():
    assert len(CAT) == 17
    assert [d.id for d in CAT] == list(range(1, 18))
    assert sum(d.form == "222" for d in CAT) == 5
    assert sum(d.shape.startswith("right") for d in CAT) == 6
    assert sum(d.shape.startswith("left") for d in CAT) == 6
    assert CAT[0].shape == "closed-(2,2,2)" and CAT[0].g2_stabilizer_kind == "heisenberg-parabolic P(Omega)"


@pytest.mark.parametrize("d", CAT, ids=lambda d: d.shape)
def test_representative(d):
    assert d.rep.dim == 6
    assert Jm.is_totally_singular(d.rep)[0]
    assert Jm.filtration_profile(d.rep) == (d.profile, d.profile2)


def test_closed_orbit_profile():
    assert CAT[0].profile == (0, 2, 2, 0, 2, 0)
    assert CAT[0].rep == Jm.V_omega(Orb.two_space(1))


def test_invariants_separate():
    assert len({Orb.invariant_key(d) for d in CAT}) == 17


@pytest.mark.parametrize("d", CAT, ids=lambda d: d.shape)
def test_predicate_agrees_with_action(d):
    rng = random.Random(d.id)
    for u in Orb.sample_elements(d, rng, 40):
        p = Orb.stabilizer_predicate(d, u)
        assert p == Orb.direct_action(d, u), u
    for u in Orb.sample_elements(d, rng, 4):
        assert Orb.stabilizer_predicate(d, u) == Orb.direct_action_operator(d, u)


@settings(max_examples=30)
@given(st.sampled_from(CAT), st.lists(st.integers(-3, 3), min_size=24, max_size=24))
def test_predicate_on_arbitrary_parameters(d, p):
    u = HeisenbergElement.from_params(p)
    assert Orb.stabilizer_predicate(d, u) == Orb.direct_action(d, u)


def test_predicate_examples():
    d = CAT[0]
    x = Octonion.named("e1") + Octonion.named("e2*").scale(3)
    assert Orb.stabilizer_predicate(d, HeisenbergElement(x, zero, zero)).acts_trivially
    d8 = Orb.a2_line_orbit("traceless")
    assert O.annihilator(d8.V("a3"), "right").dim == 0
    r = Orb.stabilizer_predicate(d8, HeisenbergElement(zero, Octonion.named("e3*"), zero))
    assert r == Orb.direct_action(d8, HeisenbergElement(zero, Octonion.named("e3*"), zero)) and not r.acts_trivially
    units = [HeisenbergElement.from_params([int(i == k) for i in range(24)]) for k in range(24)]
    bad = [u for u in units if not Orb.direct_action(d8, u).stabilizes]
    assert bad and all(not Orb.stabilizer_predicate(d8, u).stabilizes for u in bad)


def test_trivially_acting_subgroups():
    om = CAT[0].V("a1")
    assert Orb.trivially_acting_subgroup(CAT[0]) == Orb.params_space(om, om, om)
    for d in CAT:
        T = Orb.trivially_acting_subgroup(d)
        assert Orb.stabilizer_subgroup_space(d.id).contains_space(T)
        if d.form == "R2":
            assert T.dim == 0
        if d.form == "222" and d.id != 1:
            assert T.dim == 6
            assert any(b[0] + b[7] or b[8] + b[15] for b in T.basis)


def test_trivially_acting_elements_really_act_trivially():
    rng = random.Random(3)
    for d in CAT:
        for _ in range(3):
            u = HeisenbergElement.from_params(Orb.random_vector_in(Orb.trivially_acting_subgroup(d), rng))
            assert all(E.heis_act(X, u) == X for X in Jm.elements_of(d.rep))


def test_xi_flags():
    flags = {d.id: Orb.xi_nontrivial_on_trivial_actors(d) for d in CAT}
    assert sum(flags.values()) == 14
    assert sorted(k for k, v in flags.items() if not v) == [1] + sorted(d.id for d in CAT if d.form == "R2")
    assert all(flags[k] for k in range(2, 6))


def test_levi_identity():
    assert Orb.levi_image(HeisenbergElement.identity()) == Mat.identity(6)
    assert Orb.levi_image(Mat.identity(8)) == Mat.identity(6)


@settings(max_examples=20)
@given(seeds)
def test_levi_unitriangular(seed):
    rng = random.Random(seed)
    op = Orb.omega_perp_cd()
    x, y, z = (Orb.random_in(op, rng) for _ in range(3))
    w = Orb.levi_image(HeisenbergElement(x, y, z))
    assert Orb.unitriangular_check(w, Orb.cd_component(x), Orb.cd_component(y))


@settings(max_examples=20)
@given(seeds)
def test_levi_diag(seed):
    h = E.gl2_levi_random(random.Random(seed))
    assert Orb.levi_image(Orb.gl2_levi_element(h)) == Mat.block_diag([h, h, h])


def test_levi_rejects_non_stabilizer():
    with pytest.raises(E.ContractError):
        Orb.levi_image(HeisenbergElement(Octonion.named("e3*"), zero, zero))


@pytest.mark.parametrize("kind", ["traceless", "eps1"])
def test_a2_line_patterns(kind):
    rng = random.Random(11)
    pat = Orb.vsubgrp_pattern if kind == "traceless" else Orb.ep1_pattern
    d = Orb.a2_line_orbit(kind)
    for g in Orb.a2_line_stabilizer_elements(kind, rng, 12):
        assert d.rep.image(g) == d.rep
        ok, why = pat(Orb.a2_line_image(kind, g))
        assert ok, why


def test_traceless_radical_breaks_strict_zero_block():
    # root elements of the unipotent radical of P(e3*) move eps2 into span(e1, e2)
    assert Orb.radical_pattern_violations("traceless")
    assert Orb.radical_pattern_violations("eps1") == []
    rng = random.Random(4)
    for g in Orb.a2_line_stabilizer_elements("traceless", rng, 12, part="all"):
        assert Orb.weak_vsubgrp_pattern(Orb.a2_line_image("traceless", g))[0]


def test_pattern_detects_violations():
    m = Mat.identity(6)
    bad = Mat([[1 if (i, j) in {(k, k) for k in range(6)} | {(4, 0)} else 0 for j in range(6)] for i in range(6)])
    assert Orb.vsubgrp_pattern(m)[0] and Orb.ep1_pattern(m)[0]
    assert not Orb.vsubgrp_pattern(bad)[0] and not Orb.ep1_pattern(bad)[0]
    assert not Orb.ep1_pattern(Mat.diag([1, 1, 2, 1, 1, 1]))[0]


def test_vbar_jacobian_examples():
    assert Orb.vbar_jacobian(Mat.identity(2)) == 1
    for t in (2, 3, -5):
        assert abs(Orb.vbar_jacobian(Mat.diag([t, 1]))) == Fraction(1, abs(t) ** 3)
    with pytest.raises(E.ContractError):
        Orb.vbar_jacobian(Mat([[1, 2], [2, 4]]))


@settings(max_examples=30)
@given(seeds)
def test_vbar_jacobian(seed):
    g = E.gl2_levi_random(random.Random(seed))
    j = Orb.vbar_jacobian(g)
    assert abs(j) == abs(1 / det(g) ** 3)


def test_vbar_jacobian_certified_path():
    g = Mat([[2, 1], [1, 3]])
    assert Orb.vbar_jacobian(g, certify=True) == Orb.vbar_jacobian(g)


def test_complement():
    rep = Orb.complement_report()
    assert (rep["perp_dim"], rep["bar_dim"], rep["total_dim"]) == (18, 6, 24)
    assert rep["direct"] and rep["xi_trivial_on_omega"] and rep["xi_trivial_on_omega_bar"]
    assert all(rep["perp_star"].values())


@settings(max_examples=8)
@given(seeds)
def test_g2_preserves_profiles(seed):
    G = E.g2_embed(E.random_g2_element(random.Random(seed), 2))
    for d in CAT:
        V = d.rep.image(G)
        assert V.dim == 6 and Jm.is_totally_singular(V)[0]
        assert Jm.filtration_profile(V) == (d.profile, d.profile2)


def test_descriptor_document():
    doc = CAT[0].to_doc()
    assert doc["rep"]["rows"] == 6 and doc["rep"]["cols"] == 27
    assert doc["class_flags"]["class"] == 1
