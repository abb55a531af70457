import random

import pytest
from hypothesis import given, strategies as st
from strategies import octonions

from exceptional import e6ops as E
from exceptional import octonion as O
from exceptional import orbits as Orb
from exceptional.exactla import Mat
from exceptional.octonion import CDOctonion, Octonion

n = Octonion.named


def test_zorn_examples():
    assert n("e1") * n("e2") == n("e3*")
    assert n("eps1") * n("e1") == n("e1")
    assert (n("e1") * n("eps1")).is_zero()
    assert O.onorm(Octonion.one()) == 1
    assert O.onorm(n("eps1")) == 0
    assert O.onorm(Octonion.from_parts(2, (0, 0, 0), (0, 0, 0), 5)) == 10
    assert O.bilinear(n("e1"), n("e1*")) == -1


@given(octonions)
def test_unit(x):
    assert Octonion.one() * x == x == x * Octonion.one()


@given(octonions, octonions)
def test_composition(x, y):
    assert O.onorm(x * y) == O.onorm(x) * O.onorm(y)


@given(octonions, octonions, octonions)
def test_trace_associative(a, b, c):
    assert O.otrace(a * (b * c)) == O.otrace((a * b) * c)


@given(octonions, octonions)
def test_kirmse(x, y):
    assert O.conj(x) * (x * y) == y.scale(O.onorm(x))
    assert (y * x) * O.conj(x) == y.scale(O.onorm(x))


@given(octonions, octonions)
def test_form(x, y):
    assert O.conj(O.conj(x)) == x
    assert O.bilinear(x, x) == 2 * O.onorm(x)
    assert O.bilinear(x, y) == O.onorm(x + y) - O.onorm(x) - O.onorm(y)


def test_structure_constants_match_products():
    T = O.structure_constants()
    for i in range(8):
        for j in range(8):
            assert list(T[i][j]) == list((Octonion.basis(i) * Octonion.basis(j)).coords)


@given(octonions, octonions)
def test_multiplication_matrices(w, x):
    assert O.left_mult_matrix(w).apply(x.coords) == list((w * x).coords)
    assert O.right_mult_matrix(w).apply(x.coords) == list((x * w).coords)


def test_cd_examples():
    I, Z = ((1, 0), (0, 1)), ((0, 0), (0, 0))
    p = ((1, 2), (3, 4))
    assert O.cd_mul(CDOctonion(I, Z), CDOctonion(p, Z)) == CDOctonion(p, Z)
    assert O.cd_mul(CDOctonion(Z, I), CDOctonion(Z, I)) == CDOctonion(I, Z)
    assert O.cd_to_zorn(CDOctonion(I, Z)) == Octonion.one()


def test_cd_gamma_mismatch():
    I, Z = ((1, 0), (0, 1)), ((0, 0), (0, 0))
    with pytest.raises(ValueError):
        O.cd_mul(CDOctonion(I, Z, 1), CDOctonion(I, Z, 2))
    with pytest.raises(O.UnsupportedModelError):
        O.cd_to_zorn(CDOctonion(I, Z, 2))


coords = st.lists(st.integers(-9, 9), min_size=8, max_size=8)


@given(coords, coords, st.integers(-3, 3).filter(bool))
def test_cd_norm_and_trace(a, b, g):
    u, w = CDOctonion.from_coords(a, g), CDOctonion.from_coords(b, g)
    assert O.cd_norm(O.cd_mul(u, w)) == O.cd_norm(u) * O.cd_norm(w)
    assert O.cd_norm(u) == O.det2(u.p) - g * O.det2(u.q)
    assert O.cd_trace(u) == u.p[0][0] + u.p[1][1]


@given(coords, coords)
def test_cd_to_zorn_isomorphism(a, b):
    u, w = CDOctonion.from_coords(a), CDOctonion.from_coords(b)
    zu, zw = O.cd_to_zorn(u), O.cd_to_zorn(w)
    assert O.cd_to_zorn(O.cd_mul(u, w)) == zu * zw
    assert O.cd_to_zorn(O.cd_conj(u)) == O.conj(zu)
    assert O.onorm(zu) == O.cd_norm(u)
    assert O.zorn_to_cd(zu) == u


def test_omega_cd_is_class_one():
    assert O.classify_isotropic(O.omega_cd()).klass == 1
    assert O.is_isotropic(O.omega_bar_cd())


def test_annihilator_spans():
    assert O.annihilator(O.span("e3*"), "right") == O.span("eps2", "e1", "e2", "e3*")
    assert O.annihilator(O.span("eps1"), "right") == O.span("e1*", "e2*", "e3*", "eps2")


def test_annihilator_sides():
    W = O.span("e3*")
    for w in O.octonions_of(O.annihilator(W, "right")):
        assert (n("e3*") * w).is_zero()
    for w in O.octonions_of(O.annihilator(W, "left")):
        assert (w * n("e3*")).is_zero()


@given(st.integers(0, 10 ** 6), st.sampled_from([True, False, None]))
def test_annihilators_of_lines(seed, traceless):
    ell = O.random_isotropic_line(random.Random(seed), traceless)
    if traceless is not None:
        assert O.is_traceless(ell) == traceless
    for side in ("left", "right"):
        A = O.annihilator(ell, side)
        assert A.dim == 4 and O.is_isotropic(A)


def test_classification_examples():
    for k in range(1, 6):
        c = O.classify_isotropic(Orb.two_space(k))
        assert c.klass == k
    c1 = O.classify_isotropic(Orb.two_space(1))
    assert c1.traceless and c1.left_null and c1.right_null
    c2 = O.classify_isotropic(Orb.two_space(2))
    assert c2.traceless and not c2.left_null and not c2.right_null
    c5 = O.classify_isotropic(Orb.two_space(5))
    assert not (c5.traceless or c5.left_null or c5.right_null)
    assert O.classify_isotropic(O.span("e3*")).traceless
    assert not O.classify_isotropic(O.span("eps1")).traceless


def test_classification_error_has_witness():
    with pytest.raises(O.ClassificationError) as info:
        O.classify_isotropic(O.span("e1", "e1*"))
    assert info.value.witness is not None


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_class_is_g2_invariant(seed, k):
    A = E.random_g2_element(random.Random(seed), 2)
    W = Orb.two_space(k).image(A)
    c = O.classify_isotropic(W)
    assert c.klass == k
    if c.traceless:
        assert c.left_null == c.right_null
    assert O.is_isotropic(O.annihilator(W, "left")) and O.is_isotropic(O.annihilator(W, "right"))


def test_complete_null_triple_example():
    v1 = O.span("e3*", "e1")
    v2, v3 = O.complete_null_triple(v1)
    for A, B in ((v1, v2), (v2, v3), (v3, v1)):
        for a in O.octonions_of(A):
            for b in O.octonions_of(B):
                assert (a * b).is_zero()
    assert O.conj_space(v3).contains_space(O.product_space(v1, O.perp(v2)))
    assert O.complete_null_triple(v2) == (v3, v1)


def test_complete_null_triple_degenerate():
    with pytest.raises(O.DegenerateInputError):
        O.complete_null_triple(O.span("e3*"))


@pytest.mark.parametrize("k", range(1, 6))
def test_null_triples_for_catalog(k):
    v2, v3 = O.complete_null_triple(Orb.two_space(k))
    assert v2.dim == v3.dim == 2
    assert Orb.perp_star_holds(Orb.two_space(k), v2, v3)


def test_sl3_and_gl2_levi_are_automorphisms():
    assert O.sl3_action(Mat.identity(3)) == Mat.identity(8)
    O.check_automorphism(O.sl3_action(Mat([[1, 2, 0], [0, 1, 3], [0, 0, 1]])))
    O.check_automorphism(O.gl2_levi(Mat([[2, 1], [3, -1]])))
    with pytest.raises(O.NotAutomorphismError):
        O.check_automorphism(Mat.diag([1, 2, 1, 1, 1, 1, 1, 1]))
