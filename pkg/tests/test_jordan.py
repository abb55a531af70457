import pytest
from hypothesis import given
from strategies import jordans

from exceptional import e6ops as E
from exceptional import jordan as Jm
from exceptional import octonion as O
from exceptional import orbits as Orb
from exceptional.exactla import Subspace
from exceptional.jordan import JordanElement


def test_norm_examples():
    assert Jm.jnorm(JordanElement.identity()) == 1
    assert Jm.jnorm(Jm.E11) == 0
    assert Jm.jnorm(Jm.diag(1, 2, 3)) == 6


def test_pairing_examples():
    assert Jm.jpairing(Jm.E11, Jm.E22) == 0
    assert Jm.jpairing(Jm.E11, Jm.E11) == 1
    assert Jm.trilinear(Jm.E11, Jm.E22, Jm.E33) == 1


def test_adjoint_examples():
    assert Jm.adjoint(Jm.diag(2, 3, 5)) == Jm.diag(15, 10, 6)
    assert Jm.adjoint(Jm.E11).is_zero()
    assert Jm.cross(Jm.E11, Jm.E22) == Jm.E33


@given(jordans)
def test_trilinear_diagonal(x):
    assert Jm.trilinear(x, x, x) == 6 * Jm.jnorm(x)


@given(jordans)
def test_adjoint_pairing(x):
    assert Jm.jpairing(Jm.adjoint(x), x) == 3 * Jm.jnorm(x)


@given(jordans)
def test_adjoint_of_adjoint(x):
    assert Jm.adjoint(Jm.adjoint(x)) == x.scale(Jm.jnorm(x))


@given(jordans)
def test_monomial_norm(x):
    assert Jm.norm_from_monomials(x) == Jm.jnorm(x)


@given(jordans, jordans, jordans)
def test_trilinear_symmetric_and_tensor(x, y, z):
    t = Jm.trilinear(x, y, z)
    assert t == Jm.trilinear(y, z, x) == Jm.trilinear(y, x, z)
    assert t == Jm.trilinear_sparse(x.coords, y.coords, z.coords)
    assert Jm.jpairing(Jm.cross(x, y), z) == t


@given(jordans, jordans)
def test_cross_from_trilinear(x, y):
    assert Jm.cross(x, y) == Jm.cross_from_trilinear(x, y)


def test_cross_on_all_basis_pairs():
    T = Jm.trilinear_tensor()
    P = Jm.pairing_matrix()
    for i in range(27):
        for j in range(i, 27):
            vals = [T.get(tuple(sorted((i, j, k))), 0) for k in range(27)]
            assert Jm.cross(JordanElement.basis(i), JordanElement.basis(j)) == JordanElement(P.apply(vals))


def test_total_singularity():
    ok, wit = Jm.is_totally_singular(Jm.V_omega(Orb.two_space(1)))
    assert ok and wit is None
    ok, wit = Jm.is_totally_singular(Jm.jspan([Jm.E11, Jm.E22]))
    assert not ok and wit == (Jm.E11, Jm.E22)
    assert Jm.cross(*wit) == Jm.E33
    assert Jm.is_totally_singular(Subspace.zero(27))[0]


def test_v_omega_profile():
    F1, F2 = Jm.filtration_profile(Jm.V_omega(Orb.two_space(1)))
    assert F1 == (0, 2, 2, 0, 2, 0)
    assert sum(F1) == sum(F2) == 6


def test_profiles_distinguish_the_seven_q_representatives():
    reps = [d for d in Orb.orbit_catalog() if d.id == 1 or (d.form != "222" and d.defining == "traceless")]
    assert len(reps) == 7
    assert len({(d.profile, d.profile2) for d in reps}) == 7


def test_cd_decomposition_pure_part():
    hd, v = Jm.cd_decompose(Jm.diag(1, 2, 3))
    assert v.is_zero()
    assert Jm.h3d_norm(hd) == 6


def test_cd_decomposition_of_v_omega():
    for x in Jm.elements_of(Orb.cd_closed_orbit().rep):
        hd, v = Jm.cd_decompose(x)
        assert all(h == 0 for h in hd[:3])
        assert all(not c for c in v.data[1])


@given(jordans)
def test_cd_norm_identity(x):
    ok, lhs, rhs = Jm.cd_norm_check(x)
    assert ok, (lhs, rhs)
    hd, v = Jm.cd_decompose(x)
    assert Jm.cd_compose(hd, v) == x


def test_incidence_e11_e33():
    assert E.phi_prime(Jm.E11, Jm.E33).is_zero()


@pytest.mark.parametrize("label", Jm.LABELS)
def test_coordinate_blocks(label):
    S = Jm.J_of([label])
    assert S.dim == (1 if label.startswith("c") else 8)
    assert Jm.V_of(Jm.V_omega(O.omega_cd()), [label]).dim == (0 if label.startswith("c") else 2)
