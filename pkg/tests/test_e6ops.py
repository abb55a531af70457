import random

import pytest
from hypothesis import given, settings, strategies as st
from strategies import heis, jordans, octonions

from exceptional import e6ops as E
from exceptional import jordan as Jm
from exceptional import liealg as L
from exceptional import octonion as O
from exceptional.e6ops import HeisenbergElement
from exceptional.exactla import Mat, inverse
from exceptional.octonion import Octonion

I27 = Mat.identity(27)
zero = Octonion.zero()
seeds = st.integers(0, 10 ** 6)


def test_membership_examples():
    assert E.is_in_e6(I27) == (True, None)
    ok, wit = E.is_in_e6(I27.scale(2))
    assert not ok and wit is not None
    assert E.tilde(I27) == I27
    assert E.is_in_f4(I27)


@settings(max_examples=15)
@given(heis)
def test_heisenberg_in_e6(u):
    assert E.is_in_e6(E.heis_operator(u))[0]


@given(jordans, heis)
def test_heisenberg_preserves_norm(x, u):
    assert Jm.jnorm(E.heis_act(x, u)) == Jm.jnorm(x)


@given(heis, heis, heis)
def test_group_law(u, v, w):
    assert (u * E.heis_inv(u)).is_identity()
    assert (E.heis_inv(u) * u).is_identity()
    assert (u * v) * w == u * (v * w)


def test_group_law_example():
    n = Octonion.named
    u = HeisenbergElement(n("e1"), zero, zero) * HeisenbergElement(zero, n("e2"), zero)
    assert u == HeisenbergElement(n("e1"), n("e2"), n("e3*"))


@settings(max_examples=15)
@given(heis, heis)
def test_operator_is_homomorphism(u, v):
    assert E.heis_operator(u * v) == E.heis_operator(u) @ E.heis_operator(v)


@given(jordans, heis)
def test_coordinate_rules_match_matrix_products(x, u):
    assert E.heis_act(x, u) == E.heis_by_matrix_product(x, u)


def test_single_product_not_hermitian_with_two_parameters():
    # nonassociativity: the one-shot matrix product fails for (x, y; 0) in general
    rng = random.Random(5)
    x = Jm.JordanElement.random(rng)
    u = HeisenbergElement(Octonion.random(rng), Octonion.random(rng), zero)
    with pytest.raises(ArithmeticError):
        E.heis_matrix_product(x, u)


@settings(max_examples=10)
@given(octonions, octonions, octonions)
def test_exponential_form(x, y, z):
    assert E.exp_nilpotent(E.phi_prime(Jm.Y(zero, y, z), Jm.E33)) == E.heis_operator(HeisenbergElement(zero, y, z))
    assert E.exp_nilpotent(E.phi_prime(Jm.E11, Jm.Y(x, zero, z))) == E.heis_operator(HeisenbergElement(x, zero, z))


@given(heis)
def test_parameter_readback(u):
    assert E.heis_params_from_operator(E.heis_operator(u)) == u
    assert (E.heis_operator(u) == I27) == u.is_identity()


def test_factorization():
    rng = random.Random(2)
    u = HeisenbergElement.random(rng)
    assert HeisenbergElement(zero, u.y, u.z) * HeisenbergElement(u.x, zero, zero) == u


def test_exp_examples():
    assert E.exp_nilpotent(Mat.zeros(27, 27)) == I27
    with pytest.raises(E.NotNilpotentError):
        E.exp_nilpotent(I27)


def test_incidence():
    assert E.phi_prime(Jm.E11, Jm.E33).is_zero()


@given(jordans, jordans)
def test_phi_prime_in_lie_e6(g, v):
    assert L.algebra_basis("e6").contains(E.phi_prime(g, v))


@settings(max_examples=10)
@given(seeds)
def test_exp_of_nilpotent_lie_elements(seed):
    rng = random.Random(seed)
    f = Mat.zeros(27, 27)
    for b in rng.sample(L.algebra_basis("n_radical").basis, 4):
        f = f + b.scale(rng.randint(-3, 3))
    assert E.is_in_e6(E.exp_nilpotent(f))[0]


def test_g2_embedding_examples():
    assert E.g2_embed(Mat.identity(8)) == I27
    with pytest.raises(O.NotAutomorphismError):
        E.g2_embed(Mat.diag([1, 2, 1, 1, 1, 1, 1, 1]))


@settings(max_examples=10)
@given(seeds)
def test_g2_in_f4(seed):
    G = E.g2_embed(E.random_g2_element(random.Random(seed), 2))
    assert E.is_in_e6(G)[0] and E.is_in_f4(G)


@settings(max_examples=10)
@given(seeds, heis)
def test_g2_conjugation(seed, u):
    A = E.random_g2_element(random.Random(seed), 2)
    lhs = E.g2_embed(inverse(A)) @ E.heis_operator(u) @ E.g2_embed(A)
    assert lhs == E.heis_operator(u.transform(A))
    assert E.xi_functional(u.transform(A)) == E.xi_functional(u)


def test_g2_root_derivations():
    roots = E.g2_root_derivations()
    assert len(roots) == 12
    g2 = L.algebra_basis("g2_derivations")
    for D in roots:
        assert g2.contains(D)
        assert E.nilpotency_index(D) <= 8


def test_xi_examples():
    assert E.xi_functional(HeisenbergElement.identity()) == 0
    assert E.xi_functional(HeisenbergElement(Octonion.named("eps1"), zero, zero)) == 1


def test_structured_actions():
    assert E.structured_action("sl3", Mat.identity(3)) == Mat.identity(8)
    assert E.structured_action("gl2_levi", Mat.identity(2)) == Mat.identity(8)
    assert E.structured_action("m_levi", Mat.identity(6), lam=1) == I27
    with pytest.raises(E.ContractError):
        E.structured_action("m_levi", Mat.identity(6))
    with pytest.raises(E.ContractError):
        E.structured_action("bogus", Mat.identity(3))


def test_m_levi_contract():
    with pytest.raises(E.ContractError):
        E.m_levi(2, Mat.identity(6))


@settings(max_examples=8)
@given(seeds)
def test_m_levi_in_e6(seed):
    rng = random.Random(seed)
    g = Mat.identity(6)
    for _ in range(3):
        i, j = rng.sample(range(6), 2)
        e = [[1 if r == c else 0 for c in range(6)] for r in range(6)]
        e[i][j] = rng.randint(-3, 3)
        g = g @ Mat(e)
    g = g @ Mat.diag([2, 1, 1, 1, 1, 4])
    op = E.m_levi(2, g)
    assert E.is_in_e6(op)[0]
