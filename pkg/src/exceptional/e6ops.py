"""Explicit operators on J.

Every operator is a 27x27 :class:`Mat` acting on the *right* of row
vectors: row ``i`` is the image of the i-th basis vector and ``X @ A @ B``
applies A first.  For a linear map ``f`` we write ``op(f)`` for the matrix
whose rows are ``f(e_i)``; then ``op(g o f) = op(f) @ op(g)``.

G2 convention: the usual right action ``X . g`` lets ``g`` act on the
blocks by ``g^{-1}``.  :func:`g2_embed` takes the row-vector matrix ``A`` of
an automorphism and applies ``a -> a A`` to each block, so ``X . g`` is
``X @ g2_embed(A_g^{-1})``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import jordan as Jm
from . import octonion as O
from .exactla import Mat, Subspace, _norm, det, inverse, rat
from .jordan import JordanElement, cross, jpairing, pairing_matrix
from .octonion import Octonion, bilinear, conj, onorm, otrace, zorn_mul

DIM = 27


class ContractError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def op_from_map(f) -> Mat:
    return Mat([f(JordanElement.basis(i)).coords for i in range(DIM)])


def act(X: JordanElement, g: Mat) -> JordanElement:
    return JordanElement(g.apply(X.coords))


def act_space(space: Subspace, g: Mat) -> Subspace:
    return space.image(g)


# ---------------------------------------------------------------------------
# E6 / F4

def cross_matrix(x: JordanElement) -> Mat:
    """op(y -> x cross y)."""
    return op_from_map(lambda y: cross(x, y))


def e6_witness(g: Mat):
    """None if g preserves the trilinear form on all basis triples i <= j <= k, else the triple."""
    if g.shape != (DIM, DIM):
        return ("shape", g.shape)
    T = Jm.trilinear_tensor()
    rows = [JordanElement(r) for r in g.data]
    P = pairing_matrix()
    for i in range(DIM):
        for j in range(i, DIM):
            cij = P.apply(cross(rows[i], rows[j]).coords)  # (c, z) = c P z^T
            for k in range(j, DIM):
                rk = g.data[k]
                val = sum(a * b for a, b in zip(cij, rk) if a and b)
                if val != T.get((i, j, k), 0):
                    return (i, j, k)
    if det(g) == 0:
        return ("singular", None)
    return None


def is_in_e6(g: Mat) -> tuple[bool, tuple | None]:
    w = e6_witness(g)
    return w is None, w


def tilde(g: Mat) -> Mat:
    """Adjoint for the pairing: (X g, Y) = (X, Y tilde(g))."""
    P = pairing_matrix()
    return P @ g.T @ P


def is_in_f4(g: Mat) -> bool:
    if det(g) == 0:
        raise ContractError("is_in_f4 requires an invertible operator")
    if not is_in_e6(g)[0]:
        return False
    return tilde(g) @ g == Mat.identity(DIM)


# ---------------------------------------------------------------------------
# Phi operators

def phi(gamma: JordanElement, v: JordanElement) -> Mat:
    """op(z -> -gamma x (v x z) + (gamma, z) v + (gamma, v) z)."""
    cv = cross_matrix(v)
    cg = cross_matrix(gamma)
    first = -(cv @ cg)
    gv = jpairing(gamma, v)
    P = pairing_matrix()
    gp = P.apply(gamma.coords)  # (gamma, e_i) = gp[i]
    rows = []
    for i in range(DIM):
        r = list(first.data[i])
        if gp[i]:
            for j, x in enumerate(v.coords):
                if x:
                    r[j] += gp[i] * x
        if gv:
            r[i] += gv
        rows.append(r)
    return Mat(rows)


def phi_prime(gamma: JordanElement, v: JordanElement) -> Mat:
    gv = jpairing(gamma, v)
    m = phi(gamma, v)
    if not gv:
        return m
    return m - Mat.identity(DIM).scale(Fraction(2, 3) * gv)


class NotNilpotentError(ValueError):
    def __init__(self, message, power=None):
        super().__init__(message)
        self.power = power


def nilpotency_index(f: Mat, bound: int | None = None) -> int:
    """Smallest k with f^k = 0; raises if none below the dimension bound."""
    n = f.rows if bound is None else bound
    p = Mat.identity(f.rows)
    for k in range(1, n + 1):
        p = p @ f
        if p.is_zero():
            return k
    raise NotNilpotentError(f"operator is not nilpotent: f^{n} != 0", power=n)


def exp_nilpotent(f: Mat) -> Mat:
    """Exact exp of a nilpotent operator (the sum terminates)."""
    k = nilpotency_index(f)
    total = Mat.identity(f.rows)
    p = Mat.identity(f.rows)
    for i in range(1, k):
        p = p @ f
        total = total + p.scale(Fraction(1, factorial(i)))
    return total


# ---------------------------------------------------------------------------
# Heisenberg group N(Theta)

@dataclass(frozen=True)
class HeisenbergElement:
    x: Octonion
    y: Octonion
    z: Octonion

    @classmethod
    def identity(cls) -> "HeisenbergElement":
        z = Octonion.zero()
        return cls(z, z, z)

    @classmethod
    def random(cls, rng: random.Random, lo: int = -9, hi: int = 9) -> "HeisenbergElement":
        return cls(Octonion.random(rng, lo, hi), Octonion.random(rng, lo, hi), Octonion.random(rng, lo, hi))

    @classmethod
    def from_params(cls, p: Sequence) -> "HeisenbergElement":
        if len(p) != 24:
            raise ValueError("Heisenberg parameters have 24 coordinates")
        return cls(Octonion(p[0:8]), Octonion(p[8:16]), Octonion(p[16:24]))

    @property
    def params(self) -> tuple:
        return self.x.coords + self.y.coords + self.z.coords

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return heis_mul(self, other)

    def is_identity(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def transform(self, A: Mat) -> "HeisenbergElement":
        """(xA, yA, zA) for an 8x8 automorphism matrix A."""
        return HeisenbergElement(O.apply(A, self.x), O.apply(A, self.y), O.apply(A, self.z))


def heis_mul(u: HeisenbergElement, w: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(u.x + w.x, u.y + w.y, u.z + w.z + zorn_mul(u.x, w.y))


def heis_inv(u: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(-u.x, -u.y, zorn_mul(u.x, u.y) - u.z)


def heis_act(X: JordanElement, u: HeisenbergElement) -> JordanElement:
    """X . n(x, y; z) by the coordinate transformation rules."""
    x, y, z = u.x, u.y, u.z
    c1, c2, c3 = X.c1, X.c2, X.c3
    a1, a2, a3 = X.a1, X.a2, X.a3
    xs, ys, zs = conj(x), conj(y), conj(z)
    a2s, a3s = conj(a2), conj(a3)
    n_c2 = c2 + bilinear(x, a3) + c1 * onorm(x)
    n_c3 = (c3 + bilinear(a1, y) + c2 * onorm(y) + bilinear(a2s, z) + c1 * onorm(z)
            + otrace(zorn_mul(zorn_mul(zs, a3), y)))
    n_a1 = (a1 + y.scale(c2) + zorn_mul(a3s, z) + zorn_mul(xs, a2s)
            + zorn_mul(xs, zorn_mul(a3, y)) + zorn_mul(xs, z).scale(c1))
    n_a2 = a2 + zorn_mul(ys, a3s) + zs.scale(c1)
    n_a3 = a3 + x.scale(c1)
    return JordanElement.make(c1, n_c2, n_c3, n_a1, n_a2, n_a3)


def heis_operator(u: HeisenbergElement) -> Mat:
    return op_from_map(lambda X: heis_act(X, u))


def heis_matrix_product(X: JordanElement, u: HeisenbergElement) -> JordanElement:
    """The octonion matrix product L* (X U), inner product first.

    Only reliable when at most one of x, y, z is nonzero: with two nonzero
    parameters nonassociativity makes the product non-Hermitian, and
    :class:`ArithmeticError` is raised.
    """
    x, y, z = u.x, u.y, u.z
    one, zero = Octonion.one(), Octonion.zero()
    Mx = [[one.scale(X.c1), X.a3, conj(X.a2)],
          [conj(X.a3), one.scale(X.c2), X.a1],
          [X.a2, conj(X.a1), one.scale(X.c3)]]
    U = [[one, x, z], [zero, one, y], [zero, zero, one]]
    L = [[one, zero, zero], [conj(x), one, zero], [conj(z), conj(y), one]]

    def mm(A, B):
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                s = Octonion.zero()
                for k in range(3):
                    s = s + zorn_mul(A[i][k], B[k][j])
                row.append(s)
            out.append(row)
        return out

    R = mm(L, mm(Mx, U))
    for i in range(3):
        for j in range(3):
            if R[i][j] != conj(R[j][i]):
                raise ArithmeticError(f"matrix product is not Hermitian at entry {(i, j)}")
    return JordanElement.make(R[0][0].a, R[1][1].a, R[2][2].a, R[1][2], R[2][0], R[0][1])


def heis_by_matrix_product(X: JordanElement, u: HeisenbergElement) -> JordanElement:
    """Independent oracle: n(x,y;z) = n(0,0;z) n(0,y;0) n(x,0;0), each factor by matrix product."""
    zero = Octonion.zero()
    for part in (HeisenbergElement(zero, zero, u.z), HeisenbergElement(zero, u.y, zero),
                 HeisenbergElement(u.x, zero, zero)):
        X = heis_matrix_product(X, part)
    return X


def heis_params_from_operator(g: Mat) -> HeisenbergElement:
    """Read (x, y; z) back off an operator of the form heis_operator(u)."""
    row_c1, row_c2 = g.data[0], g.data[1]
    x = Octonion(row_c1[19:27])
    z = conj(Octonion(row_c1[11:19]))
    y = Octonion(row_c2[3:11])
    return HeisenbergElement(x, y, z)


def xi_functional(u: HeisenbergElement):
    return _norm(otrace(u.x) + otrace(u.y))


# ---------------------------------------------------------------------------
# G2 and Levi embeddings

def g2_embed(A: Mat) -> Mat:
    """op(a_i -> a_i A on every block, c_i fixed) for an automorphism A."""
    O.check_automorphism(A)
    return Mat.block_diag([Mat.identity(3), A, A, A])


def m_levi(lam, g: Mat) -> Mat:
    """op((X, v) -> (lam^-1 *g X g, diag(1, lam) v *(g^-1))) in the CD decomposition."""
    lam = rat(lam)
    g = g if isinstance(g, Mat) else Mat(g)
    if g.shape != (6, 6):
        raise ContractError("m_levi needs a 6x6 matrix g")
    dg = det(g)
    if lam == 0 or lam ** 3 != dg:
        raise ContractError(f"m_levi needs lambda^3 = det(g); got lambda = {lam}, det = {dg}")
    gs = Jm.dstar(g)
    gis = Jm.dstar(inverse(g))
    L = Mat.diag([1, lam])

    def f(X: JordanElement) -> JordanElement:
        hd, v = Jm.cd_decompose(X)
        M = Jm._expand(Jm.h3d_matrix(hd)).scale(1 / lam)
        M = gs @ M @ g
        blocks = [[((M[2 * I, 2 * J], M[2 * I, 2 * J + 1]), (M[2 * I + 1, 2 * J], M[2 * I + 1, 2 * J + 1]))
                   for J in range(3)] for I in range(3)]
        for I in range(3):
            b = blocks[I][I]
            if b[0][1] or b[1][0] or b[0][0] != b[1][1]:
                raise ArithmeticError("m_levi image is not Hermitian over D")
        new_hd = (blocks[0][0][0][0], blocks[1][1][0][0], blocks[2][2][0][0],
                  blocks[1][2], blocks[2][0], blocks[0][1])
        return Jm.cd_compose(new_hd, L @ v @ gis)

    return op_from_map(f)


def structured_action(kind: str, g, lam=None, frame: str = "zorn") -> Mat:
    if kind == "sl3":
        return O.sl3_action(g)
    if kind == "gl2_levi":
        return O.gl2_levi(g) if frame == "zorn" else O.gl2_levi_cd(g)
    if kind == "m_levi":
        if lam is None:
            raise ContractError("m_levi needs lambda")
        return m_levi(lam, g)
    raise ContractError(f"unknown structured action {kind!r}")


# ---------------------------------------------------------------------------
# G2 element generation

def sl3_torus_weight(i: int) -> tuple:
    """Weight of the Zorn basis vector i under diag(t1, t2, t3) (as an integer 3-vector)."""
    if i in (0, 7):
        return (0, 0, 0)
    if 1 <= i <= 3:
        w = [0, 0, 0]
        w[i - 1] = 1
        return tuple(w)
    w = [0, 0, 0]
    w[i - 4] = -1
    return tuple(w)


def _wkey(w) -> tuple:
    # weights of SL3 are taken modulo (1, 1, 1)
    m = min(w)
    return tuple(a - m for a in w)


@lru_cache(maxsize=None)
def g2_root_derivations() -> tuple:
    """One nilpotent derivation per root of G2 (12 of them), as 8x8 row-vector matrices."""
    from .liealg import derivations_with_support
    weights = [_wkey(sl3_torus_weight(i)) for i in range(8)]
    diffs = set()
    for a in range(8):
        for b in range(8):
            d = tuple(x - y for x, y in zip(sl3_torus_weight(b), sl3_torus_weight(a)))
            if _wkey(d) != (0, 0, 0):
                diffs.add(_wkey(d))
    out = []
    for lam in sorted(diffs):
        allowed = [[_wkey(tuple(p + q for p, q in zip(sl3_torus_weight(i), lam))) == weights[j]
                    for j in range(8)] for i in range(8)]
        for m in derivations_with_support(allowed):
            out.append(m)
    return tuple(out)


def random_g2_element(rng: random.Random, factors: int = 3) -> Mat:
    """Product of exponentials of root derivations and SL3 unipotents (exact, certified)."""
    roots = g2_root_derivations()
    g = Mat.identity(8)
    for _ in range(factors):
        t = rng.choice([-2, -1, 1, 2, 3])
        D = roots[rng.randrange(len(roots))]
        g = g @ exp_nilpotent(D.scale(t))
        i, j = rng.sample(range(3), 2)
        e = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        e[i][j] = rng.randint(-3, 3)
        g = g @ O.sl3_action(e)
    return g


def gl2_levi_random(rng: random.Random) -> Mat:
    while True:
        g = Mat([[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)])
        if det(g):
            return g
