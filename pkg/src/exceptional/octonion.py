"""Split octonions.

Zorn model: ``x = [[a, v], [phi, d]]`` with ``v`` in V3 and ``phi`` in its
dual.  Coordinates follow the fixed basis order

    (eps1, e1, e2, e3, e1*, e2*, e3*, eps2)

so ``x.coords == (a, v1, v2, v3, phi1, phi2, phi3, d)``.  The wedge of two
vectors is a covector (e1 ^ e2 = e3*, cyclic) and vice versa.

The Cayley-Dickson model doubles D = M2(Q); conjugation on D is the
adjugate.  :func:`cd_to_zorn` is a certified isomorphism for gamma = 1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .exactla import Mat, Subspace, _norm, hstack, left_kernel_basis, rat

BASIS_NAMES = ("eps1", "e1", "e2", "e3", "e1*", "e2*", "e3*", "eps2")
DIM = 8


def _cross(u, w):
    return (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])


def _dot(u, w):
    return u[0] * w[0] + u[1] * w[1] + u[2] * w[2]


class Octonion:
    """Element of the Zorn model; immutable, hashable."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        c = tuple(_norm(rat(x)) if not isinstance(x, int) else x for x in coords)
        if len(c) != DIM:
            raise ValueError("an octonion has 8 coordinates")
        self.coords = c

    @classmethod
    def from_parts(cls, a, v: Sequence, phi: Sequence, d) -> "Octonion":
        return cls((a, *v, *phi, d))

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        c = [0] * DIM
        c[i] = 1
        return cls(c)

    @classmethod
    def named(cls, name: str) -> "Octonion":
        return cls.basis(BASIS_NAMES.index(name))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * DIM)

    @classmethod
    def one(cls) -> "Octonion":
        return cls((1, 0, 0, 0, 0, 0, 0, 1))

    @classmethod
    def random(cls, rng: random.Random, lo: int = -9, hi: int = 9) -> "Octonion":
        return cls(rng.randint(lo, hi) for _ in range(DIM))

    @property
    def a(self):
        return self.coords[0]

    @property
    def v(self):
        return self.coords[1:4]

    @property
    def phi(self):
        return self.coords[4:7]

    @property
    def d(self):
        return self.coords[7]

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = [f"{x}*{n}" for x, n in zip(self.coords, BASIS_NAMES) if x]
        return "Octonion(" + (" + ".join(terms) or "0") + ")"

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion([p + q for p, q in zip(self.coords, o.coords)])

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion([p - q for p, q in zip(self.coords, o.coords)])

    def __neg__(self) -> "Octonion":
        return Octonion([-p for p in self.coords])

    def scale(self, c) -> "Octonion":
        return Octonion([c * p for p in self.coords])

    def __rmul__(self, c) -> "Octonion":
        return self.scale(c)

    def __mul__(self, o):
        if isinstance(o, Octonion):
            return zorn_mul(self, o)
        return self.scale(o)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def conj(self) -> "Octonion":
        return conj(self)


def zorn_mul(x: Octonion, y: Octonion) -> Octonion:
    a, v, p, d = x.coords[0], x.coords[1:4], x.coords[4:7], x.coords[7]
    a2, v2, p2, d2 = y.coords[0], y.coords[1:4], y.coords[4:7], y.coords[7]
    pp = _cross(p, p2)
    vv = _cross(v, v2)
    return Octonion((
        a * a2 + _dot(p2, v),
        *(a * v2[i] + d2 * v[i] - pp[i] for i in range(3)),
        *(a2 * p[i] + d * p2[i] + vv[i] for i in range(3)),
        _dot(p, v2) + d * d2,
    ))


def conj(x: Octonion) -> Octonion:
    c = x.coords
    return Octonion((c[7], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], c[0]))


def onorm(x: Octonion):
    c = x.coords
    return _norm(c[0] * c[7] - _dot(c[1:4], c[4:7]))


def otrace(x: Octonion):
    return _norm(x.coords[0] + x.coords[7])


def bilinear(x: Octonion, y: Octonion):
    """(x, y) = n(x+y) - n(x) - n(y)."""
    c, e = x.coords, y.coords
    return _norm(c[0] * e[7] + e[0] * c[7] - _dot(c[4:7], e[1:4]) - _dot(e[4:7], c[1:4]))


@lru_cache(maxsize=None)
def gram() -> Mat:
    """Gram matrix of :func:`bilinear` in the fixed basis (it squares to the identity)."""
    b = [Octonion.basis(i) for i in range(DIM)]
    return Mat([[bilinear(x, y) for y in b] for x in b])


@lru_cache(maxsize=None)
def structure_constants() -> tuple:
    """``T[i][j]`` = coordinates of ``basis(i) * basis(j)``."""
    b = [Octonion.basis(i) for i in range(DIM)]
    return tuple(tuple(zorn_mul(x, y).coords for y in b) for x in b)


def left_mult_matrix(w: Octonion) -> Mat:
    """Row-vector matrix of ``x -> w * x``."""
    return Mat([zorn_mul(w, Octonion.basis(i)).coords for i in range(DIM)])


def right_mult_matrix(w: Octonion) -> Mat:
    """Row-vector matrix of ``x -> x * w``."""
    return Mat([zorn_mul(Octonion.basis(i), w).coords for i in range(DIM)])


def vec(x: Octonion) -> list:
    return list(x.coords)


def octonions_of(space: Subspace) -> list[Octonion]:
    return [Octonion(b) for b in space.basis]


def span(*elements) -> Subspace:
    """Subspace of Theta spanned by octonions or basis names."""
    vecs = []
    for e in elements:
        if isinstance(e, str):
            e = Octonion.named(e)
        vecs.append(e.coords)
    return Subspace(DIM, vecs)


V7 = Subspace(DIM, left_kernel_basis(Mat([[1], [0], [0], [0], [0], [0], [0], [1]])))


def perp(space: Subspace) -> Subspace:
    return space.perp(gram())


def conj_space(space: Subspace) -> Subspace:
    return Subspace(DIM, [conj(Octonion(b)).coords for b in space.basis])


def product_space(s: Subspace, t: Subspace) -> Subspace:
    """Span of all ``x * y`` with x in s, y in t."""
    return Subspace(DIM, [zorn_mul(Octonion(p), Octonion(q)).coords for p in s.basis for q in t.basis])


def annihilator(w: Subspace, side: str = "right") -> Subspace:
    """Ann_R(W) = {x : w x = 0 for w in W}; Ann_L(W) = {x : x w = 0 for w in W}."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if w.dim == 0:
        return Subspace.full(DIM)
    build = left_mult_matrix if side == "right" else right_mult_matrix
    stacked = hstack([build(Octonion(b)) for b in w.basis])
    return Subspace(DIM, left_kernel_basis(stacked))


# ---------------------------------------------------------------------------
# isotropic spaces

class ClassificationError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class IsotropicClass:
    dim: int
    traceless: bool
    left_null: bool | None = None
    right_null: bool | None = None
    klass: int | None = None  # 1..5 for two-spaces on the list, None for lines / unlisted flags


def check_isotropic(s: Subspace):
    """Raise :class:`ClassificationError` unless the norm vanishes on ``s``."""
    b = octonions_of(s)
    for x in b:
        if onorm(x):
            raise ClassificationError(f"vector {x} has norm {onorm(x)}", witness=(x,))
    for i, x in enumerate(b):
        for y in b[i + 1:]:
            if bilinear(x, y):
                raise ClassificationError(f"({x}, {y}) = {bilinear(x, y)} is nonzero", witness=(x, y))


def is_isotropic(s: Subspace) -> bool:
    try:
        check_isotropic(s)
    except ClassificationError:
        return False
    return True


def is_traceless(s: Subspace) -> bool:
    return V7.contains_space(s)


def is_left_null(s: Subspace) -> bool:
    b = octonions_of(s)
    return all(zorn_mul(conj(x), y).is_zero() for x in b for y in b)


def is_right_null(s: Subspace) -> bool:
    b = octonions_of(s)
    return all(zorn_mul(x, conj(y)).is_zero() for x in b for y in b)


_CLASS_TABLE = {
    (True, True, True): 1,
    (True, False, False): 2,
    (False, True, False): 3,
    (False, False, True): 4,
    (False, False, False): 5,
}


def classify_isotropic(s: Subspace) -> IsotropicClass:
    if s.dim not in (1, 2):
        raise ClassificationError(f"expected a line or a two-space, got dimension {s.dim}")
    check_isotropic(s)
    tl = is_traceless(s)
    if s.dim == 1:
        return IsotropicClass(1, tl)
    ln, rn = is_left_null(s), is_right_null(s)
    return IsotropicClass(2, tl, ln, rn, _CLASS_TABLE.get((tl, ln, rn)))


class DegenerateInputError(ValueError):
    pass


def complete_null_triple(v1: Subspace) -> tuple[Subspace, Subspace]:
    """``(V2, V3)`` with V2 = Ann_R(V1), V3 = Ann_R(V2)."""
    v2 = annihilator(v1, "right")
    if v2.dim != 2:
        raise DegenerateInputError(f"Ann_R(V1) has dimension {v2.dim}, expected 2")
    v3 = annihilator(v2, "right")
    if v3.dim != 2:
        raise DegenerateInputError(f"Ann_R(V2) has dimension {v3.dim}, expected 2")
    return v2, v3


def random_isotropic_line(rng: random.Random, traceless: bool | None = None) -> Subspace:
    """A random isotropic line (rejection sampling on small integer vectors)."""
    while True:
        x = Octonion.random(rng, -3, 3)
        if traceless:
            x = Octonion.from_parts(x.a, x.v, x.phi, -x.a)
        if x.is_zero():
            continue
        # correct the norm by adjusting one coordinate where possible
        if onorm(x):
            c = list(x.coords)
            if c[1]:
                c[4] = Fraction(c[0] * c[7] - c[2] * c[5] - c[3] * c[6], c[1])
                x = Octonion(c)
            else:
                continue
        if traceless is False and not otrace(x):
            continue
        if not onorm(x):
            return span(x)


# ---------------------------------------------------------------------------
# Cayley-Dickson model

def _m2(m) -> tuple:
    if isinstance(m, Mat):
        m = m.data
    t = tuple(tuple(_norm(rat(x)) if not isinstance(x, int) else x for x in r) for r in m)
    if len(t) != 2 or any(len(r) != 2 for r in t):
        raise ValueError("expected a 2x2 matrix")
    return t


def _mm(p, q):
    return ((p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
            (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]))


def _madd(p, q):
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(p, q))


def _mscale(c, p):
    return tuple(tuple(c * a for a in r) for r in p)


def adj2(p):
    """Quaternion conjugation on M2: the adjugate."""
    return ((p[1][1], -p[0][1]), (-p[1][0], p[0][0]))


def det2(p):
    return p[0][0] * p[1][1] - p[0][1] * p[1][0]


_ZERO2 = ((0, 0), (0, 0))
_ONE2 = ((1, 0), (0, 1))


class CDOctonion:
    __slots__ = ("p", "q", "gamma")

    def __init__(self, p, q, gamma=1):
        self.p = _m2(p)
        self.q = _m2(q)
        self.gamma = _norm(rat(gamma))

    def __eq__(self, other):
        return isinstance(other, CDOctonion) and (self.p, self.q, self.gamma) == (other.p, other.q, other.gamma)

    def __hash__(self):
        return hash((self.p, self.q, self.gamma))

    def __repr__(self):
        return f"CDOctonion(p={self.p}, q={self.q}, gamma={self.gamma})"

    def __add__(self, o):
        _same_gamma(self, o)
        return CDOctonion(_madd(self.p, o.p), _madd(self.q, o.q), self.gamma)

    def __mul__(self, o):
        return cd_mul(self, o)

    @classmethod
    def random(cls, rng: random.Random, gamma=1, lo: int = -9, hi: int = 9) -> "CDOctonion":
        r = lambda: [[rng.randint(lo, hi) for _ in range(2)] for _ in range(2)]
        return cls(r(), r(), gamma)

    @property
    def coords(self) -> tuple:
        return (*self.p[0], *self.p[1], *self.q[0], *self.q[1])

    @classmethod
    def from_coords(cls, c: Sequence, gamma=1) -> "CDOctonion":
        return cls([c[0:2], c[2:4]], [c[4:6], c[6:8]], gamma)


def _same_gamma(u, w):
    if u.gamma != w.gamma:
        raise ValueError(f"mismatched Cayley-Dickson parameters {u.gamma} and {w.gamma}")


def cd_mul(u: CDOctonion, w: CDOctonion) -> CDOctonion:
    _same_gamma(u, w)
    x1, y1, x2, y2 = u.p, u.q, w.p, w.q
    p = _madd(_mm(x1, x2), _mscale(u.gamma, _mm(adj2(y2), y1)))
    q = _madd(_mm(y2, x1), _mm(y1, adj2(x2)))
    return CDOctonion(p, q, u.gamma)


def cd_conj(u: CDOctonion) -> CDOctonion:
    return CDOctonion(adj2(u.p), _mscale(-1, u.q), u.gamma)


def cd_norm(u: CDOctonion):
    return _norm(det2(u.p) - u.gamma * det2(u.q))


def cd_trace(u: CDOctonion):
    return _norm(u.p[0][0] + u.p[1][1])


class UnsupportedModelError(ValueError):
    pass


# images of the matrix units E11, E12, E21, E22 of D
_D_IMAGES = ("eps1", "e1", "e1*", "eps2")


def _d_image(m) -> Octonion:
    c = [0] * DIM
    for (i, j), name in zip(((0, 0), (0, 1), (1, 0), (1, 1)), _D_IMAGES):
        c[BASIS_NAMES.index(name)] += m[i][j]
    return Octonion(c)


def _certify(matrix: Mat) -> bool:
    """Check the linear map CD coords -> Zorn coords is multiplicative on basis pairs."""
    for i, j in product(range(DIM), repeat=2):
        u = CDOctonion.from_coords([1 if k == i else 0 for k in range(DIM)])
        w = CDOctonion.from_coords([1 if k == j else 0 for k in range(DIM)])
        lhs = matrix.apply(cd_mul(u, w).coords)
        rhs = zorn_mul(Octonion(matrix.apply(u.coords)), Octonion(matrix.apply(w.coords))).coords
        if tuple(lhs) != rhs:
            return False
    return True


@lru_cache(maxsize=None)
def cd_to_zorn_matrix() -> Mat:
    """Row-vector matrix of the certified isomorphism Theta_{M2,1} -> Zorn.

    D goes to span{eps1, e1, e1*, eps2} via matrix units; (0, y) = (y, 0)(0, 1)
    goes to d(y) * J, where J is searched among small combinations of the
    remaining basis vectors and accepted only after all 64 basis products
    check out.
    """
    rest = [BASIS_NAMES.index(n) for n in ("e2", "e3", "e2*", "e3*")]
    units = [((1, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (1, 0)), ((0, 0), (0, 1))]
    for coeffs in product((0, 1, -1), repeat=4):
        c = [0] * DIM
        for k, a in zip(rest, coeffs):
            c[k] = a
        jay = Octonion(c)
        if onorm(jay) != -1:
            continue
        rows = [_d_image(m).coords for m in units] + [zorn_mul(_d_image(m), jay).coords for m in units]
        m = Mat(rows)
        if _certify(m):
            return m
    raise RuntimeError("no Cayley-Dickson isomorphism found among the candidates")


def cd_to_zorn(u: CDOctonion) -> Octonion:
    if u.gamma != 1:
        raise UnsupportedModelError("cd_to_zorn supports only the split case gamma = 1")
    return Octonion(cd_to_zorn_matrix().apply(u.coords))


def zorn_to_cd(x: Octonion) -> CDOctonion:
    return CDOctonion.from_coords(_inv_cd_matrix().apply(x.coords))


@lru_cache(maxsize=None)
def _inv_cd_matrix() -> Mat:
    from .exactla import inverse
    return inverse(cd_to_zorn_matrix())


def cd_space(matrices: Iterable, second: bool = True) -> Subspace:
    """Zorn image of ``{(0, m)}`` (or ``{(m, 0)}``) for the given 2x2 matrices."""
    out = []
    for m in matrices:
        u = CDOctonion(_ZERO2, m) if second else CDOctonion(m, _ZERO2)
        out.append(cd_to_zorn(u).coords)
    return Subspace(DIM, out)


def omega_cd() -> Subspace:
    """Omega = {(0, y) : y has zero bottom row}."""
    return cd_space([((1, 0), (0, 0)), ((0, 1), (0, 0))])


def omega_bar_cd() -> Subspace:
    """Omega-bar = {(0, y) : y has zero top row}."""
    return cd_space([((0, 0), (1, 0)), ((0, 0), (0, 1))])


# ---------------------------------------------------------------------------
# automorphisms (8x8 row-vector matrices)

class NotAutomorphismError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def automorphism_failure(g: Mat):
    """None if ``g`` is an algebra automorphism, else a failing basis pair (i, j)."""
    if g.shape != (DIM, DIM):
        return ("shape", g.shape)
    if tuple(g.apply(Octonion.one().coords)) != Octonion.one().coords:
        return ("unit", None)
    T = structure_constants()
    imgs = [Octonion(g.data[i]) for i in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            if tuple(g.apply(T[i][j])) != zorn_mul(imgs[i], imgs[j]).coords:
                return (i, j)
    return None


def check_automorphism(g: Mat):
    w = automorphism_failure(g)
    if w is not None:
        raise NotAutomorphismError(f"not an octonion automorphism, failing basis pair {w}", witness=w)


def apply(g: Mat, x: Octonion) -> Octonion:
    return Octonion(g.apply(x.coords))


def sl3_action(g) -> Mat:
    """Automorphism acting by g on V3 (column convention ``v -> g v``) and dually on V3^vee."""
    from .exactla import det, inverse
    g = g if isinstance(g, Mat) else Mat(g)
    if g.shape != (3, 3):
        raise ValueError("sl3 element must be 3x3")
    if det(g) != 1:
        raise ValueError(f"sl3 element must have determinant 1, got {det(g)}")
    gi = inverse(g)
    # row-vector convention: coordinate row v maps to (g v^T)^T = v g^T ; phi -> phi g^{-1}
    return Mat.block_diag([Mat.identity(1), g.T, gi, Mat.identity(1)])


def gl2_levi_cd(g) -> Mat:
    """Row-vector matrix (CD coordinates) of (x, y) -> (g x g^-1, diag(det g, 1) y g^-1)."""
    from .exactla import det, inverse
    g = g if isinstance(g, Mat) else Mat(g)
    if g.shape != (2, 2):
        raise ValueError("gl2 element must be 2x2")
    dg = det(g)
    if not dg:
        raise ValueError("gl2 element must be invertible")
    gi = _m2(inverse(g))
    gg = _m2(g)
    lam = ((dg, 0), (0, 1))
    rows = []
    for k in range(DIM):
        u = CDOctonion.from_coords([1 if i == k else 0 for i in range(DIM)])
        p = _mm(_mm(gg, u.p), gi)
        q = _mm(_mm(lam, u.q), gi)
        rows.append(CDOctonion(p, q).coords)
    return Mat(rows)


def gl2_levi(g) -> Mat:
    """The Levi action transported to the Zorn model (8x8 row-vector matrix)."""
    m = cd_to_zorn_matrix()
    return _inv_cd_matrix() @ gl2_levi_cd(g) @ m
