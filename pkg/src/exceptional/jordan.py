"""The cubic norm structure J = H3(Theta).

An element is the Hermitian matrix

    [[c1,  a3,  a2*],
     [a3*, c2,  a1 ],
     [a2,  a1*, c3 ]]

stored as 27 coordinates ``(c1, c2, c3, a1[8], a2[8], a3[8])``.  The dual
J^vee is identified with J through the coordinate pairing, so adjoints and
cross products are again :class:`JordanElement` values.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import octonion as O
from .exactla import Mat, Subspace, _norm, rat
from .octonion import Octonion, bilinear, conj, onorm, otrace, zorn_mul

DIM = 27
LABELS = ("c1", "c2", "c3", "a1", "a2", "a3")
SLICES = {"c1": range(0, 1), "c2": range(1, 2), "c3": range(2, 3),
          "a1": range(3, 11), "a2": range(11, 19), "a3": range(19, 27)}

FLAG1 = ("c3", "a1", "a2", "c2", "a3", "c1")
FLAG2 = ("c3", "a1", "c2", "a2", "a3", "c1")


def coordinate_names() -> list[str]:
    names = ["c1", "c2", "c3"]
    for blk in ("a1", "a2", "a3"):
        names += [f"{blk}.{b}" for b in O.BASIS_NAMES]
    return names


class JordanElement:
    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        c = tuple(x if isinstance(x, int) else _norm(rat(x)) for x in coords)
        if len(c) != DIM:
            raise ValueError("a Jordan element has 27 coordinates")
        self.coords = c

    @classmethod
    def make(cls, c1=0, c2=0, c3=0, a1: Octonion | None = None, a2: Octonion | None = None,
             a3: Octonion | None = None) -> "JordanElement":
        z = (0,) * 8
        return cls((c1, c2, c3, *(a1.coords if a1 else z), *(a2.coords if a2 else z), *(a3.coords if a3 else z)))

    @classmethod
    def basis(cls, i: int) -> "JordanElement":
        c = [0] * DIM
        c[i] = 1
        return cls(c)

    @classmethod
    def zero(cls) -> "JordanElement":
        return cls((0,) * DIM)

    @classmethod
    def identity(cls) -> "JordanElement":
        return cls.make(1, 1, 1)

    @classmethod
    def random(cls, rng: random.Random, lo: int = -9, hi: int = 9) -> "JordanElement":
        return cls(rng.randint(lo, hi) for _ in range(DIM))

    @property
    def c1(self):
        return self.coords[0]

    @property
    def c2(self):
        return self.coords[1]

    @property
    def c3(self):
        return self.coords[2]

    @property
    def a1(self) -> Octonion:
        return Octonion(self.coords[3:11])

    @property
    def a2(self) -> Octonion:
        return Octonion(self.coords[11:19])

    @property
    def a3(self) -> Octonion:
        return Octonion(self.coords[19:27])

    def __eq__(self, other):
        return isinstance(other, JordanElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        names = coordinate_names()
        terms = [f"{x}*{n}" for x, n in zip(self.coords, names) if x]
        return "JordanElement(" + (" + ".join(terms) or "0") + ")"

    def __add__(self, o):
        return JordanElement([p + q for p, q in zip(self.coords, o.coords)])

    def __sub__(self, o):
        return JordanElement([p - q for p, q in zip(self.coords, o.coords)])

    def __neg__(self):
        return JordanElement([-p for p in self.coords])

    def scale(self, c) -> "JordanElement":
        return JordanElement([c * p for p in self.coords])

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return not any(self.coords)


E11 = JordanElement.make(c1=1)
E22 = JordanElement.make(c2=1)
E33 = JordanElement.make(c3=1)


def diag(c1, c2, c3) -> JordanElement:
    return JordanElement.make(c1, c2, c3)


def Y(x: Octonion, y: Octonion, z: Octonion) -> JordanElement:
    """The element [[0, x, z], [x*, 0, y], [z*, y*, 0]]: a1 = y, a2 = z*, a3 = x."""
    return JordanElement.make(a1=y, a2=conj(z), a3=x)


def tr3(x: Octonion, y: Octonion, z: Octonion):
    return otrace(zorn_mul(zorn_mul(x, y), z))


def jnorm(X: JordanElement):
    c1, c2, c3 = X.c1, X.c2, X.c3
    a1, a2, a3 = X.a1, X.a2, X.a3
    return _norm(c1 * c2 * c3 - c1 * onorm(a1) - c2 * onorm(a2) - c3 * onorm(a3) + tr3(a1, a2, a3))


def trilinear(x: JordanElement, y: JordanElement, z: JordanElement):
    """Full polarization of the norm, normalized so that (X, X, X) = 6 n(X)."""
    return _norm(jnorm(x + y + z) - jnorm(x + y) - jnorm(x + z) - jnorm(y + z)
                 + jnorm(x) + jnorm(y) + jnorm(z))


def jpairing(x: JordanElement, y: JordanElement):
    s = x.c1 * y.c1 + x.c2 * y.c2 + x.c3 * y.c3
    s += bilinear(x.a1, y.a1) + bilinear(x.a2, y.a2) + bilinear(x.a3, y.a3)
    return _norm(s)


@lru_cache(maxsize=None)
def pairing_matrix() -> Mat:
    """Gram matrix P of the pairing; P is a symmetric involution."""
    return Mat.block_diag([Mat.identity(3), O.gram(), O.gram(), O.gram()])


def adjoint(X: JordanElement) -> JordanElement:
    c1, c2, c3 = X.c1, X.c2, X.c3
    a1, a2, a3 = X.a1, X.a2, X.a3
    s1, s2, s3 = conj(a1), conj(a2), conj(a3)
    b1 = zorn_mul(s3, s2) - a1.scale(c1)
    b2 = zorn_mul(s1, s3) - a2.scale(c2)
    b3 = zorn_mul(s2, s1) - a3.scale(c3)
    return JordanElement.make(c2 * c3 - onorm(a1), c3 * c1 - onorm(a2), c1 * c2 - onorm(a3), b1, b2, b3)


def cross(x: JordanElement, y: JordanElement) -> JordanElement:
    return adjoint(x + y) - adjoint(x) - adjoint(y)


# ---------------------------------------------------------------------------
# sparse norm / trilinear tensor (built once, read-only afterwards)

@lru_cache(maxsize=None)
def norm_monomials() -> dict:
    """Sparse cubic form: ``{(i, j, k) sorted: coefficient}`` with n(X) = sum coeff * X_i X_j X_k."""
    mono: dict[tuple, int] = {(0, 1, 2): 1}
    cidx = {"a1": 0, "a2": 1, "a3": 2}
    # -c_i n(a_i)
    for blk in ("a1", "a2", "a3"):
        c = cidx[blk]
        off = SLICES[blk].start
        # n(a) = a d - sum phi_i v_i
        mono[(c, off, off + 7)] = mono.get((c, off, off + 7), 0) - 1
        for t in range(3):
            key = (c, off + 1 + t, off + 4 + t)
            mono[key] = mono.get(key, 0) + 1
    # tr(a1 a2 a3): trilinear across three distinct blocks
    for i, j, k in product(range(8), repeat=3):
        v = tr3(Octonion.basis(i), Octonion.basis(j), Octonion.basis(k))
        if v:
            key = tuple(sorted((3 + i, 11 + j, 19 + k)))
            mono[key] = mono.get(key, 0) + v
    return {k: v for k, v in mono.items() if v}


@lru_cache(maxsize=None)
def trilinear_tensor() -> dict:
    """``{(i, j, k) with i <= j <= k: (e_i, e_j, e_k)}``, nonzero entries only."""
    out = {}
    for key, coef in norm_monomials().items():
        i, j, k = key
        if i == j == k:
            mult = 6
        elif i == j or j == k:
            mult = 2
        else:
            mult = 1
        out[key] = coef * mult
    return out


def trilinear_sparse(x: Sequence, y: Sequence, z: Sequence):
    """Trilinear form from the cached tensor (all orderings summed)."""
    from itertools import permutations
    tot = 0
    for key, t in trilinear_tensor().items():
        for p in set(permutations(key)):
            a, b, c = p
            if x[a] and y[b] and z[c]:
                tot += t * x[a] * y[b] * z[c]
    return _norm(tot)


def norm_from_monomials(X: JordanElement):
    c = X.coords
    return _norm(sum(coef * c[i] * c[j] * c[k] for (i, j, k), coef in norm_monomials().items()))


def cross_from_trilinear(x: JordanElement, y: JordanElement) -> JordanElement:
    """The bilinear map determined by (x cross y, z) = (x, y, z), read through the pairing."""
    vals = [trilinear(x, y, JordanElement.basis(k)) for k in range(DIM)]
    return JordanElement(pairing_matrix().apply(vals))


# ---------------------------------------------------------------------------
# subspaces of J

def jspan(elements: Iterable[JordanElement]) -> Subspace:
    return Subspace(DIM, [e.coords for e in elements])


def elements_of(space: Subspace) -> list[JordanElement]:
    return [JordanElement(b) for b in space.basis]


def coords_of(labels: Iterable[str]) -> list[int]:
    out = []
    for lab in labels:
        out.extend(SLICES[lab])
    return out


def J_of(labels: Iterable[str]) -> Subspace:
    """The coordinate subspace J(I)."""
    return Subspace.coordinate(DIM, coords_of(labels))


def V_of(space: Subspace, labels: Iterable[str]) -> Subspace:
    """V(I): elements of V whose nonzero coordinates lie in I."""
    keep = set(coords_of(labels))
    return space.project_out([c for c in range(DIM) if c not in keep])


def block_part(space: Subspace, label: str) -> Subspace:
    """V(a_i) as a subspace of Theta (or of F for c_i)."""
    sl = SLICES[label]
    vi = V_of(space, [label])
    return Subspace(len(sl), [b[sl.start:sl.stop] for b in vi.basis])


def embed_block(label: str, space: Subspace) -> Subspace:
    sl = SLICES[label]
    vecs = []
    for b in space.basis:
        v = [0] * DIM
        v[sl.start:sl.stop] = b
        vecs.append(v)
    return Subspace(DIM, vecs)


def block_sum(parts: dict) -> Subspace:
    """Direct sum of coordinate pieces: ``{"c1": True, "a2": Subspace(8), ...}``."""
    vecs = []
    for label, piece in parts.items():
        if label.startswith("c"):
            if piece:
                vecs.extend(J_of([label]).basis)
        else:
            vecs.extend(embed_block(label, piece).basis)
    return Subspace(DIM, vecs)


def singularity_witness(space: Subspace):
    """None if every pairwise cross product of the basis vanishes, else the first failing pair."""
    b = elements_of(space)
    for i, x in enumerate(b):
        if not adjoint(x).is_zero():
            return (x, x)
        for y in b[i + 1:]:
            if not cross(x, y).is_zero():
                return (x, y)
    return None


def is_totally_singular(space: Subspace) -> tuple[bool, tuple | None]:
    w = singularity_witness(space)
    return w is None, w


def filtration_profile(space: Subspace) -> tuple[tuple, tuple]:
    out = []
    for flag in (FLAG1, FLAG2):
        dims = [0]
        for k in range(1, 7):
            dims.append(V_of(space, flag[:k]).dim)
        out.append(tuple(dims[k] - dims[k - 1] for k in range(1, 7)))
    return out[0], out[1]


def V_omega(omega: Subspace) -> Subspace:
    """V(Omega) = {a1, a2*, a3 in Omega} (c's zero)."""
    return block_sum({"a1": omega, "a2": O.conj_space(omega), "a3": omega})


# ---------------------------------------------------------------------------
# Cayley-Dickson decomposition: Theta = D + D with D = M2

def _cd(x: Octonion) -> O.CDOctonion:
    return O.zorn_to_cd(x)


def cd_decompose(X: JordanElement):
    """Split X into its H3(D) part and the 2x6 matrix part.

    The H3(D) part is returned as ``(c1, c2, c3, x1, x2, x3)`` with the x_i
    2x2 matrices (first CD components of a_i); the matrix part is
    ``v = (y1 | y2 | y3)`` built from the second CD components.
    """
    parts = [_cd(a) for a in (X.a1, X.a2, X.a3)]
    hd = (X.c1, X.c2, X.c3, parts[0].p, parts[1].p, parts[2].p)
    ys = [u.q for u in parts]
    v = Mat([[ys[k][r][c] for k in range(3) for c in range(2)] for r in range(2)])
    return hd, v


def h3d_matrix(hd) -> list[list]:
    """The 3x3 matrix over D: [[c1, x3, x2*], [x3*, c2, x1], [x2, x1*, c3]] as 2x2 blocks."""
    c1, c2, c3, x1, x2, x3 = hd
    sc = lambda c: ((c, 0), (0, c))
    a = O.adj2
    return [[sc(c1), x3, a(x2)], [a(x3), sc(c2), x1], [x2, a(x1), sc(c3)]]


def h3d_norm(hd):
    """n(X_D) = c1c2c3 - sum c_i n_D(x_i) + tr_D(x1 x2 x3)."""
    c1, c2, c3, x1, x2, x3 = hd
    m = O._mm(O._mm(x1, x2), x3)
    return _norm(c1 * c2 * c3 - c1 * O.det2(x1) - c2 * O.det2(x2) - c3 * O.det2(x3) + m[0][0] + m[1][1])


def _expand(blocks) -> Mat:
    """3x3 block matrix of 2x2 blocks -> 6x6."""
    return Mat([[blocks[I][J][r][c] for J in range(3) for c in range(2)] for I in range(3) for r in range(2)])


def dstar(m: Mat) -> Mat:
    """Conjugate transpose over D for a matrix of 2x2 blocks: (*m)_IJ = adj(m_JI)."""
    R, C = m.rows // 2, m.cols // 2
    blk = lambda I, J: ((m[2 * I, 2 * J], m[2 * I, 2 * J + 1]), (m[2 * I + 1, 2 * J], m[2 * I + 1, 2 * J + 1]))
    return Mat([[O.adj2(blk(J, I))[r][c] for J in range(R) for c in range(2)] for I in range(C) for r in range(2)])


def vxv_star(hd, v: Mat):
    """The scalar v X v* (a 2x2 scalar matrix; its (0,0) entry is returned)."""
    X = _expand(h3d_matrix(hd))
    w = v @ X @ dstar(v)
    if w[0, 1] or w[1, 0] or w[0, 0] != w[1, 1]:
        raise ArithmeticError(f"v X v* is not scalar: {w}")
    return w[0, 0]


def cd_norm_check(X: JordanElement) -> tuple[bool, object, object]:
    hd, v = cd_decompose(X)
    lhs = jnorm(X)
    rhs = _norm(h3d_norm(hd) + vxv_star(hd, v))
    return lhs == rhs, lhs, rhs


def cd_compose(hd, v: Mat) -> JordanElement:
    c1, c2, c3, x1, x2, x3 = hd
    a = []
    for k, x in enumerate((x1, x2, x3)):
        y = ((v[0, 2 * k], v[0, 2 * k + 1]), (v[1, 2 * k], v[1, 2 * k + 1]))
        a.append(O.cd_to_zorn(O.CDOctonion(x, y)))
    return JordanElement.make(c1, c2, c3, *a)
