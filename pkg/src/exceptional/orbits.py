"""Orbit representatives of H = G2 N on totally singular six-spaces of J.

Seventeen representatives: five (2,2,2) spaces built from the five
classes of isotropic two-spaces, and twelve (4,1,1) spaces built from the
lines F e3* (traceless) and F eps1 placed in each of the six right/left
forms.  Stabilizer conditions for the Heisenberg group are evaluated both
from the explicit containment criteria and directly from the action.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import e6ops as E
from . import jordan as Jm
from . import octonion as O
from .exactla import Mat, Subspace, det, inverse, random_vector_in, sparse_kernel_basis
from .e6ops import HeisenbergElement, heis_act, heis_operator
from .jordan import JordanElement
from .octonion import Octonion, annihilator, conj, conj_space, octonions_of, perp, span, zorn_mul

N_PARAMS = 24

SHAPE_LABELS = {
    "222": ("a1", "a2", "a3"),
    "R1": ("c3", "a1", "a2"), "R2": ("c1", "a3", "a2"), "R3": ("c2", "a3", "a1"),
    "L1": ("c2", "a3", "a1"), "L2": ("c3", "a1", "a2"), "L3": ("c1", "a3", "a2"),
}

TWO_SPACES = {
    1: ("e2*", "e1"),
    2: ("e1", "e2"),
    3: ("eps1", "e1"),
    4: ("eps1", "e2*"),
    5: ("eps1", "e1+e2*"),
}

LINES = {"traceless": "e3*", "eps1": "eps1"}


def _oct(name: str) -> Octonion:
    out = Octonion.zero()
    for part in name.split("+"):
        out = out + Octonion.named(part)
    return out


def two_space(k: int) -> Subspace:
    return span(*(_oct(n) for n in TWO_SPACES[k]))


def line(kind: str) -> Subspace:
    return span(LINES[kind])


@dataclass
class OrbitDescriptor:
    id: int
    shape: str          # closed-(2,2,2), (2,2,2)-class-k, right-(4,1,1)-..., left-(4,1,1)-...
    form: str           # 222, R1..R3, L1..L3
    defining: str       # class-k or line type
    rep: Subspace
    blocks: dict        # label -> Subspace (Theta) or int (c's)
    profile: tuple
    profile2: tuple
    g2_stabilizer_kind: str
    isotropic_class: object = None
    extra: dict = field(default_factory=dict)

    def V(self, label: str) -> Subspace:
        """V(a_i) as a subspace of Theta (zero space if absent)."""
        b = self.blocks.get(label)
        if b is None:
            return Subspace.zero(8)
        return b

    def has_c(self, label: str) -> bool:
        return bool(self.blocks.get(label))

    def to_doc(self) -> dict:
        return {
            "id": self.id, "shape": self.shape, "form": self.form, "defining": self.defining,
            "rep": self.rep.to_doc(columns=Jm.coordinate_names()),
            "profile_F1": list(self.profile), "profile_F2": list(self.profile2),
            "g2_stabilizer_kind": self.g2_stabilizer_kind,
            "class_flags": None if self.isotropic_class is None else {
                "traceless": self.isotropic_class.traceless,
                "left_null": self.isotropic_class.left_null,
                "right_null": self.isotropic_class.right_null,
                "class": self.isotropic_class.klass},
        }


_G2_KIND_222 = {1: "heisenberg-parabolic P(Omega)", 2: "M(e3*)U(e3*)'", 3: "M(e3*)U(e3*)'",
                4: "M(e3*)U(e3*)'", 5: "GL1.U0(e1,e3*)"}
_G2_KIND_LINE = {"traceless": "line-parabolic P(l)", "eps1": "SL3"}


def _describe(id_, shape, form, defining, blocks, kind, iso) -> OrbitDescriptor:
    parts = {}
    for lab, piece in blocks.items():
        parts[lab] = piece
    rep = Jm.block_sum(parts)
    p1, p2 = Jm.filtration_profile(rep)
    return OrbitDescriptor(id_, shape, form, defining, rep, dict(blocks), p1, p2, kind, iso)


def _catalog() -> tuple:
    out = []
    for k in range(1, 6):
        v1 = two_space(k)
        v2, v3 = O.complete_null_triple(v1)
        iso = O.classify_isotropic(v1)
        shape = "closed-(2,2,2)" if k == 1 else f"(2,2,2)-class-{k}"
        out.append(_describe(k, shape, "222", f"class-{k}", {"a1": v1, "a2": v2, "a3": v3},
                             _G2_KIND_222[k], iso))
    idx = 6
    for side, forms in (("right", ("R1", "R2", "R3")), ("left", ("L1", "L2", "L3"))):
        for form in forms:
            for kind in ("traceless", "eps1"):
                ell = line(kind)
                ann = annihilator(ell, "right" if side == "right" else "left")
                blocks = {
                    "R1": {"c3": 1, "a1": ell, "a2": ann},
                    "R2": {"c1": 1, "a3": ann, "a2": ell},
                    "R3": {"c2": 1, "a3": ell, "a1": ann},
                    "L1": {"c2": 1, "a3": ann, "a1": ell},
                    "L2": {"c3": 1, "a1": ann, "a2": ell},
                    "L3": {"c1": 1, "a3": ell, "a2": ann},
                }[form]
                pos = {"R1": "a1", "R2": "a2", "R3": "a3", "L1": "a1", "L2": "a2", "L3": "a3"}[form]
                shape = f"{side}-(4,1,1)-position-{pos}-{kind}"
                out.append(_describe(idx, shape, form, kind, blocks, _G2_KIND_LINE[kind],
                                     O.classify_isotropic(ell)))
                idx += 1
    return tuple(out)


@lru_cache(maxsize=None)
def orbit_catalog() -> tuple:
    return _catalog()


def closed_orbit() -> OrbitDescriptor:
    return orbit_catalog()[0]


def invariant_key(d: OrbitDescriptor) -> tuple:
    return (d.form, d.defining, d.profile, d.profile2)


# ---------------------------------------------------------------------------
# stabilizer predicates (explicit containment criteria)

def _products(left: Subspace, x: Octonion) -> list[Octonion]:
    return [zorn_mul(w, x) for w in octonions_of(left)]


def _zero(xs: list[Octonion]) -> bool:
    return all(e.is_zero() for e in xs)


@dataclass(frozen=True)
class PredicateResult:
    stabilizes: bool
    acts_trivially: bool


def stabilizer_predicate(d: OrbitDescriptor, u: HeisenbergElement) -> PredicateResult:
    x, y, z = u.x, u.y, u.z
    zs = conj(z)
    A1, A2, A3 = d.V("a1"), d.V("a2"), d.V("a3")
    form = d.form
    if form == "222":
        stab = perp(A3).contains(x.coords) and perp(A1).contains(y.coords) and perp(A2).contains(zs.coords)
        triv = A3.contains(x.coords) and A1.contains(y.coords) and A2.contains(zs.coords)
    elif form in ("R1", "L2"):  # c1 = c2 = a3 = 0
        A1s = conj_space(A1)
        prods = _products(A2, x)
        stab = all(A1s.contains(p.coords) for p in prods)
        triv = (_zero(prods) and all(not O.bilinear(w, y) for w in octonions_of(A1))
                and all(not O.bilinear(w, zs) for w in octonions_of(A2)))
    elif form in ("R3", "L1"):  # c1 = c3 = a2 = 0
        stab = A1.contains(y.coords) and all(A1.contains(zorn_mul(conj(w), z).coords) for w in octonions_of(A3))
        triv = (perp(A3).contains(x.coords) and y.is_zero()
                and all(zorn_mul(zs, w).is_zero() for w in octonions_of(A3)))
    elif form in ("R2", "L3"):  # c2 = c3 = a1 = 0
        A2s = conj_space(A2)
        stab = (A3.contains(x.coords) and A2.contains(zs.coords)
                and all(A2s.contains(p.coords) for p in _products(A3, y)))
        triv = x.is_zero() and z.is_zero() and _zero(_products(A3, y))
    else:
        raise ValueError(f"unknown form {form!r}")
    return PredicateResult(stab, triv)


# ---------------------------------------------------------------------------
# direct tests

def direct_action(d: OrbitDescriptor, u: HeisenbergElement) -> PredicateResult:
    imgs = [heis_act(X, u) for X in Jm.elements_of(d.rep)]
    stab = all(d.rep.contains(i.coords) for i in imgs) and Subspace(27, [i.coords for i in imgs]) == d.rep
    triv = all(i == X for i, X in zip(imgs, Jm.elements_of(d.rep)))
    return PredicateResult(stab, triv)


def direct_action_operator(d: OrbitDescriptor, u: HeisenbergElement) -> PredicateResult:
    g = heis_operator(u)
    img = d.rep.image(g)
    triv = all(tuple(g.apply(b)) == b for b in d.rep.basis)
    return PredicateResult(img == d.rep, triv)


def _residual_map(d: OrbitDescriptor, pointwise: bool):
    basis = Jm.elements_of(d.rep)

    def f(params: Sequence) -> list:
        u = HeisenbergElement.from_params(params)
        out = []
        for X in basis:
            w = heis_act(X, u)
            diff = [a - b for a, b in zip(w.coords, X.coords)]
            out.extend(diff if pointwise else d.rep.residual(diff))
        return out

    return f


def _unit(i: int, n: int = N_PARAMS, s=1) -> list:
    v = [0] * n
    v[i] = s
    return v


class CertificationError(ArithmeticError):
    pass


def linear_solution_space(d: OrbitDescriptor, pointwise: bool) -> Subspace:
    """Solution set of the (pointwise-)fixing conditions, certified to be a linear subspace.

    The map u -> residual(b . n(u) - b) is affine-free of degree <= 2 in the
    parameters; its linear part is read off from f(e) - f(-e).  The kernel K
    of the linear part is returned after checking that the quadratic part
    vanishes on the basis of K and on pairwise sums (hence on all of K).
    """
    f = _residual_map(d, pointwise)
    lin = []
    for i in range(N_PARAMS):
        fp, fm = f(_unit(i)), f(_unit(i, s=-1))
        lin.append([Fraction(a - b, 2) for a, b in zip(fp, fm)])
    # kernel of u -> u @ lin
    rows = []
    for c in range(len(lin[0])):
        r = {i: lin[i][c] for i in range(N_PARAMS) if lin[i][c]}
        if r:
            rows.append(r)
    K = Subspace(N_PARAMS, sparse_kernel_basis(rows, N_PARAMS))
    B = list(K.basis)
    for i, b in enumerate(B):
        if any(f(b)):
            raise CertificationError(f"quadratic part does not vanish on kernel vector {b}")
        for c in B[i + 1:]:
            if any(f([p + q for p, q in zip(b, c)])):
                raise CertificationError("quadratic part does not vanish on a pairwise sum")
    return K


@lru_cache(maxsize=None)
def stabilizer_subgroup_space(orbit_id: int) -> Subspace:
    return linear_solution_space(orbit_catalog()[orbit_id - 1], pointwise=False)


@lru_cache(maxsize=None)
def trivially_acting_space(orbit_id: int) -> Subspace:
    return linear_solution_space(orbit_catalog()[orbit_id - 1], pointwise=True)


def trivially_acting_subgroup(d: OrbitDescriptor) -> Subspace:
    return trivially_acting_space(d.id)


def xi_vector() -> list:
    """tr(x) + tr(y) as a coefficient vector on the 24 parameters."""
    v = [0] * N_PARAMS
    for off in (0, 8):
        v[off] = 1
        v[off + 7] = 1
    return v


def xi_nontrivial_on_trivial_actors(d: OrbitDescriptor) -> bool:
    xv = xi_vector()
    return any(sum(a * b for a, b in zip(xv, k)) for k in trivially_acting_subgroup(d).basis)


def params_space(x: Subspace, y: Subspace, z: Subspace) -> Subspace:
    vecs = []
    for k, s in enumerate((x, y, z)):
        for b in s.basis:
            v = [0] * N_PARAMS
            v[8 * k:8 * k + 8] = b
            vecs.append(v)
    return Subspace(N_PARAMS, vecs)


def sample_elements(d: OrbitDescriptor, rng: random.Random, count: int) -> list[HeisenbergElement]:
    """A mix of stabilizing, trivially acting, perturbed and fully random elements."""
    S = stabilizer_subgroup_space(d.id)
    T = trivially_acting_space(d.id)
    out = []
    for i in range(count):
        kind = i % 4
        if kind == 0:
            p = random_vector_in(S, rng)
        elif kind == 1:
            p = random_vector_in(T, rng)
        elif kind == 2:
            p = random_vector_in(S, rng)
            j = rng.randrange(N_PARAMS)
            p[j] += rng.choice([-1, 1])
        else:
            p = [rng.randint(-9, 9) for _ in range(N_PARAMS)]
        out.append(HeisenbergElement.from_params(p))
    return out


# ---------------------------------------------------------------------------
# Levi images on the closed orbit (Cayley-Dickson frame)

def cd_closed_orbit() -> OrbitDescriptor:
    """The closed-orbit representative V(Omega) with Omega = {(0, top-row)} in the CD frame."""
    om = O.omega_cd()
    blocks = {"a1": om, "a2": om, "a3": om}
    iso = O.classify_isotropic(om)
    return _describe(1, "closed-(2,2,2)", "222", "class-1", blocks, _G2_KIND_222[1], iso)


def _cd_unit(which: int) -> Octonion:
    m = ((1, 0), (0, 0)) if which == 0 else ((0, 1), (0, 0))
    return O.cd_to_zorn(O.CDOctonion(((0, 0), (0, 0)), m))


def vgr_basis() -> list[JordanElement]:
    """b_1^(1), b_2^(1), b_1^(2), b_2^(2), b_1^(3), b_2^(3)."""
    out = []
    for lab in ("a1", "a2", "a3"):
        for j in (0, 1):
            out.append(JordanElement.make(**{lab: _cd_unit(j)}))
    return out


def restricted_matrix(basis: Sequence[JordanElement], g: Mat) -> Mat:
    """Matrix of the right action of g on span(basis), rows = images in basis coordinates."""
    from .exactla import solve_left
    B = Mat([b.coords for b in basis])
    rows = []
    for b in basis:
        img = g.apply(b.coords)
        c = solve_left(B, img)
        if c is None:
            raise E.ContractError("operator does not stabilize the subspace", witness=b)
        rows.append(c)
    return Mat(rows)


def dstar6(m: Mat) -> Mat:
    return Jm.dstar(m)


def levi_image(u, orbit: OrbitDescriptor | None = None) -> Mat:
    """GL6 image (*m^{-1}) of a stabilizing element on V(Omega) in the ordered basis above.

    ``u`` is a :class:`HeisenbergElement`, an 8x8 G2 matrix, or a 27x27 operator.
    """
    if isinstance(u, HeisenbergElement):
        g = heis_operator(u)
    elif isinstance(u, Mat) and u.shape == (8, 8):
        g = E.g2_embed(u)
    else:
        g = u
    basis = vgr_basis()
    V = Jm.jspan(basis)
    if V.image(g) != V:
        raise E.ContractError("element does not stabilize V(Omega)")
    m = restricted_matrix(basis, g)
    return dstar6(inverse(m))


def gl2_levi_element(h) -> Mat:
    """The G2 element acting on V(Omega) as diag(h, h, h).

    In the row-vector convention this is the inverse of :func:`octonion.gl2_levi`.
    """
    return inverse(O.gl2_levi(h if isinstance(h, Mat) else Mat(h)))


def cd_component(x: Octonion) -> tuple:
    """First Cayley-Dickson component (a 2x2 matrix) of a Zorn octonion."""
    return O.zorn_to_cd(x).p


def random_in(space: Subspace, rng: random.Random) -> Octonion:
    return Octonion(random_vector_in(space, rng))


def omega_perp_cd() -> Subspace:
    return perp(O.omega_cd())


def unitriangular_check(w: Mat, wx, wy) -> bool:
    blk = lambda I, J: ((w[2 * I, 2 * J], w[2 * I, 2 * J + 1]), (w[2 * I + 1, 2 * J], w[2 * I + 1, 2 * J + 1]))
    one = ((1, 0), (0, 1))
    zero = ((0, 0), (0, 0))
    return (blk(0, 0) == one and blk(1, 1) == one and blk(2, 2) == one
            and blk(1, 0) == zero and blk(2, 0) == zero and blk(2, 1) == zero
            and blk(0, 1) == tuple(map(tuple, wx)) and blk(1, 2) == tuple(map(tuple, wy)))


def vbar_jacobian(g, certify: bool = False) -> Fraction:
    """Determinant of v -> h^-1 v h on V-bar = {n(x,y;z): x,y,z in Omega-bar}, h the GL2-Levi element.

    The conjugate's parameters are read off operator rows c1 and c2, which G2 fixes:
    row_k(h^-1 n h) = (e_k . n) . h.  With ``certify`` the full conjugated operator
    is also compared against the Heisenberg operator of the read-off parameters.
    """
    g = g if isinstance(g, Mat) else Mat(g)
    if g.shape != (2, 2) or det(g) == 0:
        raise E.ContractError("vbar_jacobian needs an invertible 2x2 matrix")
    A = O.gl2_levi(g)
    G = E.g2_embed(A)
    ob = O.omega_bar_cd()
    vbar = params_space(ob, ob, ob)
    rows = []
    for p in vbar.basis:
        u = HeisenbergElement.from_params(p)
        r0 = G.apply(heis_act(JordanElement.basis(0), u).coords)
        r1 = G.apply(heis_act(JordanElement.basis(1), u).coords)
        q = HeisenbergElement(Octonion(r0[19:27]), Octonion(r1[3:11]), conj(Octonion(r0[11:19])))
        if certify:
            op = E.g2_embed(inverse(A)) @ heis_operator(u) @ G
            if heis_operator(q) != op:
                raise ArithmeticError("conjugate is not a Heisenberg operator")
        rows.append(vbar.coordinates(list(q.params)))
    return det(Mat(rows))


def complement_report() -> dict:
    om, ob = O.omega_cd(), O.omega_bar_cd()
    op = perp(om)
    perp_sp = params_space(op, op, op)
    bar_sp = params_space(ob, ob, ob)
    total = perp_sp + bar_sp
    xv = xi_vector()
    xi_zero = lambda S: all(not sum(a * b for a, b in zip(xv, k)) for k in S.basis)
    perp_star = {}
    for k in range(1, 6):
        v1 = two_space(k)
        v2, v3 = O.complete_null_triple(v1)
        perp_star[k] = perp_star_holds(v1, v2, v3)
    return {
        "perp_dim": perp_sp.dim, "bar_dim": bar_sp.dim, "total_dim": total.dim,
        "direct": perp_sp.intersect(bar_sp).dim == 0 and total.dim == N_PARAMS,
        "xi_trivial_on_omega": xi_zero(params_space(om, om, om)),
        "xi_trivial_on_omega_bar": xi_zero(bar_sp),
        "perp_star": perp_star,
    }


def perp_star_holds(v1: Subspace, v2: Subspace, v3: Subspace) -> bool:
    """V1 . V2^perp in V3* and V2^perp . V3 in V1*, together with the cyclic shifts."""
    trip = (v1, v2, v3)
    for s in range(3):
        a, b, c = trip[s], trip[(s + 1) % 3], trip[(s + 2) % 3]
        if not conj_space(c).contains_space(O.product_space(a, perp(b))):
            return False
        if not conj_space(a).contains_space(O.product_space(perp(b), c)):
            return False
    return True


# ---------------------------------------------------------------------------
# (4,1,1) orbits with V(c1) != 0 and V(a2) a line

A2_LINE_ORDER = {
    "traceless": ("eps2", "e1", "e2", "e3*"),
    "eps1": ("eps2", "e1*", "e2*", "e3*"),
}


def a2_line_orbit(kind: str) -> OrbitDescriptor:
    for d in orbit_catalog():
        if d.form == "R2" and d.defining == kind:
            return d
    raise KeyError(kind)


def a2_line_basis(kind: str) -> list[JordanElement]:
    ell = Octonion.named(LINES[kind])
    out = [JordanElement.make(c1=1)]
    out += [JordanElement.make(a3=Octonion.named(n)) for n in A2_LINE_ORDER[kind]]
    out.append(JordanElement.make(a2=ell))
    return out


def a2_line_image(kind: str, g: Mat) -> Mat:
    return restricted_matrix(a2_line_basis(kind), g)


OPPOSITE_LINES = {"traceless": "e3", "eps1": "eps2"}


def a2_line_stabilizer_elements(kind: str, rng: random.Random, count: int, part: str = "levi") -> list[Mat]:
    """Operators in the stabilizer: N elements x in Ann_R(l), y in Ann_L(l), z* in l, composed with G2 elements.

    ``part`` selects the G2 factor: "levi" (stabilizer of l and of an opposite line) or "all" (the
    full line stabilizer, including its unipotent radical).
    """
    ell = line(kind)
    annR, annL = annihilator(ell, "right"), annihilator(ell, "left")
    g2_gens = line_stabilizer_g2(kind, part)
    out = []
    for i in range(count):
        x = random_in(annR, rng)
        y = random_in(annL, rng)
        z = conj(random_in(ell, rng))
        op = heis_operator(HeisenbergElement(x, y, z))
        if i % 2:
            A = Mat.identity(8)
            for _ in range(2):
                A = A @ g2_gens[rng.randrange(len(g2_gens))]
            op = op @ E.g2_embed(A)
        out.append(op)
    return out


@lru_cache(maxsize=None)
def line_stabilizer_g2(kind: str, part: str = "all") -> tuple:
    """Generators of the G2 stabilizer of the line: SL3 elements and root exponentials fixing it."""
    ell = line(kind)
    opp = span(OPPOSITE_LINES[kind]) if part == "levi" else None
    gens = []
    for t in (2, 3, Fraction(1, 2), -1):
        for diag in ((t, 1, 1 / Fraction(t)), (1, t, 1 / Fraction(t)), (t, 1 / Fraction(t), 1)):
            gens.append(O.sl3_action(Mat.diag(list(diag))))
    for i in range(3):
        for j in range(3):
            if i != j:
                e = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
                e[i][j] = 1
                gens.append(O.sl3_action(e))
    for D in E.g2_root_derivations():
        for t in (1, -2):
            gens.append(E.exp_nilpotent(D.scale(t)))
    keep = []
    for A in gens:
        if ell.image(A) != ell:
            continue
        if opp is not None and opp.image(A) != opp:
            continue
        keep.append(A)
    return tuple(keep)


def radical_pattern_violations(kind: str) -> list[int]:
    """Indices of line-stabilizer generators outside the Levi whose image breaks the strict zero pattern."""
    levi = {tuple(A.flat()) for A in line_stabilizer_g2(kind, "levi")}
    check = vsubgrp_pattern if kind == "traceless" else ep1_pattern
    out = []
    for i, A in enumerate(line_stabilizer_g2(kind, "all")):
        if tuple(A.flat()) in levi:
            continue
        if not check(a2_line_image(kind, E.g2_embed(A)))[0]:
            out.append(i)
    return out


def weak_vsubgrp_pattern(m: Mat) -> tuple[bool, str]:
    """The traceless-line pattern with the (2, g)-block left free: the part used for the constant term."""
    for i in range(6):
        for j in range(i):
            if m[i, j] and not (i == 3 and j == 2):
                return False, f"entry ({i},{j}) below the block diagonal is nonzero"
    dg = m[2, 2] * m[3, 3] - m[2, 3] * m[3, 2]
    if m[0, 0] != 1 or m[1, 1] != 1 or m[4, 4] != dg or m[5, 5] != dg:
        return False, "diagonal scalars do not match"
    return True, ""


def vsubgrp_pattern(m: Mat) -> tuple[bool, str]:
    """The zero pattern for the traceless line: [[1,x,*,*,*],[ ,1,0,*,*],[ , ,g,*,*],[ , , ,det g,x'],[ , , , ,det g]]."""
    for i in range(6):
        for j in range(i):
            if m[i, j] and not (i == 3 and j == 2):
                return False, f"entry ({i},{j}) below the block diagonal is nonzero"
    if m[0, 0] != 1 or m[1, 1] != 1:
        return False, "leading diagonal entries are not 1"
    if m[1, 2] or m[1, 3]:
        return False, "the zero block next to the second diagonal entry is nonzero"
    dg = m[2, 2] * m[3, 3] - m[2, 3] * m[3, 2]
    if m[4, 4] != dg or m[5, 5] != dg:
        return False, f"scalar entries {m[4, 4]}, {m[5, 5]} differ from det g = {dg}"
    return True, ""


def ep1_pattern(m: Mat) -> tuple[bool, str]:
    """The zero pattern for the eps1 line: [[1,x,*,*],[ ,1,0,x'],[ , ,g,*],[ , , ,1]] with g in SL3."""
    for i in range(6):
        for j in range(i):
            if m[i, j] and not (2 <= j < i <= 4):
                return False, f"entry ({i},{j}) below the block diagonal is nonzero"
    if m[0, 0] != 1 or m[1, 1] != 1 or m[5, 5] != 1:
        return False, "unit diagonal entries are not 1"
    if m[1, 2] or m[1, 3] or m[1, 4]:
        return False, "the zero block in the second row is nonzero"
    g = m.submatrix([2, 3, 4], [2, 3, 4])
    if det(g) != 1:
        return False, f"det g = {det(g)}"
    return True, ""
