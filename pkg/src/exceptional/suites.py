"""Named verification suites used by the command line runner.

A check is a function ``ctx -> (ok, expected, actual, witness)``.  Each
check gets its own random stream derived from (seed, suite, name), so the
outcome does not depend on which other checks run or in what order.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from . import e6ops as E
from . import exactla as X
from . import jordan as Jm
from . import liealg as L
from . import octonion as O
from . import orbits as Orb
from . import rootdata as R
from .e6ops import HeisenbergElement
from .exactla import Mat, Subspace, rat_str
from .jordan import JordanElement
from .octonion import Octonion

SUITES = ("e6", "jordan", "liealg", "octonion", "orbits", "rootdata")


@dataclass
class Context:
    seed: int
    samples: int
    prime: int | None = None
    rng: random.Random = field(default_factory=random.Random)


@dataclass
class CheckResult:
    suite: str
    name: str
    status: str
    expected: object
    actual: object
    witness: object = None
    millis: int = 0

    def to_doc(self) -> dict:
        d = {"name": self.name, "status": self.status, "expected": self.expected, "actual": self.actual}
        if self.witness is not None:
            d["witness"] = self.witness
        d["millis"] = self.millis
        return d


REGISTRY: dict[str, dict[str, Callable]] = {s: {} for s in SUITES}


def check(suite: str, name: str):
    def deco(fn):
        REGISTRY[suite][name] = fn
        return fn
    return deco


def doc(obj):
    """JSON-ready rendering of library values (exact rationals as strings)."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else rat_str(obj)
    if isinstance(obj, Octonion):
        return {"octonion": [rat_str(c) for c in obj.coords]}
    if isinstance(obj, JordanElement):
        return {"jordan": [rat_str(c) for c in obj.coords]}
    if isinstance(obj, HeisenbergElement):
        return {"x": doc(obj.x), "y": doc(obj.y), "z": doc(obj.z)}
    if isinstance(obj, Mat):
        return obj.to_doc()
    if isinstance(obj, Subspace):
        return obj.to_doc()
    if isinstance(obj, dict):
        return {str(k): doc(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [doc(v) for v in obj]
    return repr(obj)


def equal(expected, actual, witness=None):
    ok = expected == actual
    return ok, doc(expected), doc(actual), None if ok else doc(witness if witness is not None else {})


def forall(count: int, gen, lhs, rhs, label: str):
    for i in range(count):
        args = gen()
        a, b = lhs(*args), rhs(*args)
        if a != b:
            return False, label, "mismatch", doc({"sample": i, "input": list(args), "lhs": a, "rhs": b})
    return True, label, f"{count} samples agree", None


def all_hold(items, label: str):
    """items: iterable of (ok, witness); fails on the first False."""
    n = 0
    for ok, wit in items:
        n += 1
        if not ok:
            return False, label, "violated", doc(wit)
    return True, label, f"{n} cases hold", None


def run_suite(suite: str, seed: int, samples: int, prime: int | None = None) -> list[CheckResult]:
    out = []
    for name in sorted(REGISTRY[suite]):
        ctx = Context(seed, samples, prime, random.Random(f"{seed}:{suite}:{name}"))
        t = time.perf_counter()
        try:
            ok, expected, actual, witness = REGISTRY[suite][name](ctx)
        except Exception as exc:  # a crashing check is a failed check
            ok, expected, actual, witness = False, "no exception", f"{type(exc).__name__}: {exc}", None
        ms = int((time.perf_counter() - t) * 1000)
        out.append(CheckResult(suite, name, "pass" if ok else "fail", expected, actual, witness, ms))
    return out


def report(suites, seed: int, samples: int, prime: int | None = None) -> dict:
    checks = []
    for s in sorted(suites):
        checks.extend(run_suite(s, seed, samples, prime))
    return {
        "suite": "all" if len(suites) > 1 else suites[0],
        "seed": seed, "samples": samples, "prime": prime,
        "toolkit_version": __version__,
        "checks": [dict(suite=c.suite, **c.to_doc()) for c in checks],
        "passed": sum(c.status == "pass" for c in checks),
        "failed": sum(c.status == "fail" for c in checks),
    }


# ---------------------------------------------------------------------------
# octonion

def _o(rng):
    return Octonion.random(rng)


@check("octonion", "composition")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_o(r), _o(r)),
                  lambda x, y: O.onorm(x * y), lambda x, y: O.onorm(x) * O.onorm(y), "n(xy) = n(x)n(y)")


@check("octonion", "trace_associativity")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_o(r), _o(r), _o(r)),
                  lambda a, b, c: O.otrace(a * (b * c)), lambda a, b, c: O.otrace((a * b) * c),
                  "tr(x1(x2x3)) = tr((x1x2)x3)")


@check("octonion", "kirmse")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_o(r), _o(r)),
                  lambda x, y: O.conj(x) * (x * y), lambda x, y: y.scale(O.onorm(x)), "x*(xy) = n(x)y")


@check("octonion", "conjugation_and_form")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(ctx.samples):
            x = _o(r)
            yield O.conj(O.conj(x)) == x and O.bilinear(x, x) == 2 * O.onorm(x), x
    return all_hold(items(), "(x*)* = x and (x,x) = 2n(x)")


@check("octonion", "product_examples")
def _(ctx):
    n = Octonion.named
    r = ctx.rng
    x = _o(r)
    got = {"e1.e2": n("e1") * n("e2"), "1.x": Octonion.one() * x,
           "eps1.e1": n("eps1") * n("e1"), "e1.eps1": n("e1") * n("eps1")}
    want = {"e1.e2": n("e3*"), "1.x": x, "eps1.e1": n("e1"), "e1.eps1": Octonion.zero()}
    return equal(want, got)


@check("octonion", "norm_examples")
def _(ctx):
    n = Octonion.named
    got = {"n(1)": O.onorm(Octonion.one()), "n(eps1)": O.onorm(n("eps1")),
           "n(diag(3,-4))": O.onorm(Octonion.from_parts(3, (0, 0, 0), (0, 0, 0), -4)),
           "(e1,e1*)": O.bilinear(n("e1"), n("e1*"))}
    return equal({"n(1)": 1, "n(eps1)": 0, "n(diag(3,-4))": -12, "(e1,e1*)": -1}, got)


@check("octonion", "cayley_dickson_examples")
def _(ctx):
    r = ctx.rng
    p = ((r.randint(-9, 9), r.randint(-9, 9)), (r.randint(-9, 9), r.randint(-9, 9)))
    I, Z = ((1, 0), (0, 1)), ((0, 0), (0, 0))
    one, p0, j = O.CDOctonion(I, Z), O.CDOctonion(p, Z), O.CDOctonion(Z, I)
    got = {"(1,0)(p,0)": doc(O.cd_mul(one, p0).coords), "(0,1)(0,1)": doc(O.cd_mul(j, j).coords)}
    want = {"(1,0)(p,0)": doc(p0.coords), "(0,1)(0,1)": doc(one.coords)}
    return equal(want, got)


@check("octonion", "cayley_dickson_composition")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (O.CDOctonion.random(r), O.CDOctonion.random(r)),
                  lambda u, w: O.cd_norm(O.cd_mul(u, w)), lambda u, w: O.cd_norm(u) * O.cd_norm(w),
                  "n_CD(uw) = n_CD(u)n_CD(w)")


@check("octonion", "cayley_dickson_to_zorn")
def _(ctx):
    r = ctx.rng
    I, Z = ((1, 0), (0, 1)), ((0, 0), (0, 0))
    if O.cd_to_zorn(O.CDOctonion(I, Z)) != Octonion.one():
        return False, "unital", "cd_to_zorn(1) != 1", None
    def items():
        for _ in range(ctx.samples):
            u, w = O.CDOctonion.random(r), O.CDOctonion.random(r)
            zu, zw = O.cd_to_zorn(u), O.cd_to_zorn(w)
            ok = (O.cd_to_zorn(O.cd_mul(u, w)) == zu * zw and O.cd_to_zorn(O.cd_conj(u)) == O.conj(zu)
                  and O.onorm(zu) == O.cd_norm(u) and O.zorn_to_cd(zu) == u)
            yield ok, {"u": list(u.coords), "w": list(w.coords)}
    return all_hold(items(), "cd_to_zorn is a unital, conjugation- and norm-preserving isomorphism")


@check("octonion", "annihilator_spans")
def _(ctx):
    got = {"Ann_R(e3*)": O.annihilator(O.span("e3*"), "right"), "Ann_R(eps1)": O.annihilator(O.span("eps1"), "right")}
    want = {"Ann_R(e3*)": O.span("eps2", "e1", "e2", "e3*"), "Ann_R(eps1)": O.span("e1*", "e2*", "e3*", "eps2")}
    return equal(want, got)


def _random_line(rng):
    return O.random_isotropic_line(rng, traceless=rng.choice([True, False, None]))


@check("octonion", "annihilator_dimension_and_isotropy")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(ctx.samples):
            ell = _random_line(r)
            cases = [ell]
            if r.random() < 0.5:
                cases.append(Orb.two_space(r.randint(1, 5)).image(E.random_g2_element(r, 1)))
            for W in cases:
                AR, AL = O.annihilator(W, "right"), O.annihilator(W, "left")
                ok = O.is_isotropic(AR) and O.is_isotropic(AL)
                if W.dim == 1:
                    ok = ok and AR.dim == 4 and AL.dim == 4
                yield ok, {"W": W, "Ann_R": AR, "Ann_L": AL}
    return all_hold(items(), "Ann_L, Ann_R isotropic; dim 4 for lines")


@check("octonion", "classification_examples")
def _(ctx):
    got = {k: O.classify_isotropic(Orb.two_space(k)).klass for k in range(1, 6)}
    got["line e3*"] = O.classify_isotropic(O.span("e3*")).traceless
    got["line eps1"] = O.classify_isotropic(O.span("eps1")).traceless
    want = {1: 1, 2: 2, 3: 3, 4: 4, 5: 5, "line e3*": True, "line eps1": False}
    return equal(want, got)


@check("octonion", "classification_rejects_non_isotropic")
def _(ctx):
    try:
        O.classify_isotropic(O.span("eps1", "eps2"))
    except O.ClassificationError as exc:
        return True, "ClassificationError with witness", "raised", None if exc.witness is not None else "no witness"
    return False, "ClassificationError", "no error", None


@check("octonion", "classification_g2_invariance")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(max(1, ctx.samples // 10)):
            k = r.randint(1, 5)
            A = E.random_g2_element(r, 2)
            W = Orb.two_space(k).image(A)
            c = O.classify_isotropic(W)
            ok = c.klass == k and (c.left_null == c.right_null if c.traceless else True)
            yield ok, {"class": k, "g": A, "W": W}
    return all_hold(items(), "class preserved by G2; traceless: left-null iff right-null")


@check("octonion", "complete_null_triple")
def _(ctx):
    v1 = O.span("e3*", "e1")
    v2, v3 = O.complete_null_triple(v1)
    zero = all(p.is_zero() for A, B in ((v1, v2), (v2, v3), (v3, v1))
               for p in (a * b for a in O.octonions_of(A) for b in O.octonions_of(B)))
    perp_star = O.conj_space(v3).contains_space(O.product_space(v1, O.perp(v2)))
    shift = O.complete_null_triple(v2) == (v3, v1)
    return equal({"products_zero": True, "perp_star": True, "cyclic": True},
                 {"products_zero": zero, "perp_star": perp_star, "cyclic": shift}, {"v2": v2, "v3": v3})


@check("octonion", "automorphisms")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(max(1, ctx.samples // 10)):
            g = E.gl2_levi_random(r)
            s = X.Mat([[1, r.randint(-3, 3), r.randint(-3, 3)], [0, 1, r.randint(-3, 3)], [0, 0, 1]])
            for A in (O.gl2_levi(g), O.sl3_action(s), E.random_g2_element(r, 2)):
                yield O.automorphism_failure(A) is None, {"g": A}
    return all_hold(items(), "sl3, GL2-Levi and generated elements are automorphisms")


# ---------------------------------------------------------------------------
# jordan

def _j(rng):
    return JordanElement.random(rng)


@check("jordan", "norm_examples")
def _(ctx):
    got = {"n(1)": Jm.jnorm(JordanElement.identity()), "n(e11)": Jm.jnorm(Jm.E11),
           "n(diag(1,2,3))": Jm.jnorm(Jm.diag(1, 2, 3)),
           "(e11,e22)": Jm.jpairing(Jm.E11, Jm.E22), "(e11,e22,e33)": Jm.trilinear(Jm.E11, Jm.E22, Jm.E33)}
    return equal({"n(1)": 1, "n(e11)": 0, "n(diag(1,2,3))": 6, "(e11,e22)": 0, "(e11,e22,e33)": 1}, got)


@check("jordan", "adjoint_examples")
def _(ctx):
    got = {"diag": Jm.adjoint(Jm.diag(2, 3, 5)), "e11": Jm.adjoint(Jm.E11)}
    return equal({"diag": Jm.diag(15, 10, 6), "e11": JordanElement.zero()}, got)


@check("jordan", "trilinear_diagonal")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r),), lambda x: Jm.trilinear(x, x, x), lambda x: 6 * Jm.jnorm(x),
                  "(X,X,X) = 6n(X)")


@check("jordan", "adjoint_pairing")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r),), lambda x: Jm.jpairing(Jm.adjoint(x), x),
                  lambda x: 3 * Jm.jnorm(x), "(X#, X) = 3n(X)")


@check("jordan", "adjoint_adjoint")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r),), lambda x: Jm.adjoint(Jm.adjoint(x)),
                  lambda x: x.scale(Jm.jnorm(x)), "X## = n(X)X")


@check("jordan", "monomial_norm")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r),), Jm.norm_from_monomials, Jm.jnorm, "sparse cubic form = n")


@check("jordan", "cross_basis_pairs")
def _(ctx):
    """Coordinate adjoint polarized vs the trilinear form read through the pairing, all basis pairs."""
    T = Jm.trilinear_tensor()
    P = Jm.pairing_matrix()
    def items():
        for i in range(Jm.DIM):
            for j in range(i, Jm.DIM):
                vals = [T.get(tuple(sorted((i, j, k))), 0) for k in range(Jm.DIM)]
                rhs = JordanElement(P.apply(vals))
                lhs = Jm.cross(JordanElement.basis(i), JordanElement.basis(j))
                yield lhs == rhs, {"i": i, "j": j, "lhs": lhs, "rhs": rhs}
    return all_hold(items(), "cross = polarized trilinear on all basis pairs")


@check("jordan", "trilinear_tensor_vs_polarization")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r), _j(r), _j(r)),
                  lambda a, b, c: Jm.trilinear(a, b, c),
                  lambda a, b, c: Jm.trilinear_sparse(a.coords, b.coords, c.coords), "tensor = polarization")


@check("jordan", "cross_sampled")
def _(ctx):
    r = ctx.rng
    n = max(1, ctx.samples // 10)
    return forall(n, lambda: (_j(r), _j(r)), Jm.cross, Jm.cross_from_trilinear, "cross on random pairs")


@check("jordan", "singularity_examples")
def _(ctx):
    om = Orb.two_space(1)
    t1 = Jm.is_totally_singular(Jm.V_omega(om))[0]
    t2, w = Jm.is_totally_singular(Jm.jspan([Jm.E11, Jm.E22]))
    t3 = Jm.is_totally_singular(Subspace.zero(Jm.DIM))[0]
    return equal({"V(Omega)": True, "span(e11,e22)": False, "zero": True, "witness_found": True},
                 {"V(Omega)": t1, "span(e11,e22)": t2, "zero": t3, "witness_found": w is not None})


@check("jordan", "profiles_distinguish_q_representatives")
def _(ctx):
    reps = [d for d in Orb.orbit_catalog() if d.id == 1 or (d.form != "222" and d.defining == "traceless")]
    keys = [(d.profile, d.profile2) for d in reps]
    first = Orb.closed_orbit().profile
    return equal({"distinct": 7, "closed_F1": (0, 2, 2, 0, 2, 0)}, {"distinct": len(set(keys)), "closed_F1": first})


@check("jordan", "cd_decomposition")
def _(ctx):
    r = ctx.rng
    hd, v = Jm.cd_decompose(Jm.diag(1, 2, 3))
    pure = v.is_zero()
    cd_v = Orb.cd_closed_orbit().rep
    bottom = all(Jm.cd_decompose(x)[1].submatrix([1], range(6)).is_zero() for x in Jm.elements_of(cd_v))
    def items():
        yield pure and bottom, {"pure_matrix_part_zero": pure, "V(Omega)_bottom_row_zero": bottom}
        for _ in range(ctx.samples):
            x = _j(r)
            ok, lhs, rhs = Jm.cd_norm_check(x)
            h, w = Jm.cd_decompose(x)
            yield ok and Jm.cd_compose(h, w) == x, {"X": x, "lhs": lhs, "rhs": rhs}
    return all_hold(items(), "n(X_D) + vXv* = n(X); compose inverts decompose")


@check("jordan", "incidence_e11_e33")
def _(ctx):
    return equal(True, E.phi_prime(Jm.E11, Jm.E33).is_zero())


# ---------------------------------------------------------------------------
# e6

def _h(rng):
    return HeisenbergElement.random(rng)


@check("e6", "membership_examples")
def _(ctx):
    ok_id = E.is_in_e6(Mat.identity(27))[0]
    ok_2, wit = E.is_in_e6(Mat.identity(27).scale(2))
    return equal({"identity": True, "2id": False, "tilde(identity)": True},
                 {"identity": ok_id, "2id": ok_2, "tilde(identity)": E.tilde(Mat.identity(27)) == Mat.identity(27)})


@check("e6", "heisenberg_in_e6")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(ctx.samples):
            u = _h(r)
            ok, wit = E.is_in_e6(E.heis_operator(u))
            yield ok, {"u": u, "witness": wit}
    return all_hold(items(), "n(x,y;z) in E6")


@check("e6", "heisenberg_norm_preserved")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r), _h(r)), lambda x, u: Jm.jnorm(E.heis_act(x, u)),
                  lambda x, u: Jm.jnorm(x), "n(X.n) = n(X)")


@check("e6", "heisenberg_group_law")
def _(ctx):
    r = ctx.rng
    n = Octonion.named
    zero = Octonion.zero()
    ex = HeisenbergElement(n("e1"), zero, zero) * HeisenbergElement(zero, n("e2"), zero)
    if ex != HeisenbergElement(n("e1"), n("e2"), n("e3*")):
        return False, "(e1,e2;e3*)", "wrong product", doc(ex)
    def items():
        for _ in range(ctx.samples):
            u, v, w = _h(r), _h(r), _h(r)
            ok = ((u * E.heis_inv(u)).is_identity() and (E.heis_inv(u) * u).is_identity()
                  and (u * v) * w == u * (v * w))
            yield ok, {"u": u, "v": v, "w": w}
    return all_hold(items(), "inverse and associativity")


@check("e6", "heisenberg_homomorphism")
def _(ctx):
    r = ctx.rng
    n = max(1, ctx.samples // 4)
    return forall(n, lambda: (_h(r), _h(r)), lambda u, v: E.heis_operator(u * v),
                  lambda u, v: E.heis_operator(u) @ E.heis_operator(v), "rho(uv) = rho(u)rho(v)")


@check("e6", "heisenberg_matrix_oracle")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_j(r), _h(r)), E.heis_act, E.heis_by_matrix_product,
                  "coordinate rules = factorized matrix products")


@check("e6", "heisenberg_exponential")
def _(ctx):
    r = ctx.rng
    zero = Octonion.zero()
    def items():
        for _ in range(max(1, ctx.samples // 10)):
            x, y, z = _o(r), _o(r), _o(r)
            a = E.exp_nilpotent(E.phi_prime(Jm.Y(zero, y, z), Jm.E33)) == E.heis_operator(HeisenbergElement(zero, y, z))
            b = E.exp_nilpotent(E.phi_prime(Jm.E11, Jm.Y(x, zero, z))) == E.heis_operator(HeisenbergElement(x, zero, z))
            yield a and b, {"x": x, "y": y, "z": z, "first": a, "second": b}
    return all_hold(items(), "n(0,y;z) and n(x,0;z) are exponentials of Phi'")


@check("e6", "heisenberg_injective")
def _(ctx):
    cols = []
    for i in range(24):
        p = [0] * 24
        p[i] = 1
        m = [0] * 24
        m[i] = -1
        a = E.heis_operator(HeisenbergElement.from_params(p))
        b = E.heis_operator(HeisenbergElement.from_params(m))
        cols.append([Fraction(s - t, 2) for s, t in zip(a.flat(), b.flat())])
    return equal(24, X.rank(Mat(cols)))


@check("e6", "heisenberg_parameter_readback")
def _(ctx):
    r = ctx.rng
    return forall(ctx.samples, lambda: (_h(r),), lambda u: E.heis_params_from_operator(E.heis_operator(u)),
                  lambda u: u, "parameters read back from the operator")


@check("e6", "exp_examples")
def _(ctx):
    return equal(Mat.identity(27), E.exp_nilpotent(Mat.zeros(27, 27)))


@check("e6", "exp_of_lie_elements")
def _(ctx):
    r = ctx.rng
    nb = L.algebra_basis("n_radical").basis
    roots = E.g2_root_derivations()
    def items():
        for _ in range(max(1, ctx.samples // 10)):
            f = Mat.zeros(27, 27)
            for b in r.sample(nb, 3):
                f = f + b.scale(r.randint(-3, 3))
            for t in (1, -2):
                ok, wit = E.is_in_e6(E.exp_nilpotent(f.scale(t)))
                yield ok, {"f": f, "t": t, "witness": wit}
            D = L.embed_derivation(roots[r.randrange(len(roots))])
            ok, wit = E.is_in_e6(E.exp_nilpotent(D.scale(r.randint(-3, 3))))
            yield ok, {"f": D, "witness": wit}
    return all_hold(items(), "exp(t f) in E6 for nilpotent f in Lie(E6)")


@check("e6", "g2_embedding")
def _(ctx):
    r = ctx.rng
    if E.g2_embed(Mat.identity(8)) != Mat.identity(27):
        return False, "identity", "g2_embed(1) != 1", None
    def items():
        for _ in range(max(1, ctx.samples // 10)):
            A = E.random_g2_element(r, 2)
            G = E.g2_embed(A)
            yield E.is_in_e6(G)[0] and E.is_in_f4(G), {"A": A}
    return all_hold(items(), "G2 embeds in F4")


@check("e6", "g2_rejects_non_automorphism")
def _(ctx):
    try:
        E.g2_embed(Mat.diag([1, 2, 1, 1, 1, 1, 1, 1]))
    except O.NotAutomorphismError:
        return True, "NotAutomorphismError", "raised", None
    return False, "NotAutomorphismError", "no error", None


@check("e6", "g2_normalizes_heisenberg")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(max(1, ctx.samples // 10)):
            A = E.random_g2_element(r, 2)
            u = _h(r)
            lhs = E.g2_embed(X.inverse(A)) @ E.heis_operator(u) @ E.g2_embed(A)
            rhs = E.heis_operator(u.transform(A))
            yield lhs == rhs and E.xi_functional(u.transform(A)) == E.xi_functional(u), {"A": A, "u": u}
    return all_hold(items(), "g^-1 n(u) g = n(u.g) and xi(u.g) = xi(u)")


@check("e6", "structured_actions")
def _(ctx):
    r = ctx.rng
    got = {"sl3(1)": E.structured_action("sl3", Mat.identity(3)) == Mat.identity(8)}
    bad = None
    for _ in range(max(1, ctx.samples // 20)):
        while True:
            g = Mat([[r.randint(-2, 2) for _ in range(6)] for _ in range(6)])
            d = X.det(g)
            if d in (1, -1, 8, -8):
                break
        lam = {1: 1, -1: -1, 8: 2, -8: -2}[d]
        op = E.m_levi(lam, g)
        ok, wit = E.is_in_e6(op)
        if not ok or Orb.cd_closed_orbit().rep.image(op) != Orb.cd_closed_orbit().rep:
            bad = {"lambda": lam, "g": g}
            break
    got["m_levi in E6 and stabilizes V(Omega)"] = bad is None
    return equal({"sl3(1)": True, "m_levi in E6 and stabilizes V(Omega)": True}, got, bad)


@check("e6", "xi_examples")
def _(ctx):
    got = {"identity": E.xi_functional(HeisenbergElement.identity()),
           "(eps1,0;0)": E.xi_functional(HeisenbergElement(Octonion.named("eps1"), Octonion.zero(), Octonion.zero()))}
    return equal({"identity": 0, "(eps1,0;0)": 1}, got)


# ---------------------------------------------------------------------------
# liealg (also covers the exact linear algebra layer)

@check("liealg", "exact_linear_algebra_examples")
def _(ctx):
    got = {"ker(I2)": X.kernel_basis(Mat.identity(2)), "ker([1,1])": X.kernel_basis(Mat([[1, 1]])),
           "rank(I4)": X.rank(Mat.identity(4)), "det(diag(2,3))": X.det(Mat.diag([2, 3])),
           "rref(invertible)": X.rref(Mat([[2, 1], [1, 1]])) == Mat.identity(2),
           "modrank(I3,5)": X.modular_rank(Mat.identity(3), 5), "modrank([2,4;1,2],7)": X.modular_rank(Mat([[2, 4], [1, 2]]), 7)}
    want = {"ker(I2)": [], "ker([1,1])": [[1, -1]], "rank(I4)": 4, "det(diag(2,3))": 6,
            "rref(invertible)": True, "modrank(I3,5)": 3, "modrank([2,4;1,2],7)": 1}
    return equal(want, got)


@check("liealg", "exact_linear_algebra_properties")
def _(ctx):
    r = ctx.rng
    primes = [X.random_prime(r, 1001, 10**6) for _ in range(2)]
    if ctx.prime:
        primes.append(ctx.prime)
    def items():
        for _ in range(max(1, ctx.samples // 5)):
            rows, cols = r.randint(1, 7), r.randint(1, 7)
            m = Mat([[Fraction(r.randint(-5, 5), r.randint(1, 3)) if r.random() < 0.7 else 0 for _ in range(cols)]
                     for _ in range(rows)])
            k = X.kernel_basis(m)
            rk = X.rank(m)
            ok = rk + len(k) == cols and all(sum(a * b for a, b in zip(row, v)) == 0 for row in m for v in k)
            ok = ok and all(X.modular_rank(m, p) == rk for p in primes)
            yield ok, {"m": m, "primes": primes}
    return all_hold(items(), "kernel, rank and modular rank agree")


@check("liealg", "g2_derivations")
def _(ctx):
    g = L.algebra_basis("g2_derivations")
    return equal({"dim": 14, "satisfies_equations": True, "closure_failures": 0},
                 {"dim": g.dim, "satisfies_equations": L.check_against_equations(g),
                  "closure_failures": len(L.bracket_closure_failures(g))})


def _primes(ctx):
    return tuple(sorted(set(L.DEFAULT_PRIMES) | ({ctx.prime} if ctx.prime else set())))


@check("liealg", "e6_dimension")
def _(ctx):
    e = L.algebra_basis("e6", _primes(ctx))
    cert = e.certificate
    ranks = cert.get("modular_ranks", {})
    got = {"dim": e.dim, "equations": cert["equations"], "unknowns": cert["unknowns"],
           "modular_ranks_agree": all(v == cert["exact_rank"] for v in ranks.values()) and len(ranks) >= 2}
    return equal({"dim": 78, "equations": 3654, "unknowns": 729, "modular_ranks_agree": True}, got, cert.get("modular_ranks"))


@check("liealg", "e6_bracket_closure")
def _(ctx):
    e = L.algebra_basis("e6", _primes(ctx))
    f = L.bracket_closure_failures(e, limit=5)
    return equal([], f)


@check("liealg", "e6_basis_satisfies_equations")
def _(ctx):
    return equal(True, L.check_against_equations(L.algebra_basis("e6", _primes(ctx))))


@check("liealg", "n_radical")
def _(ctx):
    n = L.algebra_basis("n_radical")
    return equal({"dim": 24, "generators": 32, "closure_failures": 0},
                 {"dim": n.dim, "generators": n.certificate["generators"],
                  "closure_failures": len(L.bracket_closure_failures(n))})


@check("liealg", "lie_h")
def _(ctx):
    h = L.lie_h()
    g2 = Subspace(729, [L.embed_derivation(D).flat() for D in L.algebra_basis("g2_derivations").basis])
    n = L.algebra_basis("n_radical").span()
    return equal({"dim": 38, "intersection": 0}, {"dim": h.dim, "intersection": g2.intersect(n).dim})


@check("liealg", "cross_membership")
def _(ctx):
    r = ctx.rng
    e = L.algebra_basis("e6", _primes(ctx))
    def items():
        for D in L.algebra_basis("g2_derivations").basis:
            yield e.contains(L.embed_derivation(D)), {"derivation": D}
        for _, m in L.n_generators():
            yield e.contains(m), {"generator": m}
        for _ in range(max(1, ctx.samples // 10)):
            g, v = _j(r), _j(r)
            yield e.contains(E.phi_prime(g, v)), {"gamma": g, "v": v}
    return all_hold(items(), "Phi' samples, N generators and embedded G2 lie in Lie(E6)")


@check("liealg", "stabilizer_table")
def _(ctx):
    h = L.lie_h()
    n = L.algebra_basis("n_radical")
    dims = {d.id: L.orbit_dimension(d) for d in Orb.orbit_catalog()}
    closed = h.dim - dims[1]
    uv = [L.stabilizer_subalgebra(d.rep, n, pointwise=True)[0] for d in Orb.orbit_catalog() if d.form == "R2"]
    full = L.stabilizer_subalgebra(Subspace.full(27), h)[0]
    dims222 = {k: dims[k] for k in range(1, 6)}
    got = {"closed": closed, "closed_orbit_dim": dims[1], "uvtriv_pointwise_n": uv, "full_space": full,
           "all_in_range": all(0 <= v <= 21 for v in dims.values()),
           "class5_max_among_222": max(dims222, key=dims222.get)}
    want = {"closed": 27, "closed_orbit_dim": 11, "uvtriv_pointwise_n": [0, 0], "full_space": 38,
            "all_in_range": True, "class5_max_among_222": 5}
    return equal(want, got, {"orbit_dims": dims})


# ---------------------------------------------------------------------------
# orbits

@check("orbits", "catalog")
def _(ctx):
    cat = Orb.orbit_catalog()
    def items():
        yield len(cat) == 17, {"count": len(cat)}
        for d in cat:
            ok, wit = Jm.is_totally_singular(d.rep)
            p = Jm.filtration_profile(d.rep)
            yield ok and d.rep.dim == 6 and p == (d.profile, d.profile2), {"id": d.id, "witness": wit}
        yield len({Orb.invariant_key(d) for d in cat}) == 17, {"keys": [Orb.invariant_key(d) for d in cat]}
    return all_hold(items(), "17 distinct six-dimensional totally singular representatives")


@check("orbits", "predicate_vs_action")
def _(ctx):
    r = ctx.rng
    def items():
        for d in Orb.orbit_catalog():
            for u in Orb.sample_elements(d, r, ctx.samples):
                p, q = Orb.stabilizer_predicate(d, u), Orb.direct_action(d, u)
                yield p == q, {"orbit": d.id, "u": u, "predicate": [p.stabilizes, p.acts_trivially],
                               "direct": [q.stabilizes, q.acts_trivially]}
    return all_hold(items(), "stabilizer predicates agree with the action")


@check("orbits", "predicate_examples")
def _(ctx):
    r = ctx.rng
    d1 = Orb.closed_orbit()
    x = Orb.random_in(d1.V("a3"), r)
    zero = Octonion.zero()
    a = Orb.stabilizer_predicate(d1, HeisenbergElement(x, zero, zero)).acts_trivially
    d8 = Orb.a2_line_orbit("traceless")
    ker = O.octonions_of(O.annihilator(d8.V("a3"), "right"))
    y = Octonion.zero()
    for w in ker:
        y = y + w.scale(r.randint(1, 5))
    b = Orb.stabilizer_predicate(d8, HeisenbergElement(zero, y, zero))
    c = Orb.direct_action_operator(d8, HeisenbergElement(zero, y, zero))
    return equal({"closed (x,0;0)": True, "R2 (0,y;0)": True, "direct": True},
                 {"closed (x,0;0)": a, "R2 (0,y;0)": b.acts_trivially, "direct": c.acts_trivially}, {"x": x, "y": y})


@check("orbits", "trivially_acting_subgroups")
def _(ctx):
    cat = Orb.orbit_catalog()
    om = Orb.closed_orbit().V("a1")
    T = {d.id: Orb.trivially_acting_subgroup(d) for d in cat}
    got = {
        "closed = Omega^3": T[1] == Orb.params_space(om, om, om),
        "a2-line orbits": [T[d.id].dim for d in cat if d.form == "R2"],
        "non-closed (2,2,2) dims": [T[k].dim for k in range(2, 6)],
        "non-closed (2,2,2): tr(x) or tr(y) != 0": all(any(b[0] + b[7] or b[8] + b[15] for b in T[k].basis)
                                                       for k in range(2, 6)),
        "contained in stabilizer": all(Orb.stabilizer_subgroup_space(d.id).contains_space(T[d.id]) for d in cat),
    }
    want = {"closed = Omega^3": True, "a2-line orbits": [0, 0], "non-closed (2,2,2) dims": [6, 6, 6, 6],
            "non-closed (2,2,2): tr(x) or tr(y) != 0": True, "contained in stabilizer": True}
    return equal(want, got)


@check("orbits", "xi_flags")
def _(ctx):
    cat = Orb.orbit_catalog()
    flags = {d.id: Orb.xi_nontrivial_on_trivial_actors(d) for d in cat}
    false = sorted(k for k, v in flags.items() if not v)
    want_false = sorted([1] + [d.id for d in cat if d.form == "R2"])
    return equal({"true_count": 14, "false_ids": want_false},
                 {"true_count": sum(flags.values()), "false_ids": false})


@check("orbits", "levi_images")
def _(ctx):
    r = ctx.rng
    def items():
        yield Orb.levi_image(HeisenbergElement.identity()) == Mat.identity(6), "identity"
        op = Orb.omega_perp_cd()
        for _ in range(max(1, ctx.samples // 10)):
            x, y, z = Orb.random_in(op, r), Orb.random_in(op, r), Orb.random_in(op, r)
            w = Orb.levi_image(HeisenbergElement(x, y, z))
            yield Orb.unitriangular_check(w, Orb.cd_component(x), Orb.cd_component(y)), {"x": x, "y": y, "z": z, "w": w}
            h = E.gl2_levi_random(r)
            w = Orb.levi_image(Orb.gl2_levi_element(h))
            yield w == Mat.block_diag([h, h, h]), {"h": h, "w": w}
    return all_hold(items(), "w(x,y,z) unitriangular with blocks w_x, w_y; diag(h,h,h) on the Levi")


@check("orbits", "levi_image_rejects_non_stabilizer")
def _(ctx):
    try:
        Orb.levi_image(HeisenbergElement(Octonion.named("e3*"), Octonion.zero(), Octonion.zero()))
    except E.ContractError:
        return True, "ContractError", "raised", None
    return False, "ContractError", "no error", None


@check("orbits", "a2_line_patterns")
def _(ctx):
    r = ctx.rng
    n = max(2, ctx.samples // 10)
    def items():
        for kind, pat in (("traceless", Orb.vsubgrp_pattern), ("eps1", Orb.ep1_pattern)):
            d = Orb.a2_line_orbit(kind)
            for g in Orb.a2_line_stabilizer_elements(kind, r, n):
                m = Orb.a2_line_image(kind, g)
                ok, why = pat(m)
                yield ok and d.rep.image(g) == d.rep, {"line": kind, "image": m, "reason": why}
        for g in Orb.a2_line_stabilizer_elements("traceless", r, n, part="all"):
            ok, why = Orb.weak_vsubgrp_pattern(Orb.a2_line_image("traceless", g))
            yield ok, {"line": "traceless", "full stabilizer": True, "reason": why}
    return all_hold(items(), "zero patterns of the a2-line images")


@check("orbits", "vbar_jacobian")
def _(ctx):
    r = ctx.rng
    ex = {t: abs(Orb.vbar_jacobian(Mat.diag([t, 1]))) for t in (2, 3, -5)}
    if Orb.vbar_jacobian(Mat.identity(2)) != 1 or ex != {t: Fraction(1, abs(t) ** 3) for t in ex}:
        return False, "|t|^-3", "examples failed", doc(ex)
    def items():
        for _ in range(ctx.samples):
            g = E.gl2_levi_random(r)
            j = Orb.vbar_jacobian(g)
            yield abs(j) == abs(Fraction(1) / X.det(g) ** 3), {"g": g, "jacobian": j}
    return all_hold(items(), "|Jacobian| = |det g|^-3")


@check("orbits", "complement")
def _(ctx):
    got = Orb.complement_report()
    want = {"perp_dim": 18, "bar_dim": 6, "total_dim": 24, "direct": True, "xi_trivial_on_omega": True,
            "xi_trivial_on_omega_bar": True, "perp_star": {k: True for k in range(1, 6)}}
    return equal(want, got)


@check("orbits", "g2_invariance_of_profiles")
def _(ctx):
    r = ctx.rng
    def items():
        for _ in range(max(1, ctx.samples // 20)):
            A = E.random_g2_element(r, 2)
            G = E.g2_embed(A)
            for d in Orb.orbit_catalog():
                V = d.rep.image(G)
                ok = V.dim == 6 and Jm.is_totally_singular(V)[0] and Jm.filtration_profile(V) == (d.profile, d.profile2)
                yield ok, {"orbit": d.id, "g": A}
    return all_hold(items(), "G2 preserves singularity, dimension and the coordinate-flag profiles")


# ---------------------------------------------------------------------------
# rootdata

@check("rootdata", "e6_alpha6")
def _(ctx):
    res = R.rho_data(R.RootDatum.bundled("E6", 6))
    return equal({"c": Fraction(11, 2), "2c": 11, "C_alpha^-1": Mat(R.E6_PRINTED_INVERSE), "w_alpha": (0, 0, -1, 0, 0)},
                 {"c": res.c, "2c": res.modular_exponent, "C_alpha^-1": res.c_alpha_inverse, "w_alpha": res.w_alpha})


@check("rootdata", "g2_alpha2")
def _(ctx):
    rd = R.RootDatum.bundled("G2", 2)
    return equal({"c": Fraction(3, 2), "2c": 3}, {"c": R.rho_coefficient(rd), "2c": R.modular_exponent(rd)})


@check("rootdata", "a1")
def _(ctx):
    rd = R.RootDatum.bundled("A1", 1)
    return equal({"c": 1, "2c": 2}, {"c": R.rho_coefficient(rd), "2c": R.modular_exponent(rd)})


@check("rootdata", "table_positive_and_matches_roots")
def _(ctx):
    def items():
        for name, C in R.CARTAN_TABLE.items():
            for a in range(len(C)):
                rd = R.RootDatum.make(C, a)
                c = R.rho_coefficient(rd)
                yield c > 0 and c == R.rho_by_roots(rd), {"type": name, "alpha": a + 1, "c": c}
    return all_hold(items(), "c > 0 and c = half the radical roots paired with alpha^vee")


@check("rootdata", "validation")
def _(ctx):
    bad = {"diag": [[3, -1], [-1, 2]], "sign": [[2, 1], [-1, 2]], "pattern": [[2, -1], [0, 2]],
           "singular": [[2, -2], [-2, 2]]}
    got = {}
    for k, C in bad.items():
        try:
            R.RootDatum.make(C, 0)
            got[k] = "accepted"
        except R.RootDatumError:
            got[k] = "rejected"
    return equal({k: "rejected" for k in bad}, got)
