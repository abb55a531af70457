"""Exact Lie algebra computations.

Derivations of Theta (Lie G2), Lie(E6) as the derivations of the
trilinear form, the span Lie(N) of the Phi' generators, and stabilizer
subalgebras of subspaces of J.  Operators use the row-vector convention of
:mod:`exceptional.e6ops`; an n x n operator is flattened row-major into an
n^2 unknown vector.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import jordan as Jm
from . import octonion as O
from .exactla import LARGE_SYSTEM_ENTRIES, Mat, Subspace, sparse_kernel_basis, sparse_modular_rank
from .octonion import Octonion

E6_DIM, G2_DIM, N_DIM = 78, 14, 24
DEFAULT_PRIMES = (10007, 10009)


@dataclass
class LieAlgebraBasis:
    kind: str
    ambient: int
    basis: list  # of Mat
    dim: int
    certificate: dict = field(default_factory=dict)

    def span(self) -> Subspace:
        return Subspace(self.ambient ** 2, [m.flat() for m in self.basis])

    def contains(self, m: Mat) -> bool:
        return self._span().contains(m.flat())

    def _span(self) -> Subspace:
        sp = self.certificate.get("_span")
        if sp is None:
            sp = self.span()
            self.certificate["_span"] = sp
        return sp


def _flat_to_mat(v: Sequence, n: int) -> Mat:
    return Mat.from_flat(n, n, list(v))


def bracket(a: Mat, b: Mat) -> Mat:
    """Commutator of two operators (as composition of maps f o g - g o f)."""
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# derivations of Theta

def derivation_equations(allowed=None) -> list[dict]:
    """Rows of D(b_i b_j) - D(b_i) b_j - b_i D(b_j) = 0 over unknowns D[i][k] -> index 8i+k."""
    T = O.structure_constants()
    rows = []
    for i in range(8):
        for j in range(8):
            for m in range(8):
                r: dict[int, int] = {}
                for k in range(8):
                    c = T[i][j][k]
                    if c:
                        r[8 * k + m] = r.get(8 * k + m, 0) + c
                    c = T[k][j][m]
                    if c:
                        r[8 * i + k] = r.get(8 * i + k, 0) - c
                    c = T[i][k][m]
                    if c:
                        r[8 * j + k] = r.get(8 * j + k, 0) - c
                r = {a: b for a, b in r.items() if b}
                if r:
                    rows.append(r)
    if allowed is not None:
        for i in range(8):
            for k in range(8):
                if not allowed[i][k]:
                    rows.append({8 * i + k: 1})
    return rows


def derivations_with_support(allowed) -> list[Mat]:
    return [_flat_to_mat(v, 8) for v in sparse_kernel_basis(derivation_equations(allowed), 64)]


# ---------------------------------------------------------------------------
# E6 constraint system

@lru_cache(maxsize=None)
def _pair_index() -> dict:
    """(j, k) with j <= k -> {m: T(m, j, k)} using the symmetric trilinear tensor."""
    from itertools import permutations
    idx: dict[tuple, dict] = {}
    for key, t in Jm.trilinear_tensor().items():
        for p in set(permutations(key)):
            m, j, k = p
            pk = (j, k) if j <= k else (k, j)
            idx.setdefault(pk, {})[m] = t
    return idx


def e6_equations() -> list[dict]:
    """(f e_i, e_j, e_k) + (e_i, f e_j, e_k) + (e_i, e_j, f e_k) = 0 for i <= j <= k."""
    n = Jm.DIM
    idx = _pair_index()
    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                r: dict[int, int] = {}
                for a, (b, c) in ((i, (j, k)), (j, (i, k)), (k, (i, j))):
                    pk = (b, c) if b <= c else (c, b)
                    for m, t in idx.get(pk, {}).items():
                        col = n * a + m
                        r[col] = r.get(col, 0) + t
                r = {a: b for a, b in r.items() if b}
                rows.append(r)
    return rows


def _solve_certified(rows: list[dict], ncols: int, primes: Sequence[int]) -> tuple[list, dict]:
    entries = sum(len(r) for r in rows)
    kernel = sparse_kernel_basis(rows, ncols)
    cert = {"equations": len(rows), "unknowns": ncols, "nonzeros": entries,
            "kernel_dim": len(kernel)}
    if entries > LARGE_SYSTEM_ENTRIES or primes:
        cert["modular_ranks"] = {p: sparse_modular_rank(rows, ncols, p) for p in primes}
        cert["exact_rank"] = ncols - len(kernel)
    return kernel, cert


@lru_cache(maxsize=None)
def _g2_cached() -> LieAlgebraBasis:
    rows = derivation_equations()
    kernel, cert = _solve_certified(rows, 64, ())
    return LieAlgebraBasis("g2_derivations", 8, [_flat_to_mat(v, 8) for v in kernel], len(kernel), cert)


@lru_cache(maxsize=None)
def _e6_cached(primes: tuple) -> LieAlgebraBasis:
    rows = e6_equations()
    kernel, cert = _solve_certified(rows, Jm.DIM ** 2, primes)
    return LieAlgebraBasis("e6", Jm.DIM, [_flat_to_mat(v, Jm.DIM) for v in kernel], len(kernel), cert)


def n_generators() -> list[tuple[str, Mat]]:
    """Phi'_{Y(0,y,z), e33} and Phi'_{e11, Y(x,0,z)} over basis choices of the parameters."""
    from .e6ops import phi_prime
    zero = Octonion.zero()
    gens = []
    for i in range(8):
        b = Octonion.basis(i)
        gens.append((f"Y(0,{O.BASIS_NAMES[i]},0),e33", phi_prime(Jm.Y(zero, b, zero), Jm.E33)))
        gens.append((f"Y(0,0,{O.BASIS_NAMES[i]}),e33", phi_prime(Jm.Y(zero, zero, b), Jm.E33)))
        gens.append((f"e11,Y({O.BASIS_NAMES[i]},0,0)", phi_prime(Jm.E11, Jm.Y(b, zero, zero))))
        gens.append((f"e11,Y(0,0,{O.BASIS_NAMES[i]})", phi_prime(Jm.E11, Jm.Y(zero, zero, b))))
    return gens


@lru_cache(maxsize=None)
def _n_cached() -> LieAlgebraBasis:
    gens = [m for _, m in n_generators()]
    sp = Subspace(Jm.DIM ** 2, [m.flat() for m in gens])
    return LieAlgebraBasis("n_radical", Jm.DIM, [_flat_to_mat(v, Jm.DIM) for v in sp.basis], sp.dim,
                           {"generators": len(gens)})


def algebra_basis(kind: str, primes: Sequence[int] = DEFAULT_PRIMES) -> LieAlgebraBasis:
    if kind == "g2_derivations":
        return _g2_cached()
    if kind == "e6":
        return _e6_cached(tuple(primes))
    if kind == "n_radical":
        return _n_cached()
    if kind == "h":
        return lie_h()
    raise ValueError(f"unknown algebra kind {kind!r}")


def embed_derivation(D: Mat) -> Mat:
    """Diagonal pattern of the G2 embedding: zero on c's, D on each a-block."""
    return Mat.block_diag([Mat.zeros(3, 3), D, D, D])


@lru_cache(maxsize=None)
def lie_h() -> LieAlgebraBasis:
    g2 = [embed_derivation(D) for D in _g2_cached().basis]
    n = _n_cached().basis
    sp = Subspace(Jm.DIM ** 2, [m.flat() for m in g2 + n])
    return LieAlgebraBasis("h", Jm.DIM, g2 + list(n), sp.dim,
                           {"g2_part": len(g2), "n_part": len(n), "span_dim": sp.dim})


# ---------------------------------------------------------------------------
# stabilizers

def stabilizer_subalgebra(space: Subspace, ambient: LieAlgebraBasis, pointwise: bool = False) -> tuple[int, list[Mat]]:
    """{f in span(ambient) : V f in V} (or V f = 0 with pointwise=True); returns (dim, basis)."""
    L = len(ambient.basis)
    piv = space.pivots
    pivset = set(piv)
    nonpiv = [c for c in range(space.ambient) if c not in pivset]
    rows: list[dict] = []
    for b in space.basis:
        imgs = [f.apply(b) for f in ambient.basis]  # b . f_l
        cols = range(space.ambient) if pointwise else nonpiv
        for c in cols:
            r = {}
            for l, w in enumerate(imgs):
                val = w[c]
                if not pointwise:
                    val -= sum(w[p] * row[c] for p, row in zip(piv, space.basis) if w[p] and row[c])
                if val:
                    r[l] = val
            if r:
                rows.append(r)
    coeffs = sparse_kernel_basis(rows, L)
    basis = []
    for t in coeffs:
        m = Mat.zeros(space.ambient, space.ambient)
        for tl, f in zip(t, ambient.basis):
            if tl:
                m = m + f.scale(tl)
        basis.append(m)
    return len(coeffs), basis


def orbit_dimension(v) -> int:
    """dim Lie(H) - dim of the stabilizer of v (a Subspace of J or an orbit descriptor)."""
    space = v if isinstance(v, Subspace) else v.rep
    h = lie_h()
    d, _ = stabilizer_subalgebra(space, h)
    return h.dim - d


def bracket_closure_failures(alg: LieAlgebraBasis, limit: int | None = None) -> list[tuple]:
    sp = alg._span()
    out = []
    B = alg.basis
    for i in range(len(B)):
        for j in range(i + 1, len(B)):
            if not sp.contains(bracket(B[i], B[j]).flat()):
                out.append((i, j))
                if limit and len(out) >= limit:
                    return out
    return out


def check_against_equations(alg: LieAlgebraBasis) -> bool:
    rows = derivation_equations() if alg.kind == "g2_derivations" else e6_equations()
    for m in alg.basis:
        v = m.flat()
        for r in rows:
            if sum(val * v[c] for c, val in r.items() if v[c]):
                return False
    return True
