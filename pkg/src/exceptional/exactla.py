"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (or plain ``int`` where integral);
nothing here ever rounds.  Dense matrices are immutable :class:`Mat`
objects; the large constraint systems of :mod:`exceptional.liealg` go
through the sparse row engine (rows are ``{column: value}`` dicts).
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = Fraction

# systems above this many entries get modular pre-screening before the exact solve
LARGE_SYSTEM_ENTRIES = 10**5


class BadPrimeError(ValueError):
    """A modulus divides the denominator of some entry."""


def rat(x) -> Fraction:
    """Parse ``x`` (int, Fraction, or a ``"p/q"`` string) as an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _norm(x):
    # keep integers as int: int arithmetic is several times faster than Fraction
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Mat:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_norm(x) for x in r) for r in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows

    # constructors
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, entries: Sequence) -> "Mat":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "Mat":
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows*cols")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def block_diag(cls, blocks: Sequence["Mat"]) -> "Mat":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0:c0 + b.cols] = b.data[i]
            r0 += b.rows
            c0 += b.cols
        return cls(out, m)

    # access
    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.data[i][j]
        return self.data[idx]

    def __iter__(self):
        return iter(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> "Mat":
        return Mat(zip(*self.data), self.rows) if self.rows else Mat.zeros(self.cols, 0)

    def flat(self) -> list:
        return [x for r in self.data for x in r]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Mat":
        return Mat([[self.data[i][j] for j in cols] for i in rows], len(cols))

    # arithmetic
    def __eq__(self, other):
        return isinstance(other, Mat) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other: "Mat") -> "Mat":
        _same_shape(self, other)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        _same_shape(self, other)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.data], self.cols)

    def scale(self, c) -> "Mat":
        return Mat([[c * a for a in r] for r in self.data], self.cols)

    def __rmul__(self, c) -> "Mat":
        return self.scale(c)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        m = other.cols
        odata = other.data
        out = []
        for r in self.data:
            acc = [0] * m
            for k, a in enumerate(r):
                if a:
                    ok = odata[k]
                    for j in range(m):
                        b = ok[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return Mat(out, m)

    def apply(self, v: Sequence) -> list:
        """Row vector times matrix: ``v @ self``."""
        if len(v) != self.rows:
            raise ValueError("vector length mismatch")
        acc = [0] * self.cols
        for k, a in enumerate(v):
            if a:
                ok = self.data[k]
                for j in range(self.cols):
                    b = ok[j]
                    if b:
                        acc[j] += a * b
        return [_norm(x) for x in acc]

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square() or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        out = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __repr__(self):
        body = "; ".join(" ".join(rat_str(x) for x in r) for r in self.data)
        return f"Mat({self.rows}x{self.cols}: [{body}])"

    # serialization
    def to_doc(self, **header) -> dict:
        doc = dict(header)
        doc.update(rows=self.rows, cols=self.cols, entries=[rat_str(x) for x in self.flat()])
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "Mat":
        return cls.from_flat(int(doc["rows"]), int(doc["cols"]), [rat(x) for x in doc["entries"]])


def _same_shape(a: Mat, b: Mat):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def dump_matrix(m: Mat, path=None, **header) -> str:
    text = json.dumps(m.to_doc(**header), indent=1)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load_matrix(path) -> Mat:
    with open(path) as fh:
        return Mat.from_doc(json.load(fh))


def hstack(mats: Sequence[Mat]) -> Mat:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("hstack needs equal row counts")
    return Mat([sum((list(m.data[i]) for m in mats), []) for i in range(rows)])


def vstack(mats: Sequence[Mat]) -> Mat:
    cols = mats[0].cols
    return Mat([r for m in mats for r in m.data], cols)


# ---------------------------------------------------------------------------
# sparse row engine

def _rows_to_sparse(m: Mat) -> list[dict]:
    return [{j: x for j, x in enumerate(r) if x} for r in m.data]


def sparse_rref(rows: Iterable[dict], ncols: int) -> dict[int, dict]:
    """Online Gauss-Jordan over Q.

    Returns ``{pivot_col: row}`` where every row has a 1 at its pivot and a
    zero in every other pivot column, i.e. the reduced row-echelon form.
    """
    pivots: dict[int, dict] = {}
    # column -> set of pivot columns whose rows touch it; keeps back-elimination local
    touch: dict[int, set] = {}
    for src in rows:
        row = {c: v for c, v in src.items() if v}
        if not row:
            continue
        for c in [c for c in row if c in pivots]:
            f = row.get(c)
            if not f:
                continue
            for cc, vv in pivots[c].items():
                nv = row.get(cc, 0) - f * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        p = min(row)
        if p >= ncols:
            raise ValueError("column index out of range")
        inv = Fraction(1) / row[p]
        row = {c: _norm(v * inv) for c, v in row.items()}
        # eliminate p from earlier pivot rows
        for q in list(touch.get(p, ())):
            prow = pivots[q]
            f = prow.get(p)
            if not f:
                continue
            for cc, vv in row.items():
                nv = prow.get(cc, 0) - f * vv
                if nv:
                    if cc not in prow:
                        touch.setdefault(cc, set()).add(q)
                    prow[cc] = nv
                else:
                    prow.pop(cc, None)
                    s = touch.get(cc)
                    if s is not None:
                        s.discard(q)
        pivots[p] = row
        for cc in row:
            if cc != p:
                touch.setdefault(cc, set()).add(p)
    return pivots


def sparse_kernel_basis(rows: Iterable[dict], ncols: int) -> list[list]:
    """Basis of ``{v : v . r = 0 for every row r}``, canonical (reduced echelon)."""
    piv = sparse_rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    # column f of the rref, read off pivot rows
    col_entries: dict[int, list] = {f: [] for f in free}
    for p, row in piv.items():
        for c, v in row.items():
            if c != p:
                col_entries[c].append((p, v))
    vecs = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for p, x in col_entries[f]:
            v[p] = _norm(-x)
        vecs.append(v)
    return [list(r) for r in rref_rows(vecs, ncols)]


def sparse_modular_rank(rows: Iterable[dict], ncols: int, p: int) -> int:
    pivots: dict[int, dict] = {}
    for src in rows:
        row = {}
        for c, v in src.items():
            r = _mod(v, p)
            if r:
                row[c] = r
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {cc: vv * inv % p for cc, vv in row.items()}
                break
            f = row[c]
            for cc, vv in prow.items():
                nv = (row.get(cc, 0) - f * vv) % p
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    return len(pivots)


def _mod(v, p: int) -> int:
    v = Fraction(v)
    if v.denominator % p == 0:
        raise BadPrimeError(f"prime {p} divides denominator of entry {rat_str(v)}")
    return v.numerator * pow(v.denominator, -1, p) % p


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, lo: int = 1000, hi: int = 10**6) -> int:
    while True:
        n = rng.randrange(lo, hi) | 1
        if is_probable_prime(n):
            return n


def certified_rank(rows: Sequence[dict], ncols: int, primes: Sequence[int]) -> tuple[int, dict]:
    """Exact rank, pre-screened at the given primes.

    Returns ``(rank, {prime: modular_rank})``; raises if a modular rank
    exceeds the exact one (impossible unless something is broken).
    """
    rows = list(rows)
    mods = {p: sparse_modular_rank(rows, ncols, p) for p in primes}
    exact = len(sparse_rref(rows, ncols))
    for p, r in mods.items():
        if r > exact:
            raise ArithmeticError(f"rank mod {p} = {r} exceeds exact rank {exact}")
    return exact, mods


# ---------------------------------------------------------------------------
# dense wrappers

def rref_rows(vectors: Iterable[Sequence], ncols: int) -> tuple[tuple, ...]:
    piv = sparse_rref(({j: x for j, x in enumerate(v) if x} for v in vectors), ncols)
    out = []
    for p in sorted(piv):
        row = [0] * ncols
        for c, v in piv[p].items():
            row[c] = v
        out.append(tuple(row))
    return tuple(out)


def rref(m: Mat) -> Mat:
    """Unique reduced row-echelon form (zero rows dropped to the bottom)."""
    rows = rref_rows(m.data, m.cols)
    return Mat(list(rows) + [[0] * m.cols] * (m.rows - len(rows)), m.cols)


def kernel_basis(m: Mat) -> list[list]:
    """Canonical basis of ``{v : v . m^T = 0}`` (the right null space of ``m``)."""
    return sparse_kernel_basis(_rows_to_sparse(m), m.cols)


def left_kernel_basis(m: Mat) -> list[list]:
    """Canonical basis of ``{v : v . m = 0}``."""
    return kernel_basis(m.T)


def _integer_rows(m: Mat) -> tuple[list[list[int]], Fraction]:
    # scale each row to integers; returns rows and the product of the scale factors
    out, scale = [], Fraction(1)
    for r in m.data:
        d = reduce(lcm, (Fraction(x).denominator for x in r), 1)
        out.append([int(Fraction(x) * d) for x in r])
        scale *= d
    return out, scale


def _bareiss(a: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, signed last pivot)."""
    n, m = len(a), len(a[0]) if a else 0
    prev, sign, r = 1, 1, 0
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        pr = a[r]
        for i in range(r + 1, n):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, m):
                ai[j] = (ai[j] * pr[c] - f * pr[j]) // prev
            ai[c] = 0
        # rows above r untouched: Bareiss step only updates rows below
        prev = pr[c]
        r += 1
    return r, sign * prev


def rank(m: Mat) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    a, _ = _integer_rows(m)
    return _bareiss(a)[0]


def det(m: Mat) -> Fraction:
    if not m.is_square():
        raise ValueError(f"det needs a square matrix, got {m.shape}")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    r, last = _bareiss(a)
    if r < n:
        return Fraction(0)
    return Fraction(last) / scale


def modular_rank(m: Mat, p: int) -> int:
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    return sparse_modular_rank(_rows_to_sparse(m), m.cols, p)


def inverse(m: Mat) -> Mat:
    if not m.is_square():
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m.data)]
    red = rref_rows(aug, 2 * n)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Mat([r[n:] for r in red], n)


def solve_left(m: Mat, b: Sequence) -> list | None:
    """Some ``x`` with ``x @ m = b``, or None."""
    aug = [list(r) + [0] for r in m.T.data]
    for i, bi in enumerate(b):
        aug[i][-1] = bi
    red = rref_rows(aug, m.rows + 1)
    x = [0] * m.rows
    for r in red:
        lead = next(j for j, v in enumerate(r) if v)
        if lead == m.rows:
            return None
        x[lead] = r[-1]
    return x


# ---------------------------------------------------------------------------
# subspaces

class Subspace:
    """Row space of a matrix, stored canonically as its reduced echelon basis.

    Two subspaces are equal iff their stored bases are identical.
    """

    __slots__ = ("ambient", "basis", "_pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        self.ambient = ambient
        self.basis = rref_rows(vectors, ambient)
        self._pivots = tuple(next(j for j, v in enumerate(r) if v) for r in self.basis)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, Mat.identity(ambient).data)

    @classmethod
    def coordinate(cls, ambient: int, coords: Iterable[int]) -> "Subspace":
        vecs = []
        for c in coords:
            v = [0] * ambient
            v[c] = 1
            vecs.append(v)
        return cls(ambient, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"

    def residual(self, v: Sequence) -> list:
        """``v`` minus its reduction against the basis; zero iff ``v`` lies in the space."""
        w = list(v)
        for p, r in zip(self._pivots, self.basis):
            f = w[p]
            if f:
                for j, x in enumerate(r):
                    if x:
                        w[j] -= f * x
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.residual(v))

    def __contains__(self, v):
        return self.contains(v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, v: Sequence) -> list:
        """Coefficients of ``v`` in the stored basis (v must lie in the space)."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return [v[p] for p in self._pivots]

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        # v = sum a_i b_i = sum c_j d_j ; solve for (a, c)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        stacked = Mat(list(self.basis) + [[-x for x in r] for r in other.basis], self.ambient)
        sols = left_kernel_basis(stacked)
        vecs = [Mat([s[:self.dim]], self.dim) @ Mat(self.basis, self.ambient) for s in sols]
        return Subspace(self.ambient, [v.data[0] for v in vecs])

    def image(self, m: Mat) -> "Subspace":
        """``{v @ m : v in self}``."""
        return Subspace(m.cols, [m.apply(b) for b in self.basis])

    def perp(self, gram: Mat) -> "Subspace":
        """``{w : b . gram . w^T = 0 for all basis b}``."""
        if self.dim == 0:
            return Subspace.full(self.ambient)
        rows = Mat(self.basis, self.ambient) @ gram
        return Subspace(self.ambient, kernel_basis(rows))

    def project_out(self, coords: Iterable[int]) -> "Subspace":
        """Intersection with the coordinate subspace where ``coords`` vanish."""
        coords = list(coords)
        if self.dim == 0 or not coords:
            return self
        sel = Mat([[b[c] for c in coords] for b in self.basis], len(coords))
        sols = left_kernel_basis(sel)
        return Subspace(self.ambient, [Mat([s], self.dim).__matmul__(Mat(self.basis, self.ambient)).data[0] for s in sols])

    def matrix(self) -> Mat:
        return Mat(self.basis, self.ambient) if self.basis else Mat.zeros(0, self.ambient)

    def to_doc(self, **header) -> dict:
        doc = dict(header)
        doc.update(ambient=self.ambient, rows=self.dim, cols=self.ambient,
                   entries=[rat_str(x) for r in self.basis for x in r])
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "Subspace":
        m = Mat.from_doc(doc) if doc["rows"] else Mat.zeros(0, int(doc["cols"]))
        return cls(int(doc.get("ambient", doc["cols"])), m.data)


def random_vector_in(space: Subspace, rng: random.Random, lo: int = -9, hi: int = 9) -> list:
    coeffs = [rng.randint(lo, hi) for _ in range(space.dim)]
    v = [0] * space.ambient
    for c, b in zip(coeffs, space.basis):
        if c:
            for j, x in enumerate(b):
                if x:
                    v[j] += c * x
    return [_norm(x) for x in v]


def content_gcd(v: Sequence[int]) -> int:
    return reduce(gcd, (abs(int(x)) for x in v), 0)
