"""rho_P for maximal parabolics from a Cartan matrix.

With C_ij = <alpha_i, alpha_j^vee>, C_alpha the matrix with the alpha row and
column removed, and w_alpha = (<gamma, alpha^vee>) over the remaining simple
roots, v_alpha = C_alpha^{-1} w_alpha and rho_P = c * varpi_alpha with
c = 1 - sum(v_alpha).
"""
from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import Mat, det, inverse, rat_str


class RootDatumError(ValueError):
    pass


class UnrecognizedTypeWarning(UserWarning):
    pass


def _a(n: int) -> list[list[int]]:
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]


def _from_edges(n: int, edges) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    return c


# E6 in the numbering with alpha_6 attached to alpha_3.
CARTAN_TABLE = {
    "A1": [[2]],
    "A2": _a(2), "A3": _a(3), "A4": _a(4), "A5": _a(5),
    "G2": [[2, -1], [-3, 2]],
    "D4": _from_edges(4, [(0, 1), (1, 2), (1, 3)]),
    "E6": _from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
}


@dataclass(frozen=True)
class RootDatum:
    cartan: tuple
    selected: int
    labels: tuple = ()

    @classmethod
    def make(cls, cartan: Sequence[Sequence[int]], selected, labels: Sequence[str] | None = None) -> "RootDatum":
        n = len(cartan)
        labels = tuple(labels) if labels else tuple(f"alpha{i + 1}" for i in range(n))
        if isinstance(selected, str):
            if selected not in labels:
                raise RootDatumError(f"unknown root label {selected!r}")
            selected = labels.index(selected)
        rd = cls(tuple(tuple(int(x) for x in row) for row in cartan), int(selected), labels)
        rd.validate()
        return rd

    @classmethod
    def bundled(cls, kind: str, selected) -> "RootDatum":
        """Bundled Cartan matrix; ``selected`` is a 1-based index or a label."""
        c = CARTAN_TABLE[kind]
        if isinstance(selected, int):
            selected -= 1
        return cls.make(c, selected)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def validate(self) -> None:
        C, n = self.cartan, len(self.cartan)
        if n == 0 or any(len(r) != n for r in C):
            raise RootDatumError("Cartan matrix must be square and nonempty")
        if len(self.labels) != n:
            raise RootDatumError("label count does not match the rank")
        if not 0 <= self.selected < n:
            raise RootDatumError(f"selected root index {self.selected} out of range")
        for i in range(n):
            if C[i][i] != 2:
                raise RootDatumError(f"diagonal entry ({i},{i}) is {C[i][i]}, expected 2")
            for j in range(n):
                if i != j and C[i][j] > 0:
                    raise RootDatumError(f"off-diagonal entry ({i},{j}) is positive")
                if (C[i][j] == 0) != (C[j][i] == 0):
                    raise RootDatumError(f"entries ({i},{j}) and ({j},{i}) disagree on being zero")
        if det(Mat(C)) == 0:
            raise RootDatumError("Cartan matrix is singular (not of finite type)")
        if recognize(C) is None:
            warnings.warn("Cartan matrix not in the bundled table; treating as finite type",
                          UnrecognizedTypeWarning, stacklevel=3)

    def c_alpha(self) -> Mat:
        keep = [i for i in range(self.rank) if i != self.selected]
        return Mat(self.cartan).submatrix(keep, keep)

    def w_alpha(self) -> list:
        return [self.cartan[g][self.selected] for g in range(self.rank) if g != self.selected]


def recognize(cartan) -> str | None:
    """Name of a bundled type equal to ``cartan`` up to simultaneous relabelling."""
    n = len(cartan)
    for name, c in CARTAN_TABLE.items():
        if len(c) != n:
            continue
        for p in itertools.permutations(range(n)):
            if all(cartan[p[i]][p[j]] == c[i][j] for i in range(n) for j in range(n)):
                return name
    return None


@dataclass(frozen=True)
class RhoResult:
    c: Fraction
    c_alpha_inverse: Mat
    v_alpha: tuple
    w_alpha: tuple

    @property
    def modular_exponent(self) -> Fraction:
        return 2 * self.c

    def to_doc(self) -> dict:
        return {"c": rat_str(self.c), "two_c": rat_str(self.modular_exponent),
                "c_alpha_inverse": self.c_alpha_inverse.to_doc(),
                "v_alpha": [rat_str(x) for x in self.v_alpha],
                "w_alpha": [rat_str(x) for x in self.w_alpha]}


def rho_data(rd: RootDatum) -> RhoResult:
    w = rd.w_alpha()
    if rd.rank == 1:
        return RhoResult(Fraction(1), Mat.zeros(0, 0), (), ())
    Ca = rd.c_alpha()
    if det(Ca) == 0:
        raise RootDatumError("C_alpha is singular")
    Ci = inverse(Ca)
    v = tuple(sum((Fraction(Ci[i, j]) * w[j] for j in range(len(w))), Fraction(0)) for i in range(len(w)))
    return RhoResult(1 - sum(v, Fraction(0)), Ci, v, tuple(w))


def rho_coefficient(rd: RootDatum) -> Fraction:
    return rho_data(rd).c


def modular_exponent(rd: RootDatum) -> Fraction:
    return 2 * rho_coefficient(rd)


def positive_roots(cartan) -> list[tuple]:
    """Positive roots as simple-root coefficient vectors, by closing under simple reflections."""
    n = len(cartan)
    simple = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        b = todo.pop()
        for j in range(n):
            pair = sum(b[i] * cartan[i][j] for i in range(n))
            r = tuple(b[k] - (pair if k == j else 0) for k in range(n))
            if any(x > 0 for x in r) and all(x >= 0 for x in r) and r not in seen:
                seen.add(r)
                todo.append(r)
            if len(seen) > 500:
                raise RootDatumError("root system is not finite")
    return sorted(seen)


def rho_by_roots(rd: RootDatum) -> Fraction:
    """<rho_P, alpha^vee> as half the pairing of the unipotent-radical roots with alpha^vee."""
    a = rd.selected
    tot = 0
    for b in positive_roots(rd.cartan):
        if b[a] > 0:
            tot += sum(b[i] * rd.cartan[i][a] for i in range(rd.rank))
    return Fraction(tot, 2)


def load_document(text: str) -> RootDatum:
    """{"cartan": [[...]], "labels": [...], "selected": label-or-0-based-index}."""
    doc = json.loads(text)
    try:
        return RootDatum.make(doc["cartan"], doc["selected"], doc.get("labels"))
    except KeyError as exc:
        raise RootDatumError(f"missing field {exc.args[0]!r}") from None


E6_PRINTED_INVERSE = [
    [Fraction(5, 6), Fraction(2, 3), Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)],
    [Fraction(2, 3), Fraction(4, 3), Fraction(1), Fraction(2, 3), Fraction(1, 3)],
    [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(1), Fraction(1, 2)],
    [Fraction(1, 3), Fraction(2, 3), Fraction(1), Fraction(4, 3), Fraction(2, 3)],
    [Fraction(1, 6), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(5, 6)],
]
