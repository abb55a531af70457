"""Regenerate frozen.json.  Run once; the file is then committed and only compared against."""
from __future__ import annotations

import json
import pathlib
import random

from exceptional import e6ops as E
from exceptional import liealg as L
from exceptional import octonion as O
from exceptional import orbits as Orb
from exceptional import rootdata as R
from exceptional.e6ops import HeisenbergElement
from exceptional.exactla import Mat, random_vector_in, rat_str
from exceptional.octonion import Octonion

HERE = pathlib.Path(__file__).parent


def rs(v):
    return [rat_str(x) for x in v]


def build() -> dict:
    out: dict = {}
    out["cd_to_zorn"] = rs(O.cd_to_zorn_matrix().flat())
    out["annihilators"] = {
        f"{side}:{name}": [rs(b) for b in O.annihilator(O.span(name), side).basis]
        for name in ("e3*", "eps1", "e1", "eps2") for side in ("left", "right")}
    out["null_triples"] = {}
    for k in range(1, 6):
        v2, v3 = O.complete_null_triple(Orb.two_space(k))
        out["null_triples"][str(k)] = [[rs(b) for b in v2.basis], [rs(b) for b in v3.basis]]
    h, n = L.lie_h(), L.algebra_basis("n_radical")
    cat = []
    for d in Orb.orbit_catalog():
        cat.append({
            "id": d.id, "shape": d.shape, "profile": list(d.profile), "profile2": list(d.profile2),
            "rep": [rs(b) for b in d.rep.basis],
            "stabilizer_params_dim": Orb.stabilizer_subgroup_space(d.id).dim,
            "trivial_params_dim": Orb.trivially_acting_space(d.id).dim,
            "xi": Orb.xi_nontrivial_on_trivial_actors(d),
            "h_stabilizer_dim": L.stabilizer_subalgebra(d.rep, h)[0],
            "n_pointwise_dim": L.stabilizer_subalgebra(d.rep, n, pointwise=True)[0],
            "orbit_dim": L.orbit_dimension(d),
        })
    out["catalog"] = cat
    out["algebras"] = {k: L.algebra_basis(k).dim for k in ("g2_derivations", "e6", "n_radical", "h")}
    out["e6_rank"] = L.algebra_basis("e6").certificate["exact_rank"]
    out["g2_roots"] = [rs(D.flat()) for D in E.g2_root_derivations()]
    out["rho"] = {f"{name}:{a + 1}": rat_str(R.rho_coefficient(R.RootDatum.make(C, a)))
                  for name, C in R.CARTAN_TABLE.items() for a in range(len(C))}
    g = Mat([[1, 2], [3, 4]])
    out["vbar_jacobian"] = {"[[1,2],[3,4]]": rat_str(Orb.vbar_jacobian(g)),
                            "diag(2,1)": rat_str(Orb.vbar_jacobian(Mat.diag([2, 1])))}
    rng = random.Random(20240601)
    op = Orb.omega_perp_cd()
    x, y, z = (Octonion(random_vector_in(op, rng)) for _ in range(3))
    out["levi_sample"] = {"x": rs(x.coords), "y": rs(y.coords), "z": rs(z.coords),
                          "image": rs(Orb.levi_image(HeisenbergElement(x, y, z)).flat())}
    return out


if __name__ == "__main__":
    (HERE / "frozen.json").write_text(json.dumps(build(), indent=1) + "\n")
    print("wrote", HERE / "frozen.json")
