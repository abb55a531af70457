"""Live results against the frozen oracle values in oracles/frozen.json."""
import json
import pathlib

import pytest

from oracles.generate import build

FROZEN = json.loads((pathlib.Path(__file__).parent / "oracles" / "frozen.json").read_text())


@pytest.fixture(scope="module")
def live():
    return build()


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_matches_frozen(live, key):
    assert live[key] == FROZEN[key]


def test_frozen_spot_values():
    cat = {d["id"]: d for d in FROZEN["catalog"]}
    assert [cat[k]["h_stabilizer_dim"] for k in range(1, 18)] == [27, 25, 25, 25, 23, 29, 28, 18, 17, 29, 28, 22, 21, 33, 32, 22, 21]
    assert cat[1]["orbit_dim"] == 11 and max(d["orbit_dim"] for d in cat.values()) == cat[9]["orbit_dim"] == 21
    assert all(d["n_pointwise_dim"] == d["trivial_params_dim"] for d in cat.values())
    assert FROZEN["rho"]["E6:6"] == "11/2" and FROZEN["rho"]["G2:2"] == "3/2" and FROZEN["rho"]["A1:1"] == "1"
    assert FROZEN["vbar_jacobian"] == {"[[1,2],[3,4]]": "-1/8", "diag(2,1)": "1/8"}
