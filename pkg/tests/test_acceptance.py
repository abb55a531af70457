"""The twelve acceptance criteria, each timed from cold caches.

Every criterion runs the named verification checks at its sample count and
records one PASS/FAIL line, printed in the terminal summary.
"""
import json
import random
import shutil
import subprocess
import sys
import time

import pytest

import conftest
import exceptional
from exceptional import suites as S

CRITERIA = {
    1: ("octonion axioms", 5, 1000,
        [("octonion", "composition"), ("octonion", "trace_associativity"), ("octonion", "kirmse")]),
    2: ("cubic norm", 10, 1000,
        [("jordan", "trilinear_diagonal"), ("jordan", "adjoint_pairing"), ("jordan", "adjoint_adjoint"),
         ("jordan", "cross_basis_pairs")]),
    3: ("Lie algebra dimensions", 120, 100,
        [("liealg", "g2_derivations"), ("liealg", "e6_dimension"), ("liealg", "e6_bracket_closure"),
         ("liealg", "n_radical"), ("liealg", "cross_membership")]),
    4: ("Heisenberg", 30, 100,
        [("e6", "heisenberg_group_law"), ("e6", "heisenberg_homomorphism"), ("e6", "heisenberg_in_e6"),
         ("e6", "heisenberg_exponential")]),
    5: ("rho_P", 1, 1,
        [("rootdata", "e6_alpha6"), ("rootdata", "g2_alpha2")]),
    6: ("orbit catalog", 60, 100,
        [("orbits", "catalog"), ("orbits", "predicate_vs_action")]),
    7: ("vanishing flags", 10, 1,
        [("orbits", "xi_flags")]),
    8: ("Levi images", 10, 100,
        [("orbits", "levi_images"), ("orbits", "a2_line_patterns")]),
    9: ("Jacobian", 5, 100,
        [("orbits", "vbar_jacobian")]),
    10: ("annihilator spans", 5, 100,
         [("octonion", "annihilator_spans"), ("octonion", "annihilator_dimension_and_isotropy")]),
    11: ("stabilizer table", 120, 1,
         [("liealg", "stabilizer_table")]),
}


def clear_caches():
    for mod in list(sys.modules.values()):
        if getattr(mod, "__name__", "").startswith("exceptional"):
            for obj in vars(mod).values():
                if callable(getattr(obj, "cache_clear", None)):
                    obj.cache_clear()


def run_checks(checks, samples, seed=0):
    out = []
    for suite, name in checks:
        ctx = S.Context(seed, samples, None, random.Random(f"{seed}:{suite}:{name}"))
        ok, expected, actual, witness = S.REGISTRY[suite][name](ctx)
        out.append((f"{suite}.{name}", ok, actual, witness))
    return out


def record(k, ok, note):
    conftest.ACCEPTANCE[k] = ("PASS" if ok else "FAIL", note)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {note}")


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    title, limit, samples, checks = CRITERIA[k]
    clear_caches()
    t = time.perf_counter()
    results = run_checks(checks, samples)
    dt = time.perf_counter() - t
    failed = [(n, a, w) for n, ok, a, w in results if not ok]
    ok = not failed and dt < limit
    record(k, ok, f"{title}: {len(results) - len(failed)}/{len(results)} checks, {dt:.2f}s (limit {limit}s)")
    assert not failed, failed
    assert dt < limit


def test_criterion_12_full_run(tmp_path):
    exe = shutil.which("exceptional")
    cmd = [exe] if exe else [sys.executable, "-m", "exceptional.cli"]
    out = tmp_path / "report.json"
    t = time.perf_counter()
    proc = subprocess.run(cmd + ["verify", "--suite", "all", "--seed", "0", "--samples", "100",
                                 "--format", "json", "--out", str(out)], capture_output=True, text=True, timeout=600)
    dt = time.perf_counter() - t
    rep = json.loads(out.read_text())
    ok = proc.returncode == 0 and dt < 600 and rep["failed"] == 0
    record(12, ok, f"full run: exit {proc.returncode}, {rep['passed']} passed, {rep['failed']} failed, {dt:.1f}s (limit 600s)")
    assert rep["toolkit_version"] == exceptional.__version__
    assert ok, proc.stderr
