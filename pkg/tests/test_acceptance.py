"""Exit criteria, one test per criterion.

Each test records a PASS/FAIL line that the terminal summary prints (see
conftest.py).  Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import subprocess
import sys
import time

import pytest

from superbeta.verify import SUITES

pytestmark = pytest.mark.acceptance

RESULTS = {}


class SuiteRun:
    def __init__(self, name):
        start = time.perf_counter()
        self.checks = SUITES[name]()
        self.elapsed = time.perf_counter() - start

    def select(self, prefix):
        out = [c for c in self.checks if c.check_id.startswith(prefix)]
        assert out, f"no checks named {prefix}"
        return out


@pytest.fixture(scope="module")
def runs():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = SuiteRun(name)
        return cache[name]

    return get


def judge(key, label, checks, tol, runtime=None, limit=None, extra=True):
    worst = max(c.rel_error if c.value_b else c.abs_error for c in checks)
    ok = all(c.passed for c in checks) and all(c.tolerance == tol for c in checks) and extra
    detail = f"{len(checks)} checks, worst error {worst:.2e} (tol {tol:g})"
    if limit is not None:
        ok = ok and runtime < limit
        detail += f", {runtime:.2f} s (limit {limit:g} s)"
    RESULTS[key] = (ok, f"{label}: {detail}")
    assert ok, RESULTS[key][1]


def test_criterion_01_berezin_axioms(runs):
    r = runs("berezin")
    axioms = r.select("berezin.integral_of_")
    exact = axioms[0].value_a == 0.0 and axioms[1].value_a == 1.0
    judge(1, "Berezin axioms and top-coefficient extraction", r.select("berezin.top_vs_iterated"), 1e-12,
          r.elapsed, 1.0, extra=exact and all(c.passed and c.tolerance == 0.0 for c in axioms))


def test_criterion_02_berezinian_multiplicative(runs):
    r = runs("berezinian")
    mult = r.select("berezinian.multiplicative_")
    block = r.select("berezinian.block_diagonal")
    judge(2, "Berezinian multiplicativity", mult, 1e-9, r.elapsed, 5.0,
          extra=all(c.passed and c.value_a == 0.0 for c in block))


def test_criterion_03_charts(runs):
    r = runs("charts")
    counts = {c.check_id: c.value_a for c in r.select("charts.count_")}
    props = r.select("charts.reduce_idempotent") + r.select("charts.gauge_invariance") + r.select(
        "charts.transition_round_trip")
    demo = r.select("charts.g2244_shapes")
    ok_counts = counts["charts.count_2132"] == 6 and counts["charts.count_2244"] == 36
    judge(3, "chart counts, idempotence, gauge, round trip, G(2|2,4|4) shapes", props, 1e-10, r.elapsed, 5.0,
          extra=ok_counts and demo[0].passed)


def test_criterion_04_phi_equals_beta(runs):
    r = runs("classical")
    checks = r.select("classical.phi_beta")
    assert len(checks) == 108
    judge(4, "classical phi = beta on the 108-point grid", checks, 1e-9, r.elapsed, 5.0)


def test_criterion_05_transposition(runs):
    checks = runs("classical").select("classical.transposition")
    assert len(checks) == 108
    judge(5, "transposition symmetry", checks, 1e-9)


def test_criterion_06_binomial(runs):
    checks = runs("classical").select("classical.binomial")
    assert all(abs((c.parameters["alpha"] + c.parameters["beta"]) % 1) > 1e-12 for c in checks)
    judge(6, "binomial relation", checks, 1e-8)


def test_criterion_07_euler_reduction(runs):
    r = runs("superbeta")
    checks = r.select("superbeta.euler_reduction")
    assert len(checks) == 16
    eta = r.select("superbeta.eta_independent")
    judge(7, "super beta reduces to Euler beta, identical for eta in {0, 1}", checks, 1e-10,
          extra=all(c.value_a == c.value_b for c in eta))


def test_criterion_08_closed_terminating(runs):
    checks = runs("superbeta").select("superbeta.closed_terminating")
    assert len(checks) == 4 * 3 * 16
    judge(8, "closed form, terminating p2", checks, 1e-10)


def test_criterion_09_closed_nonterminating(runs):
    checks = runs("superbeta").select("superbeta.closed_nonterminating")
    assert len(checks) == 2 * 2 * 16
    judge(9, "closed form, non-terminating p2", checks, 1e-8)


def test_criterion_10_route_agreement(runs):
    checks = runs("superbeta").select("superbeta.route_agreement")
    assert {c.parameters["x21"] for c in checks} == {-0.5, -1.0, -2.0}
    judge(10, "chart route vs beta route", checks, 1e-8)


def test_criterion_11_general_integral_consistency(runs):
    r = runs("superbeta")
    l1m2 = r.select("superbeta.general_l1_m2")
    assert len(l1m2) == 20
    l0m0 = r.select("superbeta.general_l0_m0")
    judge(11, "general super-beta integral at (l,m) = (1,2) and (0,0)", l1m2 + l0m0, 1e-9)


def test_criterion_12_ramanujan(runs):
    r = runs("ramanujan")
    mellin = r.select("ramanujan.mellin")
    series = r.select("ramanujan.series")
    assert len(mellin) == 9
    judge(12, "Ramanujan master theorem (Mellin)", mellin, 1e-6,
          extra=all(c.passed and c.tolerance == 1e-10 for c in series))


def test_criterion_13_special_functions(runs):
    r = runs("specfun")
    gam = r.select("specfun.gamma_")
    euler = r.select("specfun.hyp2f1_euler")
    judge(13, "gamma reflection/recurrence", gam, 1e-11,
          extra=all(c.passed and c.tolerance == 1e-9 for c in euler))


def test_criterion_14_full_verify_under_60s(tmp_path):
    out = tmp_path / "report.json"
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "superbeta", "verify", "--suite", "all", "--out", str(out)],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    ok = proc.returncode == 0 and out.exists() and elapsed < 60.0
    RESULTS[14] = (ok, f"verify --suite all: exit {proc.returncode}, {elapsed:.1f} s (limit 60 s)")
    assert ok, RESULTS[14][1] + proc.stderr


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
