"""Verification suites and their machine-readable reports.

Every suite returns a list of :class:`CheckRecord`; ``run_suite`` wraps them
in a :class:`VerificationReport` that serializes to JSON (complex numbers as
``{"re": .., "im": ..}``) or CSV.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import beta as sb
from .berezin import change_of_variables_odd, integrate_all, integrate_over, substitute
from .grassmann import GrassmannAlgebra, Parity, invert
from .quad import default_nodes, gauss_jacobi, integrate
from .sampling import random_element, random_odd_shift, random_supermatrix
from .specfun import gamma, hyp2f1, sinpi
from .supergrass import chart_count, chart_labels, charts, g2244_demo, reduce, transition, valid_charts
from .supermatrix import SuperMatrix, berezinian, det_even, identity, inverse

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "SUITES",
    "SUITE_NAMES",
    "run_suite",
    "EXPECTED_G2244_B",
    "EXPECTED_G2244_B_PRIME",
]

FIELDS = (
    "check_id",
    "parameters",
    "value_a",
    "value_b",
    "abs_error",
    "rel_error",
    "tolerance",
    "passed",
    "nodes",
    "wall_time",
)


@dataclass
class CheckRecord:
    """One comparison: ``value_a`` measured against the reference ``value_b``.

    ``passed`` holds when ``rel_error <= tolerance``, or ``abs_error <=
    tolerance`` when the reference is 0.
    """

    check_id: str
    parameters: dict
    value_a: complex | float | int | None
    value_b: complex | float | int | None
    abs_error: float
    rel_error: float
    tolerance: float
    passed: bool
    nodes: int | None = None
    wall_time: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def to_json(self, indent: int | None = 2) -> str:
        doc = {
            "suite": self.suite,
            "checks": [{k: _encode(getattr(c, k)) for k in FIELDS} for c in self.checks],
            "passed": self.passed,
        }
        return json.dumps(doc, indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        doc = json.loads(text)
        checks = [CheckRecord(**{k: _decode(rec[k]) for k in FIELDS}) for rec in doc["checks"]]
        return cls(doc["suite"], checks)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(FIELDS)
        for c in self.checks:
            row = []
            for k in FIELDS:
                v = _encode(getattr(c, k))
                row.append(json.dumps(v, ensure_ascii=False) if isinstance(v, (dict, list)) else v)
            writer.writerow(row)
        return buf.getvalue()


def _encode(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (complex, np.complexfloating)):
        return {"re": _encode(float(v.real)), "im": _encode(float(v.imag))}
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else repr(v)
    if isinstance(v, dict):
        return {str(k): _encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    return v


def _decode(v):
    if isinstance(v, dict):
        if set(v) == {"re", "im"}:
            return complex(_decode(v["re"]), _decode(v["im"]))
        return {k: _decode(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_decode(x) for x in v]
    if v in ("inf", "-inf", "nan"):
        return float(v)
    return v


def _plain(v):
    """Normalize values so that a JSON round trip reproduces them exactly."""
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, (complex, np.complexfloating)):
        return complex(v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def record(check_id, parameters, a, b, tol, nodes=None, wall=0.0) -> CheckRecord:
    """Build a record comparing ``a`` against the reference ``b``."""
    a, b = _plain(a), _plain(b)
    abs_err = float(abs(a - b)) if a is not None and b is not None else math.inf
    scale = abs(b) if b is not None else 0.0
    rel_err = abs_err / scale if scale else abs_err
    passed = bool(rel_err <= tol) if scale else bool(abs_err <= tol)
    return CheckRecord(check_id, _plain(parameters), a, b, abs_err, rel_err, float(tol), passed, nodes, float(wall))


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _tol(override, default):
    return default if override is None else override


# -- berezin -----------------------------------------------------------------


def suite_berezin(tol=None, nodes=None, seed=1) -> list[CheckRecord]:
    out = []
    one_gen = GrassmannAlgebra(1, drop_tol=0.0)
    with _Timer() as tm:
        v0 = integrate_all(one_gen.one())
    out.append(record("berezin.integral_of_one", {"dim": 1}, v0, 0.0, _tol(tol, 0.0), wall=tm.elapsed))
    with _Timer() as tm:
        v1 = integrate_all(one_gen.generator(0))
    out.append(record("berezin.integral_of_theta", {"dim": 1}, v1, 1.0, _tol(tol, 0.0), wall=tm.elapsed))

    rng = np.random.default_rng(seed)
    alg = GrassmannAlgebra(4)
    with _Timer() as tm:
        worst = 0.0
        for _ in range(200):
            x = random_element(rng, alg)
            direct = integrate_all(x)
            iterated = integrate_over(x, range(4)).body
            worst = max(worst, abs(direct - iterated))
    out.append(record("berezin.top_vs_iterated", {"trials": 200, "dim": 4, "seed": seed}, worst, 0.0,
                      _tol(tol, 1e-12), wall=tm.elapsed))

    alg3 = GrassmannAlgebra(3)
    with _Timer() as tm:
        worst = 0.0
        for _ in range(100):
            x = random_element(rng, alg3)
            while True:
                A = rng.normal(size=(3, 3))
                if np.linalg.svd(A, compute_uv=False)[-1] > 0.1:
                    break
            worst = max(worst, abs(integrate_all(change_of_variables_odd(x, A)) - integrate_all(x)))
    out.append(record("berezin.odd_change_of_variables", {"trials": 100, "dim": 3, "seed": seed}, worst, 0.0,
                      _tol(tol, 1e-10), wall=tm.elapsed))

    with _Timer() as tm:
        worst = 0.0
        for _ in range(50):
            x = random_element(rng, alg)
            shifted = substitute(x, random_odd_shift(rng, alg, gens=[0, 1], spare=[2, 3]))
            worst = max(worst, (integrate_over(shifted, [0, 1]) - integrate_over(x, [0, 1])).max_abs())
    out.append(record("berezin.translation_invariance", {"trials": 50, "dim": 4, "seed": seed}, worst, 0.0,
                      _tol(tol, 1e-10), wall=tm.elapsed))

    with _Timer() as tm:
        worst = 0.0
        for _ in range(50):
            # f in θ0, θ1 only; g in θ2, θ3 only
            f = substitute(random_element(rng, GrassmannAlgebra(2)), [alg.generator(0), alg.generator(1)])
            g = substitute(random_element(rng, GrassmannAlgebra(2), Parity.EVEN),
                           [alg.generator(2), alg.generator(3)])
            lhs = integrate_all(f * g)
            rhs = integrate_over(f, [0, 1]).coefficient(()) * integrate_over(g, [2, 3]).coefficient(())
            worst = max(worst, abs(lhs - rhs))
    out.append(record("berezin.super_fubini", {"trials": 50, "dim": 4, "seed": seed}, worst, 0.0,
                      _tol(tol, 1e-12), wall=tm.elapsed))
    return out


# -- berezinian --------------------------------------------------------------


def _worst_soul(el) -> float:
    return el.max_abs()


def suite_berezinian(tol=None, nodes=None, seed=2) -> list[CheckRecord]:
    out = []
    rng = np.random.default_rng(seed)
    alg = GrassmannAlgebra(4)
    for label, layout in (("2|1", [0, 0, 1]), ("2|2", [0, 0, 1, 1])):
        with _Timer() as tm:
            worst = 0.0
            for _ in range(100):
                M = random_supermatrix(rng, layout, algebra=alg)
                N = random_supermatrix(rng, layout, algebra=alg)
                diff = berezinian(M @ N) - berezinian(M) * berezinian(N)
                worst = max(worst, _worst_soul(diff))
        out.append(record(f"berezinian.multiplicative_{label}", {"trials": 100, "dim": 4, "seed": seed},
                          worst, 0.0, _tol(tol, 1e-9), wall=tm.elapsed))

    with _Timer() as tm:
        worst = 0.0
        for _ in range(20):
            M = random_supermatrix(rng, [0, 0, 1, 1], algebra=alg)
            zero = alg.zero()
            e = M.entries
            D = SuperMatrix([0, 0, 1, 1], [0, 0, 1, 1],
                            [[e[0, 0], e[0, 1], zero, zero], [e[1, 0], e[1, 1], zero, zero],
                             [zero, zero, e[2, 2], e[2, 3]], [zero, zero, e[3, 2], e[3, 3]]], alg)
            A = D.submatrix([0, 1], [0, 1])
            Dd = D.submatrix([2, 3], [2, 3])
            diff = berezinian(D) - det_even(A) * invert(det_even(Dd))
            worst = max(worst, _worst_soul(diff))
    out.append(record("berezinian.block_diagonal", {"trials": 20, "dim": 4, "seed": seed}, worst, 0.0,
                      _tol(tol, 0.0), wall=tm.elapsed))

    with _Timer() as tm:
        worst_inv, worst_ber = 0.0, 0.0
        for _ in range(20):
            M = random_supermatrix(rng, [0, 1, 0, 1], algebra=alg)
            Minv = inverse(M)
            I = identity(M.row_parities, alg)
            worst_inv = max(worst_inv, (M @ Minv - I).max_abs(), (Minv @ M - I).max_abs())
            worst_ber = max(worst_ber, _worst_soul(berezinian(Minv) - invert(berezinian(M))))
    out.append(record("berezinian.inverse_two_sided", {"trials": 20, "dim": 4, "seed": seed}, worst_inv, 0.0,
                      _tol(tol, 1e-10), wall=tm.elapsed))
    out.append(record("berezinian.of_inverse", {"trials": 20, "dim": 4, "seed": seed}, worst_ber, 0.0,
                      _tol(tol, 1e-9), wall=0.0))
    return out


# -- charts ------------------------------------------------------------------

# Reduced shapes of the G_{2|2,4|4} example in the charts (3,4,5,6) and (2,4,5,6).
EXPECTED_G2244_B = [
    ["t11", "t12", "1", "0", "0", "0", "θ13", "θ14"],
    ["t21", "t22", "0", "1", "0", "0", "θ23", "θ24"],
    ["υ11", "υ12", "0", "0", "1", "0", "u13", "u14"],
    ["υ21", "υ22", "0", "0", "0", "1", "u23", "u24"],
]
EXPECTED_G2244_B_PRIME = [
    ["t11", "1", "t13", "0", "0", "0", "θ13", "θ14"],
    ["t21", "0", "t23", "1", "0", "0", "θ23", "θ24"],
    ["υ11", "0", "υ13", "0", "1", "0", "u13", "u14"],
    ["υ21", "0", "υ23", "0", "0", "1", "u23", "u24"],
]


def _random_point(rng, alg):
    while True:
        A = random_supermatrix(rng, [0, 0, 1], [0, 0, 0, 1, 1], alg)
        if len(valid_charts(A)) == chart_count(2, 1, 3, 2):
            return A


def suite_charts(tol=None, nodes=None, seed=3) -> list[CheckRecord]:
    out = []
    for dims, expected in (((2, 1, 3, 2), 6), ((2, 2, 4, 4), 36), ((0, 0, 3, 2), 1)):
        out.append(record(f"charts.count_{''.join(map(str, dims))}", {"k_l_n_m": list(dims)},
                          chart_count(*dims), expected, 0.0))

    rng = np.random.default_rng(seed)
    alg = GrassmannAlgebra(3)
    all_charts = charts(2, 1, 3, 2)

    with _Timer() as tm:
        worst = 0.0
        generic = 0
        for _ in range(50):
            A = _random_point(rng, alg)
            generic += len(valid_charts(A)) == 6
            c = all_charts[rng.integers(len(all_charts))]
            p = reduce(A, c)
            worst = max(worst, (reduce(p, c).matrix - p.matrix).max_abs())
    out.append(record("charts.reduce_idempotent", {"trials": 50, "seed": seed}, worst, 0.0, _tol(tol, 1e-10),
                      wall=tm.elapsed))
    out.append(record("charts.valid_count_generic", {"trials": 50}, generic, 50, 0.0))

    with _Timer() as tm:
        worst = 0.0
        for _ in range(50):
            A = _random_point(rng, alg)
            U = random_supermatrix(rng, [0, 0, 1], algebra=alg)
            c = all_charts[rng.integers(len(all_charts))]
            worst = max(worst, (reduce(U @ A, c).matrix - reduce(A, c).matrix).max_abs())
    out.append(record("charts.gauge_invariance", {"trials": 50, "seed": seed}, worst, 0.0, _tol(tol, 1e-10),
                      wall=tm.elapsed))

    with _Timer() as tm:
        worst_rt, worst_cocycle = 0.0, 0.0
        for _ in range(50):
            A = _random_point(rng, alg)
            i, j, k = rng.choice(len(all_charts), size=3, replace=False)
            c1, c2, c3 = all_charts[i], all_charts[j], all_charts[k]
            p1 = reduce(A, c1)
            p2 = transition(c1, c2, p1)
            worst_rt = max(worst_rt, (transition(c2, c1, p2).matrix - p1.matrix).max_abs())
            worst_cocycle = max(worst_cocycle,
                                (transition(c2, c3, p2).matrix - transition(c1, c3, p1).matrix).max_abs())
    out.append(record("charts.transition_round_trip", {"trials": 50, "seed": seed}, worst_rt, 0.0,
                      _tol(tol, 1e-10), wall=tm.elapsed))
    out.append(record("charts.transition_cocycle", {"trials": 50, "seed": seed}, worst_cocycle, 0.0,
                      _tol(tol, 1e-10)))

    with _Timer() as tm:
        demo = g2244_demo(np.random.default_rng(seed))
        shapes_ok = demo["labels"] == (EXPECTED_G2244_B, EXPECTED_G2244_B_PRIME)
        identity_ok = all(
            chart_labels(p.chart, 2, 2, 4, 4) == lab
            and all(
                (p.matrix[i, col] - (1.0 if i == r else 0.0)).is_zero()
                for r, col in enumerate(p.chart.columns(4))
                for i in range(4)
            )
            for p, lab in zip((demo["B"], demo["B_prime"]), demo["labels"])
        )
    out.append(record("charts.g2244_shapes", {"minor_columns": demo["minor_columns"]},
                      int(shapes_ok and identity_ok), 1, 0.0, wall=tm.elapsed))
    out.append(record("charts.g2244_transition", {"minor_columns": demo["minor_columns"]},
                      demo["transition_error"], 0.0, _tol(tol, 1e-10)))
    return out


# -- classical ---------------------------------------------------------------

CLASSICAL_ALPHA = (-0.5, 0.0, 0.5, 1.3)
CLASSICAL_BETA = (-0.5, 0.25, 2.0)
CLASSICAL_Y1 = (0.5, 1.0, 2.0)
CLASSICAL_Y2 = (-0.5, -1.0, -3.0)
BINOMIAL_GRID = (-0.7, -0.3, 0.25, 0.6, 1.4)


def suite_classical(tol=None, nodes=None) -> list[CheckRecord]:
    N = nodes or default_nodes()
    out = []
    for a, b, y1, y2 in itertools.product(CLASSICAL_ALPHA, CLASSICAL_BETA, CLASSICAL_Y1, CLASSICAL_Y2):
        c = sb.ClassicalParams(a, b, y1, y2)
        params = {"alpha": a, "beta": b, "y1": y1, "y2": y2}
        with _Timer() as tm:
            val = sb.classical_phi(c, N)
        ref = sb.classical_phi_closed(c)
        out.append(record("classical.phi_beta", params, val, ref, _tol(tol, 1e-9), N, tm.elapsed))
        with _Timer() as tm:
            res = sb.transposition_check(c, N)
        out.append(record("classical.transposition", params, res.lhs, res.rhs, _tol(tol, 1e-9), N, tm.elapsed))
    for a, b in itertools.product(BINOMIAL_GRID, BINOMIAL_GRID):
        if float(a + b).is_integer() or abs(a + b - round(a + b)) < 1e-12:
            continue
        for y1, y2 in ((1.0, -1.0), (2.0, -3.0)):
            with _Timer() as tm:
                res = sb.binomial_relation_check(sb.ClassicalParams(a, b, y1, y2), N)
            out.append(record("classical.binomial", {"alpha": a, "beta": b, "y1": y1, "y2": y2}, res.lhs,
                              res.rhs, _tol(tol, 1e-8), N, tm.elapsed))
    return out


# -- superbeta ---------------------------------------------------------------

S_GRID = (0.0, 0.5, 1.3, 2.0)
P1_GRID = (0.0, 0.25, 1.0, 2.0)


def suite_superbeta(tol=None, nodes=None, seed=31) -> list[CheckRecord]:
    N = nodes or default_nodes()
    out = []
    P = sb.BetaParams
    for s, p1 in itertools.product(S_GRID, P1_GRID):
        ref = gamma(s + 1) * gamma(p1 + 1) / gamma(s + p1 + 2)
        with _Timer() as tm:
            v0 = sb.beta_super_numeric(P(s, p1, 0, 1.0, 0.0, eta=0.0), N)
            v1 = sb.beta_super_numeric(P(s, p1, 0, 1.0, 0.0, eta=1.0), N)
        params = {"s": s, "p1": p1}
        out.append(record("superbeta.euler_reduction", params, v0, ref, _tol(tol, 1e-10), N, tm.elapsed))
        out.append(record("superbeta.eta_independent", params, v1, v0, _tol(tol, 0.0), N))

    for p2, xp, (s, p1) in itertools.product((0, 1, 2, 3), (0.0, 0.3, 0.9), itertools.product(S_GRID, P1_GRID)):
        p = P(s, p1, p2, 1.0, xp, eta=1.0)
        with _Timer() as tm:
            val = sb.beta_super_numeric(p, N)
            ref = sb.beta_super_closed(p)
        out.append(record("superbeta.closed_terminating", {"s": s, "p1": p1, "p2": p2, "xi": 1.0, "xi_prime": xp},
                          val, ref, _tol(tol, 1e-10), N, tm.elapsed))

    for p2, xp, (s, p1) in itertools.product((0.7, 1.5), (0.2, 0.6), itertools.product(S_GRID, P1_GRID)):
        p = P(s, p1, p2, 1.0, xp, eta=1.0)
        with _Timer() as tm:
            val = sb.beta_super_numeric(p, N)
            ref = sb.beta_super_closed(p)
        out.append(record("superbeta.closed_nonterminating",
                          {"s": s, "p1": p1, "p2": p2, "xi": 1.0, "xi_prime": xp}, val, ref, _tol(tol, 1e-8), N,
                          tm.elapsed))

    for x21, p2, xp, (s, p1) in itertools.product((-0.5, -1.0, -2.0), (0, 1, 2), (0.0, 0.3),
                                                  itertools.product(S_GRID, P1_GRID)):
        p = P(s, p1, p2, 1.0, xp, eta=1.0, x21=x21)
        with _Timer() as tm:
            a = sb.phi_super(p, N)
            b = sb.phi_super_raw(p, N)
        out.append(record("superbeta.route_agreement",
                          {"s": s, "p1": p1, "p2": p2, "xi": 1.0, "xi_prime": xp, "x21": x21}, b, a,
                          _tol(tol, 1e-8), N, tm.elapsed))

    rng = np.random.default_rng(seed)
    for i in range(20):
        s, p1 = rng.uniform(0.0, 2.0, size=2)
        p2 = int(rng.integers(0, 4)) if i % 2 == 0 else float(rng.uniform(0.3, 2.0))
        xi = float(rng.uniform(0.5, 2.0))
        xp = float(rng.uniform(-0.4, 0.6)) * xi
        eta = float(rng.uniform(-1.0, 1.0))
        g = sb.GeneralSuperBetaParams((p1, 0.0, s), (1, p2), sb.general_point_2131(xi, xp, eta))
        with _Timer() as tm:
            a = sb.general_superbeta(g, N)
            b = sb.beta_super_numeric(P(s, p1, p2, xi, xp, eta=eta), N)
        out.append(record("superbeta.general_l1_m2",
                          {"s": s, "p1": p1, "p2": p2, "xi": xi, "xi_prime": xp, "eta": eta, "draw": i}, a, b,
                          _tol(tol, 1e-9), N, tm.elapsed))

    from .supergrass import point_general

    for a_, b_ in itertools.product(CLASSICAL_ALPHA, CLASSICAL_BETA):
        y1, y2 = 2.0, -0.5
        pt = point_general([y1, y2], [], [[], []], [], GrassmannAlgebra(0))
        with _Timer() as tm:
            a = sb.general_superbeta(sb.GeneralSuperBetaParams((b_, 0.0, a_), (), pt), N)
            b = sb.classical_phi(sb.ClassicalParams(a_, b_, y1, y2), N)
        out.append(record("superbeta.general_l0_m0", {"alpha": a_, "beta": b_, "y1": y1, "y2": y2}, a, b,
                          _tol(tol, 1e-9), N, tm.elapsed))
    return out


# -- ramanujan ---------------------------------------------------------------


def suite_ramanujan(tol=None, nodes=None) -> list[CheckRecord]:
    out = []
    for c, s in itertools.product((0.5, 1.0, 2.0), (0.25, 0.5, 0.75)):
        with _Timer() as tm:
            res = sb.ramanujan_check(c, s, nodes)
        params = {"c": c, "s": s}
        out.append(record("ramanujan.mellin", params, res.mellin, res.closed, _tol(tol, 1e-6), res.nodes,
                          tm.elapsed))
        out.append(record("ramanujan.series", {**params, "points": 10}, res.series_error, 0.0, _tol(tol, 1e-10)))
    return out


# -- specfun -----------------------------------------------------------------


def suite_specfun(tol=None, nodes=None, seed=13) -> list[CheckRecord]:
    N = nodes or default_nodes()
    out = []
    rng = np.random.default_rng(seed)
    z = rng.uniform(-10, 10, 100) + 1j * rng.uniform(-10, 10, 100)
    with _Timer() as tm:
        refl = np.array([gamma(v) * gamma(1 - v) * sinpi(v) / math.pi for v in z])
    out.append(record("specfun.gamma_reflection", {"points": 100, "seed": seed}, float(np.max(np.abs(refl - 1))),
                      0.0, _tol(tol, 1e-11), wall=tm.elapsed))
    with _Timer() as tm:
        rec = np.abs(gamma(z + 1) - z * gamma(z)) / np.abs(z * gamma(z))
    out.append(record("specfun.gamma_recurrence", {"points": 100, "seed": seed}, float(rec.max()), 0.0,
                      _tol(tol, 1e-11), wall=tm.elapsed))

    for a, b, c, zz in itertools.product((0, -1, -2, -3, -5), (0.5, 1.5), (2.5, 4.0), (-0.7, 0.3, 0.9, 1.0)):
        with _Timer() as tm:
            val = hyp2f1(a, b, c, zz)
            rule = gauss_jacobi(b - 1.0, c - b - 1.0, N)
            euler = gamma(c) / (gamma(b) * gamma(c - b)) * integrate(lambda u: (1 - zz * u) ** (-a), rule)
        out.append(record("specfun.hyp2f1_euler", {"a": a, "b": b, "c": c, "z": zz}, val, euler, _tol(tol, 1e-9), N,
                          tm.elapsed))
    for a, b, c in itertools.product((0, -1, -2, -4), (0.5, 1.5), (2.5, 4.0)):
        gauss = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
        out.append(record("specfun.hyp2f1_gauss_value", {"a": a, "b": b, "c": c}, hyp2f1(a, b, c, 1.0), gauss,
                          _tol(tol, 1e-8)))
    return out


SUITES: dict[str, Callable[..., list[CheckRecord]]] = {
    "berezin": suite_berezin,
    "berezinian": suite_berezinian,
    "charts": suite_charts,
    "classical": suite_classical,
    "superbeta": suite_superbeta,
    "ramanujan": suite_ramanujan,
    "specfun": suite_specfun,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, tol: float | None = None, nodes: int | None = None) -> VerificationReport:
    """Run one suite (or ``"all"``) and collect a report."""
    if name == "all":
        checks = []
        for fn in SUITES.values():
            checks.extend(fn(tol=tol, nodes=nodes))
        return VerificationReport("all", checks)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return VerificationReport(name, SUITES[name](tol=tol, nodes=nodes))
