"""Self-verification suite behind ``qdimer verify``.

Each check is an independent function returning a :class:`CheckResult`;
:func:`run_all` executes the full battery.  Checks accept injectable
compute callables where that makes them usable as mutation probes (a
deliberately broken implementation must turn the check red).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import fractional_matrix_power

from . import entanglement, qcalc, superstat, thermo
from .cli_io import render_csv
from .dimer import (
    DimerParams,
    hamiltonian,
    internal_energy_2nd,
    partition_fn,
    thermal_state,
    thermal_state_spectral,
    trace_rho_q,
)
from .errors import QDimerError

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _result(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, detail)


def check_qexp_product_identity() -> CheckResult:
    """exp_q(x) exp_q(-x) = exp_q((q-1) x^2) on the admissible window."""
    worst = 0.0
    for q in (0.3, 0.7, 1.3, 2.0, 2.8):
        for x in np.linspace(-1.0, 1.0, 41):
            if q > 1 and abs(x) * (q - 1.0) >= 0.999:
                continue
            lhs = qcalc.q_exp_pair_product(q, float(x))
            rhs = qcalc.q_exp(q, (q - 1.0) * float(x) ** 2)
            worst = max(worst, abs(lhs - rhs) / max(1e-300, abs(rhs)))
    return _result("qcalc.product_identity", worst <= 1e-12, f"worst rel err {worst:.2e}")


def check_qcosh_qsinh_identity() -> CheckResult:
    """cosh_q^2 - sinh_q^2 = exp_q(x) exp_q(-x)."""
    worst = 0.0
    for q in (0.2, 0.9, 1.5, 2.5):
        for x in np.linspace(-0.6, 0.6, 25):
            lhs = qcalc.q_cosh(q, float(x)) ** 2 - qcalc.q_sinh(q, float(x)) ** 2
            rhs = qcalc.q_exp_pair_product(q, float(x))
            worst = max(worst, abs(lhs - rhs))
    return _result("qcalc.cosh_sinh_identity", worst <= 1e-12, f"worst abs err {worst:.2e}")


def check_qlog_roundtrip() -> CheckResult:
    """ln_q(exp_q(x)) = x wherever exp_q > 0."""
    worst = 0.0
    for q in (0.4, 0.95, 1.6, 2.2):
        for x in np.linspace(-3.0, 3.0, 61):
            try:
                y = qcalc.q_exp(q, float(x))
            except QDimerError:
                continue
            if y <= 0.0:
                continue
            worst = max(worst, abs(qcalc.q_log(q, y) - float(x)))
    return _result("qcalc.log_roundtrip", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_q1_continuity() -> CheckResult:
    """exp_q -> exp as q -> 1 (both sides of the switchover)."""
    worst = 0.0
    for dq in (1e-8, -1e-8, 1e-10, -1e-10):
        for x in np.linspace(-5.0, 5.0, 21):
            rel = abs(qcalc.q_exp(1.0 + dq, float(x)) - math.exp(float(x))) / math.exp(float(x))
            worst = max(worst, rel)
    return _result("qcalc.q1_continuity", worst <= 1e-6, f"worst rel err {worst:.2e}")


def check_thermal_state_two_paths() -> CheckResult:
    """Closed block form of rho equals the spectral matrix function."""
    worst = 0.0
    for q, bs in ((0.5, 0.8), (0.9, 2.0), (1.0, 1.0), (1.7, 0.4), (2.0, 0.2)):
        p = DimerParams(J=1.0, B=1.2)
        a = thermal_state(p, q, bs).rho
        b = thermal_state_spectral(p, q, bs)
        worst = max(worst, float(np.max(np.abs(a - b))))
    return _result("dimer.state_two_paths", worst <= 1e-12, f"worst entry err {worst:.2e}")


def check_thermal_state_validity() -> CheckResult:
    """Unit trace, positive semidefiniteness, [rho, H] = 0."""
    worst_tr, worst_eig, worst_comm = 0.0, 0.0, 0.0
    for q, bs in ((0.3, 1.5), (1.0, 0.7), (1.5, 0.5), (2.0, 0.2)):
        p = DimerParams(J=1.0, B=0.8)
        state = thermal_state(p, q, bs)
        worst_tr = max(worst_tr, abs(float(np.trace(state.rho)) - 1.0))
        worst_eig = max(worst_eig, -float(np.min(np.linalg.eigvalsh(state.rho))))
        h = hamiltonian(p)
        worst_comm = max(worst_comm, float(np.max(np.abs(state.rho @ h - h @ state.rho))))
    ok = worst_tr <= 1e-12 and worst_eig <= 1e-12 and worst_comm <= 1e-12
    return _result(
        "dimer.state_validity",
        ok,
        f"trace err {worst_tr:.2e}, min eig {-worst_eig:.2e}, commutator {worst_comm:.2e}",
    )


def check_trace_q_dense_oracle(trace_fn=None) -> CheckResult:
    """Eigenvalue-power Tr[rho^q] against the dense fractional matrix power.

    ``trace_fn(p, q, beta_star)`` is injectable so a deliberately wrong
    implementation (e.g. element-wise powering) is caught by this check.
    """
    trace_fn = trace_fn or trace_rho_q
    worst = 0.0
    for q, bs in ((0.5, 0.3), (0.8, 1.1), (1.4, 0.6), (2.0, 0.2)):
        p = DimerParams(J=1.0, B=1.0)
        state = thermal_state(p, q, bs)
        dense = float(np.trace(fractional_matrix_power(state.rho, q)).real)
        worst = max(worst, abs(trace_fn(p, q, bs) - dense))
    return _result("dimer.trace_q_dense_oracle", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_u2_dense_oracle() -> CheckResult:
    """Tr[rho^q H] against the dense fractional matrix power."""
    worst = 0.0
    for q, bs in ((0.5, 0.3), (1.3, 0.5), (2.0, 0.2)):
        p = DimerParams(J=1.0, B=1.0)
        state = thermal_state(p, q, bs)
        dense = float(np.trace(fractional_matrix_power(state.rho, q) @ hamiltonian(p)).real)
        worst = max(worst, abs(internal_energy_2nd(p, q, bs) - dense))
    return _result("dimer.u2_dense_oracle", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_u2_is_partition_derivative() -> CheckResult:
    """U2 = -d ln_q Z / d b* (central differences)."""
    worst = 0.0
    for q, bs in ((0.4, 0.9), (1.6, 0.3), (2.0, 0.15)):
        p = DimerParams(J=1.0, B=1.0)
        h = 1e-6 * max(1.0, bs)
        fd = -(thermo.log_q_partition(p, q, bs + h) - thermo.log_q_partition(p, q, bs - h)) / (
            2.0 * h
        )
        worst = max(worst, abs(fd - internal_energy_2nd(p, q, bs)))
    return _result("thermo.u2_partition_derivative", worst <= 1e-7, f"worst abs err {worst:.2e}")


def check_identity_map_q1() -> CheckResult:
    """beta(b*) = b* at q = 1."""
    p = DimerParams(J=1.0, B=1.0)
    worst = 0.0
    for t in np.linspace(0.1, 5.0, 120):
        bs = 1.0 / float(t)
        worst = max(worst, abs(thermo.physical_beta(p, 1.0, bs) - bs))
    return _result("thermo.identity_map_q1", worst <= 1e-8, f"worst |beta-b*| {worst:.2e}")


def check_dual_formula_su() -> CheckResult:
    """Finite-difference (S, U) against the closed forms."""
    worst_s, worst_u = 0.0, 0.0
    for q, b_field in ((0.2, 1.0), (0.7, 1.0), (1.3, 0.5), (2.0, 4.0)):
        p = DimerParams(J=1.0, B=b_field)
        sweep = thermo.physicality_filter(
            thermo.evaluate_sweep(p, q, t_min=0.2, t_max=5.0, steps=60)
        )
        for pt in sweep.points:
            if not pt.physical:
                continue
            try:
                s_fd, u_fd = thermo.entropy_and_energy_physical(p, q, pt.beta_star)
            except QDimerError:
                continue
            worst_s = max(worst_s, abs(s_fd - pt.S) / max(1.0, abs(pt.S)))
            worst_u = max(worst_u, abs(u_fd - pt.U) / max(1.0, abs(pt.U)))
    ok = worst_s <= 1e-6 and worst_u <= 1e-6
    return _result("thermo.dual_formula", ok, f"worst rel: S {worst_s:.2e}, U {worst_u:.2e}")


def check_dsdu_identity() -> CheckResult:
    """Discrete dS/dU falls in each retained link's beta bracket."""
    bad = 0
    total = 0
    for q, b_field in ((1.0, 1.0), (0.2, 1.0), (0.8, 4.0), (1.5, 1.0)):
        p = DimerParams(J=1.0, B=b_field)
        sweep = thermo.physicality_filter(
            thermo.evaluate_sweep(p, q, t_min=0.1, t_max=5.0, steps=150)
        )
        pts = sweep.points
        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            if not (a.physical and b.physical and a.branch_id == b.branch_id):
                continue
            du = b.U - a.U
            if abs(du) <= 1e-12 * max(1.0, abs(a.U), abs(b.U)):
                continue
            slope = (b.S - a.S) / du
            lo, hi = min(a.beta, b.beta), max(a.beta, b.beta)
            slack = 1e-3 * max(abs(a.beta), abs(b.beta))
            total += 1
            if not (lo - slack <= slope <= hi + slack):
                bad += 1
    return _result("thermo.dsdu_identity", bad == 0 and total > 0, f"{bad}/{total} links out of bracket")


def check_free_energy_identity() -> CheckResult:
    """F = U - S/beta at every valid sweep point."""
    worst = 0.0
    p = DimerParams(J=1.0, B=1.0)
    for q in (0.5, 1.0, 1.8):
        sweep = thermo.evaluate_sweep(p, q, t_min=0.2, t_max=4.0, steps=50)
        for pt in sweep.points:
            if pt.ok and pt.beta != 0.0:
                worst = max(worst, abs(pt.F - (pt.U - pt.S / pt.beta)))
    return _result("thermo.free_energy_identity", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_fold_detection() -> CheckResult:
    """q = 0.2, B/J = 1 folds: rejected points exist, retained T bounded below."""
    p = DimerParams(J=1.0, B=1.0)
    sweep = thermo.physicality_filter(
        thermo.evaluate_sweep(p, 0.2, t_min=0.02, t_max=5.0, steps=400)
    )
    rejected = [pt for pt in sweep.points if pt.ok and not pt.physical]
    retained = [pt for pt in sweep.points if pt.physical]
    t_inf = min((1.0 / pt.beta for pt in retained), default=math.nan)
    ok = len(rejected) > 0 and len(retained) > 0 and t_inf > 0.1
    return _result(
        "thermo.fold_detection",
        ok,
        f"{len(rejected)} rejected, retained T infimum {t_inf:.3f}",
    )


def check_superstat_closed_form(q: float | None = None) -> CheckResult:
    """Quadrature average equals exp_q(-beta E) to 1e-10."""
    if q is not None and q <= 1.0:
        return CheckResult(
            "superstat.closed_form",
            SKIP,
            f"q={q} rejected: chi-square identification needs q > 1 (c = 1/(q-1) > 0)",
        )
    qs = (q,) if q is not None else (1.2, 1.5, 2.0, 2.8)
    worst = 0.0
    for qi in qs:
        fl = superstat.GammaFluctuation.from_q(qi, beta_mean=1.0)
        for energy in (0.1, 1.0, 5.0):
            got = superstat.averaged_boltzmann_scalar(fl, energy)
            want = qcalc.q_exp(qi, -energy)
            worst = max(worst, abs(got - want))
    return _result("superstat.closed_form", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_superstat_mean_variance() -> CheckResult:
    """Fluctuation mean = beta and variance = (q-1) beta^2 by quadrature."""
    worst_mean, worst_var = 0.0, 0.0
    for q in (1.2, 1.5, 2.0, 2.8):
        for beta in (0.5, 1.0, 2.0):
            fl = superstat.GammaFluctuation.from_q(q, beta_mean=beta)
            mean = superstat.fluctuation_moment(fl, 1)
            second = superstat.fluctuation_moment(fl, 2)
            worst_mean = max(worst_mean, abs(mean - beta))
            worst_var = max(worst_var, abs((second - mean**2) - (q - 1.0) * beta**2))
    ok = worst_mean <= 1e-10 and worst_var <= 1e-8
    return _result(
        "superstat.mean_variance", ok, f"mean err {worst_mean:.2e}, var err {worst_var:.2e}"
    )


def check_superstat_montecarlo(seed: int = 20240809) -> CheckResult:
    """Monte Carlo average within 4 standard errors of the closed form."""
    fl = superstat.GammaFluctuation.from_q(1.5, beta_mean=1.0)
    worst_pull = 0.0
    for i, energy in enumerate((0.1, 1.0, 5.0)):
        mean, se = superstat.monte_carlo_average(fl, energy, n=10**6, seed=seed + i)
        pull = abs(mean - qcalc.q_exp(1.5, -energy)) / se
        worst_pull = max(worst_pull, pull)
    return _result("superstat.montecarlo", worst_pull <= 4.0, f"worst pull {worst_pull:.2f} sigma")


def check_superstat_operator() -> CheckResult:
    """Operator average equals the matrix q-exponential entrywise."""
    fl = superstat.GammaFluctuation.from_q(1.5, beta_mean=0.7)
    p = DimerParams(J=1.0, B=1.0)
    try:
        superstat.averaged_boltzmann_operator(fl, hamiltonian(p), check_tol=1e-8)
    except QDimerError as exc:
        return CheckResult("superstat.operator", FAIL, str(exc))
    return CheckResult("superstat.operator", PASS, "entrywise err <= 1e-8")


def check_concurrence_oracle_vs_xstate() -> CheckResult:
    """Eigenvalue oracle equals the X-state closed form on thermal states."""
    worst = 0.0
    for q, bs, b_field in ((0.3, 1.2, 0.0), (0.9, 0.8, 1.0), (1.0, 1.0, 1.2), (1.6, 0.4, 1.0), (2.6, 0.3, 1.2)):
        state = thermal_state(DimerParams(J=1.0, B=b_field), q, bs)
        worst = max(
            worst,
            abs(entanglement.concurrence_oracle(state) - entanglement.concurrence_xstate(state)),
        )
    return _result("entanglement.oracle_vs_xstate", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_concurrence_q1_closed_form() -> CheckResult:
    """Oracle equals the Gibbs-Boltzmann closed form at q = 1."""
    worst = 0.0
    for b_field in (0.0, 1.0, 1.2):
        p = DimerParams(J=1.0, B=b_field)
        for beta in np.linspace(0.1, 10.0, 60):
            state = thermal_state(p, 1.0, float(beta))
            worst = max(
                worst,
                abs(entanglement.concurrence_oracle(state) - entanglement.concurrence_gb(p, float(beta))),
            )
    return _result("entanglement.q1_closed_form", worst <= 1e-10, f"worst abs err {worst:.2e}")


def check_gb_critical_temperature() -> CheckResult:
    """C_gb vanishes at T/J = 1/arcsinh(1) independently of B (bisection)."""
    expected = 1.0 / math.asinh(1.0)
    worst = 0.0
    for b_field in (0.0, 1.0, 1.2):
        p = DimerParams(J=1.0, B=b_field)
        lo, hi = 0.5, 3.0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if entanglement.concurrence_gb(p, 1.0 / mid) > 0.0:
                lo = mid
            else:
                hi = mid
        worst = max(worst, abs(0.5 * (lo + hi) - expected))
    return _result("entanglement.gb_critical_T", worst <= 1e-6, f"worst |Tc - 1/asinh(1)| {worst:.2e}")


def check_csv_determinism() -> CheckResult:
    """Rendering the same sweep twice yields byte-identical CSV."""
    p = DimerParams(J=1.0, B=1.0)
    texts = [
        render_csv(thermo.physicality_filter(thermo.evaluate_sweep(p, 0.6, 0.1, 3.0, 40)))
        for _ in range(2)
    ]
    return _result("cli.csv_determinism", texts[0] == texts[1], f"{len(texts[0])} bytes")


def run_all(seed: int = 20240809, q: float | None = None) -> list[CheckResult]:
    """Execute the full battery; ``q`` narrows the superstat checks."""
    return [
        check_qexp_product_identity(),
        check_qcosh_qsinh_identity(),
        check_qlog_roundtrip(),
        check_q1_continuity(),
        check_thermal_state_two_paths(),
        check_thermal_state_validity(),
        check_trace_q_dense_oracle(),
        check_u2_dense_oracle(),
        check_u2_is_partition_derivative(),
        check_identity_map_q1(),
        check_dual_formula_su(),
        check_dsdu_identity(),
        check_free_energy_identity(),
        check_fold_detection(),
        check_superstat_closed_form(q),
        check_superstat_mean_variance(),
        check_superstat_montecarlo(seed),
        check_superstat_operator(),
        check_concurrence_oracle_vs_xstate(),
        check_concurrence_q1_closed_form(),
        check_gb_critical_temperature(),
        check_csv_determinism(),
    ]
