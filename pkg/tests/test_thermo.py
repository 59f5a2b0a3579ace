"""Physical-temperature map, entropy/energy routes, physicality filter."""

import math

import numpy as np
import pytest

from qdimer import (
    DimerParams,
    InsufficientGrid,
    SingularMap,
    entropy_and_energy_physical,
    entropy_direct,
    evaluate_sweep,
    physical_beta,
    physicality_filter,
    thermal_state,
    tsallis_entropy,
)
from qdimer.errors import ConfigError, QDimerError
from qdimer.thermo import temperature_grid

P11 = DimerParams(J=1.0, B=1.0)


class TestPhysicalBeta:
    def test_classical_identity(self):
        for bs in (0.05, 0.3, 1.0, 5.0, 10.0):
            assert physical_beta(P11, 1.0, bs) == pytest.approx(bs, abs=1e-12 * max(1, bs))

    def test_infinite_temperature_maps_to_zero(self):
        # U2 = 0 and den = 1 at b* = 0, so beta = 0 * 4^(1-q)
        for q in (0.4, 1.0, 1.5, 2.2):
            assert physical_beta(P11, q, 0.0) == 0.0

    def test_high_temperature_slope(self):
        # beta ~ b* Tr[rho^q] = b* 4^(1-q) as b* -> 0
        for q in (0.4, 1.5, 2.2):
            bs = 1e-6
            assert physical_beta(P11, q, bs) / bs == pytest.approx(4.0 ** (1.0 - q), rel=1e-5)

    def test_negative_branch_exists_past_pole(self):
        # q = 2, B/J = 4: beta < 0 only on the continuation sheet
        p = DimerParams(J=1.0, B=4.0)
        assert physical_beta(p, 2.0, 0.30, past_pole=True) < 0.0
        # inside the ordinary domain the map stays positive
        for bs in (0.05, 0.15, 0.24, 0.249):
            assert physical_beta(p, 2.0, bs) > 0.0


class TestEntropy:
    def test_pure_state_zero(self):
        assert tsallis_entropy(np.diag([1.0, 0.0, 0.0, 0.0]), 0.7) == 0.0
        assert tsallis_entropy(np.diag([1.0, 0.0, 0.0, 0.0]), 1.0) == 0.0

    def test_maximally_mixed_q2(self):
        assert tsallis_entropy(np.eye(4) / 4.0, 2.0) == pytest.approx(0.75, rel=1e-14)

    def test_maximally_mixed_classical(self):
        assert tsallis_entropy(np.eye(4) / 4.0, 1.0) == pytest.approx(math.log(4.0), rel=1e-14)

    def test_entropy_direct_matches_generic(self):
        for q, bs in ((0.5, 0.8), (1.0, 1.0), (1.8, 0.3)):
            state = thermal_state(P11, q, bs)
            assert entropy_direct(state) == pytest.approx(
                tsallis_entropy(state.rho, q), abs=1e-12
            )

    def test_nonnegative_on_states(self):
        for q in (0.2, 0.7, 1.0):
            for bs in (0.1, 1.0, 3.0):
                assert entropy_direct(thermal_state(P11, q, bs)) >= 0.0
        for q, bs in ((1.5, 0.1), (1.5, 1.5), (2.0, 0.9)):  # inside the q > 1 window
            assert entropy_direct(thermal_state(P11, q, bs)) >= 0.0


class TestFiniteDifferenceRoute:
    def test_matches_closed_forms(self):
        for q, b_field in ((0.2, 1.0), (0.7, 1.0), (1.3, 0.5), (2.0, 4.0)):
            p = DimerParams(J=1.0, B=b_field)
            sweep = physicality_filter(evaluate_sweep(p, q, 0.2, 5.0, 40))
            checked = 0
            for pt in sweep.points:
                if not pt.physical:
                    continue
                try:
                    s_fd, u_fd = entropy_and_energy_physical(p, q, pt.beta_star)
                except QDimerError:
                    continue
                assert abs(s_fd - pt.S) / max(1.0, abs(pt.S)) <= 1e-6
                assert abs(u_fd - pt.U) / max(1.0, abs(pt.U)) <= 1e-6
                checked += 1
            assert checked >= 5  # q = 2, B = 4 only reaches T* > 4 in this window

    def test_classical_reduction(self):
        # q = 1: U = -d ln Z/d beta, and U(b* -> 0) = 0 for the symmetric spectrum
        s_fd, u_fd = entropy_and_energy_physical(P11, 1.0, 1e-4)
        assert abs(u_fd) <= 1e-3
        assert s_fd == pytest.approx(math.log(4.0), abs=1e-6)
        sweep = evaluate_sweep(P11, 1.0, 0.2, 5.0, 30)
        for pt in sweep.points[::7]:
            s_fd, u_fd = entropy_and_energy_physical(P11, 1.0, pt.beta_star)
            assert u_fd == pytest.approx(pt.U, abs=1e-8)
            assert s_fd == pytest.approx(pt.S, abs=1e-8)

    def test_second_order_convergence(self):
        # central differences: error drops ~4x when h halves
        q, bs = 0.7, 0.8
        sweep_pt = evaluate_sweep(P11, q, 1.0 / bs - 1e-9, 1.0 / bs + 1e-9, 3).points[1]
        errs = []
        for h in (2e-2, 1e-2, 5e-3):
            s_fd, u_fd = entropy_and_energy_physical(P11, q, bs, h=h)
            errs.append(abs(u_fd - sweep_pt.U))
        assert errs[1] <= errs[0] / 2.0
        assert errs[2] <= errs[1] / 2.0

    def test_singular_map_detection(self):
        with pytest.raises(SingularMap):
            entropy_and_energy_physical(P11, 0.2, 1.0, tol_deriv=1e6)


class TestSweepGrid:
    def test_uniform_grid(self):
        grid = temperature_grid(0.1, 1.0, 10)
        assert len(grid) == 10
        assert grid[0] == 0.1 and grid[-1] == 1.0
        assert all(b > a for a, b in zip(grid, grid[1:]))

    def test_log_grid(self):
        grid = temperature_grid(0.1, 10.0, 5, "log")
        ratios = [b / a for a, b in zip(grid, grid[1:])]
        assert all(r == pytest.approx(ratios[0], rel=1e-12) for r in ratios)

    def test_config_errors(self):
        with pytest.raises(ConfigError):
            temperature_grid(0.1, 1.0, 2)
        with pytest.raises(ConfigError):
            temperature_grid(1.0, 0.1, 10)
        with pytest.raises(ConfigError):
            temperature_grid(-1.0, 1.0, 10, "log")
        with pytest.raises(ConfigError):
            temperature_grid(0.1, 1.0, 10, "cubic")

    def test_points_strictly_increasing_beta_star(self):
        sweep = evaluate_sweep(P11, 0.8, 0.1, 5.0, 50)
        bs = [pt.beta_star for pt in sweep.points]
        assert all(b > a for a, b in zip(bs, bs[1:]))


class TestPhysicalityFilter:
    def test_classical_sweep_fully_physical(self):
        sweep = physicality_filter(evaluate_sweep(P11, 1.0, 0.1, 5.0, 100))
        assert all(pt.physical for pt in sweep.points)
        assert all(pt.beta == pytest.approx(pt.beta_star, abs=1e-12) for pt in sweep.points)
        assert len(sweep.branches) == 1

    def test_fold_rejection_q02(self):
        sweep = physicality_filter(evaluate_sweep(P11, 0.2, 0.02, 5.0, 400))
        rejected = [pt for pt in sweep.points if pt.ok and not pt.physical]
        retained = [pt for pt in sweep.points if pt.physical]
        assert rejected and retained
        # temperature bounded below on the retained branch
        t_inf = min(1.0 / pt.beta for pt in retained)
        assert 0.4 < t_inf < 0.5
        kinds = {br.kind for br in sweep.branches}
        assert "falling" in kinds and "degenerate" in kinds

    def test_frozen_sector_is_degenerate_not_physical(self):
        # beyond the q < 1 cutoff the populations freeze: S, U constant
        sweep = physicality_filter(evaluate_sweep(P11, 0.2, 0.02, 5.0, 400))
        frozen = [pt for pt in sweep.points if pt.ok and pt.beta_star > 1.3]
        assert frozen
        assert not any(pt.physical for pt in frozen)
        s_vals = {round(pt.S, 9) for pt in frozen}
        assert len(s_vals) == 1

    def test_multivalued_temperature_resolved(self):
        sweep = physicality_filter(evaluate_sweep(P11, 0.2, 0.02, 5.0, 400))
        valid = [pt for pt in sweep.points if pt.ok]
        retained = [pt for pt in sweep.points if pt.physical]

        def drawdown(points):
            # U below its running max along increasing T: multivaluedness scale
            pts = sorted(points, key=lambda pt: 1.0 / pt.beta)
            seen, worst = -math.inf, 0.0
            for pt in pts:
                seen = max(seen, pt.U)
                worst = max(worst, seen - pt.U)
            return worst

        assert drawdown(valid) > 0.1  # U(T) multivalued before
        assert drawdown(retained) < 1e-9  # single-valued after

    def test_continued_q2_b4_branch_rules(self):
        p = DimerParams(J=1.0, B=4.0)
        sweep = physicality_filter(evaluate_sweep(p, 2.0, 0.05, 8.0, 500, past_pole=True))
        neg = [pt for pt in sweep.points if pt.ok and pt.beta < 0.0]
        assert neg
        neg_ret = [pt for pt in neg if pt.physical]
        neg_rej = [pt for pt in neg if not pt.physical]
        pos_rej = [pt for pt in sweep.points if pt.ok and pt.beta > 0.0 and not pt.physical]
        assert neg_ret and neg_rej and pos_rej
        # retained negative points sit on a rising branch
        by_branch = {}
        for pt in neg_ret:
            by_branch.setdefault(pt.branch_id, []).append(pt)
        for pts in by_branch.values():
            betas = [pt.beta for pt in sorted(pts, key=lambda x: x.beta_star)]
            assert all(b2 > b1 for b1, b2 in zip(betas, betas[1:]))

    def test_strict_mode_has_no_negative_temperatures(self):
        p = DimerParams(J=1.0, B=4.0)
        sweep = physicality_filter(evaluate_sweep(p, 2.0, 0.05, 8.0, 200))
        assert not any(pt.ok and pt.beta < 0.0 for pt in sweep.points)
        # nodes beyond the pole are NaN rows, grid stays aligned
        assert any(not pt.ok for pt in sweep.points)
        assert len(sweep.points) == 200

    def test_free_energy_identity(self):
        for q in (0.5, 1.0, 1.8):
            sweep = evaluate_sweep(P11, q, 0.2, 4.0, 50)
            for pt in sweep.points:
                if pt.ok and pt.beta != 0.0:
                    assert pt.F == pytest.approx(pt.U - pt.S / pt.beta, abs=1e-10)

    def test_free_energy_equals_corrected_log_partition(self):
        # F = -(1/beta) [ln_q Z + (q-1) beta b* U^2]
        from qdimer import q_log

        for q in (0.5, 1.3):
            sweep = evaluate_sweep(P11, q, 0.3, 3.0, 30)
            for pt in sweep.points[::5]:
                lq = q_log(q, pt.Z) + (q - 1.0) * pt.beta * pt.beta_star * pt.U**2
                assert pt.F == pytest.approx(-lq / pt.beta, abs=1e-8)

    def test_dsdu_bracket_on_retained(self):
        for q, b_field in ((1.0, 1.0), (0.2, 1.0), (1.5, 1.0)):
            p = DimerParams(J=1.0, B=b_field)
            sweep = physicality_filter(evaluate_sweep(p, q, 0.1, 5.0, 150))
            pts = sweep.points
            for a, b in zip(pts, pts[1:]):
                if not (a.physical and b.physical and a.branch_id == b.branch_id):
                    continue
                du = b.U - a.U
                if abs(du) <= 1e-12 * max(1.0, abs(a.U), abs(b.U)):
                    continue
                slope = (b.S - a.S) / du
                lo, hi = min(a.beta, b.beta), max(a.beta, b.beta)
                slack = 1e-3 * max(abs(a.beta), abs(b.beta))
                assert lo - slack <= slope <= hi + slack


def test_insufficient_grid_direct():
    from qdimer.thermo import SweepResult, ThermoPoint

    tiny = SweepResult(
        points=(ThermoPoint(t_star=1.0, beta_star=1.0), ThermoPoint(t_star=0.5, beta_star=2.0)),
        q=1.0,
        params=P11,
        t_min=0.5,
        t_max=1.0,
        steps=2,
        spacing="uniform",
    )
    with pytest.raises(InsufficientGrid):
        physicality_filter(tiny)
