"""Tests for grid sweeps, the surface table, and convergence studies."""

import math
import os
from unittest import mock

import pytest

from hyperrect import (
    NEG_INF,
    AxisSpec,
    ResultTable,
    SweepError,
    SweepSpec,
    convergence_study,
    figure_phi_surface,
    phi,
    run_sweep,
    sphere_exponent,
    thm1_expansion,
    worker_count,
)


class TestAxisSpec:
    def test_linear_points(self):
        axis = AxisSpec("alpha", 0.0, 1.0, 5)
        assert axis.points() == pytest.approx((0.0, 0.25, 0.5, 0.75, 1.0))

    def test_log_points(self):
        axis = AxisSpec("rho", 0.01, 1.0, 3, spacing="log")
        assert axis.points() == pytest.approx((0.01, 0.1, 1.0))

    def test_count_minimum(self):
        with pytest.raises(ValueError):
            AxisSpec("alpha", 0.0, 1.0, 1)

    def test_bad_name(self):
        with pytest.raises(ValueError):
            AxisSpec("not a name", 0.0, 1.0, 3)

    def test_bad_spacing(self):
        with pytest.raises(ValueError):
            AxisSpec("alpha", 0.0, 1.0, 3, spacing="cubic")

    def test_log_requires_positive(self):
        with pytest.raises(ValueError):
            AxisSpec("rho", 0.0, 1.0, 3, spacing="log")


class TestRunSweep:
    def test_grid_cardinality(self):
        spec = SweepSpec(
            "thm1_expansion",
            axes=(
                AxisSpec("alpha", 0.3, 0.7, 3),
                AxisSpec("rho", 0.9, 0.98, 3),
            ),
        )
        table = run_sweep(spec)
        assert len(table.rows) == 9
        assert table.columns == ("alpha", "rho", "exponent")

    def test_lexicographic_order_first_axis_slowest(self):
        spec = SweepSpec(
            "binary_entropy",
            axes=(AxisSpec("p", 0.1, 0.3, 3),),
        )
        table = run_sweep(spec)
        ps = table.column("p")
        assert ps == pytest.approx((0.1, 0.2, 0.3))

    def test_single_point_equals_direct_call(self):
        spec = SweepSpec(
            "sphere_exponent",
            params={"alpha": 0.5, "beta": 0.5, "rho": 0.3, "centers": "same"},
        )
        table = run_sweep(spec)
        assert len(table.rows) == 1
        direct = sphere_exponent(0.5, 0.5, 0.3, centers="same")
        row = dict(zip(table.columns, table.rows[0]))
        assert row["exponent"] == direct.value
        assert row["d_opt"] == direct.d_opt

    def test_values_match_direct_on_grid(self):
        spec = SweepSpec(
            "thm1_expansion",
            axes=(AxisSpec("alpha", 0.3, 0.7, 5),),
            params={"rho": 0.95},
        )
        table = run_sweep(spec)
        for row in table.rows:
            d = dict(zip(table.columns, row))
            assert d["exponent"] == thm1_expansion(d["alpha"], 0.95).value

    def test_axis_alias_binding(self):
        # A string param naming another input reuses that axis's value,
        # giving the equal-rate diagonal from a single axis.
        from hyperrect import morss_lower_exponent

        spec = SweepSpec(
            "morss_lower",
            axes=(AxisSpec("alpha", 0.2, 0.8, 4),),
            params={"beta": "alpha", "rho": 0.5},
        )
        table = run_sweep(spec)
        assert len(table.rows) == 4
        for row in table.rows:
            d = dict(zip(table.columns, row))
            expected = morss_lower_exponent(d["alpha"], d["alpha"], 0.5).value
            assert d["exponent"] == expected

    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            SweepSpec("frobnicate", axes=())

    def test_unknown_axis_name(self):
        with pytest.raises(ValueError):
            SweepSpec("binary_entropy", axes=(AxisSpec("zeta", 0.1, 0.3, 3),))

    def test_double_binding_rejected(self):
        with pytest.raises(ValueError):
            SweepSpec(
                "binary_entropy",
                axes=(AxisSpec("p", 0.1, 0.3, 3),),
                params={"p": 0.2},
            )

    def test_error_identifies_grid_point(self):
        # rho = 1 is outside rhct's domain; the error names the point.
        spec = SweepSpec(
            "rhct_lower",
            axes=(AxisSpec("rho", 0.5, 1.0, 2),),
            params={"alpha": 0.5},
        )
        with pytest.raises(SweepError) as info:
            run_sweep(spec)
        assert "rho" in str(info.value)
        assert "1" in str(info.value)

    def test_determinism_byte_identical(self):
        spec = SweepSpec(
            "avgdist_lower",
            axes=(
                AxisSpec("alpha", 0.2, 0.8, 4),
                AxisSpec("rho", 0.1, 0.9, 5),
            ),
            params={"beta": 0.5},
        )
        first = run_sweep(spec).to_csv_text()
        second = run_sweep(spec).to_csv_text()
        assert first == second

    def test_csv_written(self, tmp_path):
        out = tmp_path / "sweep.csv"
        spec = SweepSpec(
            "binary_entropy",
            axes=(AxisSpec("p", 0.1, 0.5, 3),),
            out_path=str(out),
        )
        table = run_sweep(spec)
        assert out.read_text() == table.to_csv_text()

    def test_thread_env_override(self):
        with mock.patch.dict(os.environ, {"HYPERRECT_THREADS": "3"}):
            assert worker_count() == 3

    def test_thread_env_invalid(self):
        with mock.patch.dict(os.environ, {"HYPERRECT_THREADS": "zero"}):
            with pytest.raises(ValueError):
                worker_count()

    def test_parallel_matches_serial(self):
        spec = SweepSpec(
            "w_d",
            axes=(
                AxisSpec("alpha", 0.3, 0.7, 4),
                AxisSpec("d", 0.05, 0.3, 6),
            ),
            params={"beta": 0.5},
        )
        with mock.patch.dict(os.environ, {"HYPERRECT_THREADS": "1"}):
            serial = run_sweep(spec).to_csv_text()
        with mock.patch.dict(os.environ, {"HYPERRECT_THREADS": "4"}):
            parallel = run_sweep(spec).to_csv_text()
        assert serial == parallel


class TestResultTable:
    def test_csv_shape(self):
        table = ResultTable(("a", "b"), ((1.0, 2.0), (3.0, 4.0)))
        text = table.to_csv_text()
        lines = text.splitlines()
        assert lines[0] == "a,b"
        assert len(lines) == 3
        assert text.endswith("\n")

    def test_sentinel_rendering(self):
        table = ResultTable(
            ("x", "w"), ((0.9, NEG_INF), (0.1, math.inf), (0.2, math.nan))
        )
        lines = table.to_csv_text().splitlines()
        assert lines[1].endswith("-inf")
        assert lines[2].endswith("inf")
        assert lines[3].endswith("nan")

    def test_floats_round_trip(self):
        value = 0.1234567890123456789
        table = ResultTable(("v",), ((value,),))
        rendered = table.to_csv_text().splitlines()[1]
        assert float(rendered) == value

    def test_rectangular_enforced(self):
        with pytest.raises(ValueError):
            ResultTable(("a", "b"), ((1.0,),))

    def test_unknown_column(self):
        table = ResultTable(("a",), ((1.0,),))
        with pytest.raises(KeyError):
            table.column("b")


class TestFigurePhiSurface:
    def test_corners(self):
        table = figure_phi_surface(11)
        cells = {
            (row[0], row[1]): row[2] for row in table.rows
        }
        assert cells[(0.0, 0.0)] == 0.0
        assert cells[(1.0, 1.0)] == pytest.approx(0.5, abs=1e-12)
        assert cells[(0.0, 1.0)] == pytest.approx(0.5, abs=1e-12)

    def test_symmetry_exact(self):
        table = figure_phi_surface(9)
        cells = {(row[0], row[1]): row[2] for row in table.rows}
        for (x, y), v in cells.items():
            assert cells[(y, x)] == v

    def test_monotone_along_grid_lines(self):
        table = figure_phi_surface(21)
        cells = {(row[0], row[1]): row[2] for row in table.rows}
        xs = sorted({row[0] for row in table.rows})
        for y in xs:
            vals = [cells[(x, y)] for x in xs]
            assert all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))

    def test_convex_along_diagonal(self):
        table = figure_phi_surface(41)
        cells = {(row[0], row[1]): row[2] for row in table.rows}
        xs = sorted({row[0] for row in table.rows})
        diag = [cells[(x, x)] for x in xs]
        for i in range(1, len(diag) - 1):
            assert diag[i] <= 0.5 * (diag[i - 1] + diag[i + 1]) + 1e-12

    def test_row_count(self):
        table = figure_phi_surface(7)
        assert len(table.rows) == 49

    def test_grid_count_minimum(self):
        with pytest.raises(ValueError):
            figure_phi_surface(1)


class TestConvergenceStudy:
    def test_gap_decreasing(self):
        table = convergence_study(0.5, 0.5, [256, 1024, 4096])
        gaps = table.column("gap")
        assert all(a > b for a, b in zip(gaps, gaps[1:]))

    def test_gap_scaled_bounded(self):
        table = convergence_study(0.5, 0.5, [256, 1024, 4096])
        scaled = table.column("gap_scaled")
        assert max(scaled) < 3.0

    def test_realized_alpha_approaches_nominal(self):
        table = convergence_study(0.5, 0.5, [256, 4096])
        realized = table.column("realized_alpha")
        assert abs(realized[1] - 0.5) < abs(realized[0] - 0.5) + 1e-9

    def test_degenerate_radius_rejected(self):
        # Tiny alpha at small n rounds the radius to zero.
        with pytest.raises(ValueError):
            convergence_study(0.01, 0.5, [16])

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            convergence_study(0.5, 0.5, [])
