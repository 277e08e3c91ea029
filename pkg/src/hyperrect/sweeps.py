"""Batch evaluation over parameter grids with deterministic CSV output."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Mapping

import numpy as np

from . import adder_mac, entropy, exponents, hypercontractivity
from .oracle import rectangle_prob, sphere_distance_profile

__all__ = [
    "SweepError",
    "AxisSpec",
    "SweepSpec",
    "ResultTable",
    "OPERATIONS",
    "run_sweep",
    "figure_phi_surface",
    "convergence_study",
    "worker_count",
]


class SweepError(RuntimeError):
    """A core operation failed at an identified grid point."""


def worker_count() -> int:
    """Worker cap: HYPERRECT_THREADS if set, else machine parallelism."""
    env = os.environ.get("HYPERRECT_THREADS")
    if env is None:
        return os.cpu_count() or 1
    try:
        value = int(env)
    except ValueError:
        raise ValueError(f"HYPERRECT_THREADS must be an integer, got {env!r}")
    if value < 1:
        raise ValueError(f"HYPERRECT_THREADS must be >= 1, got {value!r}")
    return value


@dataclass(frozen=True)
class AxisSpec:
    """One swept variable: `count` points from `start` to `stop` inclusive."""

    name: str
    start: float
    stop: float
    count: int
    spacing: str = "linear"

    def __post_init__(self) -> None:
        if not self.name.isidentifier():
            raise ValueError(f"axis name must be an identifier, got {self.name!r}")
        if self.count < 2:
            raise ValueError(f"axis count must be >= 2, got {self.count!r}")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and (self.start <= 0.0 or self.stop <= 0.0):
            raise ValueError("log spacing requires positive endpoints")

    def points(self) -> tuple[float, ...]:
        if self.spacing == "log":
            return tuple(float(v) for v in np.geomspace(self.start, self.stop, self.count))
        return tuple(float(v) for v in np.linspace(self.start, self.stop, self.count))


@dataclass(frozen=True)
class SweepSpec:
    """What to evaluate: an operation, axes to grid over, fixed params.

    Every input of the operation must be bound exactly once: by an axis
    of the same name, by a numeric param, or by a string param naming an
    axis (alias, e.g. params={"beta": "alpha"} sweeps the diagonal).
    With no axes the sweep is a single point, equal to a direct call.
    """

    operation: str
    axes: tuple[AxisSpec, ...] = ()
    params: Mapping[str, float | str] = field(default_factory=dict)
    out_path: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "params", dict(self.params))
        if self.operation not in OPERATIONS:
            known = ", ".join(sorted(OPERATIONS))
            raise ValueError(f"unknown operation {self.operation!r} (known: {known})")
        op = OPERATIONS[self.operation]
        axis_names = [axis.name for axis in self.axes]
        if len(set(axis_names)) != len(axis_names):
            raise ValueError(f"duplicate axis names in {axis_names}")
        for name in axis_names:
            if name not in op.inputs:
                raise ValueError(
                    f"axis {name!r} is not an input of {self.operation!r}"
                )
        for name, value in self.params.items():
            if name not in op.inputs:
                raise ValueError(
                    f"param {name!r} is not an input of {self.operation!r}"
                )
            if name in axis_names:
                raise ValueError(f"{name!r} bound both as axis and param")
            if isinstance(value, str):
                if name in op.string_inputs or value in axis_names:
                    continue
                raise ValueError(
                    f"param {name!r}={value!r} is neither numeric nor an axis alias"
                )
        bound = set(axis_names) | set(self.params)
        missing = [
            name
            for name in op.inputs
            if name not in bound and name not in op.defaults
        ]
        if missing:
            raise ValueError(
                f"unbound inputs for {self.operation!r}: {', '.join(missing)}"
            )


@dataclass(frozen=True)
class ResultTable:
    """Rectangular named-column table of numbers (plus string cells)."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(
                    f"row arity {len(row)} does not match header arity {width}"
                )

    def column(self, name: str) -> tuple:
        if name not in self.columns:
            raise KeyError(f"no column named {name!r}; have {self.columns}")
        index = self.columns.index(name)
        return tuple(row[index] for row in self.rows)

    def to_csv_text(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_format_cell(cell) for cell in row))
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as handle:
            handle.write(self.to_csv_text())


def _format_cell(cell) -> str:
    if isinstance(cell, str):
        return cell
    if isinstance(cell, int):
        return str(cell)
    value = float(cell)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if math.isnan(value):
        return "nan"
    return repr(value)


@dataclass(frozen=True)
class SweepOperation:
    """Registry entry: callable plus its input/output column names."""

    fn: Callable[..., tuple]
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    string_inputs: frozenset[str] = frozenset()
    defaults: Mapping[str, float | str] = field(default_factory=dict)


OPERATIONS: dict[str, SweepOperation] = {
    "binary_entropy": SweepOperation(
        lambda p: (entropy.binary_entropy(p),), ("p",), ("h",)
    ),
    "binary_entropy_inv": SweepOperation(
        lambda y: (entropy.binary_entropy_inv(y),), ("y",), ("p",)
    ),
    "phi": SweepOperation(
        lambda x, y: (entropy.phi(x, y),), ("x", "y"), ("phi",)
    ),
    "c_function": SweepOperation(
        lambda lam: (hypercontractivity.c_function(lam),), ("lam",), ("c",)
    ),
    "w_d": SweepOperation(
        lambda alpha, beta, d: (exponents.w_d(alpha, beta, d),),
        ("alpha", "beta", "d"),
        ("w",),
    ),
    "sphere_exponent": SweepOperation(
        lambda alpha, beta, rho, centers: (
            lambda bound: (bound.value, bound.d_opt)
        )(exponents.sphere_exponent(alpha, beta, rho, centers)),
        ("alpha", "beta", "rho", "centers"),
        ("exponent", "d_opt"),
        string_inputs=frozenset({"centers"}),
        defaults={"centers": "same"},
    ),
    "hct_upper": SweepOperation(
        lambda alpha, rho: (exponents.hct_upper_exponent(alpha, rho).value,),
        ("alpha", "rho"),
        ("exponent",),
    ),
    "rhct_lower": SweepOperation(
        lambda alpha, rho: (exponents.rhct_lower_exponent(alpha, rho).value,),
        ("alpha", "rho"),
        ("exponent",),
    ),
    "morss_lower": SweepOperation(
        lambda alpha, beta, rho: (
            exponents.morss_lower_exponent(alpha, beta, rho).value,
        ),
        ("alpha", "beta", "rho"),
        ("exponent",),
    ),
    "avgdist_lower": SweepOperation(
        lambda alpha, beta, rho: (
            exponents.avgdist_lower_exponent(alpha, beta, rho).value,
        ),
        ("alpha", "beta", "rho"),
        ("exponent",),
    ),
    "thm1_expansion": SweepOperation(
        lambda alpha, rho: (exponents.thm1_expansion(alpha, rho).value,),
        ("alpha", "rho"),
        ("exponent",),
    ),
    "thm2_expansion": SweepOperation(
        lambda alpha, beta, rho: (
            exponents.thm2_expansion(alpha, beta, rho).value,
        ),
        ("alpha", "beta", "rho"),
        ("exponent",),
    ),
    "avg_distance_bounds": SweepOperation(
        lambda alpha, beta: exponents.avg_distance_bounds(alpha, beta),
        ("alpha", "beta"),
        ("d_min", "d_max"),
    ),
    "remark3_threshold": SweepOperation(
        lambda rho: (exponents.remark3_threshold(rho),), ("rho",), ("alpha_star",)
    ),
    "psi_bound": SweepOperation(
        lambda alpha, rho: (hypercontractivity.psi_bound(alpha, rho).value,),
        ("alpha", "rho"),
        ("exponent",),
    ),
    "van_tilborg_cap": SweepOperation(
        lambda d, r1, r2: (
            adder_mac.van_tilborg_wd_cap(d, adder_mac.RatePair(r1, r2)),
        ),
        ("d", "r1", "r2"),
        ("cap",),
    ),
    "zero_error_upper": SweepOperation(
        lambda r1, r2, rho: (
            lambda bound: (bound.value, bound.d_opt)
        )(adder_mac.zero_error_upper_exponent(adder_mac.RatePair(r1, r2), rho)),
        ("r1", "r2", "rho"),
        ("exponent", "d_opt"),
    ),
}


def run_sweep(spec: SweepSpec) -> ResultTable:
    """Evaluate the operation over the axis product, one row per point.

    Rows come in lexicographic order over the axes (first axis slowest).
    Identical specs produce byte-identical CSV.  Any core-operation error
    aborts the sweep with the offending grid point identified.
    """
    op = OPERATIONS[spec.operation]
    axis_names = [axis.name for axis in spec.axes]
    axis_points = [axis.points() for axis in spec.axes]

    fixed: dict[str, float | str] = dict(op.defaults)
    aliases: dict[str, str] = {}
    for name, value in spec.params.items():
        if isinstance(value, str) and value in axis_names and name not in op.string_inputs:
            aliases[name] = value
        else:
            fixed[name] = value

    def evaluate(combo: tuple[float, ...]) -> tuple:
        point = dict(zip(axis_names, combo))
        kwargs = dict(fixed)
        kwargs.update(point)
        for name, source in aliases.items():
            kwargs[name] = point[source]
        try:
            outputs = op.fn(**kwargs)
        except Exception as exc:
            where = ", ".join(f"{k}={v!r}" for k, v in sorted(kwargs.items()))
            raise SweepError(
                f"operation {spec.operation!r} failed at ({where}): {exc}"
            ) from exc
        return combo + tuple(outputs)

    combos = list(product(*axis_points)) if axis_points else [()]
    workers = worker_count()
    if workers > 1 and len(combos) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(evaluate, combos))
    else:
        rows = [evaluate(combo) for combo in combos]
    table = ResultTable(tuple(axis_names) + op.outputs, tuple(rows))
    if spec.out_path is not None:
        table.write_csv(spec.out_path)
    return table


def figure_phi_surface(grid_count: int) -> ResultTable:
    """The phi surface on the uniform [0,1]^2 grid (columns x, y, phi)."""
    spec = SweepSpec(
        operation="phi",
        axes=(
            AxisSpec("x", 0.0, 1.0, grid_count),
            AxisSpec("y", 0.0, 1.0, grid_count),
        ),
    )
    return run_sweep(spec)


def _nearest_int(x: float) -> int:
    return int(math.floor(x + 0.5))


def convergence_study(alpha: float, rho: float, n_list) -> ResultTable:
    """Finite-n sphere exponents against the asymptotic value.

    For each n, takes the concentric sphere pair of radius round(n h_inv(alpha)),
    computes the exact exponent -(1/n) log2 P through the oracle, and
    reports the gap to `sphere_exponent` raw and scaled by n / log2(n).
    The realized rate log2 C(n, radius) / n accompanies the nominal alpha
    since the radius is rounded.
    """
    sizes = [int(n) for n in n_list]
    if not sizes:
        raise ValueError("n list must be nonempty")
    radius_fraction = entropy.binary_entropy_inv(alpha)
    asymptotic = exponents.sphere_exponent(alpha, alpha, rho, "same").value
    rows = []
    for n in sizes:
        radius = _nearest_int(n * radius_fraction)
        if radius < 1:
            raise ValueError(
                f"radius rounds to 0 at n={n} for alpha={alpha!r} (degenerate sphere)"
            )
        profile = sphere_distance_profile(n, radius, radius)
        oracle_exponent = -rectangle_prob(profile, rho) / n
        realized = entropy.log_binomial(n, radius) / n
        gap = oracle_exponent - asymptotic
        rows.append(
            (
                n,
                radius,
                realized,
                oracle_exponent,
                asymptotic,
                gap,
                gap * n / math.log2(n),
            )
        )
    return ResultTable(
        (
            "n",
            "radius",
            "realized_alpha",
            "oracle_exponent",
            "asymptotic_exponent",
            "gap",
            "gap_scaled",
        ),
        tuple(rows),
    )
