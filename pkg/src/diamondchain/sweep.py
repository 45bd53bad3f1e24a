"""Parameter sweeps, figure presets, contour extraction, CSV emission.

A sweep fixes the chain parameters, varies one or two axes (outer axis
major in the output), and records the requested observables for both
the impurity dimer and the homogeneous reference chain at every grid
point.  Emission is deterministic: identical specs produce
byte-identical CSV.
"""

import itertools
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .measures import concurrence_xstate, l1_coherence, threshold_temperatures
from .model import ChainSpec, Thermal
from .rdm import rdm_thermo
from .teleport import average_fidelity

__all__ = [
    "SweepConfigError",
    "Axis",
    "SweepSpec",
    "SweepResult",
    "ContourSpec",
    "run_sweep",
    "evaluate_point",
    "run_threshold",
    "extract_contour",
    "emit_csv",
    "PRESETS",
    "Preset",
    "preset_sweep_spec",
]

PARAM_COLUMNS = ("T", "h", "Delta", "alpha", "gamma", "eta")
AXIS_NAMES = ("T", "h", "Delta", "J1", "alpha", "gamma", "eta")
OBSERVABLES = ("concurrence", "coherence", "fidelity-avg", "f_p", "f_c", "rdm-elements")

DEFAULT_FIXED = {
    "J": 1.0,
    "J1": 1.0,
    "Delta": 1.0,
    "h": 0.0,
    "alpha": 0.0,
    "gamma": 0.0,
    "eta": 0.0,
    "T": 1.0,
}

_OBSERVABLE_FIELDS = {
    "concurrence": ("concurrence",),
    "coherence": ("coherence",),
    "fidelity-avg": ("F_A",),
    "f_p": ("f_p",),
    "f_c": ("f_c",),
    "rdm-elements": ("rho11", "rho22", "rho23", "rho44"),
}


class SweepConfigError(ValueError):
    """Invalid sweep/contour configuration, detected before computing."""


@dataclass(frozen=True)
class Axis:
    """One swept parameter: a name and the ordered values it takes."""

    name: str
    values: tuple[float, ...]

    @classmethod
    def from_range(cls, name: str, lo: float, hi: float, steps: int) -> "Axis":
        if steps < 2:
            raise SweepConfigError(f"axis {name!r} needs steps >= 2, got {steps}")
        if not lo < hi:
            raise SweepConfigError(f"axis {name!r} needs min < max")
        return cls(name, tuple(float(v) for v in np.linspace(lo, hi, steps)))


@dataclass(frozen=True)
class SweepSpec:
    """Fixed parameters, one or two axes, and the observables to record."""

    axes: tuple[Axis, ...]
    observables: tuple[str, ...] = ("concurrence",)
    fixed: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= len(self.axes) <= 2:
            raise SweepConfigError("a sweep takes one or two axes")
        names = [ax.name for ax in self.axes]
        if len(set(names)) != len(names):
            raise SweepConfigError("axis names must be distinct")
        for ax in self.axes:
            if ax.name not in AXIS_NAMES:
                raise SweepConfigError(
                    f"unknown axis {ax.name!r}; choose from {AXIS_NAMES}"
                )
            if len(ax.values) < 1:
                raise SweepConfigError(f"axis {ax.name!r} has no values")
            if ax.name == "T" and min(ax.values) <= 0.0:
                raise SweepConfigError("temperature axis must stay positive")
        for key in self.fixed:
            if key not in DEFAULT_FIXED:
                raise SweepConfigError(f"unknown parameter {key!r}")
        if "T" not in names and self.params_at().get("T", 1.0) <= 0.0:
            raise SweepConfigError("fixed temperature must be positive")
        if not self.observables:
            raise SweepConfigError("no observables requested")
        for obs in self.observables:
            if obs not in OBSERVABLES:
                raise SweepConfigError(
                    f"unknown observable {obs!r}; choose from {OBSERVABLES}"
                )

    def params_at(self, **axis_values: float) -> dict[str, float]:
        params = dict(DEFAULT_FIXED)
        params.update(self.fixed)
        params.update(axis_values)
        return params

    def param_columns(self) -> tuple[str, ...]:
        extra = tuple(
            ax.name for ax in self.axes if ax.name not in PARAM_COLUMNS
        )
        return PARAM_COLUMNS + extra


@dataclass(frozen=True)
class SweepResult:
    """Evaluated grid: the generating spec plus one record per point."""

    spec: SweepSpec
    records: tuple[dict, ...]


def evaluate_point(params: Mapping[str, float], observables: Iterable[str]) -> dict:
    """All requested observables at one parameter point.

    Returns impurity-dimer columns suffixed ``_imp`` and homogeneous
    reference columns suffixed ``_ref``.
    """
    spec = ChainSpec.from_params(
        J=params["J"],
        Delta=params["Delta"],
        J1=params["J1"],
        h=params["h"],
        alpha=params["alpha"],
        gamma=params["gamma"],
        eta=params["eta"],
    )
    t = Thermal(params["T"])
    states = {"imp": rdm_thermo(spec, t), "ref": rdm_thermo(spec.homogeneous(), t)}

    row: dict[str, float] = {}
    for obs in observables:
        for tag, x in states.items():
            if obs == "concurrence":
                row[f"concurrence_{tag}"] = concurrence_xstate(x)
            elif obs == "coherence":
                row[f"coherence_{tag}"] = l1_coherence(x)
            elif obs in ("fidelity-avg", "f_p", "f_c"):
                f_avg, f_pop, f_coh = average_fidelity(x)
                key = {"fidelity-avg": "F_A", "f_p": "f_p", "f_c": "f_c"}[obs]
                row[f"{key}_{tag}"] = {"F_A": f_avg, "f_p": f_pop, "f_c": f_coh}[key]
            elif obs == "rdm-elements":
                row[f"rho11_{tag}"] = x.rho11
                row[f"rho22_{tag}"] = x.rho22
                row[f"rho23_{tag}"] = x.rho23
                row[f"rho44_{tag}"] = x.rho44
    return row


def run_sweep(spec: SweepSpec, mapper: Callable | None = None) -> SweepResult:
    """Evaluate the grid, outer axis major.

    ``mapper`` may be an order-preserving parallel map (for example
    ``ThreadPoolExecutor().map``); the output is identical to the serial
    run because records are assembled in grid order regardless.
    """
    points = [
        spec.params_at(**dict(zip((ax.name for ax in spec.axes), combo)))
        for combo in itertools.product(*(ax.values for ax in spec.axes))
    ]
    apply = mapper if mapper is not None else map
    rows = list(apply(lambda p: evaluate_point(p, spec.observables), points))

    columns = spec.param_columns()
    records = []
    for params, row in zip(points, rows):
        record = {name: params[name] for name in columns}
        record.update(row)
        records.append(record)
    return SweepResult(spec=spec, records=tuple(records))


def run_threshold(
    fixed: Mapping[str, float],
    axis: Axis | None,
    t_min: float,
    t_max: float,
    scan_points: int = 2000,
) -> tuple[dict, ...]:
    """Threshold roots at one point or along one non-T axis.

    One record per root: the parameter columns, the root index, the
    root temperature, and the E/D transition it implements.  Points
    whose range is uniformly entangled or disentangled contribute no
    records.
    """
    if axis is not None and axis.name == "T":
        raise SweepConfigError("threshold scans vary T internally; pick another axis")
    params0 = dict(DEFAULT_FIXED)
    params0.update(fixed)

    axis_values: tuple[float, ...] = (0.0,) if axis is None else axis.values
    records = []
    for value in axis_values:
        params = dict(params0)
        if axis is not None:
            params[axis.name] = value
        spec = ChainSpec.from_params(
            J=params["J"],
            Delta=params["Delta"],
            J1=params["J1"],
            h=params["h"],
            alpha=params["alpha"],
            gamma=params["gamma"],
            eta=params["eta"],
        )
        found = threshold_temperatures(spec, t_min, t_max, scan_points)
        columns = list(PARAM_COLUMNS[1:])
        if axis is not None and axis.name not in columns:
            columns.append(axis.name)
        for k, root in enumerate(found.roots):
            record = {name: params[name] for name in columns}
            record["root_index"] = float(k)
            record["T_root"] = root
            record["transition"] = f"{found.labels[k]}->{found.labels[k + 1]}"
            records.append(record)
    return tuple(records)


@dataclass(frozen=True)
class ContourSpec:
    """A level set of one recorded observable column, e.g. F_A_imp = 2/3."""

    observable: str
    level: float = 2.0 / 3.0

    def __post_init__(self):
        if not np.isfinite(self.level):
            raise SweepConfigError(f"contour level must be finite, got {self.level}")


def extract_contour(
    cspec: ContourSpec,
    result: SweepResult,
    evaluate: Callable[[float, float], float] | None = None,
    tol: float = 1e-5,
) -> list[list[tuple[float, float]]]:
    """Level-set polylines of an observable on a 2-axis (x, T) grid.

    For every grid column (fixed non-T value) the crossings of
    observable - level along T are bracketed on the grid and refined by
    bisection to |dT| < ``tol``.  Branch k collects the k-th crossing of
    each column, ordered by column; columns without a k-th crossing are
    skipped.  ``evaluate(x, T)`` overrides the default re-evaluation of
    the recorded observable (useful for synthetic grids).
    """
    spec = result.spec
    if len(spec.axes) != 2:
        raise SweepConfigError("contours need a two-axis grid")
    names = [ax.name for ax in spec.axes]
    if "T" not in names:
        raise SweepConfigError("contours need T as one axis")
    t_pos = names.index("T")
    x_axis = spec.axes[1 - t_pos]
    t_axis = spec.axes[t_pos]
    if any(b <= a for a, b in zip(t_axis.values, t_axis.values[1:])):
        raise SweepConfigError("contour T axis must be strictly increasing")
    sample = result.records[0]
    if cspec.observable not in sample:
        raise SweepConfigError(
            f"observable column {cspec.observable!r} not in sweep records"
        )

    if evaluate is None:

        def evaluate(x: float, temp: float) -> float:
            params = spec.params_at(**{x_axis.name: x, "T": temp})
            return evaluate_point(params, spec.observables)[cspec.observable]

    n_x, n_t = len(x_axis.values), len(t_axis.values)
    grid = np.empty((n_x, n_t))
    for k, record in enumerate(result.records):
        # records are outer-axis major
        i, j = divmod(k, len(spec.axes[1].values))
        ix, it = (j, i) if t_pos == 0 else (i, j)
        grid[ix, it] = record[cspec.observable]

    column_roots: list[list[float]] = []
    for ix, x in enumerate(x_axis.values):
        values = grid[ix] - cspec.level
        roots = []
        for j in range(n_t - 1):
            f_lo, f_hi = values[j], values[j + 1]
            if f_lo == 0.0:
                roots.append(float(t_axis.values[j]))
                continue
            if f_lo * f_hi >= 0.0:
                continue
            lo, hi = t_axis.values[j], t_axis.values[j + 1]
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                f_mid = evaluate(x, mid) - cspec.level
                if f_mid == 0.0:
                    lo = hi = mid
                    break
                if f_lo * f_mid < 0.0:
                    hi = mid
                else:
                    lo, f_lo = mid, f_mid
            roots.append(0.5 * (lo + hi))
        if values[-1] == 0.0:
            roots.append(float(t_axis.values[-1]))
        column_roots.append(roots)

    branches: list[list[tuple[float, float]]] = []
    max_roots = max((len(r) for r in column_roots), default=0)
    for k in range(max_roots):
        branch = [
            (float(x), column_roots[ix][k])
            for ix, x in enumerate(x_axis.values)
            if len(column_roots[ix]) > k
        ]
        if branch:
            branches.append(branch)
    return branches


def _format_value(value) -> str:
    if isinstance(value, str):
        return value
    return f"{float(value):.12g}"


def emit_csv(records, destination) -> None:
    """Write records as UTF-8 CSV,12 significant digits, LF endings.

    ``records`` is a SweepResult or an iterable of dicts sharing one key
    set; ``destination`` a path or a writable text file object.
    """
    if isinstance(records, SweepResult):
        records = records.records
    records = list(records)
    if not records:
        raise SweepConfigError("no records to emit")
    header = list(records[0].keys())

    def write(stream) -> None:
        stream.write(",".join(header) + "\n")
        for record in records:
            stream.write(",".join(_format_value(record[k]) for k in header) + "\n")

    if hasattr(destination, "write"):
        write(destination)
    else:
        with open(Path(destination), "w", encoding="utf-8", newline="\n") as stream:
            write(stream)


@dataclass(frozen=True)
class Preset:
    """Figure-reproduction recipe: fixed parameters plus default axes."""

    kind: str  # "sweep", "grid", or "threshold"
    fixed: dict
    observables: tuple[str, ...]
    outer: Axis | None = None
    t_min: float = 0.01
    t_max: float = 2.0
    t_steps: int = 400


_IMPURITY = {"alpha": 0.0, "gamma": 0.8, "eta": -0.8}

PRESETS: dict[str, Preset] = {
    "fig2a": Preset(
        kind="sweep",
        fixed={"Delta": 1.0, **_IMPURITY},
        observables=("concurrence",),
        outer=Axis("h", (0.5, 1.0, 2.0)),
    ),
    "fig2b": Preset(
        kind="sweep",
        fixed={"Delta": 1.3, **_IMPURITY},
        observables=("concurrence",),
        outer=Axis("h", (0.5, 1.0, 2.2)),
    ),
    "fig3a": Preset(
        kind="sweep",
        fixed={"Delta": 1.0, **_IMPURITY},
        observables=("coherence",),
        outer=Axis("h", (0.5, 1.0, 2.0)),
    ),
    "fig3b": Preset(
        kind="sweep",
        fixed={"Delta": 1.3, **_IMPURITY},
        observables=("coherence",),
        outer=Axis("h", (0.5, 1.0, 2.2)),
    ),
    "fig4a": Preset(
        kind="threshold",
        fixed={"h": 2.0, **_IMPURITY},
        observables=(),
        outer=Axis.from_range("Delta", 0.0, 2.0, 101),
    ),
    "fig4b": Preset(
        kind="threshold",
        fixed={"h": 2.2, **_IMPURITY},
        observables=(),
        outer=Axis.from_range("Delta", 0.0, 2.0, 101),
    ),
    "fig5a": Preset(
        kind="grid",
        fixed={"h": 0.0, **_IMPURITY},
        observables=("fidelity-avg",),
        outer=Axis.from_range("Delta", 0.0, 4.0, 200),
        t_max=1.5,
        t_steps=200,
    ),
    "fig5b": Preset(
        kind="grid",
        fixed={"h": 1.0, **_IMPURITY},
        observables=("fidelity-avg",),
        outer=Axis.from_range("Delta", 0.0, 4.0, 200),
        t_max=1.5,
        t_steps=200,
    ),
    # the teleportation-schematic figure carries no data; emit the
    # channel state itself over temperature instead
    "fig6-channel": Preset(
        kind="sweep",
        fixed={"Delta": 1.0, "h": 0.0, **_IMPURITY},
        observables=("rdm-elements",),
    ),
    "fig7": Preset(
        kind="sweep",
        fixed={"Delta": 0.5, "h": 0.0, "alpha": 0.0, "gamma": 0.0, "eta": 0.0},
        observables=("fidelity-avg", "f_p", "f_c"),
    ),
}


def preset_sweep_spec(
    preset: Preset,
    t_min: float | None = None,
    t_max: float | None = None,
    t_steps: int | None = None,
    outer_values: tuple[float, ...] | None = None,
) -> SweepSpec:
    """SweepSpec for a sweep/grid preset, with optional overrides."""
    if preset.kind == "threshold":
        raise SweepConfigError("threshold presets are served by run_threshold")
    t_axis = Axis.from_range(
        "T",
        preset.t_min if t_min is None else t_min,
        preset.t_max if t_max is None else t_max,
        preset.t_steps if t_steps is None else t_steps,
    )
    axes: tuple[Axis, ...]
    if preset.outer is None:
        axes = (t_axis,)
    elif outer_values is not None:
        axes = (Axis(preset.outer.name, tuple(outer_values)), t_axis)
    else:
        axes = (preset.outer, t_axis)
    return SweepSpec(axes=axes, observables=preset.observables, fixed=preset.fixed)
