"""Command-line driver for sweeps, thresholds, contours, and points.

Subcommands
-----------
sweep      observables over T (optionally times an h list) -> CSV
threshold  entanglement-threshold roots at a point or along an axis -> CSV
contour    level set of an observable on a (Delta, T) grid -> CSV
point      every observable at a single parameter point -> CSV

All parameter flags may also come from a flat ``key = value`` config
file (--config); explicit flags win.  Output goes to --out or stdout.
Exit status is 0 on success, 2 on a configuration error.
"""

import argparse
import sys

from .sweep import (
    PRESETS,
    Axis,
    ContourSpec,
    SweepConfigError,
    SweepSpec,
    emit_csv,
    extract_contour,
    preset_sweep_spec,
    run_sweep,
    run_threshold,
)

_FLOAT_KEYS = ("J1", "delta", "alpha", "gamma", "eta", "t_min", "t_max", "T", "level")
_DEFAULTS = {
    "J1": 1.0,
    "delta": 1.0,
    "h": (0.0,),
    "alpha": 0.0,
    "gamma": 0.0,
    "eta": 0.0,
    "t_min": 0.01,
    "t_max": 2.0,
    "t_steps": 400,
    "T": 1.0,
    "level": 2.0 / 3.0,
    "scan_points": 2000,
    "observables": "concurrence,coherence,fidelity-avg,f_p,f_c,rdm-elements",
}


def _parse_float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise SweepConfigError(f"expected comma-separated numbers, got {text!r}") from exc


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as exc:
        raise SweepConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise SweepConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        values[key.strip().lower().replace("-", "_")] = value.strip()
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamondchain",
        description="Exact observables of the Ising-XXZ diamond chain with one impurity plaquette.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--J1", type=float, help="nodal Ising coupling (default 1)")
        p.add_argument("--delta", help="anisotropy Delta; comma list allowed where it is an axis")
        p.add_argument("--h", help="field; comma list sweeps several fields")
        p.add_argument("--alpha", type=float, help="impurity exchange factor")
        p.add_argument("--gamma", type=float, help="impurity anisotropy factor")
        p.add_argument("--eta", type=float, help="impurity Ising-coupling factor")
        p.add_argument("--t-min", type=float, dest="t_min")
        p.add_argument("--t-max", type=float, dest="t_max")
        p.add_argument("--t-steps", type=int, dest="t_steps")
        p.add_argument("--preset", choices=sorted(PRESETS), help="figure preset")
        p.add_argument("--config", help="flat key = value file; flags override it")
        p.add_argument("--out", help="output CSV path (default stdout)")

    p_sweep = sub.add_parser("sweep", help="observables over a T grid (x optional h list)")
    add_common(p_sweep)
    p_sweep.add_argument("--observables", help="comma list; default all")

    p_threshold = sub.add_parser("threshold", help="entanglement threshold roots")
    add_common(p_threshold)
    p_threshold.add_argument("--scan-points", type=int, dest="scan_points")

    p_contour = sub.add_parser("contour", help="level set of an observable on a (Delta, T) grid")
    add_common(p_contour)
    p_contour.add_argument("--level", type=float, help="contour level (default 2/3)")
    p_contour.add_argument(
        "--observable",
        default=None,
        help="observable to contour (default fidelity-avg)",
    )

    p_point = sub.add_parser("point", help="all observables at one parameter point")
    add_common(p_point)
    p_point.add_argument("--T", type=float, dest="T", help="temperature (default 1)")

    return parser


class _Options:
    """Flag > config-file > default resolution for one invocation."""

    def __init__(self, args: argparse.Namespace):
        self.args = vars(args)
        self.config = _read_config(args.config) if args.config else {}

    def get(self, key: str):
        flag = self.args.get(key)
        if flag is not None:
            return flag
        if key.lower() in self.config:
            raw = self.config[key.lower()]
            if key in ("t_steps", "scan_points"):
                return int(raw)
            if key in _FLOAT_KEYS:
                return float(raw)
            return raw
        return _DEFAULTS.get(key)

    def float_list(self, key: str) -> tuple[float, ...]:
        value = self.get(key)
        if value is None:
            return ()
        if isinstance(value, tuple):
            return value
        if isinstance(value, (int, float)):
            return (float(value),)
        return _parse_float_list(value)

    def fixed_params(self) -> dict[str, float]:
        return {
            "J1": float(self.get("J1")),
            "alpha": float(self.get("alpha")),
            "gamma": float(self.get("gamma")),
            "eta": float(self.get("eta")),
        }


def _emit(records, opts: _Options) -> None:
    out = opts.get("out")
    if out is None:
        emit_csv(records, sys.stdout)
    else:
        emit_csv(records, out)


def _preset(opts: _Options):
    name = opts.get("preset")
    return PRESETS[name] if name else None


def _do_sweep(opts: _Options) -> None:
    preset = _preset(opts)
    args = opts.args
    if preset is not None:
        spec = preset_sweep_spec(
            preset,
            t_min=args.get("t_min"),
            t_max=args.get("t_max"),
            t_steps=args.get("t_steps"),
            outer_values=opts.float_list("h") if args.get("h") is not None else None,
        )
    else:
        t_axis = Axis.from_range(
            "T", float(opts.get("t_min")), float(opts.get("t_max")), int(opts.get("t_steps"))
        )
        h_values = opts.float_list("h")
        delta_values = opts.float_list("delta")
        if len(h_values) > 1 and len(delta_values) > 1:
            raise SweepConfigError("at most one of --h / --delta may be a list")
        axes: tuple[Axis, ...]
        fixed = opts.fixed_params()
        if len(h_values) > 1:
            axes = (Axis("h", h_values), t_axis)
            fixed["Delta"] = delta_values[0]
        elif len(delta_values) > 1:
            axes = (Axis("Delta", delta_values), t_axis)
            fixed["h"] = h_values[0]
        else:
            axes = (t_axis,)
            fixed["h"] = h_values[0]
            fixed["Delta"] = delta_values[0]
        observables = tuple(
            part.strip() for part in str(opts.get("observables")).split(",")
        )
        spec = SweepSpec(axes=axes, observables=observables, fixed=fixed)
    _emit(run_sweep(spec), opts)


def _do_threshold(opts: _Options) -> None:
    preset = _preset(opts)
    if preset is not None:
        if preset.kind != "threshold":
            raise SweepConfigError(f"preset {opts.get('preset')!r} is not a threshold preset")
        fixed = dict(preset.fixed)
        axis = preset.outer
        delta_values = opts.float_list("delta") if opts.args.get("delta") else ()
        if delta_values:
            axis = Axis("Delta", delta_values)
        if opts.args.get("h") is not None:
            fixed["h"] = opts.float_list("h")[0]
    else:
        fixed = opts.fixed_params()
        fixed["h"] = opts.float_list("h")[0]
        delta_values = opts.float_list("delta")
        axis = Axis("Delta", delta_values) if len(delta_values) > 1 else None
        if axis is None:
            fixed["Delta"] = delta_values[0]
    records = run_threshold(
        fixed,
        axis,
        t_min=float(opts.get("t_min")),
        t_max=float(opts.get("t_max")),
        scan_points=int(opts.get("scan_points")),
    )
    if not records:
        print("no threshold roots in range", file=sys.stderr)
        return
    _emit(records, opts)


def _do_contour(opts: _Options) -> None:
    preset = _preset(opts)
    if preset is not None:
        if preset.kind != "grid":
            raise SweepConfigError(f"preset {opts.get('preset')!r} is not a grid preset")
        spec = preset_sweep_spec(
            preset,
            t_min=opts.args.get("t_min"),
            t_max=opts.args.get("t_max"),
            t_steps=opts.args.get("t_steps"),
            outer_values=opts.float_list("delta") if opts.args.get("delta") else None,
        )
    else:
        delta_values = opts.float_list("delta")
        if len(delta_values) < 2:
            raise SweepConfigError("contour needs --preset or a --delta list")
        t_axis = Axis.from_range(
            "T", float(opts.get("t_min")), float(opts.get("t_max")), int(opts.get("t_steps"))
        )
        fixed = opts.fixed_params()
        fixed["h"] = opts.float_list("h")[0]
        observable = opts.get("observable") or "fidelity-avg"
        spec = SweepSpec(
            axes=(Axis("Delta", delta_values), t_axis),
            observables=(observable,),
            fixed=fixed,
        )
    result = run_sweep(spec)

    base = {"fidelity-avg": "F_A", "concurrence": "concurrence", "coherence": "coherence"}.get(
        (opts.get("observable") or "fidelity-avg"), "F_A"
    )
    level = float(opts.get("level"))
    axis_name = result.spec.axes[0].name
    records = []
    for tag in ("imp", "ref"):
        branches = extract_contour(ContourSpec(f"{base}_{tag}", level), result)
        for k, branch in enumerate(branches):
            for x, t_root in branch:
                records.append(
                    {"model": tag, "branch": float(k), axis_name: x, "T": t_root}
                )
    if not records:
        print("no contour crossings on the grid", file=sys.stderr)
        return
    _emit(records, opts)


def _do_point(opts: _Options) -> None:
    fixed = opts.fixed_params()
    fixed["h"] = opts.float_list("h")[0]
    fixed["Delta"] = opts.float_list("delta")[0]
    fixed["T"] = float(opts.get("T"))
    spec = SweepSpec(
        axes=(Axis("T", (fixed["T"],)),),
        observables=tuple(str(_DEFAULTS["observables"]).split(",")),
        fixed=fixed,
    )
    _emit(run_sweep(spec), opts)


_COMMANDS = {
    "sweep": _do_sweep,
    "threshold": _do_threshold,
    "contour": _do_contour,
    "point": _do_point,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _Options(args)
        _COMMANDS[args.command](opts)
    except (SweepConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
