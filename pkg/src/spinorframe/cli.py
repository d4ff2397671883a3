"""Command-line front end.

Usage::

    spinorframe list
    spinorframe compare --config scenarios.json
    spinorframe compare --curve Helix:a=3,b=4 --range 0:10 --output helix.csv
    spinorframe theorem2 --curve SphereLatitude:alpha=0.785398 \\
        --surface Sphere:R=1 --range 0:6 --format json

Exit status is 0 on success, 1 if any scenario (or its config) fails and 2
on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import CURVE_KINDS, SURFACE_KINDS, CurveSpec, SurfaceSpec
from .config import FORMATS, ScenarioConfig, parse_config
from .errors import SpinorFrameError
from .report import format_real, write_report
from .verification import run_scenario

__all__ = ["main", "build_parser"]

SUBCOMMAND_MODES = {
    "frenet": "Frenet",
    "darboux": "Darboux",
    "compare": "Compare",
    "theorem2": "Theorem2",
}


class _Usage(Exception):
    pass


def _kind_with_params(text: str, kinds) -> tuple[str, dict]:
    kind, _, rest = text.partition(":")
    if kind not in kinds:
        raise _Usage(f"unknown kind {kind!r}; choose from {', '.join(kinds)}")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq:
            raise _Usage(f"expected key=value, got {item!r}")
        try:
            params[key] = float(value)
        except ValueError:
            params[key] = value
    return kind, params


def _range(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return float(lo), float(hi)
    except ValueError:
        raise _Usage(f"--range expects S0:S1, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinorframe",
        description="Spinor transport of Frenet and Darboux frames.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("list", help="list catalog curves and surfaces")
    for name in SUBCOMMAND_MODES:
        p = sub.add_parser(name, help=f"run scenarios in {SUBCOMMAND_MODES[name]} mode")
        p.add_argument("--config", metavar="PATH", help="JSON scenario document")
        p.add_argument("--output", metavar="PATH", help="output file (single scenario only)")
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--step", type=float, metavar="REAL")
        p.add_argument("--range", dest="range_", metavar="S0:S1")
        p.add_argument("--renormalize", action="store_true", default=None)
        p.add_argument("--curve", metavar="KIND[:k=v,...]", help="inline curve")
        p.add_argument("--surface", metavar="KIND[:k=v,...]", help="inline surface")
        p.add_argument("--name", default="scenario", help="inline scenario name")
    return parser


def _list_catalog(out) -> None:
    print("curves:", file=out)
    for kind, params in CURVE_KINDS.items():
        print(f"  {kind}({', '.join(params)})", file=out)
    print("surfaces:", file=out)
    for kind, params in SURFACE_KINDS.items():
        print(f"  {kind}({', '.join(params)}) orientation=Outward|Inward", file=out)


def _inline_scenario(args, mode) -> ScenarioConfig:
    if args.range_ is None:
        raise _Usage("inline scenarios need --range S0:S1")
    kind, params = _kind_with_params(args.curve, CURVE_KINDS)
    surface = None
    if args.surface:
        skind, sparams = _kind_with_params(args.surface, SURFACE_KINDS)
        orientation = sparams.pop("orientation", "Outward")
        surface = SurfaceSpec(skind, sparams, orientation)
    s0, s1 = _range(args.range_)
    return ScenarioConfig(name=args.name, mode=mode, curve=CurveSpec(kind, params),
                          surface=surface, s0=s0, s1=s1)


def _summary_line(report, path) -> str:
    parts = [f"{report.scenario}: mode={report.mode}", f"samples={len(report.records)}"]
    for key, label in (("max_err_spinor_vs_vector", "max_frame_err"),
                       ("max_err_vs_analytic", "max_analytic_err"),
                       ("max_norm_drift", "max_norm_drift"),
                       ("max_theorem2_residual", "max_theorem2_residual")):
        if report.summary.get(key) is not None:
            parts.append(f"{label}={format_real(report.summary[key])}")
    parts.append(f"-> {path}")
    return " ".join(parts)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "list":
        _list_catalog(out)
        return 0

    mode = SUBCOMMAND_MODES[args.command]
    try:
        if args.config and args.curve:
            raise _Usage("give either --config or --curve, not both")
        if not args.config and not args.curve:
            raise _Usage("one of --config or --curve is required")
        if args.config:
            try:
                with open(args.config) as fh:
                    scenarios = parse_config(fh.read())
            except (OSError, SpinorFrameError) as exc:
                print(f"error: config {args.config}: {exc}", file=err)
                return 1
        else:
            scenarios = [_inline_scenario(args, mode)]
        if args.output and len(scenarios) > 1:
            raise _Usage("--output needs a single scenario")
        overrides = {"mode": mode, "step": args.step, "format": args.format,
                     "renormalize": args.renormalize, "output_path": args.output}
        if args.range_ is not None:
            overrides["s0"], overrides["s1"] = _range(args.range_)
    except _Usage as exc:
        parser.print_usage(err)
        print(f"spinorframe: error: {exc}", file=err)
        return 2

    status = 0
    for scenario in scenarios:
        scenario = scenario.with_overrides(**overrides)
        try:
            report = run_scenario(scenario)
            path = write_report(report, scenario.output_path, scenario.format)
        except (SpinorFrameError, OSError) as exc:
            print(f"error: scenario {scenario.name}: {type(exc).__name__}: {exc}", file=err)
            status = 1
            continue
        print(_summary_line(report, path), file=out)
    return status


if __name__ == "__main__":
    sys.exit(main())
