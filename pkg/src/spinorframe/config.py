"""Scenario configuration documents.

A document is JSON of the form::

    {"scenarios": [
        {"name": "helix", "mode": "Compare",
         "curve": {"kind": "Helix", "a": 3, "b": 4},
         "s0": 0, "s1": 10, "step": 0.001}
    ]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import jsonschema

from .catalog import CURVE_KINDS, SURFACE_KINDS, CurveSpec, SurfaceSpec, make_curve, make_surface
from .errors import InvalidSpec, ParseError, SchemaError

__all__ = ["MODES", "FORMATS", "ScenarioConfig", "parse_config", "SCHEMA"]

MODES = ("Frenet", "Darboux", "Compare", "Theorem2")
FORMATS = ("csv", "json")

_NUMBER = {"type": "number"}

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["scenarios"],
    "properties": {
        "scenarios": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name", "mode", "curve", "s1"],
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "mode": {"enum": list(MODES)},
                    "curve": {
                        "type": "object",
                        "required": ["kind"],
                        "properties": {"kind": {"enum": list(CURVE_KINDS)}},
                    },
                    "surface": {
                        "type": "object",
                        "required": ["kind"],
                        "properties": {
                            "kind": {"enum": list(SURFACE_KINDS)},
                            "orientation": {"enum": ["Outward", "Inward"]},
                        },
                    },
                    "s0": _NUMBER,
                    "s1": _NUMBER,
                    "step": {"type": "number", "exclusiveMinimum": 0},
                    "renormalize": {"type": "boolean"},
                    "output_path": {"type": "string", "minLength": 1},
                    "format": {"enum": list(FORMATS)},
                },
            },
        }
    },
}


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    mode: str
    curve: CurveSpec
    surface: SurfaceSpec | None = None
    s0: float = 0.0
    s1: float = 1.0
    step: float = 1e-3
    renormalize: bool = False
    output_path: str = ""
    format: str = "csv"

    def __post_init__(self):
        if not self.output_path:
            object.__setattr__(self, "output_path", f"{self.name}.{self.format}")

    def with_overrides(self, **kw) -> "ScenarioConfig":
        kw = {k: v for k, v in kw.items() if v is not None}
        if "format" in kw and "output_path" not in kw and \
                self.output_path == f"{self.name}.{self.format}":
            kw["output_path"] = f"{self.name}.{kw['format']}"
        return replace(self, **kw)


def _pointer(parts) -> str:
    return "/" + "/".join(str(p) for p in parts)


def _scenario(raw: dict, path: str) -> ScenarioConfig:
    curve_raw = dict(raw["curve"])
    curve = CurveSpec(curve_raw.pop("kind"), curve_raw)
    try:
        make_curve(curve)
    except InvalidSpec as exc:
        raise SchemaError(str(exc), f"{path}/curve") from None

    surface = None
    if "surface" in raw:
        surf_raw = dict(raw["surface"])
        kind = surf_raw.pop("kind")
        orientation = surf_raw.pop("orientation", "Outward")
        surface = SurfaceSpec(kind, surf_raw, orientation)
        try:
            make_surface(surface)
        except InvalidSpec as exc:
            raise SchemaError(str(exc), f"{path}/surface") from None

    s0 = float(raw.get("s0", 0.0))
    s1 = float(raw["s1"])
    step = float(raw.get("step", 1e-3))
    if not s1 > s0:
        raise SchemaError(f"s1={s1} must exceed s0={s0}", f"{path}/s1")
    if step > s1 - s0:
        raise SchemaError(f"step={step} exceeds the range s1-s0={s1 - s0}", f"{path}/step")
    if raw["mode"] in ("Darboux", "Theorem2") and surface is None:
        raise SchemaError(f"mode {raw['mode']} requires a surface", f"{path}/surface")
    return ScenarioConfig(
        name=raw["name"], mode=raw["mode"], curve=curve, surface=surface,
        s0=s0, s1=s1, step=step, renormalize=bool(raw.get("renormalize", False)),
        output_path=raw.get("output_path", ""), format=raw.get("format", "csv"),
    )


def parse_config(text: str) -> list[ScenarioConfig]:
    """Parse and validate a scenario document.

    Raises ``ParseError`` for malformed JSON and ``SchemaError`` (carrying a
    JSON pointer in ``.path``) for anything structurally or semantically
    invalid.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    validator = jsonschema.Draft202012Validator(SCHEMA)
    err = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if err is not None:
        raise SchemaError(err.message, _pointer(err.absolute_path))
    scenarios = [_scenario(raw, f"/scenarios/{i}") for i, raw in enumerate(doc["scenarios"])]
    names = [sc.name for sc in scenarios]
    for i, name in enumerate(names):
        if name in names[:i]:
            raise SchemaError(f"duplicate scenario name {name!r}", f"/scenarios/{i}/name")
    return scenarios
