"""JSON-compatible reports emitted by the command line front-end.

Schema (all polynomials are canonical text)::

    {
      "command": str,                 # subcommand name
      "argv": [str, ...],             # arguments as given
      "context": {"field": str, "sigma_y": str, "delta_y": str} | null,
      "results": {...},               # command specific, see below
      "flags": {"stable": bool|null, "sound": bool|null, "verified": bool|null},
      "timing": {"seconds": float}
    }

``results`` for ``centralizer`` / ``basis`` carries ``P``, ``max_xdeg``,
``ydeg_bound``, ``dimension``, ``dimension_extended``, ``basis``,
``module_generators``, ``generator_count``, ``commutative``,
``leading_dims`` (x-degree -> dimension, keys as strings),
``truncated_powers``, ``degenerate``, ``criteria`` and ``notes``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .centralizer import CentralizerReport
from .ore import OreContext


@dataclass
class Report:
    command: str
    argv: list = field(default_factory=list)
    context: dict | None = None
    results: dict = field(default_factory=dict)
    flags: dict = field(default_factory=lambda: {"stable": None, "sound": None, "verified": None})
    timing: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        return cls(**{k: data[k] for k in ("command", "argv", "context", "results", "flags", "timing")})

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        lines = [f"command: {self.command}"]
        if self.context:
            c = self.context
            lines.append(f"context: {c['field']}, sigma(y) = {c['sigma_y']}, delta(y) = {c['delta_y']}")
        for key, value in self.results.items():
            if isinstance(value, list) and value and all(isinstance(v, str) for v in value):
                lines.append(f"{key}:")
                lines.extend(f"  {v}" for v in value)
            else:
                lines.append(f"{key}: {_short(value)}")
        flags = {k: v for k, v in self.flags.items() if v is not None}
        if flags:
            lines.append("flags: " + ", ".join(f"{k}={v}" for k, v in flags.items()))
        return "\n".join(lines)


def _short(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def context_to_dict(ctx: OreContext) -> dict:
    return {"field": ctx.field.name, "sigma_y": str(ctx.sigma_y), "delta_y": str(ctx.delta_y)}


def centralizer_results(report: CentralizerReport) -> dict:
    return {
        "P": str(report.P),
        "max_xdeg": report.max_xdeg,
        "ydeg_bound": report.ydeg_bound,
        "stability_delta": report.stability_delta,
        "dimension": report.dimension,
        "dimension_extended": report.dimension_extended,
        "basis": [str(q) for q in report.basis],
        "module_generators": [str(g) for g in report.module_generators],
        "generator_count": report.generator_count,
        "commutative": report.commutative,
        "leading_dims": {str(k): v for k, v in report.leading_dims.items()},
        "constants_only_in_degree_zero": report.constants_only_in_degree_zero,
        "rank_bound_ok": report.rank_bound_ok,
        "truncated_powers": list(report.truncated_powers),
        "degenerate": report.degenerate,
        "criteria": report.criteria,
        "notes": list(report.notes),
    }
