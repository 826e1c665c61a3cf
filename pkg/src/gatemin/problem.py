"""Problem spec files: JSON descriptions of a function plus an architecture.

Schema (all gate/connectivity names case-insensitive):

    {
      "variables": 3,
      "outputs": ["6b", "sum:1,3,5"],
      "dont_care": "03",                  // optional hex or "sum:..." list
      "levels": 3,
      "gates_per_level": 2,               // or [2, 2, 1]
      "connectivity": "previous-level",   // or "all-previous"
      "gate_set": ["NAND"],               // or "all"
      "objective": "gate-count",          // or "transistor"
      "outputs_at": [[3, 1], [3, 2]]      // optional, defaults to 1..Q
    }
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Tuple, Union

from .bitvec import Bitvector, TruthSpec, parse_function
from .gates import parse_gate_set
from .topology import Architecture, validate


class ProblemFormatError(ValueError):
    pass


def _require(data: Dict, field: str):
    if field not in data:
        raise ProblemFormatError(f"missing field {field!r}")
    return data[field]


def load_problem(source: Union[str, Path, Dict]) -> Tuple[TruthSpec, Architecture, str]:
    """Load and validate a problem description; returns (spec, arch, mode)."""
    if isinstance(source, (str, Path)):
        try:
            data = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise ProblemFormatError(f"{source}: invalid JSON ({exc})") from None
    else:
        data = source
    n = _require(data, "variables")
    if not isinstance(n, int):
        raise ProblemFormatError(f"field 'variables' must be an integer, got {n!r}")
    raw_outputs = _require(data, "outputs")
    if isinstance(raw_outputs, str):
        raw_outputs = [raw_outputs]
    try:
        outputs = tuple(parse_function(text, n) for text in raw_outputs)
        dc = (parse_function(data["dont_care"], n)
              if data.get("dont_care") else Bitvector(n, 0))
        spec = TruthSpec(n, outputs, dc)
    except ValueError as exc:
        raise ProblemFormatError(str(exc)) from None

    levels = _require(data, "levels")
    widths = _require(data, "gates_per_level")
    if isinstance(widths, int):
        widths = [widths] * levels
    if len(widths) != levels:
        raise ProblemFormatError(
            f"'gates_per_level' lists {len(widths)} levels, 'levels' says {levels}")
    outputs_at = tuple(tuple(coord) for coord in data.get("outputs_at", ()))
    if not outputs_at:
        outputs_at = tuple((levels, q) for q in range(1, spec.num_outputs + 1))
    try:
        arch = Architecture(
            num_vars=n,
            per_level_width=tuple(widths),
            connectivity=data.get("connectivity", "previous-level").strip().lower(),
            gate_set=parse_gate_set(data.get("gate_set", "all")),
            outputs_at=outputs_at,
        )
        validate(arch, spec)
    except ValueError as exc:
        raise ProblemFormatError(str(exc)) from None

    mode = data.get("objective", "gate-count").strip().lower()
    if mode not in ("gate-count", "transistor"):
        raise ProblemFormatError(f"unknown objective {mode!r}")
    return spec, arch, mode


def grow(arch: Architecture, step: int) -> Architecture:
    """One step of the retry ladder: widen the lower levels, then deepen."""
    widths = list(arch.per_level_width)
    if step % 2 == 1:
        widths = [w + 1 for w in widths[:-1]] + [widths[-1]] if len(widths) > 1 \
            else [widths[0] + 1]
    else:
        widths = widths[:-1] + [widths[-1], widths[-1]]
    outputs = tuple((len(widths), pos) for (_, pos) in arch.outputs_at)
    return Architecture(arch.num_vars, tuple(widths), arch.connectivity,
                        arch.gate_set, outputs)
