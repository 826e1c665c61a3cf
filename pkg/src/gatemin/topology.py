"""Candidate-circuit skeletons: levels, widths, connectivity, output pinning."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .bitvec import TruthSpec
from .gates import CANONICAL_ORDER, Gate

PREVIOUS_LEVEL = "previous-level"
ALL_PREVIOUS = "all-previous"
CONNECTIVITIES = (PREVIOUS_LEVEL, ALL_PREVIOUS)


@dataclass(frozen=True)
class FeedEntity:
    """One possible source for a gate input.

    kind is one of "gate" (output of gate at `level`, `pos`), "var"
    (function variable x_`index`), "one" or "zero" (constants).
    """

    kind: str
    level: int = 0
    pos: int = 0
    index: int = 0

    @staticmethod
    def gate(level: int, pos: int) -> "FeedEntity":
        return FeedEntity("gate", level=level, pos=pos)

    @staticmethod
    def var(index: int) -> "FeedEntity":
        return FeedEntity("var", index=index)

    @staticmethod
    def one() -> "FeedEntity":
        return FeedEntity("one")

    @staticmethod
    def zero() -> "FeedEntity":
        return FeedEntity("zero")

    def label(self) -> str:
        if self.kind == "gate":
            return f"g{self.level}_{self.pos}"
        if self.kind == "var":
            return f"x{self.index}"
        return "1" if self.kind == "one" else "0"


@dataclass(frozen=True)
class Architecture:
    """A p-level arrangement of two-input gates.

    Output q of the function is pinned to the q-th entry of `outputs_at`,
    which must all sit on the top level.
    """

    num_vars: int
    per_level_width: Tuple[int, ...]
    connectivity: str = PREVIOUS_LEVEL
    gate_set: Tuple[Gate, ...] = CANONICAL_ORDER
    outputs_at: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("architecture needs at least one variable")
        if not self.per_level_width or any(w < 1 for w in self.per_level_width):
            raise ValueError("per-level widths must be positive")
        if self.connectivity not in CONNECTIVITIES:
            raise ValueError(f"unknown connectivity {self.connectivity!r}")
        if not self.gate_set:
            raise ValueError("empty gate set")
        # normalize gate order so selector indices are canonical
        ordered = tuple(k for k in CANONICAL_ORDER if k in self.gate_set)
        object.__setattr__(self, "gate_set", ordered)
        if not self.outputs_at:
            object.__setattr__(
                self, "outputs_at", ((self.levels, 1),))
        seen = set()
        for level, pos in self.outputs_at:
            if level != self.levels:
                raise ValueError(f"output at level {level} is not on the top level {self.levels}")
            if not (1 <= pos <= self.per_level_width[-1]):
                raise ValueError(f"output position {pos} exceeds top-level width")
            if (level, pos) in seen:
                raise ValueError(f"duplicate output position {(level, pos)}")
            seen.add((level, pos))

    @staticmethod
    def grid(levels: int, width: int, num_vars: int,
             connectivity: str = PREVIOUS_LEVEL,
             gate_set: Sequence[Gate] = CANONICAL_ORDER,
             num_outputs: int = 1) -> "Architecture":
        """A uniform levels x width grid with outputs pinned to positions 1..q."""
        outputs = tuple((levels, q) for q in range(1, num_outputs + 1))
        return Architecture(num_vars, (width,) * levels, connectivity,
                            tuple(gate_set), outputs)

    @property
    def levels(self) -> int:
        return len(self.per_level_width)

    def width(self, level: int) -> int:
        return self.per_level_width[level - 1]

    def positions(self) -> List[Tuple[int, int]]:
        """All gate coordinates in level-major order."""
        return [(i, j)
                for i in range(1, self.levels + 1)
                for j in range(1, self.width(i) + 1)]


def feed_entities(arch: Architecture, level: int) -> List[FeedEntity]:
    """The ordered feed choices for a gate input at `level`.

    Order is fixed (the encoder's selection index k refers to it): eligible
    gate outputs, then variables, then constant 1, then constant 0. Level 1
    has no gate outputs to draw from.
    """
    if not (1 <= level <= arch.levels):
        raise ValueError(f"level {level} out of range 1..{arch.levels}")
    entities: List[FeedEntity] = []
    if arch.connectivity == PREVIOUS_LEVEL:
        source_levels = [level - 1] if level > 1 else []
    else:
        source_levels = list(range(1, level))
    for lv in source_levels:
        for pos in range(1, arch.width(lv) + 1):
            entities.append(FeedEntity.gate(lv, pos))
    for j in range(1, arch.num_vars + 1):
        entities.append(FeedEntity.var(j))
    entities.append(FeedEntity.one())
    entities.append(FeedEntity.zero())
    return entities


def validate(arch: Architecture, spec: TruthSpec) -> None:
    """Raise ValueError unless `arch` can host `spec`'s outputs."""
    if arch.num_vars != spec.n:
        raise ValueError(
            f"architecture has {arch.num_vars} variables, spec has {spec.n}")
    if len(arch.outputs_at) != spec.num_outputs:
        raise ValueError(
            f"architecture pins {len(arch.outputs_at)} outputs, "
            f"spec has {spec.num_outputs}")
