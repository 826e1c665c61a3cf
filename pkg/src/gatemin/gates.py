"""Two-input gate kinds, their 0/1 arithmetic forms and cost models.

Each gate has an equivalent polynomial over {0,1} inputs (AND = x*y,
OR = x+y-xy, ...). These polynomials are what the constraint model multiplies
with the type-selector variables; `eval_gate` evaluates the same polynomials
directly so the two views cannot drift apart.
"""

from __future__ import annotations

import enum
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .bitvec import Bitvector


class Gate(enum.Enum):
    AND = "AND"
    OR = "OR"
    NOT = "NOT"
    XOR = "XOR"
    NAND = "NAND"
    NOR = "NOR"
    CON = "CON"  # plain wire connection, never counted as a gate

    def __str__(self) -> str:
        return self.value


# Canonical ordering of the type selectors; index r of tsel[i,j,r] follows it.
CANONICAL_ORDER: Tuple[Gate, ...] = (
    Gate.AND, Gate.OR, Gate.NOT, Gate.XOR, Gate.NAND, Gate.NOR, Gate.CON,
)

ARITY: Dict[Gate, int] = {
    Gate.AND: 2, Gate.OR: 2, Gate.NOT: 1, Gate.XOR: 2,
    Gate.NAND: 2, Gate.NOR: 2, Gate.CON: 1,
}

COMMUTATIVE = frozenset({Gate.AND, Gate.OR, Gate.XOR, Gate.NAND, Gate.NOR})

GATE_COUNT_COST: Dict[Gate, int] = {k: (0 if k is Gate.CON else 1) for k in Gate}

# Static-CMOS transistor counts; configurable, these are only defaults.
DEFAULT_TRANSISTOR_COST: Dict[Gate, int] = {
    Gate.NOT: 2, Gate.NAND: 4, Gate.NOR: 4,
    Gate.AND: 6, Gate.OR: 6, Gate.XOR: 8, Gate.CON: 0,
}

COST_MODES = ("gate-count", "transistor")


def eval_gate(kind: Gate, x: int, y: int = 0) -> int:
    """Evaluate one gate on 0/1 inputs via its arithmetization."""
    if x not in (0, 1) or y not in (0, 1):
        raise ValueError(f"gate inputs must be 0/1, got {x}, {y}")
    if kind is Gate.AND:
        return x * y
    if kind is Gate.OR:
        return x + y - x * y
    if kind is Gate.NOT:
        return 1 - x
    if kind is Gate.XOR:
        return x + y - 2 * x * y
    if kind is Gate.NAND:
        return 1 - x * y
    if kind is Gate.NOR:
        return (1 - x) * (1 - y)
    if kind is Gate.CON:
        return x
    raise ValueError(f"unknown gate kind {kind!r}")


def eval_gate_words(kind: Gate, x: int, y: int, mask: int) -> int:
    """Bit-parallel gate evaluation on raw words; `mask` covers all positions."""
    if kind is Gate.AND:
        return x & y
    if kind is Gate.OR:
        return x | y
    if kind is Gate.NOT:
        return mask & ~x
    if kind is Gate.XOR:
        return x ^ y
    if kind is Gate.NAND:
        return mask & ~(x & y)
    if kind is Gate.NOR:
        return mask & ~(x | y)
    if kind is Gate.CON:
        return x
    raise ValueError(f"unknown gate kind {kind!r}")


def eval_gate_bitparallel(kind: Gate, x: Bitvector, y: Optional[Bitvector] = None) -> Bitvector:
    """Apply a gate to every minterm position of two equal-width bitvectors."""
    if y is None:
        y = Bitvector(x.n, 0)
    if x.n != y.n:
        raise ValueError(f"bitvector width mismatch: n={x.n} vs n={y.n}")
    mask = (1 << x.width) - 1
    return Bitvector(x.n, eval_gate_words(kind, x.bits, y.bits, mask))


def gate_cost(kind: Gate, mode: str = "gate-count",
              weights: Optional[Mapping[Gate, int]] = None) -> int:
    """Cost of one enabled gate; CON is always free in gate-count mode."""
    if mode == "gate-count":
        return GATE_COUNT_COST[kind]
    if mode == "transistor":
        table = DEFAULT_TRANSISTOR_COST if weights is None else weights
        return table[kind]
    raise ValueError(f"unknown cost mode {mode!r}; expected one of {COST_MODES}")


def parse_gate_set(names: Sequence[str] | str) -> Tuple[Gate, ...]:
    """Parse gate names (case-insensitive) or "all" into canonical order."""
    if isinstance(names, str):
        if names.strip().lower() == "all":
            return CANONICAL_ORDER
        names = [names]
    kinds = set()
    for name in names:
        try:
            kinds.add(Gate[name.strip().upper()])
        except KeyError:
            raise ValueError(f"unknown gate kind {name!r}") from None
    if not kinds:
        raise ValueError("empty gate set")
    return tuple(k for k in CANONICAL_ORDER if k in kinds)
