"""Concrete circuits, ground-truth simulation and verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .bitvec import Bitvector, TruthSpec, variable_vector
from .gates import ARITY, Gate, eval_gate_words, gate_cost
from .topology import Architecture, FeedEntity, feed_entities


@dataclass(frozen=True)
class GatePlacement:
    """One slot of the grid: selected kind, two feed sources, enable flag.

    A disabled gate keeps its configuration for reporting but produces
    constant 0. NOT and CON read only `in1`.
    """

    kind: Gate
    in1: FeedEntity
    in2: FeedEntity
    enabled: bool = True


@dataclass(frozen=True)
class Circuit:
    arch: Architecture
    gates: Mapping[Tuple[int, int], GatePlacement]

    def __post_init__(self):
        for coord in self.arch.positions():
            if coord not in self.gates:
                raise ValueError(f"missing gate placement at {coord}")
        allowed = set(self.arch.gate_set)
        for coord, placement in self.gates.items():
            if placement.kind not in allowed:
                raise ValueError(
                    f"gate {coord} uses {placement.kind}, not in the gate set")
            level = coord[0]
            choices = feed_entities(self.arch, level)
            for ent in (placement.in1, placement.in2):
                if ent not in choices:
                    raise ValueError(
                        f"gate {coord} input {ent.label()} violates "
                        f"{self.arch.connectivity} connectivity")

    def active_gates(self) -> List[Tuple[Tuple[int, int], GatePlacement]]:
        return [(coord, p) for coord, p in sorted(self.gates.items()) if p.enabled]

    def cost(self, mode: str = "gate-count",
             weights: Optional[Mapping[Gate, int]] = None) -> int:
        return sum(gate_cost(p.kind, mode, weights)
                   for _, p in self.active_gates())


def signal_vectors(circuit: Circuit) -> Dict[Tuple[int, int], Bitvector]:
    """Bit-parallel evaluation of every gate over all 2^n minterms at once."""
    arch = circuit.arch
    n = arch.num_vars
    mask = (1 << (1 << n)) - 1
    var_bits = {j: variable_vector(j, n).bits for j in range(1, n + 1)}
    out: Dict[Tuple[int, int], int] = {}

    def entity_bits(ent: FeedEntity) -> int:
        if ent.kind == "gate":
            return out[(ent.level, ent.pos)]
        if ent.kind == "var":
            return var_bits[ent.index]
        return mask if ent.kind == "one" else 0

    for coord in arch.positions():
        placement = circuit.gates[coord]
        if not placement.enabled:
            out[coord] = 0
            continue
        x = entity_bits(placement.in1)
        y = entity_bits(placement.in2) if ARITY[placement.kind] == 2 else 0
        out[coord] = eval_gate_words(placement.kind, x, y, mask)
    return {coord: Bitvector(n, bits) for coord, bits in out.items()}


def simulate(circuit: Circuit, g: int) -> Tuple[int, ...]:
    """Output bits of the circuit on the input assignment of minterm g."""
    n = circuit.arch.num_vars
    if not (0 <= g < (1 << n)):
        raise ValueError(f"minterm {g} out of range for n={n}")
    vectors = signal_vectors(circuit)
    return tuple(1 if vectors[coord].test(g) else 0
                 for coord in circuit.arch.outputs_at)


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    mismatches: Tuple[Tuple[int, int], ...]  # (output index, minterm g)
    cost: int


def verify(circuit: Circuit, spec: TruthSpec, mode: str = "gate-count",
           weights: Optional[Mapping[Gate, int]] = None) -> VerifyReport:
    """Compare the circuit against the spec on every care minterm.

    Do-not-care minterms are skipped and can never appear in the mismatch
    list. Cost counts enabled non-wire gates under the requested cost mode.
    """
    if circuit.arch.num_vars != spec.n:
        raise ValueError(
            f"circuit has {circuit.arch.num_vars} variables, spec has {spec.n}")
    if len(circuit.arch.outputs_at) != spec.num_outputs:
        raise ValueError(
            f"circuit provides {len(circuit.arch.outputs_at)} outputs, "
            f"spec has {spec.num_outputs}")
    vectors = signal_vectors(circuit)
    care = spec.care_mask
    mismatches = []
    for q, coord in enumerate(circuit.arch.outputs_at):
        diff = (vectors[coord].bits ^ spec.outputs[q].bits) & care
        for g in range(1 << spec.n):
            if (diff >> g) & 1:
                mismatches.append((q, g))
    return VerifyReport(not mismatches, tuple(mismatches),
                        circuit.cost(mode, weights))
