"""The binary constraint model: selection variables, one-hots, propagation.

Per gate (i,j) the model owns binary variables

    tsel[i,j,r]     one per allowed gate kind (one-hot),
    inpsel1/2[i,j,k] one per feed entity of level i (one-hot each),
    E[i,j]          the enable flag,

and, per care minterm g, the derived signals inp1/inp2/out obtained by
substituting the selections through the gate arithmetizations. Do-not-care
minterms contribute no equations at all. The solver searches over the
selection variables only; the derived signals stay substituted expressions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .bitvec import TruthSpec, representative_bits
from .circuit import Circuit, GatePlacement
from .gates import ARITY, Gate, eval_gate, gate_cost
from .topology import Architecture, FeedEntity, feed_entities, validate

VarKey = Tuple  # ("tsel", i, j, kind) | ("inpsel1"|"inpsel2", i, j, k) | ("E", i, j)


@dataclass(frozen=True)
class ModelStats:
    variables: Dict[str, int]
    one_hot_constraints: int
    out_equations: int
    output_equalities: int
    nonlinear_terms: int

    @property
    def total_variables(self) -> int:
        return sum(self.variables.values())

    @property
    def total_constraints(self) -> int:
        return self.one_hot_constraints + self.out_equations + self.output_equalities


@dataclass(frozen=True)
class ConstraintModel:
    spec: TruthSpec
    arch: Architecture
    mode: str = "gate-count"
    transistor_weights: Optional[Mapping[Gate, int]] = None

    @property
    def kinds(self) -> Tuple[Gate, ...]:
        return self.arch.gate_set

    def entities(self, level: int) -> List[FeedEntity]:
        return feed_entities(self.arch, level)

    def care_minterms(self) -> List[int]:
        return self.spec.care_minterms()

    # -- variable families ---------------------------------------------------

    def variables(self) -> List[VarKey]:
        keys: List[VarKey] = []
        for (i, j) in self.arch.positions():
            for kind in self.kinds:
                keys.append(("tsel", i, j, kind))
            width = len(self.entities(i))
            for fam in ("inpsel1", "inpsel2"):
                for k in range(1, width + 1):
                    keys.append((fam, i, j, k))
            keys.append(("E", i, j))
        return keys

    def one_hot_groups(self) -> List[List[VarKey]]:
        groups: List[List[VarKey]] = []
        for (i, j) in self.arch.positions():
            groups.append([("tsel", i, j, kind) for kind in self.kinds])
            width = len(self.entities(i))
            for fam in ("inpsel1", "inpsel2"):
                groups.append([(fam, i, j, k) for k in range(1, width + 1)])
        return groups

    def stats(self) -> ModelStats:
        tsel = inpsel = enable = 0
        for (i, j) in self.arch.positions():
            tsel += len(self.kinds)
            inpsel += 2 * len(self.entities(i))
            enable += 1
        num_gates = len(self.arch.positions())
        care = len(self.care_minterms())
        out_eqs = num_gates * care
        out_equalities = len(self.arch.outputs_at) * care
        return ModelStats(
            variables={"tsel": tsel, "inpsel": inpsel, "E": enable},
            one_hot_constraints=3 * num_gates,
            out_equations=out_eqs,
            output_equalities=out_equalities,
            # selector-product terms E * tsel_r * f_r, one per allowed kind
            # and per out equation
            nonlinear_terms=out_eqs * len(self.kinds),
        )

    # -- assignment handling -------------------------------------------------

    def check_one_hots(self, assignment: Mapping[VarKey, int]) -> bool:
        return all(sum(assignment.get(key, 0) for key in group) == 1
                   for group in self.one_hot_groups())

    def _entity_value(self, ent: FeedEntity, g: int,
                      out: Mapping[Tuple[int, int], int]) -> int:
        if ent.kind == "gate":
            return out[(ent.level, ent.pos)]
        if ent.kind == "var":
            return representative_bits(g, self.spec.n)[ent.index - 1]
        return 1 if ent.kind == "one" else 0

    def signals_at(self, assignment: Mapping[VarKey, int],
                   g: int) -> Dict[Tuple[int, int], int]:
        """Evaluate out[i,j,g] for every gate by direct substitution."""
        out: Dict[Tuple[int, int], int] = {}
        for (i, j) in self.arch.positions():
            ents = self.entities(i)
            inp1 = sum(assignment.get(("inpsel1", i, j, k), 0)
                       * self._entity_value(ent, g, out)
                       for k, ent in enumerate(ents, start=1))
            inp2 = sum(assignment.get(("inpsel2", i, j, k), 0)
                       * self._entity_value(ent, g, out)
                       for k, ent in enumerate(ents, start=1))
            f = sum(assignment.get(("tsel", i, j, kind), 0)
                    * eval_gate(kind, inp1, inp2)
                    for kind in self.kinds)
            out[(i, j)] = assignment.get(("E", i, j), 0) * f
        return out

    def check(self, assignment: Mapping[VarKey, int]) -> bool:
        """True iff the assignment satisfies every constraint of the model."""
        if not self.check_one_hots(assignment):
            return False
        for g in self.care_minterms():
            out = self.signals_at(assignment, g)
            for q, coord in enumerate(self.arch.outputs_at):
                if out[coord] != (1 if self.spec.outputs[q].test(g) else 0):
                    return False
        return True

    def objective_value(self, assignment: Mapping[VarKey, int]) -> int:
        total = 0
        for (i, j) in self.arch.positions():
            e = assignment.get(("E", i, j), 0)
            if not e:
                continue
            if self.mode == "gate-count":
                total += e * (1 - assignment.get(("tsel", i, j, Gate.CON), 0))
            else:
                total += e * sum(
                    assignment.get(("tsel", i, j, kind), 0)
                    * gate_cost(kind, self.mode, self.transistor_weights)
                    for kind in self.kinds)
        return total

    def decode(self, assignment: Mapping[VarKey, int]) -> Circuit:
        """Turn a one-hot-satisfying assignment into a concrete circuit."""
        if not self.check_one_hots(assignment):
            raise ValueError("assignment violates a one-hot constraint")
        gates = {}
        for (i, j) in self.arch.positions():
            ents = self.entities(i)
            kind = next(k for k in self.kinds
                        if assignment.get(("tsel", i, j, k), 0))
            in1 = next(ents[k - 1] for k in range(1, len(ents) + 1)
                       if assignment.get(("inpsel1", i, j, k), 0))
            in2 = next(ents[k - 1] for k in range(1, len(ents) + 1)
                       if assignment.get(("inpsel2", i, j, k), 0))
            gates[(i, j)] = GatePlacement(
                kind, in1, in2, enabled=bool(assignment.get(("E", i, j), 0)))
        return Circuit(self.arch, gates)

    def assignment_from_circuit(self, circuit: Circuit) -> Dict[VarKey, int]:
        """Inverse of decode; useful for satisfiability cross-checks."""
        assignment: Dict[VarKey, int] = {}
        for (i, j) in self.arch.positions():
            placement = circuit.gates[(i, j)]
            for kind in self.kinds:
                assignment[("tsel", i, j, kind)] = int(kind is placement.kind)
            ents = self.entities(i)
            for fam, ent in (("inpsel1", placement.in1), ("inpsel2", placement.in2)):
                for k, cand in enumerate(ents, start=1):
                    assignment[(fam, i, j, k)] = int(cand == ent)
            assignment[("E", i, j)] = int(placement.enabled)
        return assignment


def encode(spec: TruthSpec, arch: Architecture, mode: str = "gate-count",
           transistor_weights: Optional[Mapping[Gate, int]] = None) -> ConstraintModel:
    """Build the constraint model for `spec` on `arch`."""
    validate(arch, spec)
    if mode not in ("gate-count", "transistor"):
        raise ValueError(f"unknown cost mode {mode!r}")
    return ConstraintModel(spec, arch, mode, transistor_weights)


def model_stats(model: ConstraintModel) -> ModelStats:
    return model.stats()
