"""Exact optimization over the constraint model.

The solver runs depth-first search over the selection variables in level-major
gate order, simulating each committed gate bit-parallel over all care
minterms. Optimality is established by iterative deepening on the cost bound:
the bound starts at 0 and is raised to the smallest cost that exceeded it, so
the first complete solution found is a proven minimum.

Two optimality-preserving reductions keep the tree small (both controlled by
`SearchConfig.symmetry_breaking`):

- gates within a level are interchangeable, so their configurations are
  forced into nondecreasing order;
- an enabled gate whose output duplicates a signal its consumers could read
  directly (a variable, a constant, a sibling in the same level, or under
  all-previous connectivity any earlier gate) can never be part of a cheapest
  circuit, and is skipped.

Top-level gates are never reduced this way: output gates are matched directly
against their target function and surplus top gates are disabled.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .bitvec import variable_vector
from .circuit import Circuit, GatePlacement, verify
from .gates import ARITY, COMMUTATIVE, Gate, eval_gate_words, gate_cost
from .model import ConstraintModel, VarKey
from .topology import ALL_PREVIOUS, FeedEntity, feed_entities

OPTIMAL = "optimal"
FEASIBLE = "feasible-best-so-far"
INFEASIBLE = "infeasible"
TIMEOUT = "timeout-no-solution"

ORACLE_GUARD = 10 ** 8


class OracleGuardExceeded(Exception):
    """The enumeration oracle refused a search space beyond its guard."""


@dataclass(frozen=True)
class SearchConfig:
    time_limit: Optional[float] = None  # seconds
    threads: int = 1
    symmetry_breaking: bool = True
    initial_upper_bound: Optional[int] = None

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")


@dataclass(frozen=True)
class SolveResult:
    status: str
    circuit: Optional[Circuit]
    cost: Optional[int]
    nodes_explored: int
    wall_time: float


class _Timeout(Exception):
    pass


# One enumerable gate configuration: ordering key, kind (None = disabled),
# input entity indices a/b, and its cost contribution.
_Skel = Tuple[Tuple[int, int, int], Optional[Gate], int, int, int]


def _skeletons(kinds: Sequence[Gate], num_entities: int, costs: Mapping[Gate, int],
               ordered_inputs: bool) -> List[_Skel]:
    skels: List[_Skel] = [((-1, -1, -1), None, 0, 0, 0)]
    for r, kind in enumerate(kinds):
        if ARITY[kind] == 1:
            for a in range(num_entities):
                skels.append(((r, a, a), kind, a, a, costs[kind]))
        else:
            for a in range(num_entities):
                b0 = a if (ordered_inputs and kind in COMMUTATIVE) else 0
                for b in range(b0, num_entities):
                    skels.append(((r, a, b), kind, a, b, costs[kind]))
    return skels


class _Searcher:
    def __init__(self, model: ConstraintModel, config: SearchConfig):
        self.model = model
        self.config = config
        arch = model.arch
        spec = model.spec
        self.arch = arch
        self.kinds = arch.gate_set
        self.care = spec.care_mask
        self.costs = {k: gate_cost(k, model.mode, model.transistor_weights)
                      for k in self.kinds}
        self.var_vecs = {j: variable_vector(j, spec.n).bits & self.care
                         for j in range(1, spec.n + 1)}
        self.base_vecs = set(self.var_vecs.values()) | {self.care, 0}
        self.entities = {lv: feed_entities(arch, lv)
                         for lv in range(1, arch.levels + 1)}
        # top-level gates are matched directly against their targets, so only
        # the levels below need enumerable skeletons
        self.skels = {lv: _skeletons(self.kinds, len(self.entities[lv]),
                                     self.costs, config.symmetry_breaking)
                      for lv in range(1, arch.levels)}
        self.top = arch.levels
        self.nontop = [(i, j) for (i, j) in arch.positions() if i != self.top]
        self.targets = [spec.outputs[q].bits & self.care
                        for q in range(spec.num_outputs)]
        self.all_previous = arch.connectivity == ALL_PREVIOUS
        # in an all-previous chain a disabled slot can be commuted past any
        # later enabled slot (shift the tail down one level; every feed still
        # points strictly backwards), so enabled slots form a prefix
        self.chain = (self.all_previous
                      and all(w == 1 for w in arch.per_level_width[:-1]))
        self.capacity = sum(max(self.costs.values())
                            for _ in arch.positions())
        # admissible extra-cost bound: every output target that is not a
        # variable/constant needs at least one enabled costly gate producing
        # it somewhere; without CON wires the producing gate must be the
        # output gate itself, one per output
        costly = [c for k, c in self.costs.items() if k is not Gate.CON]
        self.min_costly = min(costly) if costly else 0
        if Gate.CON in self.kinds:
            distinct = {t for t in self.targets if t not in self.base_vecs}
            self.target_need: Optional[Dict[int, int]] = {t: 0 for t in distinct}
            self.missing = len(distinct)
            self.static_extra = 0
        else:
            self.target_need = None
            self.missing = 0
            self.static_extra = (sum(1 for t in self.targets if t != 0)
                                 * self.min_costly)
        # top-level gates are matched directly against their fixed targets,
        # trying cheap kinds first so the first hit is the cheapest
        self.top_kind_order = sorted(self.kinds, key=lambda k: self.costs[k])
        # any minimal circuit has every enabled non-top gate consumed later,
        # so prune once dangling signals outnumber the remaining input slots
        self.consume_after = [
            2 * (len(self.nontop) - idx - 1) + 2 * len(arch.outputs_at)
            for idx in range(len(self.nontop) + 1)]
        self.nodes = 0
        self.deadline: Optional[float] = None
        # randomized branching order for incumbent-dive restarts; probes with
        # it set never record memo entries (an aborted probe proves nothing)
        self.randomize = False
        self.rng = random.Random(0)

        # mutable search state
        self.vecs: Dict[Tuple[int, int], int] = {}
        self.chosen: Dict[Tuple[int, int], _Skel] = {}
        self.seen: set = set()
        self.ref: Dict[Tuple[int, int], int] = {}
        self.unref = 0
        self.memo: set = set()
        self.bound = 0
        self.excess: Optional[int] = None
        self.solution: Optional[Circuit] = None
        self.solution_cost: Optional[int] = None

    # -- helpers -------------------------------------------------------------

    def _entity_vec(self, ent: FeedEntity) -> int:
        if ent.kind == "gate":
            return self.vecs[(ent.level, ent.pos)]
        if ent.kind == "var":
            return self.var_vecs[ent.index]
        return self.care if ent.kind == "one" else 0

    def _placement(self, level: int, skel: _Skel) -> GatePlacement:
        _, kind, a, b, _ = skel
        ents = self.entities[level]
        if kind is None:
            return GatePlacement(self.kinds[0], ents[0], ents[0], enabled=False)
        return GatePlacement(kind, ents[a], ents[b], enabled=True)

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and not (self.nodes & 0xFFF):
            if time.monotonic() > self.deadline:
                raise _Timeout

    def _note_excess(self, value: int):
        if self.excess is None or value < self.excess:
            self.excess = value

    # -- bounded depth-first search ------------------------------------------

    MEMO_CAP = 2_000_000

    def run_bound(self, bound: int) -> bool:
        """Search for any solution of cost <= bound; True when one is found."""
        self.bound = bound
        self.excess = None
        self.vecs.clear()
        self.chosen.clear()
        self.seen.clear()
        self.ref.clear()
        self.unref = 0
        return self._dfs(0, 0)

    def _sig_flag(self, coord: Tuple[int, int]) -> bool:
        """Whether a slot's output no longer awaits a consumer."""
        if self.chosen[coord][1] is None:
            return True
        return self.ref.get(coord, 0) > 0

    def _dfs(self, idx: int, cost: int) -> bool:
        if idx == len(self.nontop):
            return self._match_top(cost)
        level, pos = self.nontop[idx]
        sym = self.config.symmetry_breaking
        chain = self.chain and sym
        # vec 0 is always duplicate-pruned, so 0 doubles as "disabled"
        prev_vec = self.vecs[self.nontop[idx - 1]] if chain and idx > 0 else None
        memo_key = None
        if sym and pos == 1 and idx > 0:
            if not self.all_previous and level > 2:
                # previous-level connectivity: gates two levels down are out
                # of reach now, so an unconsumed one can never be consumed,
                # and disabling it gives a dominating circuit
                if any(not self._sig_flag((level - 2, p))
                       for p in range(1, self.arch.width(level - 2) + 1)):
                    return False
            # at a level boundary the subtree outcome is a function of the
            # budget left and of each visible signal together with whether it
            # still awaits a consumer; entries carry over between deepening
            # rounds since they never mention the current bound
            if self.all_previous:
                sigs = frozenset(
                    (self.vecs[coord], self._sig_flag(coord))
                    for coord in self.chosen if self.chosen[coord][1] is not None)
            else:
                sigs = frozenset(
                    (self.vecs[(level - 1, p)], self._sig_flag((level - 1, p)))
                    for p in range(1, self.arch.width(level - 1) + 1))
            # in chain mode the allowed continuations also depend on the
            # previous slot's signal (the swap rule below), so it is part of
            # the key
            memo_key = (idx, self.bound - cost, sigs, prev_vec)
            if memo_key in self.memo:
                # known dead within this budget; a solution through here
                # costs more than the bound, which keeps deepening admissible
                self._note_excess(self.bound + 1)
                return False
        skels = self.skels[level]
        if chain and prev_vec == 0:
            skels = skels[:1]  # previous slot disabled: stay disabled
        elif self.randomize and len(skels) > 2:
            # order is free: every reduction above and below is a
            # canonical-form argument, not an enumeration-order one
            skels = list(skels)
            self.rng.shuffle(skels)
        # adjacent chain slots that do not feed each other commute (shift the
        # later gate down one level), so force their signals increasing
        prev_ent = idx - 1 if chain and idx > 0 else None
        ents = self.entities[level]
        env = [self._entity_vec(ent) for ent in ents]
        prev_key = (self.chosen[(level, pos - 1)][0]
                    if sym and pos > 1 else None)
        care = self.care
        target_need = self.target_need
        consume_after = self.consume_after[idx]
        for skel in skels:
            key, kind, a, b, c = skel
            if prev_key is not None and key < prev_key:
                continue
            self._tick()
            if kind is None:
                vec = 0
            else:
                vec = eval_gate_words(kind, env[a], env[b], care)
                if sym and self._is_duplicate(vec, level, pos):
                    continue
                if (prev_ent is not None and prev_vec
                        and a != prev_ent and b != prev_ent and vec < prev_vec):
                    continue
            new_cost = cost + c
            fills_target = (kind is not None and target_need is not None
                            and vec in target_need)
            missing_after = self.missing
            if fills_target and target_need[vec] == 0:
                missing_after -= 1
            lower = (new_cost + self.static_extra
                     + missing_after * self.min_costly)
            if lower > self.bound:
                self._note_excess(lower)
                continue
            reads = ()
            if sym and kind is not None:
                reads = ({ents[a], ents[b]} if ARITY[kind] == 2
                         else {ents[a]})
                reads = tuple((e.level, e.pos) for e in reads
                              if e.kind == "gate")
                for rc in reads:
                    count = self.ref.get(rc, 0)
                    self.ref[rc] = count + 1
                    if count == 0 and self.chosen[rc][1] is not None:
                        self.unref -= 1
                self.unref += 1  # this slot's own output is not consumed yet
                if self.unref > consume_after:
                    self.unref -= 1
                    for rc in reads:
                        self.ref[rc] -= 1
                        if self.ref[rc] == 0 and self.chosen[rc][1] is not None:
                            self.unref += 1
                    continue
            self.vecs[(level, pos)] = vec
            self.chosen[(level, pos)] = skel
            added = kind is not None and self.all_previous
            if added:
                self.seen.add(vec)
            if fills_target:
                target_need[vec] += 1
                self.missing = missing_after
            try:
                if self._dfs(idx + 1, new_cost):
                    return True
            finally:
                if fills_target:
                    target_need[vec] -= 1
                    if target_need[vec] == 0:
                        self.missing += 1
                del self.vecs[(level, pos)]
                del self.chosen[(level, pos)]
                if added:
                    self.seen.discard(vec)
                if sym and kind is not None:
                    self.unref -= 1
                    for rc in reads:
                        self.ref[rc] -= 1
                        if self.ref[rc] == 0 and self.chosen[rc][1] is not None:
                            self.unref += 1
        if (memo_key is not None and not self.randomize
                and len(self.memo) < self.MEMO_CAP):
            self.memo.add(memo_key)
        return False

    # -- incumbent dive for width-1 all-previous chains ----------------------

    FOLD_CAP = 1_000_000

    def fold_dive(self, budget: int) -> bool:
        """Breadth-first incumbent search over folded signal-set states.

        In a width-1 all-previous chain, a later gate sees exactly the set of
        signals produced so far, so partial chains are interchangeable once
        they yield the same set; one cheapest witness per set is kept.  Every
        candidate signal is tested as the output gate's feeder the moment it
        appears: in any minimal chain the last enabled gate below the top
        must feed the top or it would dangle, so this misses no solution
        within the budget.  Finds incumbents only, proves nothing; once the
        state store is full, new sets are still tested but not expanded, and
        the frontier is shuffled so the truncation is unbiased.
        """
        care = self.care
        target = self.targets[0]
        base_ent: Dict[int, FeedEntity] = {}
        for ent in self.entities[1]:
            base_ent.setdefault(self._entity_vec(ent), ent)
        base_vals = tuple(base_ent)
        exp_kinds = [k for k in self.kinds if k is not Gate.CON]
        min_top = min(self.costs[k] for k in self.kinds)

        off = ~target & care  # signal the output gate's complemented forms need

        def top_match(v: int, sigs, sigset, cost: int):
            """Cheapest top gate mapping v (plus one signal) onto the target.

            Each binary kind constrains its feeders algebraically (an AND
            feeder must cover the target, an OR feeder must stay inside it,
            and dually for NAND/NOR), so the signal scan runs only for the
            rare v that passes its kind's filter.
            """
            for kind in self.top_kind_order:
                tc = self.costs[kind]
                if cost + tc > budget:
                    return None
                if kind is Gate.AND:
                    if v & target == target:
                        if v == target:
                            return kind, v, cost + tc
                        for u in sigs:
                            if u & v == target:
                                return kind, u, cost + tc
                elif kind is Gate.NAND:
                    if v & off == off:
                        if v == off:
                            return kind, v, cost + tc
                        for u in sigs:
                            if u & v == off:
                                return kind, u, cost + tc
                elif kind is Gate.OR:
                    if v | target == target:
                        if v == target:
                            return kind, v, cost + tc
                        for u in sigs:
                            if u | v == target:
                                return kind, u, cost + tc
                elif kind is Gate.NOR:
                    if v | off == off:
                        if v == off:
                            return kind, v, cost + tc
                        for u in sigs:
                            if u | v == off:
                                return kind, u, cost + tc
                elif kind is Gate.XOR:
                    u = v ^ target
                    if u == v or u in sigset:
                        return kind, u, cost + tc
                elif kind is Gate.NOT:
                    if v == off:
                        return kind, None, cost + tc
                else:  # CON: free pass-through wire
                    if v == target:
                        return kind, None, cost + tc
            return None

        base_set = frozenset(base_vals)
        for v in base_vals:
            hit = top_match(v, base_vals, base_set, 0)
            if hit is not None:
                return self._build_chain([], hit[0], v, hit[1], hit[2])

        # state -> (cost, parent state, kind, input values) for the gate
        # that produced it; root is the empty chain
        best: Dict[Tuple[int, ...], Tuple] = {(): (0, None, None, 0, 0)}
        frontier: List[Tuple[int, ...]] = [()]
        max_slots = len(self.nontop)
        # with a NAND-only gate set the output gate's feeders must cover the
        # complemented target, a one-op reject for nearly every candidate
        nand_only = self.kinds == (Gate.NAND,)
        for depth in range(1, max_slots + 1):
            grow = depth < max_slots
            self.rng.shuffle(frontier)
            nxt: List[Tuple[int, ...]] = []
            for st in frontier:
                self._tick()
                cost0 = best[st][0]
                sigs = base_vals + st
                sigset = frozenset(sigs)
                num = len(sigs)
                for kind in exp_kinds:
                    c = cost0 + self.costs[kind]
                    if c + min_top > budget:
                        continue
                    unary = ARITY[kind] == 1
                    is_and = kind is Gate.AND
                    is_or = kind is Gate.OR
                    is_xor = kind is Gate.XOR
                    is_nand = kind is Gate.NAND
                    is_nor = kind is Gate.NOR
                    for a in range(num):
                        x = sigs[a]
                        for b in ((a,) if unary else range(a, num)):
                            y = sigs[b]
                            if is_nand:
                                v = care ^ (x & y)
                            elif is_and:
                                v = x & y
                            elif is_or:
                                v = x | y
                            elif is_xor:
                                v = x ^ y
                            elif is_nor:
                                v = care ^ (x | y)
                            else:  # NOT
                                v = care ^ x
                            if v in base_ent or v in st:
                                continue
                            if nand_only and v & off != off:
                                hit = None
                            else:
                                hit = top_match(v, sigs, sigset, c)
                            if hit is not None:
                                slots = self._chain_witness(best, st)
                                slots.append((kind, x, None if unary
                                              else y))
                                return self._build_chain(
                                    slots, hit[0], v, hit[1], hit[2])
                            if not grow or len(best) >= self.FOLD_CAP:
                                continue
                            ns = tuple(sorted(st + (v,)))
                            prev = best.get(ns)
                            if prev is None:
                                best[ns] = (c, st, kind, x,
                                            None if unary else y)
                                nxt.append(ns)
                            elif c < prev[0]:
                                best[ns] = (c, st, kind, x,
                                            None if unary else y)
            frontier = nxt
            if not frontier:
                break
        return False

    @staticmethod
    def _chain_witness(best, state) -> List[Tuple]:
        slots: List[Tuple] = []
        while state:
            cost, parent, kind, va, vb = best[state]
            slots.append((kind, va, vb))
            state = parent
        slots.reverse()
        return slots

    def _build_chain(self, slots, top_kind, v_last, u, total) -> bool:
        """Materialize a fold-dive witness as a circuit on this chain."""
        arch = self.arch
        val2ent: Dict[int, FeedEntity] = {}
        for ent in self.entities[1]:
            val2ent.setdefault(self._entity_vec(ent), ent)
        gates: Dict[Tuple[int, int], GatePlacement] = {}
        level = 0
        for kind, va, vb in slots:
            level += 1
            ea = val2ent[va]
            eb = ea if vb is None else val2ent[vb]
            gates[(level, 1)] = GatePlacement(kind, ea, eb, enabled=True)
            v = eval_gate_words(kind, va, 0 if vb is None else vb, self.care)
            val2ent.setdefault(v, FeedEntity.gate(level, 1))
        for lv in range(level + 1, arch.levels):
            ents = self.entities[lv]
            gates[(lv, 1)] = GatePlacement(self.kinds[0], ents[0], ents[0],
                                           enabled=False)
        ev = val2ent[v_last]
        eu = ev if u is None else val2ent[u]
        out_coord = arch.outputs_at[0]
        top_ents = self.entities[self.top]
        for pos in range(1, arch.width(self.top) + 1):
            coord = (self.top, pos)
            if coord == out_coord:
                gates[coord] = GatePlacement(top_kind, ev, eu, enabled=True)
            else:
                gates[coord] = GatePlacement(self.kinds[0], top_ents[0],
                                             top_ents[0], enabled=False)
        self.solution = Circuit(arch, gates)
        self.solution_cost = total
        return True

    def _is_duplicate(self, vec: int, level: int, pos: int) -> bool:
        if vec in self.base_vecs:
            return True
        if self.all_previous:
            return vec in self.seen
        return any(self.vecs.get((level, p)) == vec for p in range(1, pos))

    def _match_top(self, cost: int) -> bool:
        arch = self.arch
        ents = self.entities[self.top]
        env = [self._entity_vec(ent) for ent in ents]
        care = self.care
        picks: Dict[Tuple[int, int], _Skel] = {}
        total = cost
        num = len(env)
        for q, coord in enumerate(arch.outputs_at):
            target = self.targets[q]
            self._tick()
            if target == 0:  # a disabled output slot emits constant 0 for free
                picks[coord] = ((-1, -1, -1), None, 0, 0, 0)
                continue
            best: Optional[_Skel] = None
            for kind in self.top_kind_order:  # cost order: first match is best
                c = self.costs[kind]
                if ARITY[kind] == 1:
                    for a in range(num):
                        if eval_gate_words(kind, env[a], 0, care) == target:
                            best = ((0, a, a), kind, a, a, c)
                            break
                else:
                    for a in range(num):
                        x = env[a]
                        for b in range(a, num):
                            if eval_gate_words(kind, x, env[b], care) == target:
                                best = ((0, a, b), kind, a, b, c)
                                break
                        if best is not None:
                            break
                if best is not None:
                    break
            if best is None:
                return False
            picks[coord] = best
            total += best[4]
        if total > self.bound:
            self._note_excess(total)
            return False
        gates = {}
        for (level, pos), skel in self.chosen.items():
            gates[(level, pos)] = self._placement(level, skel)
        output_coords = set(arch.outputs_at)
        for pos in range(1, arch.width(self.top) + 1):
            coord = (self.top, pos)
            if coord in output_coords:
                gates[coord] = self._placement(self.top, picks[coord])
            else:
                gates[coord] = self._placement(self.top, ((-1, -1, -1), None, 0, 0, 0))
        self.solution = Circuit(arch, gates)
        self.solution_cost = total
        return True


def lower_bound(model: ConstraintModel, partial: Mapping[VarKey, int]) -> int:
    """Admissible cost bound: the committed enabled gates, nothing more."""
    total = 0
    for (i, j) in model.arch.positions():
        if partial.get(("E", i, j), 0) != 1:
            continue
        for kind in model.arch.gate_set:
            if partial.get(("tsel", i, j, kind), 0) == 1:
                total += gate_cost(kind, model.mode, model.transistor_weights)
                break
    return total


def solve(model: ConstraintModel, config: SearchConfig = SearchConfig()) -> SolveResult:
    """Minimize the model objective; statuses follow the anytime contract.

    `threads` is accepted for interface compatibility; the search itself is
    deterministic and single-threaded, so the optimal cost trivially does not
    depend on it.
    """
    start = time.monotonic()
    searcher = _Searcher(model, config)
    if config.time_limit is not None:
        searcher.deadline = start + config.time_limit
    incumbent: Optional[Circuit] = None
    incumbent_cost: Optional[int] = None

    def result(status, circuit, cost):
        return SolveResult(status, circuit, cost, searcher.nodes,
                           time.monotonic() - start)

    try:
        if config.time_limit is not None:
            # greedy dive for an incumbent so a timeout can still return
            # something feasible; capped at a slice of the budget so a
            # fruitless dive cannot starve the deepening proof
            dive_bound = config.initial_upper_bound
            if dive_bound is None:
                dive_bound = searcher.capacity
            dive_end = start + config.time_limit / 4
            if searcher.chain and len(searcher.targets) == 1:
                # chains admit a far stronger dive: breadth-first search over
                # folded signal-set states
                searcher.deadline = dive_end
                try:
                    if searcher.fold_dive(dive_bound):
                        incumbent = searcher.solution
                        incumbent_cost = searcher.solution_cost
                except _Timeout:
                    pass
            else:
                # one deterministic probe, then randomized restarts:
                # solutions at the bound tend to be scattered, so short
                # shuffled probes find one sooner than a single in-order sweep
                slice_len = max(2.0, config.time_limit / 64)
                while incumbent is None and time.monotonic() < dive_end:
                    searcher.deadline = min(dive_end,
                                            time.monotonic() + slice_len)
                    try:
                        if searcher.run_bound(dive_bound):
                            incumbent = searcher.solution
                            incumbent_cost = searcher.solution_cost
                        else:
                            break  # completed sweep: nothing at this bound
                    except _Timeout:
                        pass
                    searcher.randomize = True
                searcher.randomize = False
            searcher.deadline = start + config.time_limit

        bound = 0
        while True:
            if searcher.run_bound(bound):
                circuit = searcher.solution
                return result(OPTIMAL, circuit, searcher.solution_cost)
            if searcher.excess is None:
                return result(INFEASIBLE, None, None)
            bound = searcher.excess
    except _Timeout:
        if incumbent is not None:
            return result(FEASIBLE, incumbent, incumbent_cost)
        return result(TIMEOUT, None, None)


def enumerate_oracle(model: ConstraintModel,
                     guard: int = ORACLE_GUARD) -> SolveResult:
    """Independent brute-force oracle: exhaustive level-by-level enumeration.

    Enumerates every gate configuration (type, both input selections, enable
    flag) with no branching heuristics, folding together only states that are
    indistinguishable to all later gates (identical visible signal vectors;
    the cheapest witness is kept). Disabled configurations collapse to one
    entry since the output is constant 0 regardless of the selections, and the
    inert second input of NOT/CON is pinned to the first entity. Refuses with
    OracleGuardExceeded once `guard` elementary evaluations are spent.
    """
    start = time.monotonic()
    arch = model.arch
    spec = model.spec
    care = spec.care_mask
    costs = {k: gate_cost(k, model.mode, model.transistor_weights)
             for k in arch.gate_set}
    var_vecs = {j: variable_vector(j, spec.n).bits & care
                for j in range(1, spec.n + 1)}
    work = 0

    # state: (vecs, cost, placements); vecs maps gate coord -> signal word
    states: List[Tuple[Dict, int, Dict]] = [({}, 0, {})]

    def entity_vec(ent: FeedEntity, vecs: Dict) -> int:
        if ent.kind == "gate":
            return vecs[(ent.level, ent.pos)]
        if ent.kind == "var":
            return var_vecs[ent.index]
        return care if ent.kind == "one" else 0

    for level in range(1, arch.levels + 1):
        ents = feed_entities(arch, level)
        width = arch.width(level)
        for pos in range(1, width + 1):
            coord = (level, pos)

            # fold after every gate: states are interchangeable once they
            # agree on every signal a later gate can still read
            if arch.connectivity == ALL_PREVIOUS:
                def state_key(vecs):
                    return tuple(sorted(vecs.items()))
            else:
                keep_prev = pos < width  # siblings still read level-1
                def state_key(vecs, _level=level, _keep=keep_prev):
                    coords = [c for c in vecs if c[0] == _level]
                    if _keep and _level > 1:
                        coords += [c for c in vecs if c[0] == _level - 1]
                    return tuple((c, vecs[c]) for c in sorted(coords))

            best: Dict[Tuple, Tuple[Dict, int, Dict]] = {}

            def record(vecs, cost, placements):
                key = state_key(vecs)
                prior = best.get(key)
                if prior is None or cost < prior[1]:
                    best[key] = (vecs, cost, placements)

            for vecs, cost, placements in states:
                env = [entity_vec(ent, vecs) for ent in ents]
                off = GatePlacement(arch.gate_set[0], ents[0], ents[0],
                                    enabled=False)
                record({**vecs, coord: 0}, cost, {**placements, coord: off})
                for kind in arch.gate_set:
                    for a in range(len(ents)):
                        b_range = [a] if ARITY[kind] == 1 else range(len(ents))
                        for b in b_range:
                            work += 1
                            if work > guard:
                                raise OracleGuardExceeded(
                                    f"oracle guard of {guard} evaluations exceeded")
                            vec = eval_gate_words(kind, env[a], env[b], care)
                            placement = GatePlacement(kind, ents[a], ents[b])
                            record({**vecs, coord: vec}, cost + costs[kind],
                                   {**placements, coord: placement})
            states = list(best.values())

    targets = [spec.outputs[q].bits & care for q in range(spec.num_outputs)]
    winner = None
    for vecs, cost, placements in states:
        if all(vecs[coord] == targets[q]
               for q, coord in enumerate(arch.outputs_at)):
            if winner is None or cost < winner[1]:
                winner = (vecs, cost, placements)
    elapsed = time.monotonic() - start
    if winner is None:
        return SolveResult(INFEASIBLE, None, None, work, elapsed)
    circuit = Circuit(arch, winner[2])
    return SolveResult(OPTIMAL, circuit, winner[1], work, elapsed)


def solve_and_check(model: ConstraintModel,
                    config: SearchConfig = SearchConfig()) -> SolveResult:
    """solve() plus a mandatory verifier pass on any returned circuit."""
    res = solve(model, config)
    if res.circuit is not None:
        report = verify(res.circuit, model.spec, model.mode,
                        model.transistor_weights)
        if not report.passed:
            raise RuntimeError(
                "internal error: solver returned a circuit that fails "
                f"verification (mismatches {report.mismatches})")
        if report.cost != res.cost:
            raise RuntimeError(
                f"internal error: solver cost {res.cost} disagrees with "
                f"verifier cost {report.cost}")
    return res
