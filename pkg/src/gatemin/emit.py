"""Exporters: GAMS model text, DOT diagrams, JSON netlists.

All emitters are deterministic: the same inputs give byte-identical output.
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from .bitvec import representative_bits
from .circuit import Circuit, GatePlacement
from .gates import ARITY, DEFAULT_TRANSISTOR_COST, Gate, parse_gate_set
from .model import ConstraintModel
from .topology import ALL_PREVIOUS, PREVIOUS_LEVEL, Architecture, FeedEntity

# The emitted file keeps the historical index convention of the grid model's
# GAMS formulation for the gate-type selector r(ii,jj,rr).
GAMS_TYPE_INDEX: Dict[Gate, int] = {
    Gate.NAND: 1, Gate.AND: 2, Gate.OR: 3, Gate.XOR: 4,
    Gate.NOR: 5, Gate.NOT: 6, Gate.CON: 7,
}

JSON_VERSION = 1


def _range_text(values: List[int]) -> str:
    if not values:
        raise ValueError("empty index set")
    if len(values) == 1:
        return str(values[0])
    if values == list(range(values[0], values[-1] + 1)):
        return f"{values[0]}*{values[-1]}"
    return ",".join(str(v) for v in values)


def emit_gams(model: ConstraintModel, reslim: int = 500, threads: int = 4) -> str:
    """GAMS/BARON model for a uniform grid with previous-level connectivity.

    Do-not-care minterms are excluded from the gg set and from both data
    tables. Gate kinds outside the architecture's set stay declared but are
    fixed to zero.
    """
    arch = model.arch
    spec = model.spec
    if len(set(arch.per_level_width)) != 1:
        raise ValueError("GAMS emission requires a uniform grid (equal level widths)")
    if arch.connectivity != PREVIOUS_LEVEL:
        raise ValueError("GAMS emission requires previous-level connectivity")
    if model.mode != "gate-count":
        weights = model.transistor_weights or DEFAULT_TRANSISTOR_COST
    p = arch.levels
    width = arch.per_level_width[0]
    n = spec.n
    care = model.care_minterms()
    out_positions = [pos for (_, pos) in arch.outputs_at]

    lines: List[str] = []
    add = lines.append
    add("*-------------------------------------------------*")
    add("* GAMS model for an orthogonal grid of two-input  *")
    add("* gates realizing multi-output functions.         *")
    add("* Rows for do-not-care minterms are omitted from  *")
    add("* the gg set and from both data tables.           *")
    add("*-------------------------------------------------*")
    add(f"set ii no. of levels /1*{p}/;")
    add(f"set jj no. of gates at a level /1*{width}/;")
    add("set kk no. of inputs of a gate /1*2/;")
    add("set ll no. of constants /1*2/;")
    add(f"set gg no. of minterms /{_range_text(care)}/;")
    add(f"set qq no. of variables /1*{n}/;")
    add("set rr no. of gate types /1*7/;")
    add(f"set oo(jj) output gates /{_range_text(out_positions)}/;")
    add("alias (pp,jj);")
    add("table f(gg,oo) output functions")
    add("   " + "  ".join(str(pos) for pos in out_positions))
    for g in care:
        row = "  ".join(str(int(spec.outputs[q].test(g)))
                        for q in range(spec.num_outputs))
        add(f"{g}  {row}")
    add(";")
    add("")
    add("table t(gg,qq) auxiliary table")
    add("   " + " ".join(str(j) for j in range(1, n + 1)))
    for g in care:
        add(f"{g}  " + " ".join(str(b) for b in representative_bits(g, n)))
    add(";")
    add("")
    add("binary variable c(ii,jj) gate validation;")
    add("binary variable inp(ii,jj,kk,gg) inputs of gates;")
    add("binary variable out(ii,pp,gg) output of gates;")
    add("binary variable p(ii,jj,kk,pp) select output to feed the input;")
    add("binary variable q(ii,jj,kk,qq) select variable to feed the input;")
    add("binary variable r(ii,jj,rr) select gate type to feed the input;")
    add("binary variable con(ii,jj,kk,ll) select constant to feed the input;")
    add("Free Variable z objective;")
    add("equations con1,con2,con3,con4,con5,obj;")
    add("")
    add("con1(ii,jj,kk)..sum(pp,p(ii,jj,kk,pp))+sum(qq,q(ii,jj,kk,qq))+")
    add("sum(ll,con(ii,jj,kk,ll))=e=1;")
    add("con2(ii,jj)..sum(rr,r(ii,jj,rr))=e=1;")
    add("con3(ii,jj,kk,gg)..inp(ii,jj,kk,gg)=e=sum(pp,p(ii,jj,kk,pp)")
    add("*out(ii-1,pp,gg))+sum(qq,q(ii,jj,kk,qq)*t(gg,qq))+con(ii,jj,kk,'1');")
    add("con4(ii,jj,gg)..out(ii,jj,gg)=e=c(ii,jj)*(r(ii,jj,'2')")
    add("*prod(kk,inp(ii,jj,kk,gg))+r(ii,jj,'3')*(sum(kk,inp(ii,jj,kk,gg))")
    add("-prod(kk,inp(ii,jj,kk,gg)))+r(ii,jj,'6')*(1-inp(ii,jj,'1',gg))")
    add("+r(ii,jj,'4')*(sum(kk,inp(ii,jj,kk,gg))-2*prod(kk,inp(ii,jj,kk,gg)))")
    add("+r(ii,jj,'1')*(1-prod(kk,inp(ii,jj,kk,gg)))+r(ii,jj,'5')")
    add("*prod(kk,(1-inp(ii,jj,kk,gg)))+r(ii,jj,'7')*inp(ii,jj,'1',gg));")
    add(f"con5(gg,oo)..out('{p}',oo,gg)=e=f(gg,oo);")
    if model.mode == "gate-count":
        add("obj..z=e=sum((ii,jj),(c(ii,jj)*(1-r(ii,jj,'7'))));")
    else:
        terms = "+".join(
            f"{weights[kind]}*r(ii,jj,'{idx}')"
            for kind, idx in sorted(GAMS_TYPE_INDEX.items(), key=lambda kv: kv[1])
            if kind in arch.gate_set and weights[kind])
        add(f"obj..z=e=sum((ii,jj),(c(ii,jj)*({terms})));")
    disallowed = [idx for kind, idx in sorted(GAMS_TYPE_INDEX.items(),
                                              key=lambda kv: kv[1])
                  if kind not in arch.gate_set]
    for idx in disallowed:
        add(f"r.fx(ii,jj,'{idx}')=0;")
    add("Model mplex /")
    add("con1,con2,con3,con4,con5,")
    add("obj/;")
    add("Option MINLP = BARON;")
    add(f"Option threads={threads};")
    add(f"mplex.reslim = {reslim};")
    add("Solve mplex using MINLP minimizing z;")
    return "\n".join(lines) + "\n"


# -- DOT ---------------------------------------------------------------------

def emit_dot(circuit: Circuit) -> str:
    """Graphviz rendering: variables, referenced constants, enabled gates."""
    arch = circuit.arch
    lines = ["digraph circuit {", "  rankdir=LR;"]
    for j in range(1, arch.num_vars + 1):
        lines.append(f'  x{j} [shape=circle];')
    active = circuit.active_gates()
    used_consts = sorted({ent.kind for _, p in active
                          for ent in _inputs_of(p) if ent.kind in ("one", "zero")})
    for kind in used_consts:
        label = "1" if kind == "one" else "0"
        lines.append(f'  const_{kind} [shape=plaintext,label="{label}"];')
    for (level, pos), placement in active:
        name = f"g{level}_{pos}"
        lines.append(f'  {name} [shape=box,label="{placement.kind}\\n({level},{pos})"];')
        for ent in _inputs_of(placement):
            lines.append(f"  {_dot_source(ent)} -> {name};")
    for q, (level, pos) in enumerate(arch.outputs_at, start=1):
        lines.append(f'  f{q} [shape=plaintext];')
        placement = circuit.gates[(level, pos)]
        src = f"g{level}_{pos}" if placement.enabled else "const_zero_out"
        if not placement.enabled and "const_zero_out" not in "".join(lines):
            lines.append('  const_zero_out [shape=plaintext,label="0"];')
        lines.append(f"  {src} -> f{q};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _inputs_of(placement: GatePlacement) -> List[FeedEntity]:
    if ARITY[placement.kind] == 1:
        return [placement.in1]
    return [placement.in1, placement.in2]


def _dot_source(ent: FeedEntity) -> str:
    if ent.kind == "gate":
        return f"g{ent.level}_{ent.pos}"
    if ent.kind == "var":
        return f"x{ent.index}"
    return f"const_{ent.kind}"


# -- JSON netlist ------------------------------------------------------------

def _entity_to_json(ent: FeedEntity) -> Dict:
    if ent.kind == "gate":
        return {"source": "gate", "level": ent.level, "pos": ent.pos}
    if ent.kind == "var":
        return {"source": "var", "index": ent.index}
    return {"source": ent.kind}


def _entity_from_json(data: Dict) -> FeedEntity:
    source = data["source"]
    if source == "gate":
        return FeedEntity.gate(data["level"], data["pos"])
    if source == "var":
        return FeedEntity.var(data["index"])
    if source in ("one", "zero"):
        return FeedEntity(source)
    raise ValueError(f"unknown feed entity source {source!r}")


def circuit_to_dict(circuit: Circuit) -> Dict:
    arch = circuit.arch
    return {
        "version": JSON_VERSION,
        "architecture": {
            "num_vars": arch.num_vars,
            "per_level_width": list(arch.per_level_width),
            "connectivity": arch.connectivity,
            "gate_set": [str(k) for k in arch.gate_set],
            "outputs_at": [list(coord) for coord in arch.outputs_at],
        },
        "gates": [
            {
                "level": level, "pos": pos,
                "kind": str(placement.kind),
                "enabled": placement.enabled,
                "in1": _entity_to_json(placement.in1),
                "in2": _entity_to_json(placement.in2),
            }
            for (level, pos), placement in sorted(circuit.gates.items())
        ],
    }


def emit_json(circuit: Circuit) -> str:
    return json.dumps(circuit_to_dict(circuit), indent=2) + "\n"


def circuit_from_json(text: str) -> Circuit:
    data = json.loads(text)
    if data.get("version") != JSON_VERSION:
        raise ValueError(f"unsupported netlist version {data.get('version')!r}")
    a = data["architecture"]
    arch = Architecture(
        num_vars=a["num_vars"],
        per_level_width=tuple(a["per_level_width"]),
        connectivity=a["connectivity"],
        gate_set=parse_gate_set(a["gate_set"]),
        outputs_at=tuple(tuple(coord) for coord in a["outputs_at"]),
    )
    gates = {}
    for entry in data["gates"]:
        gates[(entry["level"], entry["pos"])] = GatePlacement(
            Gate[entry["kind"]],
            _entity_from_json(entry["in1"]),
            _entity_from_json(entry["in2"]),
            enabled=bool(entry["enabled"]),
        )
    return Circuit(arch, gates)
