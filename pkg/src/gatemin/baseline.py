"""Constructive upper-bound synthesis via Shannon and Davio expansions.

The recursion splits on the highest-index variable each time, so a function
of x_1..x_m is decomposed on x_m into subfunctions of x_1..x_{m-1}. Constant
subfunctions terminate the recursion, and trivial algebra (AND with 1, XOR
with 0, OR with a dropped 0-branch) is simplified away while building, which
keeps the resulting tree well under the 3^n worst case.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from .bitvec import Bitvector
from .circuit import Circuit, GatePlacement
from .gates import Gate
from .topology import ALL_PREVIOUS, Architecture, FeedEntity


class ExpansionKind(enum.Enum):
    SHANNON = "shannon"
    POSITIVE_DAVIO = "positive-davio"
    NEGATIVE_DAVIO = "negative-davio"


BASELINE_GATE_SET = (Gate.AND, Gate.OR, Gate.NOT, Gate.XOR, Gate.CON)


def subfunctions(f: Bitvector, n: int, i: int) -> Tuple[Bitvector, Bitvector, Bitvector]:
    """Cofactors (f with x_i = 0, f with x_i = 1) and their XOR, on n-1 vars."""
    if f.n != n:
        raise ValueError(f"bitvector is over {f.n} variables, not {n}")
    if not (1 <= i <= n):
        raise ValueError(f"variable index {i} out of range 1..{n}")
    shift = n - i  # bit position of x_i inside g
    low_mask = (1 << shift) - 1
    f0 = f1 = 0
    for gp in range(1 << (n - 1)):
        high = gp >> shift
        low = gp & low_mask
        g0 = (high << (shift + 1)) | low
        if (f.bits >> g0) & 1:
            f0 |= 1 << gp
        if (f.bits >> (g0 | (1 << shift))) & 1:
            f1 |= 1 << gp
    return (Bitvector(n - 1, f0), Bitvector(n - 1, f1), Bitvector(n - 1, f0 ^ f1))


# Expression nodes during construction: leaves are FeedEntities, inner nodes
# are (kind, child) or (kind, child, child) tuples.
_Node = Union[FeedEntity, tuple]

_ZERO = FeedEntity.zero()
_ONE = FeedEntity.one()


def _is(node: _Node, ref: FeedEntity) -> bool:
    return isinstance(node, FeedEntity) and node == ref


def _not(a: _Node) -> _Node:
    if _is(a, _ZERO):
        return _ONE
    if _is(a, _ONE):
        return _ZERO
    return (Gate.NOT, a)


def _and(a: _Node, b: _Node) -> _Node:
    if _is(a, _ZERO) or _is(b, _ZERO):
        return _ZERO
    if _is(a, _ONE):
        return b
    if _is(b, _ONE):
        return a
    return (Gate.AND, a, b)


def _or(a: _Node, b: _Node) -> _Node:
    if _is(a, _ONE) or _is(b, _ONE):
        return _ONE
    if _is(a, _ZERO):
        return b
    if _is(b, _ZERO):
        return a
    return (Gate.OR, a, b)


def _xor(a: _Node, b: _Node) -> _Node:
    if _is(a, _ZERO):
        return b
    if _is(b, _ZERO):
        return a
    if _is(a, _ONE):
        return _not(b)
    if _is(b, _ONE):
        return _not(a)
    return (Gate.XOR, a, b)


def _split_last(bits: int, m: int) -> Tuple[int, int]:
    """Cofactor bit words of f on x_m (the LSB of g): (even bits, odd bits)."""
    f0 = f1 = 0
    for gp in range(1 << (m - 1)):
        f0 |= ((bits >> (2 * gp)) & 1) << gp
        f1 |= ((bits >> (2 * gp + 1)) & 1) << gp
    return f0, f1


def _build(bits: int, m: int, kind: ExpansionKind) -> _Node:
    if bits == 0:
        return _ZERO
    if bits == (1 << (1 << m)) - 1:
        return _ONE
    x = FeedEntity.var(m)
    f0, f1 = _split_last(bits, m)
    if f0 == f1:  # f does not depend on x_m
        return _build(f0, m - 1, kind)
    if kind is ExpansionKind.SHANNON:
        c0 = _build(f0, m - 1, kind)
        c1 = _build(f1, m - 1, kind)
        return _or(_and(_not(x), c0), _and(x, c1))
    f2 = f0 ^ f1
    c2 = _build(f2, m - 1, kind)
    if kind is ExpansionKind.POSITIVE_DAVIO:
        return _xor(_build(f0, m - 1, kind), _and(x, c2))
    return _xor(_build(f1, m - 1, kind), _and(_not(x), c2))


def expand(f: Bitvector, n: int, kind: ExpansionKind = ExpansionKind.SHANNON) -> Circuit:
    """A verifying (not minimal) circuit for a single-output function.

    Always returns a layered circuit over {AND, OR, NOT, XOR, CON} whose top
    gate realizes `f`; functions that reduce to a constant or a single literal
    come out as one free CON wire.
    """
    if f.n != n:
        raise ValueError(f"bitvector is over {f.n} variables, not {n}")
    root = _build(f.bits, n, kind)
    if isinstance(root, FeedEntity):
        root = (Gate.CON, root)
    return _layer(root, n)


def _layer(root: tuple, n: int) -> Circuit:
    """Place the expression tree on an all-previous layered architecture."""
    heights: Dict[int, int] = {}
    coords: Dict[int, Tuple[int, int]] = {}
    per_level: List[int] = []
    placements: Dict[Tuple[int, int], GatePlacement] = {}

    def height(node: _Node) -> int:
        if isinstance(node, FeedEntity):
            return 0
        h = heights.get(id(node))
        if h is None:
            h = 1 + max(height(child) for child in node[1:])
            heights[id(node)] = h
        return h

    total_levels = height(root)
    counts = [0] * (total_levels + 1)

    def place(node: _Node) -> FeedEntity:
        if isinstance(node, FeedEntity):
            return node
        if id(node) in coords:
            lv, pos = coords[id(node)]
            return FeedEntity.gate(lv, pos)
        inputs = [place(child) for child in node[1:]]
        lv = heights[id(node)]
        counts[lv] += 1
        pos = counts[lv]
        coords[id(node)] = (lv, pos)
        in1 = inputs[0]
        in2 = inputs[1] if len(inputs) > 1 else inputs[0]
        placements[(lv, pos)] = GatePlacement(node[0], in1, in2)
        return FeedEntity.gate(lv, pos)

    place(root)
    arch = Architecture(
        num_vars=n,
        per_level_width=tuple(counts[1:]),
        connectivity=ALL_PREVIOUS,
        gate_set=BASELINE_GATE_SET,
        outputs_at=((total_levels, coords[id(root)][1]),),
    )
    return Circuit(arch, placements)
