import pytest

from gatemin import (Architecture, Circuit, FeedEntity, Gate, GatePlacement,
                     TruthSpec, parse_hex, simulate, verify)
from gatemin.circuit import signal_vectors


def xor_chain(n_levels=1):
    """x1 XOR x2 on a one-gate architecture."""
    arch = Architecture(2, (1,) * n_levels, gate_set=(Gate.XOR, Gate.CON))
    gates = {(1, 1): GatePlacement(Gate.XOR, FeedEntity.var(1), FeedEntity.var(2))}
    for lv in range(2, n_levels + 1):
        gates[(lv, 1)] = GatePlacement(
            Gate.CON, FeedEntity.gate(lv - 1, 1), FeedEntity.zero())
    return Circuit(arch, gates)


class TestCircuitValidation:
    def test_missing_placement(self):
        arch = Architecture(2, (2,))
        gates = {(1, 1): GatePlacement(Gate.AND, FeedEntity.var(1), FeedEntity.var(2))}
        with pytest.raises(ValueError, match="missing"):
            Circuit(arch, gates)

    def test_kind_outside_gate_set(self):
        arch = Architecture(2, (1,), gate_set=(Gate.NAND,))
        gates = {(1, 1): GatePlacement(Gate.AND, FeedEntity.var(1), FeedEntity.var(2))}
        with pytest.raises(ValueError, match="gate set"):
            Circuit(arch, gates)

    def test_connectivity_violation(self):
        arch = Architecture(2, (1, 1, 1), connectivity="previous-level")
        gates = {
            (1, 1): GatePlacement(Gate.AND, FeedEntity.var(1), FeedEntity.var(2)),
            (2, 1): GatePlacement(Gate.NOT, FeedEntity.gate(1, 1), FeedEntity.zero()),
            (3, 1): GatePlacement(Gate.AND, FeedEntity.gate(1, 1),
                                  FeedEntity.gate(2, 1)),
        }
        with pytest.raises(ValueError, match="connectivity"):
            Circuit(arch, gates)
        ok = Architecture(2, (1, 1, 1), connectivity="all-previous")
        Circuit(ok, gates)


class TestSimulate:
    def test_xor_truth_table(self):
        circuit = xor_chain()
        assert [simulate(circuit, g) for g in range(4)] == [
            (0,), (1,), (1,), (0,)]

    def test_wire_passthrough(self):
        circuit = xor_chain(n_levels=3)
        assert [simulate(circuit, g)[0] for g in range(4)] == [0, 1, 1, 0]

    def test_variable_order_msb_first(self):
        # g=2 means x1=1, x2=0 for n=2
        arch = Architecture(2, (1,), gate_set=(Gate.CON,))
        wire1 = Circuit(arch, {(1, 1): GatePlacement(
            Gate.CON, FeedEntity.var(1), FeedEntity.zero())})
        assert [simulate(wire1, g)[0] for g in range(4)] == [0, 0, 1, 1]
        wire2 = Circuit(arch, {(1, 1): GatePlacement(
            Gate.CON, FeedEntity.var(2), FeedEntity.zero())})
        assert [simulate(wire2, g)[0] for g in range(4)] == [0, 1, 0, 1]

    def test_disabled_gate_outputs_zero(self):
        arch = Architecture(2, (1,), gate_set=(Gate.NAND, Gate.CON))
        circuit = Circuit(arch, {(1, 1): GatePlacement(
            Gate.NAND, FeedEntity.var(1), FeedEntity.var(2), enabled=False)})
        assert all(simulate(circuit, g) == (0,) for g in range(4))

    def test_constant_feeds(self):
        arch = Architecture(2, (1,), gate_set=(Gate.NAND,))
        circuit = Circuit(arch, {(1, 1): GatePlacement(
            Gate.NAND, FeedEntity.one(), FeedEntity.zero())})
        assert all(simulate(circuit, g) == (1,) for g in range(4))

    def test_out_of_range_minterm(self):
        with pytest.raises(ValueError):
            simulate(xor_chain(), 4)

    def test_signal_vectors_match_simulate(self):
        circuit = xor_chain(n_levels=2)
        vectors = signal_vectors(circuit)
        for g in range(4):
            assert int(vectors[(2, 1)].test(g)) == simulate(circuit, g)[0]


class TestCost:
    def test_wires_are_free(self):
        circuit = xor_chain(n_levels=4)
        assert circuit.cost() == 1
        assert circuit.cost("transistor") == 8

    def test_disabled_gates_are_free(self):
        arch = Architecture(2, (2,), gate_set=(Gate.NAND,))
        circuit = Circuit(arch, {
            (1, 1): GatePlacement(Gate.NAND, FeedEntity.var(1), FeedEntity.var(2)),
            (1, 2): GatePlacement(Gate.NAND, FeedEntity.var(1), FeedEntity.var(2),
                                  enabled=False),
        })
        assert circuit.cost() == 1
        assert len(circuit.active_gates()) == 1


class TestVerify:
    def test_pass(self):
        spec = TruthSpec.create(2, [parse_hex("6", 2)])
        report = verify(xor_chain(), spec)
        assert report.passed
        assert report.mismatches == ()
        assert report.cost == 1

    def test_mismatches_reported(self):
        spec = TruthSpec.create(2, [parse_hex("e", 2)])  # OR, not XOR
        report = verify(xor_chain(), spec)
        assert not report.passed
        assert report.mismatches == ((0, 3),)

    def test_dc_minterms_skipped(self):
        spec = TruthSpec.create(2, [parse_hex("6", 2)], dc=parse_hex("8", 2))
        # circuit disagrees only on minterm 3, which is do-not-care
        circuit = xor_chain()
        assert verify(circuit, spec).passed

    def test_shape_mismatch(self):
        spec = TruthSpec.create(3, [parse_hex("6b", 3)])
        with pytest.raises(ValueError):
            verify(xor_chain(), spec)
