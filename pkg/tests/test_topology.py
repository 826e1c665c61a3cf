import pytest

from gatemin import Architecture, FeedEntity, Gate, feed_entities, validate
from gatemin.bitvec import TruthSpec, parse_hex


class TestArchitecture:
    def test_grid_defaults(self):
        arch = Architecture.grid(3, 2, num_vars=3)
        assert arch.levels == 3
        assert arch.per_level_width == (2, 2, 2)
        assert arch.outputs_at == ((3, 1),)

    def test_grid_multiple_outputs(self):
        arch = Architecture.grid(2, 3, num_vars=2, num_outputs=2)
        assert arch.outputs_at == ((2, 1), (2, 2))

    def test_gate_set_normalized_to_canonical_order(self):
        arch = Architecture(2, (1,), gate_set=(Gate.NOR, Gate.AND, Gate.NOT))
        assert arch.gate_set == (Gate.AND, Gate.NOT, Gate.NOR)

    def test_positions_level_major(self):
        arch = Architecture(2, (2, 1))
        assert arch.positions() == [(1, 1), (1, 2), (2, 1)]

    def test_output_must_be_top_level(self):
        with pytest.raises(ValueError, match="top level"):
            Architecture(2, (2, 2), outputs_at=((1, 1),))

    def test_output_position_in_range(self):
        with pytest.raises(ValueError, match="width"):
            Architecture(2, (2, 1), outputs_at=((2, 2),))

    def test_duplicate_outputs_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Architecture(2, (2, 2), outputs_at=((2, 1), (2, 1)))

    def test_bad_connectivity(self):
        with pytest.raises(ValueError):
            Architecture(2, (1,), connectivity="ring")

    def test_bad_widths(self):
        with pytest.raises(ValueError):
            Architecture(2, ())
        with pytest.raises(ValueError):
            Architecture(2, (1, 0))


class TestFeedEntities:
    def test_level_one_has_no_gate_feeds(self):
        arch = Architecture(3, (2, 2))
        ents = feed_entities(arch, 1)
        assert ents == [
            FeedEntity.var(1), FeedEntity.var(2), FeedEntity.var(3),
            FeedEntity.one(), FeedEntity.zero(),
        ]

    def test_previous_level_sees_one_level_back(self):
        arch = Architecture(2, (2, 3, 1), connectivity="previous-level")
        ents = feed_entities(arch, 3)
        gate_feeds = [e for e in ents if e.kind == "gate"]
        assert gate_feeds == [FeedEntity.gate(2, p) for p in (1, 2, 3)]

    def test_all_previous_sees_every_lower_level(self):
        arch = Architecture(2, (2, 3, 1), connectivity="all-previous")
        ents = feed_entities(arch, 3)
        gate_feeds = [e for e in ents if e.kind == "gate"]
        assert gate_feeds == (
            [FeedEntity.gate(1, p) for p in (1, 2)]
            + [FeedEntity.gate(2, p) for p in (1, 2, 3)])

    def test_order_gates_vars_one_zero(self):
        arch = Architecture(2, (1, 1))
        ents = feed_entities(arch, 2)
        assert [e.kind for e in ents] == ["gate", "var", "var", "one", "zero"]

    def test_level_out_of_range(self):
        arch = Architecture(2, (1,))
        with pytest.raises(ValueError):
            feed_entities(arch, 2)

    def test_labels(self):
        assert FeedEntity.gate(2, 3).label() == "g2_3"
        assert FeedEntity.var(1).label() == "x1"
        assert FeedEntity.one().label() == "1"
        assert FeedEntity.zero().label() == "0"


class TestValidate:
    def test_ok(self):
        spec = TruthSpec.create(3, [parse_hex("6b", 3)])
        validate(Architecture.grid(2, 2, num_vars=3), spec)

    def test_variable_count_mismatch(self):
        spec = TruthSpec.create(3, [parse_hex("6b", 3)])
        with pytest.raises(ValueError, match="variables"):
            validate(Architecture.grid(2, 2, num_vars=2), spec)

    def test_output_count_mismatch(self):
        spec = TruthSpec.create(2, [parse_hex("6", 2), parse_hex("8", 2)])
        with pytest.raises(ValueError, match="outputs"):
            validate(Architecture.grid(2, 2, num_vars=2), spec)
