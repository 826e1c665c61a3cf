import json

import pytest

from gatemin.gates import Gate
from gatemin.problem import ProblemFormatError, grow, load_problem
from gatemin.topology import Architecture


def base_problem(**overrides):
    data = {
        "variables": 3,
        "outputs": ["6b"],
        "levels": 3,
        "gates_per_level": 2,
        "connectivity": "previous-level",
        "gate_set": "all",
    }
    data.update(overrides)
    return data


class TestLoadProblem:
    def test_minimal(self):
        spec, arch, mode = load_problem(base_problem())
        assert spec.n == 3
        assert spec.outputs[0].minterms() == [0, 1, 3, 5, 6]
        assert arch.per_level_width == (2, 2, 2)
        assert arch.outputs_at == ((3, 1),)
        assert mode == "gate-count"

    def test_from_file(self, tmp_path):
        path = tmp_path / "p.json"
        path.write_text(json.dumps(base_problem()))
        spec, arch, mode = load_problem(path)
        assert spec.n == 3

    def test_bad_json_file(self, tmp_path):
        path = tmp_path / "p.json"
        path.write_text("{not json")
        with pytest.raises(ProblemFormatError, match="invalid JSON"):
            load_problem(path)

    def test_single_output_string(self):
        spec, _, _ = load_problem(base_problem(outputs="6b"))
        assert spec.num_outputs == 1

    def test_minterm_list_output(self):
        spec, _, _ = load_problem(base_problem(outputs=["sum:0,1,3,5,6"]))
        assert spec.outputs[0].to_hex() == "6b"

    def test_dont_care(self):
        spec, _, _ = load_problem(base_problem(outputs=["68"], dont_care="03"))
        assert spec.dc.minterms() == [0, 1]

    def test_widths_list(self):
        _, arch, _ = load_problem(base_problem(gates_per_level=[2, 2, 1]))
        assert arch.per_level_width == (2, 2, 1)

    def test_widths_length_mismatch(self):
        with pytest.raises(ProblemFormatError, match="levels"):
            load_problem(base_problem(gates_per_level=[2, 2]))

    def test_gate_set_list(self):
        _, arch, _ = load_problem(base_problem(gate_set=["nand"]))
        assert arch.gate_set == (Gate.NAND,)

    def test_objective(self):
        _, _, mode = load_problem(base_problem(objective="transistor"))
        assert mode == "transistor"

    def test_bad_objective(self):
        with pytest.raises(ProblemFormatError, match="objective"):
            load_problem(base_problem(objective="area"))

    def test_missing_field(self):
        data = base_problem()
        del data["levels"]
        with pytest.raises(ProblemFormatError, match="levels"):
            load_problem(data)

    def test_outputs_at(self):
        data = base_problem(outputs=["6b", "2a"], outputs_at=[[3, 2], [3, 1]])
        _, arch, _ = load_problem(data)
        assert arch.outputs_at == ((3, 2), (3, 1))

    def test_default_outputs_pinned_in_order(self):
        data = base_problem(outputs=["6b", "2a"])
        _, arch, _ = load_problem(data)
        assert arch.outputs_at == ((3, 1), (3, 2))

    def test_overlapping_dc_rejected(self):
        with pytest.raises(ProblemFormatError, match="overlaps"):
            load_problem(base_problem(dont_care="01"))

    def test_arch_spec_mismatch(self):
        with pytest.raises(ProblemFormatError):
            load_problem(base_problem(outputs=["6b", "2a", "0f"],
                                      gates_per_level=[2, 2, 2],
                                      outputs_at=[[3, 1], [3, 2], [3, 4]]))


class TestGrow:
    def test_odd_step_widens_lower_levels(self):
        arch = Architecture(3, (2, 2, 1))
        grown = grow(arch, 1)
        assert grown.per_level_width == (3, 3, 1)

    def test_even_step_duplicates_top(self):
        arch = Architecture(3, (2, 2, 1))
        grown = grow(arch, 2)
        assert grown.per_level_width == (2, 2, 1, 1)
        assert grown.outputs_at == ((4, 1),)

    def test_single_level(self):
        arch = Architecture(3, (1,))
        assert grow(arch, 1).per_level_width == (2,)

    def test_keeps_gate_set_and_connectivity(self):
        arch = Architecture(3, (1, 1), connectivity="all-previous",
                            gate_set=(Gate.NAND,))
        grown = grow(arch, 2)
        assert grown.connectivity == "all-previous"
        assert grown.gate_set == (Gate.NAND,)
