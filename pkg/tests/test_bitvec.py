import random

import pytest

from gatemin import (Bitvector, TruthSpec, from_minterms, minterms_of,
                     parse_function, parse_hex, representative_bits)


class TestParseHex:
    def test_6b_three_vars(self):
        bv = parse_hex("6b", 3)
        assert bv.minterms() == [0, 1, 3, 5, 6]

    def test_zero_function(self):
        assert parse_hex("00", 3).minterms() == []

    def test_a7f1_four_vars(self):
        # independently derived: 0xa7f1 = 1010 0111 1111 0001, read LSB first
        expected = [g for g in range(16) if (0xA7F1 >> g) & 1]
        assert expected == [0, 4, 5, 6, 7, 8, 9, 10, 13, 15]
        assert parse_hex("a7f1", 4).minterms() == expected

    def test_short_string_left_padded(self):
        assert parse_hex("b", 3).bits == 0x0B

    def test_rejects_bad_digit(self):
        with pytest.raises(ValueError, match="invalid hex"):
            parse_hex("6g", 3)

    def test_rejects_too_long(self):
        with pytest.raises(ValueError, match="more than"):
            parse_hex("123", 3)

    def test_roundtrip_exhaustive_n2(self):
        for bits in range(16):
            bv = Bitvector(2, bits)
            assert parse_hex(bv.to_hex(), 2) == bv

    def test_roundtrip_random_n4(self):
        rng = random.Random(2024)
        for _ in range(1000):
            bv = Bitvector(4, rng.getrandbits(16))
            assert parse_hex(bv.to_hex(), 4) == bv


class TestParseFunction:
    def test_minterm_list(self):
        assert parse_function("sum:0,1,3,5,6", 3) == parse_hex("6b", 3)

    def test_empty_sum(self):
        assert parse_function("sum:", 3).bits == 0

    def test_bad_sum(self):
        with pytest.raises(ValueError):
            parse_function("sum:1,x", 3)


class TestRepresentativeBits:
    def test_minterm_two(self):
        assert representative_bits(2, 3) == (0, 1, 0)

    def test_zero_minterm(self):
        assert representative_bits(0, 3) == (0, 0, 0)

    def test_four_vars(self):
        assert representative_bits(10, 4) == (1, 0, 1, 0)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            representative_bits(8, 3)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_reassembles_to_g(self, n):
        for g in range(1 << n):
            bits = representative_bits(g, n)
            assert sum(b << (n - j) for j, b in enumerate(bits, start=1)) == g


class TestTruthSpec:
    def test_dc_must_be_disjoint(self):
        with pytest.raises(ValueError, match="overlaps"):
            TruthSpec.create(3, [parse_hex("6b", 3)], dc=parse_hex("01", 3))

    def test_width_mismatch(self):
        with pytest.raises(ValueError):
            TruthSpec.create(3, [parse_hex("6", 2)])

    def test_minterms_of_dc_split(self):
        spec = TruthSpec.create(3, [parse_hex("68", 3)], dc=parse_hex("03", 3))
        care, dc = minterms_of(spec)
        assert [m.g for m in dc] == [0, 1]
        assert [m.g for m in care] == [2, 3, 4, 5, 6, 7]

    def test_minterms_of_no_dc(self):
        spec = TruthSpec.create(2, [parse_hex("6", 2)])
        care, dc = minterms_of(spec)
        assert [m.g for m in care] == [0, 1, 2, 3]
        assert dc == []

    def test_minterms_of_all_dc(self):
        spec = TruthSpec.create(3, [parse_hex("00", 3)], dc=parse_hex("ff", 3))
        care, dc = minterms_of(spec)
        assert care == []
        assert len(dc) == 8

    def test_minterm_bits_match_representatives(self):
        spec = TruthSpec.create(3, [parse_hex("6b", 3)])
        care, _ = minterms_of(spec)
        for m in care:
            assert m.bits == representative_bits(m.g, 3)


def test_rebuild_from_minterms():
    rng = random.Random(7)
    for _ in range(200):
        bv = Bitvector(4, rng.getrandbits(16))
        assert from_minterms(bv.minterms(), 4) == bv
