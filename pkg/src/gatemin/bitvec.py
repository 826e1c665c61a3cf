"""Truth-table machinery: bitvectors over minterms, hex parsing, minterm lists.

Conventions used throughout the package:

- A function of n variables is a 2^n-bit word; bit g marks membership of the
  minterm with representative number g (bit 0 is the rightmost binary digit).
- Variable x_1 is the most significant position of g, x_n the least
  significant, so minterm 2 of a 3-variable function is (010) = x1'.x2.x3'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

MAX_VARS = 6  # 2^6 = 64 minterm bits fit one machine word


@dataclass(frozen=True)
class Bitvector:
    """A 2^n-bit set of minterms for a function of n variables."""

    n: int
    bits: int

    def __post_init__(self):
        if not (1 <= self.n <= MAX_VARS):
            raise ValueError(f"variable count {self.n} outside 1..{MAX_VARS}")
        if not (0 <= self.bits < (1 << (1 << self.n))):
            raise ValueError(f"bits 0x{self.bits:x} do not fit {1 << self.n} positions")

    @property
    def width(self) -> int:
        return 1 << self.n

    def test(self, g: int) -> bool:
        if not (0 <= g < self.width):
            raise ValueError(f"minterm {g} out of range 0..{self.width - 1}")
        return bool((self.bits >> g) & 1)

    def minterms(self) -> List[int]:
        return [g for g in range(self.width) if (self.bits >> g) & 1]

    def to_hex(self) -> str:
        return format(self.bits, "0{}x".format(max(1, self.width // 4)))

    def complement(self) -> "Bitvector":
        return Bitvector(self.n, self.bits ^ ((1 << self.width) - 1))

    def __and__(self, other: "Bitvector") -> "Bitvector":
        self._check_same(other)
        return Bitvector(self.n, self.bits & other.bits)

    def __or__(self, other: "Bitvector") -> "Bitvector":
        self._check_same(other)
        return Bitvector(self.n, self.bits | other.bits)

    def __xor__(self, other: "Bitvector") -> "Bitvector":
        self._check_same(other)
        return Bitvector(self.n, self.bits ^ other.bits)

    def _check_same(self, other: "Bitvector") -> None:
        if self.n != other.n:
            raise ValueError(f"bitvector width mismatch: n={self.n} vs n={other.n}")


def parse_hex(text: str, n: int) -> Bitvector:
    """Parse a hexadecimal function description such as "6b" for n = 3.

    Strings shorter than 2^n/4 digits are left-padded with zeros; longer
    strings are rejected.
    """
    digits = max(1, (1 << n) // 4)
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s:
        raise ValueError("empty hex string")
    if len(s) > digits:
        raise ValueError(f"hex string {text!r} has more than {digits} digits for n={n}")
    try:
        bits = int(s, 16)
    except ValueError:
        raise ValueError(f"invalid hex string {text!r}") from None
    return Bitvector(n, bits)


def from_minterms(minterms: Iterable[int], n: int) -> Bitvector:
    bits = 0
    for g in minterms:
        if not (0 <= g < (1 << n)):
            raise ValueError(f"minterm {g} out of range for n={n}")
        bits |= 1 << g
    return Bitvector(n, bits)


def parse_function(text: str, n: int) -> Bitvector:
    """Parse either a hex string ("6b") or a minterm list ("sum:0,1,3,5,6")."""
    s = text.strip().lower()
    if s.startswith("sum:"):
        body = s[4:].strip()
        if not body:
            return Bitvector(n, 0)
        try:
            terms = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ValueError(f"invalid minterm list {text!r}") from None
        return from_minterms(terms, n)
    return parse_hex(s, n)


def representative_bits(g: int, n: int) -> Tuple[int, ...]:
    """The polarity bits (b_{g,1}, ..., b_{g,n}); b_{g,1} is the MSB of g."""
    if not (0 <= g < (1 << n)):
        raise ValueError(f"representative number {g} out of range for n={n}")
    return tuple((g >> (n - j)) & 1 for j in range(1, n + 1))


def variable_vector(j: int, n: int) -> Bitvector:
    """Bitvector of variable x_j seen as a function: bit g = b_{g,j}."""
    if not (1 <= j <= n):
        raise ValueError(f"variable index {j} out of range 1..{n}")
    bits = 0
    for g in range(1 << n):
        if (g >> (n - j)) & 1:
            bits |= 1 << g
    return Bitvector(n, bits)


@dataclass(frozen=True)
class Minterm:
    g: int
    bits: Tuple[int, ...]


@dataclass(frozen=True)
class TruthSpec:
    """A multi-output, incompletely specified Boolean function.

    `outputs[q]` is output q's on-set; `dc` is the do-not-care set shared by
    every output. On-set and dc-set must be disjoint.
    """

    n: int
    outputs: Tuple[Bitvector, ...]
    dc: Bitvector

    def __post_init__(self):
        if not (2 <= self.n <= MAX_VARS):
            raise ValueError(f"variable count {self.n} outside supported range 2..{MAX_VARS}")
        if not self.outputs:
            raise ValueError("spec needs at least one output function")
        for q, f in enumerate(self.outputs):
            if f.n != self.n:
                raise ValueError(f"output {q} has n={f.n}, spec has n={self.n}")
            if f.bits & self.dc.bits:
                raise ValueError(f"output {q} on-set overlaps the dc-set")
        if self.dc.n != self.n:
            raise ValueError(f"dc-set has n={self.dc.n}, spec has n={self.n}")

    @staticmethod
    def create(n: int, outputs: Iterable[Bitvector], dc: Bitvector = None) -> "TruthSpec":
        if dc is None:
            dc = Bitvector(n, 0)
        return TruthSpec(n, tuple(outputs), dc)

    @property
    def num_outputs(self) -> int:
        return len(self.outputs)

    @property
    def care_mask(self) -> int:
        return self.dc.bits ^ ((1 << (1 << self.n)) - 1)

    def care_minterms(self) -> List[int]:
        mask = self.care_mask
        return [g for g in range(1 << self.n) if (mask >> g) & 1]


def minterms_of(spec: TruthSpec) -> Tuple[List[Minterm], List[Minterm]]:
    """Split the minterm range into care and do-not-care lists."""
    care, dc = [], []
    for g in range(1 << spec.n):
        m = Minterm(g, representative_bits(g, spec.n))
        (dc if spec.dc.test(g) else care).append(m)
    return care, dc
