"""n-qubit Pauli operators in binary-symplectic form.

An operator is held as a pair of packed bit vectors (x_bits, z_bits):
bit i of x_bits is set when qubit i+1 carries an X or Y factor, bit i of
z_bits when it carries a Z or Y factor. Qubit 1 is the least significant
bit, which makes products and commutation checks word-wise XOR/AND work.
Global phases are never represented: every quantity downstream (syndromes,
cosets, residual classes) depends only on the symplectic vector.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

# Canonical single-qubit letter order for enumeration and tie-breaking.
# Encodings are (x, z): X=(1,0), Z=(0,1), Y=(1,1).
_LETTERS = (("X", 1, 0), ("Z", 0, 1), ("Y", 1, 1))
_CHAR_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_CHAR = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


@dataclass(frozen=True)
class PauliOperator:
    """A phase-free n-qubit Pauli operator.

    Attributes:
        n: number of qubits (>= 1).
        x_bits: packed X-component bit vector, qubit 1 at bit 0.
        z_bits: packed Z-component bit vector, qubit 1 at bit 0.
    """

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.n}")
        mask = (1 << self.n) - 1
        if not 0 <= self.x_bits <= mask or not 0 <= self.z_bits <= mask:
            raise ValueError(f"bit vectors out of range for n={self.n}")

    @property
    def weight(self) -> int:
        """Number of qubits carrying a non-identity factor."""
        return (self.x_bits | self.z_bits).bit_count()

    @property
    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    @classmethod
    def from_string(cls, letters: str) -> "PauliOperator":
        """Parse a letter string like "XIZ" (leftmost letter = qubit 1)."""
        if not letters:
            raise ValueError("empty Pauli string")
        x = z = 0
        for i, ch in enumerate(letters.upper()):
            try:
                xb, zb = _CHAR_TO_BITS[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r} in {letters!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(letters), x, z)

    def to_string(self) -> str:
        """Render as a letter string, qubit 1 first."""
        return "".join(
            _BITS_TO_CHAR[(self.x_bits >> i) & 1, (self.z_bits >> i) & 1]
            for i in range(self.n)
        )

    def __str__(self) -> str:
        return self.to_string()


def identity(n: int) -> PauliOperator:
    """The n-qubit identity operator."""
    return PauliOperator(n, 0, 0)


def _check_same_n(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n} qubits")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Phase-free product of two Paulis: component-wise XOR.

    Self-inverse: multiply(p, p) is the identity for every p.
    """
    _check_same_n(a, b)
    return PauliOperator(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits)


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """True iff the symplectic inner product a.x*b.z + a.z*b.x vanishes mod 2.

    Equivalently, the operators differ in an even number of non-identity
    positions.
    """
    _check_same_n(a, b)
    return ((a.x_bits & b.z_bits) ^ (a.z_bits & b.x_bits)).bit_count() % 2 == 0


def enumerate_paulis(n: int, max_weight: int) -> Iterator[PauliOperator]:
    """Yield every Pauli of weight <= max_weight exactly once.

    Order is nondecreasing weight; within a weight, supports in ascending
    lexicographic order of qubit indices and letters in the canonical
    X < Z < Y order (last position varying fastest). The total count is
    1 + sum_{w=1..max_weight} C(n,w)*3^w.
    """
    if not 0 <= max_weight <= n:
        raise ValueError(f"max_weight must be in [0, {n}], got {max_weight}")
    yield identity(n)
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(n), w):
            for letters in itertools.product(_LETTERS, repeat=w):
                x = z = 0
                for pos, (_, xb, zb) in zip(support, letters):
                    x |= xb << pos
                    z |= zb << pos
                yield PauliOperator(n, x, z)
