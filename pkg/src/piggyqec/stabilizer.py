"""Stabilizer codes: syndrome measurement, coset tables, residual classes.

Everything works at the Pauli-frame level. A syndrome is the vector of
commutation signs of an error against the generators; it never depends on
the encoded state, so no amplitudes are simulated anywhere.

Syndrome-to-symbol convention: bit b_i = (1 - s_i) / 2 with the first
generator as the most significant bit, so the all-+1 syndrome is symbol 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .pauli import PauliOperator, commutes, enumerate_paulis

RESIDUAL_STABILIZER = "stabilizer"
RESIDUAL_LOGICAL = "logical"
RESIDUAL_DETECTABLE = "detectable"


@dataclass(frozen=True)
class Syndrome:
    """A length-(n-k) vector of +1/-1 commutation signs."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.signs:
            raise ValueError("empty syndrome")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"syndrome signs must be +1/-1, got {self.signs}")

    @classmethod
    def from_symbol(cls, symbol: int, width: int) -> "Syndrome":
        """Build the syndrome whose symbol encoding equals `symbol`."""
        if not 0 <= symbol < (1 << width):
            raise ValueError(f"symbol {symbol} out of range for width {width}")
        return cls(tuple(-1 if (symbol >> (width - 1 - i)) & 1 else 1 for i in range(width)))

    @property
    def symbol(self) -> int:
        """Integer encoding: b_i = (1 - s_i)/2, first sign most significant."""
        value = 0
        for s in self.signs:
            value = (value << 1) | (s < 0)
        return value

    @property
    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.signs)

    def hadamard(self, other: "Syndrome") -> "Syndrome":
        """Elementwise sign product; composes syndromes of composite errors."""
        if len(self.signs) != len(other.signs):
            raise ValueError("syndrome length mismatch")
        return Syndrome(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def __len__(self) -> int:
        return len(self.signs)


def _gf2_echelon(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of integer-packed GF(2) vectors."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return tuple(basis)


def _gf2_reduce(vector: int, basis: Sequence[int]) -> int:
    for b in basis:
        vector = min(vector, vector ^ b)
    return vector


@dataclass(frozen=True)
class StabilizerCode:
    """An [[n, k]] stabilizer code given by its n-k generators.

    Construction validates the defining invariants: all generator pairs
    commute and the generators are independent over GF(2), so transcription
    errors in a generator set fail fast.
    """

    name: str
    n: int
    k: int
    generators: tuple[PauliOperator, ...]
    _span_basis: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got [[{self.n},{self.k}]]")
        if len(self.generators) != self.n - self.k:
            raise ValueError(
                f"[[{self.n},{self.k}]] needs {self.n - self.k} generators, "
                f"got {len(self.generators)}"
            )
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator {g} acts on {g.n} qubits, code has {self.n}")
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1:]:
                if not commutes(a, b):
                    raise ValueError(f"generators {a} and {b} anticommute")
        basis = _gf2_echelon(self._symplectic(g) for g in self.generators)
        if len(basis) != self.n - self.k:
            raise ValueError("generators are not independent over GF(2)")
        object.__setattr__(self, "_span_basis", basis)

    def _symplectic(self, p: PauliOperator) -> int:
        return (p.x_bits << self.n) | p.z_bits

    @property
    def num_syndromes(self) -> int:
        return 1 << (self.n - self.k)

    def in_stabilizer_group(self, p: PauliOperator) -> bool:
        """True iff p is a product of generators (phase-free)."""
        return _gf2_reduce(self._symplectic(p), self._span_basis) == 0


def measure_syndrome(code: StabilizerCode, e: PauliOperator) -> Syndrome:
    """Sign s_i is +1 when e commutes with generator i, else -1."""
    if e.n != code.n:
        raise ValueError(f"operator on {e.n} qubits, code has {code.n}")
    return Syndrome(tuple(1 if commutes(e, g) else -1 for g in code.generators))


@dataclass(frozen=True)
class CosetTable:
    """Minimum-weight correctable error for each syndrome symbol."""

    code: StabilizerCode
    leaders: tuple[PauliOperator, ...]

    def __getitem__(self, symbol: int) -> PauliOperator:
        return self.leaders[symbol]

    def __len__(self) -> int:
        return len(self.leaders)

    @cached_property
    def weight_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for p in self.leaders:
            hist[p.weight] = hist.get(p.weight, 0) + 1
        return hist


def build_coset_table(code: StabilizerCode) -> CosetTable:
    """Pick the first operator in canonical enumeration order per syndrome.

    Enumeration is in nondecreasing weight, so each leader has minimum
    weight within its coset; the identity always lands on symbol 0.
    """
    found: dict[int, PauliOperator] = {}
    want = code.num_syndromes
    for p in enumerate_paulis(code.n, code.n):
        sym = measure_syndrome(code, p).symbol
        if sym not in found:
            found[sym] = p
            if len(found) == want:
                break
    if len(found) != want:
        # Unreachable for a valid code: independence of the generators makes
        # the syndrome map surjective.
        raise AssertionError(f"only {len(found)}/{want} syndromes reachable")
    return CosetTable(code, tuple(found[j] for j in range(want)))


def classify_residual(code: StabilizerCode, r: PauliOperator) -> str:
    """Classify the leftover operator after recovery.

    `detectable` when its syndrome is nontrivial (a later round would see
    it), `stabilizer` when it lies in the generator span (recovery landed
    exactly), `logical` otherwise (silent logical error).
    """
    if not measure_syndrome(code, r).is_trivial:
        return RESIDUAL_DETECTABLE
    return RESIDUAL_STABILIZER if code.in_stabilizer_group(r) else RESIDUAL_LOGICAL


def _code(name: str, n: int, k: int, gens: list[str]) -> StabilizerCode:
    return StabilizerCode(name, n, k, tuple(PauliOperator.from_string(g) for g in gens))


def builtin_codes() -> dict[str, StabilizerCode]:
    """Catalog of built-in codes, keyed by canonical [[n,k]] name.

    The [[3,1]] bit-flip repetition code corrects single X errors only;
    the [[5,1]], [[7,1]] (Steane) and [[9,1]] (Shor) codes correct any
    single-qubit error.
    """
    return {
        "[[3,1]]": _code("[[3,1]]", 3, 1, ["ZZI", "IZZ"]),
        "[[5,1]]": _code("[[5,1]]", 5, 1, ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]),
        "[[7,1]]": _code(
            "[[7,1]]", 7, 1,
            ["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"],
        ),
        "[[9,1]]": _code(
            "[[9,1]]", 9, 1,
            ["ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
             "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"],
        ),
    }


_ALIASES = {
    "repetition": "[[3,1]]",
    "bitflip": "[[3,1]]",
    "perfect": "[[5,1]]",
    "five": "[[5,1]]",
    "steane": "[[7,1]]",
    "shor": "[[9,1]]",
}


def get_code(name: str) -> StabilizerCode:
    """Look up a builtin code by canonical name or alias (case-insensitive)."""
    catalog = builtin_codes()
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    for canonical, code in catalog.items():
        if canonical.lower() == key:
            return code
    raise KeyError(f"unknown code {name!r}; known: {', '.join(catalog)}")


def catalog_text() -> str:
    """Serialize the catalog: one line per code, name n k generators."""
    lines = []
    for name, code in builtin_codes().items():
        gens = " ".join(str(g) for g in code.generators)
        lines.append(f"{name} n={code.n} k={code.k} generators: {gens}")
    return "\n".join(lines)
