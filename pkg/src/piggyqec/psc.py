"""The piggyback syndrome channel, end to end.

Transmitter: each classical symbol picks a correctable error from the
coset table, applied on purpose to one q-codeword. Channel: optional
depolarizing noise composes with the intentional error. Receiver: measure
the syndrome of the accumulated frame, optionally run the classical
decoder over blocks of N syndromes, split the measured syndrome into
channel and intentional parts via the sign-wise product, and recover.

Only the accumulated Pauli frame is tracked per q-codeword; every
observable here is a function of it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pauli import PauliOperator, identity, multiply
from .reed_solomon import RSCode
from .stabilizer import (
    CosetTable,
    StabilizerCode,
    Syndrome,
    classify_residual,
    measure_syndrome,
)

NOISELESS = "noiseless"
DEPOLARIZING = "depolarizing"


@dataclass(frozen=True)
class ChannelModel:
    """Per-q-codeword noise model: noiseless or i.i.d. depolarizing."""

    kind: str = NOISELESS
    p_d: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in (NOISELESS, DEPOLARIZING):
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if not 0.0 <= self.p_d <= 1.0:
            raise ValueError(f"p_d must be in [0, 1], got {self.p_d}")


@dataclass(frozen=True)
class PiggybackConfig:
    """A stabilizer code, its coset table, and an optional classical code.

    When the classical code is present, its field degree must equal n - k:
    one codeword symbol per syndrome.
    """

    code: StabilizerCode
    table: CosetTable
    rs: RSCode | None = None

    def __post_init__(self) -> None:
        if self.table.code != self.code:
            raise ValueError("coset table belongs to a different code")
        if self.rs is not None and self.rs.field.r != self.code.n - self.code.k:
            raise ValueError(
                f"classical code over GF(2^{self.rs.field.r}) cannot carry "
                f"syndromes of an [[{self.code.n},{self.code.k}]] code"
            )

    @property
    def symbols_per_codeword(self) -> int:
        return self.code.n - self.code.k


@dataclass
class TrialRecord:
    """Everything observed for one q-codeword."""

    sent_symbol: int
    intentional: PauliOperator
    channel_error: PauliOperator
    measured: Syndrome
    decoded: Syndrome
    inferred_channel_syndrome: Syndrome
    residual_class: str
    decode_failed: bool = False


def embed(config: PiggybackConfig, symbol: int) -> PauliOperator:
    """Intentional error carrying `symbol`: the coset leader of that syndrome."""
    if not 0 <= symbol < config.code.num_syndromes:
        raise ValueError(f"symbol {symbol} out of range [0, {config.code.num_syndromes})")
    return config.table[symbol]


def apply_channel(model: ChannelModel, n: int, rng: np.random.Generator) -> PauliOperator:
    """Sample one channel error on n qubits.

    Depolarizing: each qubit independently untouched with probability
    1 - p_d, else X, Y or Z with probability p_d / 3 each.
    """
    if model.kind == NOISELESS or model.p_d == 0.0:
        return identity(n)
    hits = rng.random(n) < model.p_d
    if not hits.any():
        return identity(n)
    letters = rng.integers(0, 3, size=n)
    x = z = 0
    for i in np.flatnonzero(hits):
        bit = 1 << int(i)
        letter = letters[i]
        if letter == 0:        # X
            x |= bit
        elif letter == 1:      # Z
            z |= bit
        else:                  # Y
            x |= bit
            z |= bit
    return PauliOperator(n, x, z)


def receive(config: PiggybackConfig, state_error: PauliOperator) -> Syndrome:
    """Measured syndrome of the accumulated error on one q-codeword."""
    return measure_syndrome(config.code, state_error)


def infer_channel_error(
    config: PiggybackConfig, measured: Syndrome, decoded: Syndrome
) -> tuple[PauliOperator, PauliOperator]:
    """Split the measured syndrome into channel and intentional estimates.

    The decoded syndrome names the intentional-error estimate directly;
    the sign-wise product measured*decoded is the channel-error syndrome,
    whose coset leader is the channel-error estimate. Returns (E, P)
    estimates; the recovery operator is their product (Paulis are
    self-inverse at the phase-free level).
    """
    p_hat = config.table[decoded.symbol]
    channel_syndrome = measured.hadamard(decoded)
    e_hat = config.table[channel_syndrome.symbol]
    return e_hat, p_hat


def roundtrip(
    config: PiggybackConfig,
    model: ChannelModel,
    symbols,
    rng: np.random.Generator,
) -> list[TrialRecord]:
    """Carry a symbol sequence across the channel, one symbol per q-codeword.

    With a classical code configured, `symbols` are message symbols (length
    a multiple of K) and each K-group is expanded to an N-symbol codeword;
    without one, symbols ride raw. Classical decode failure is recorded,
    not raised: the receiver falls back to trusting the measured syndromes
    (plain error-corrected recovery, no piggyback).
    """
    symbols = list(symbols)
    code = config.code
    rs = config.rs
    if rs is None:
        blocks = [symbols]
    else:
        if len(symbols) % rs.K:
            raise ValueError(f"message length {len(symbols)} not a multiple of K={rs.K}")
        blocks = [
            rs.encode(symbols[i: i + rs.K]) for i in range(0, len(symbols), rs.K)
        ]

    records: list[TrialRecord] = []
    width = config.symbols_per_codeword
    for block in blocks:
        sent: list[tuple[int, PauliOperator, PauliOperator, Syndrome]] = []
        for symbol in block:
            p = embed(config, symbol)
            e = apply_channel(model, code.n, rng)
            measured = receive(config, multiply(e, p))
            sent.append((symbol, p, e, measured))

        decode_failed = False
        if rs is None:
            decoded_syms = [m.symbol for _, _, _, m in sent]
        else:
            result = rs.decode([m.symbol for _, _, _, m in sent])
            if result is None:
                decode_failed = True
                decoded_syms = [m.symbol for _, _, _, m in sent]
            else:
                decoded_syms = rs.encode(result.message)

        for (symbol, p, e, measured), dec_sym in zip(sent, decoded_syms):
            decoded = Syndrome.from_symbol(dec_sym, width)
            e_hat, p_hat = infer_channel_error(config, measured, decoded)
            recovery = multiply(p_hat, e_hat)
            residual = multiply(recovery, multiply(e, p))
            records.append(
                TrialRecord(
                    sent_symbol=symbol,
                    intentional=p,
                    channel_error=e,
                    measured=measured,
                    decoded=decoded,
                    inferred_channel_syndrome=measured.hadamard(decoded),
                    residual_class=classify_residual(code, residual),
                    decode_failed=decode_failed,
                )
            )
    return records


def make_config(
    code: StabilizerCode, rs: RSCode | None = None, table: CosetTable | None = None
) -> PiggybackConfig:
    """Convenience constructor that builds the coset table when not given."""
    from .stabilizer import build_coset_table

    if table is None:
        table = build_coset_table(code)
    return PiggybackConfig(code=code, table=table, rs=rs)
