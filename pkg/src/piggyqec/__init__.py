"""Classical side channels over quantum error correcting codes.

Classical symbols ride a stream of error-corrected quantum codewords as
intentional correctable errors; the receiver reads them back from the
error syndromes without touching the encoded states. The package provides
the Pauli/stabilizer machinery, a Reed-Solomon codec protecting the side
channel under quantum noise, closed-form capacity and error bounds, and a
Monte Carlo harness that reproduces them empirically.
"""

from .pauli import PauliOperator, commutes, enumerate_paulis, identity, multiply
from .stabilizer import (
    CosetTable,
    StabilizerCode,
    Syndrome,
    build_coset_table,
    builtin_codes,
    classify_residual,
    get_code,
    measure_syndrome,
)
from .galois import GaloisField
from .reed_solomon import RSCode, rs_for_quantum_code
from .psc import (
    ChannelModel,
    PiggybackConfig,
    TrialRecord,
    apply_channel,
    embed,
    infer_channel_error,
    make_config,
    receive,
    roundtrip,
)
from . import analysis, harness

__all__ = [
    "PauliOperator", "commutes", "enumerate_paulis", "identity", "multiply",
    "CosetTable", "StabilizerCode", "Syndrome", "build_coset_table",
    "builtin_codes", "classify_residual", "get_code", "measure_syndrome",
    "GaloisField", "RSCode", "rs_for_quantum_code",
    "ChannelModel", "PiggybackConfig", "TrialRecord", "apply_channel",
    "embed", "infer_channel_error", "make_config", "receive", "roundtrip",
    "analysis", "harness",
]

__version__ = "0.1.0"
