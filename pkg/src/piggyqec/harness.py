"""Monte Carlo experiments, sweep CSV output, and the application demos.

CSV contract (one file per experiment, fixed header):

    experiment,code,n,k,N,K,T,p_d,p_psc_emp,p_psc_ci,p_psc_bound,p_qep_emp,
    p_qep_ci,p_qep_bound,logical_rate,c_psc_closed,c_psc_lb,trials,seed

Columns irrelevant to an experiment stay empty. Monte Carlo rows fill the
*_emp and *_ci columns (95% half-widths, Wilson when the event count is
below 30) and evaluate the analytic companions at the same point:
p_psc_bound = 1 - (1-p_d)^n, c_psc_lb at p_d, c_psc_closed and p_qep_bound
at the measured corruption rate. Analytic sweep rows (capacity and
qep-bound tables) have no simulation; they carry their p_PSC evaluation
point in p_psc_bound, which for depolarizing-bound rows is also exactly
the evaluated point.

Runs are deterministic: per-point, per-block random substreams are derived
from (seed, point index, block index), so results do not depend on how
work is scheduled. Set PIGGYQEC_WORKERS > 1 to run sweep points in
parallel processes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import analysis
from .psc import ChannelModel, DEPOLARIZING, NOISELESS, PiggybackConfig, roundtrip
from .reed_solomon import rs_for_quantum_code
from .stabilizer import build_coset_table, get_code

CSV_COLUMNS = (
    "experiment", "code", "n", "k", "N", "K", "T", "p_d",
    "p_psc_emp", "p_psc_ci", "p_psc_bound", "p_qep_emp", "p_qep_ci",
    "p_qep_bound", "logical_rate", "c_psc_closed", "c_psc_lb",
    "trials", "seed",
)

_CHUNK_WITHOUT_RS = 1024
_Z95 = 1.959963984540054


class ConfigError(ValueError):
    """Bad experiment configuration (unknown code, invalid pairing, ...)."""


@dataclass
class ExperimentConfig:
    """Inputs for one Monte Carlo sweep; mirrors the JSON config format."""

    code: str
    channel: str = DEPOLARIZING
    p_d_sweep: tuple[float, ...] = (0.0,)
    rs: tuple[int, int] | None = None
    trials_per_point: int = 10_000
    seed: int = 0
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.trials_per_point < 1:
            raise ConfigError("trials_per_point must be >= 1")
        self.p_d_sweep = tuple(float(p) for p in self.p_d_sweep)
        for p in self.p_d_sweep:
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"sweep value {p} outside [0, 1]")
        if self.rs is not None:
            self.rs = (int(self.rs[0]), int(self.rs[1]))

    @classmethod
    def from_json_file(cls, path: str) -> "ExperimentConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        if "code" not in raw:
            raise ConfigError("config is missing the 'code' field")
        if "rs" in raw and raw["rs"] is not None:
            raw["rs"] = tuple(raw["rs"])
        if "p_d_sweep" in raw:
            raw["p_d_sweep"] = tuple(raw["p_d_sweep"])
        return cls(**raw)

    def to_json(self) -> str:
        d = asdict(self)
        d["p_d_sweep"] = list(self.p_d_sweep)
        d["rs"] = list(self.rs) if self.rs else None
        return json.dumps(d, indent=2)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    rows: list[dict] = field(default_factory=list)

    def write_csv(self, path: str) -> None:
        write_csv(self.rows, path)


def _confidence_half_width(successes: int, trials: int) -> float:
    """95% half-width; Wilson when the count is too small for the normal."""
    if trials == 0:
        return 0.0
    p = successes / trials
    z = _Z95
    if successes >= 30 and (trials - successes) >= 30:
        return z * math.sqrt(p * (1.0 - p) / trials)
    zz = z * z
    return (z / (1.0 + zz / trials)) * math.sqrt(
        p * (1.0 - p) / trials + zz / (4.0 * trials * trials)
    )


def _build_pipeline(config: ExperimentConfig) -> PiggybackConfig:
    try:
        code = get_code(config.code)
    except KeyError as exc:
        raise ConfigError(str(exc)) from None
    if config.channel not in (NOISELESS, DEPOLARIZING):
        raise ConfigError(f"unknown channel {config.channel!r}")
    rs = None
    if config.rs is not None:
        n_minus_k = code.n - code.k
        rs_n, rs_k = config.rs
        if rs_n != (1 << n_minus_k) - 1:
            raise ConfigError(
                f"RS block length {rs_n} does not match 2^(n-k)-1 = "
                f"{(1 << n_minus_k) - 1} for {code.name}"
            )
        try:
            rs = rs_for_quantum_code(n_minus_k, rs_k)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    return PiggybackConfig(code=code, table=build_coset_table(code), rs=rs)


def _simulate_point(config: ExperimentConfig, point_index: int) -> dict:
    """Run one sweep point; safe to execute in a worker process."""
    pipeline = _build_pipeline(config)
    code = pipeline.code
    p_d = config.p_d_sweep[point_index]
    model = ChannelModel(kind=config.channel, p_d=p_d)
    m = code.num_syndromes

    if pipeline.rs is not None:
        block_messages, block_trials = pipeline.rs.K, pipeline.rs.N
    else:
        block_messages = block_trials = _CHUNK_WITHOUT_RS
    n_blocks = -(-config.trials_per_point // block_trials)

    psc_err = qep_err = logical = trials = 0
    for block_index in range(n_blocks):
        rng = np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(config.seed, spawn_key=(point_index, block_index))
        ))
        message = rng.integers(0, m, size=block_messages).tolist()
        for rec in roundtrip(pipeline, model, message, rng):
            trials += 1
            if rec.measured.symbol != rec.sent_symbol:
                psc_err += 1
            if rec.decoded.symbol != rec.sent_symbol:
                qep_err += 1
            if rec.residual_class == "logical":
                logical += 1

    p_psc_emp = psc_err / trials
    p_qep_emp = qep_err / trials
    n_minus_k = code.n - code.k
    row = _empty_row()
    row.update(
        experiment="simulate",
        code=code.name,
        n=code.n,
        k=code.k,
        p_d=p_d,
        p_psc_emp=p_psc_emp,
        p_psc_ci=_confidence_half_width(psc_err, trials),
        p_psc_bound=1.0 - (1.0 - p_d) ** code.n,
        p_qep_emp=p_qep_emp,
        p_qep_ci=_confidence_half_width(qep_err, trials),
        logical_rate=logical / trials,
        c_psc_closed=analysis.capacity_psc(n_minus_k, p_psc_emp),
        c_psc_lb=analysis.capacity_lower_bound_depolarizing(code.n, n_minus_k, p_d),
        trials=trials,
        seed=config.seed,
    )
    if pipeline.rs is not None:
        row.update(
            N=pipeline.rs.N,
            K=pipeline.rs.K,
            T=pipeline.rs.T,
            p_qep_bound=analysis.qep_upper_bound(
                pipeline.rs.N, pipeline.rs.T, p_psc_emp
            ),
        )
    return row


def run_psc_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Monte Carlo sweep over p_d; deterministic for a fixed seed."""
    _build_pipeline(config)  # validate before any work
    workers = int(os.environ.get("PIGGYQEC_WORKERS", "1"))
    indices = range(len(config.p_d_sweep))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_simulate_point, [config] * len(config.p_d_sweep), indices))
    else:
        rows = [_simulate_point(config, i) for i in indices]
    return ExperimentResult(config=config, rows=rows)


def _empty_row() -> dict:
    return {c: None for c in CSV_COLUMNS}


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def csv_text(rows: list[dict]) -> str:
    """Render rows in the fixed-column CSV format (quoted where needed)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_format_cell(row.get(c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def write_csv(rows: list[dict], path: str) -> None:
    """Atomic CSV write: temp file in the target directory, then rename."""
    text = csv_text(rows)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


TRIAL_COLUMNS = (
    "sent_symbol", "intentional", "channel_error", "measured_symbol",
    "decoded_symbol", "channel_syndrome_symbol", "residual_class", "decode_failed",
)


def trial_records_text(records) -> str:
    """Row-oriented text dump of a TrialRecord stream, one line per trial."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRIAL_COLUMNS)
    for rec in records:
        writer.writerow([
            rec.sent_symbol, str(rec.intentional), str(rec.channel_error),
            rec.measured.symbol, rec.decoded.symbol,
            rec.inferred_channel_syndrome.symbol, rec.residual_class,
            int(rec.decode_failed),
        ])
    return buf.getvalue()


def capacity_rows(code_name: str, p_values, seed: int = 0) -> list[dict]:
    """Analytic capacity table for one code (closed form per p_PSC point)."""
    try:
        code = get_code(code_name)
    except KeyError as exc:
        raise ConfigError(str(exc)) from None
    n_minus_k = code.n - code.k
    rows = []
    for point in analysis.capacity_sweep(n_minus_k, p_values):
        row = _empty_row()
        row.update(
            experiment="capacity", code=code.name, n=code.n, k=code.k,
            p_psc_bound=point.p_psc, c_psc_closed=point.c_psc,
            trials=0, seed=seed,
        )
        rows.append(row)
    return rows


def depolarizing_bound_rows(code_name: str, p_d_values, seed: int = 0) -> list[dict]:
    """Analytic capacity lower bound vs depolarizing strength."""
    try:
        code = get_code(code_name)
    except KeyError as exc:
        raise ConfigError(str(exc)) from None
    n_minus_k = code.n - code.k
    rows = []
    for p_d in p_d_values:
        row = _empty_row()
        row.update(
            experiment="depolarizing_bound", code=code.name, n=code.n, k=code.k,
            p_d=p_d,
            p_psc_bound=1.0 - (1.0 - p_d) ** code.n,
            c_psc_lb=analysis.capacity_lower_bound_depolarizing(code.n, n_minus_k, p_d),
            trials=0, seed=seed,
        )
        rows.append(row)
    return rows


def qep_bound_rows(rs_n: int, rs_k: int, p_values, seed: int = 0) -> list[dict]:
    """Analytic q-codeword error bound vs corruption probability."""
    if rs_n < 2 or not 1 <= rs_k < rs_n or (rs_n - rs_k) % 2:
        raise ConfigError(f"invalid RS parameters ({rs_n}, {rs_k})")
    t = (rs_n - rs_k) // 2
    rows = []
    for p in p_values:
        row = _empty_row()
        row.update(
            experiment="qep_bound", N=rs_n, K=rs_k, T=t,
            p_psc_bound=p,
            p_qep_bound=analysis.qep_upper_bound(rs_n, t, p),
            trials=0, seed=seed,
        )
        rows.append(row)
    return rows


def find_sync(stream, pattern, max_mismatches: int = 0) -> list[int]:
    """All start offsets where the pattern matches with few enough mismatches.

    Symbol-wise comparison, ascending offsets; an intentional-error sync
    word is found by scanning the received syndrome-symbol stream.
    """
    stream = list(stream)
    pattern = list(pattern)
    if not pattern:
        raise ValueError("empty sync pattern")
    if max_mismatches < 0:
        raise ValueError("max_mismatches must be >= 0")
    positions = []
    for start in range(len(stream) - len(pattern) + 1):
        mismatches = 0
        for offset, want in enumerate(pattern):
            if stream[start + offset] != want:
                mismatches += 1
                if mismatches > max_mismatches:
                    break
        if mismatches <= max_mismatches:
            positions.append(start)
    return positions


@dataclass
class AnnotateTranscript:
    """Human-readable record of a noiseless annotation run."""

    code_name: str
    bits_per_codeword: int
    symbols: list[int]
    operators: list[str]
    recovered_bits: list[int]
    lines: list[str]

    @property
    def text(self) -> str:
        return "\n".join(self.lines)


def annotate_demo(
    config: PiggybackConfig, message_bits, q_codeword_count: int
) -> AnnotateTranscript:
    """Pack bits onto q-codewords, roundtrip noiselessly, read them back.

    Bits fill syndrome symbols most-significant-first (first generator
    first), n-k bits per q-codeword; unused trailing bit slots are zero.
    """
    bits = [int(b) for b in message_bits]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("message bits must be 0 or 1")
    width = config.symbols_per_codeword
    capacity = width * q_codeword_count
    if len(bits) > capacity:
        raise ValueError(
            f"{len(bits)} bits exceed {capacity} = {width} x {q_codeword_count} slots"
        )
    padded = bits + [0] * (capacity - len(bits))
    symbols = [
        int("".join(map(str, padded[i: i + width])), 2)
        for i in range(0, capacity, width)
    ]
    rng = np.random.default_rng(0)  # unused by the noiseless channel
    records = roundtrip(config, ChannelModel(NOISELESS), symbols, rng)
    recovered: list[int] = []
    for rec in records:
        recovered.extend((rec.decoded.symbol >> (width - 1 - i)) & 1 for i in range(width))
    recovered = recovered[: len(bits)]

    lines = [
        f"code {config.code.name}: {width} bits per q-codeword, "
        f"{q_codeword_count} q-codewords",
        "idx  bits  symbol  intentional  syndrome",
    ]
    for i, rec in enumerate(records):
        bit_str = "".join(str((rec.sent_symbol >> (width - 1 - j)) & 1) for j in range(width))
        signs = " ".join(f"{s:+d}" for s in rec.measured.signs)
        lines.append(
            f"{i:3d}  {bit_str:>4}  {rec.sent_symbol:6d}  {str(rec.intentional):>11}  {signs}"
        )
    lines.append(f"recovered bits: {''.join(map(str, recovered))}")
    return AnnotateTranscript(
        code_name=config.code.name,
        bits_per_codeword=width,
        symbols=symbols,
        operators=[str(r.intentional) for r in records],
        recovered_bits=recovered,
        lines=lines,
    )
