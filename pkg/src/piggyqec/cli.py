"""Command-line front door.

Subcommands: codes, capacity, bounds, simulate, framesync, annotate.
Numeric tables go to CSV files in the harness format; human-readable
summaries go to stdout. Exit codes: 0 success, 1 configuration error,
2 runtime failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis, harness
from .harness import ConfigError
from .psc import make_config
from .stabilizer import catalog_text, get_code

DEFAULT_SEED = 0
_SWEEP_EPS = 1e-9


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad flags; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def parse_sweep(text: str) -> tuple[float, ...]:
    """A single value, or an inclusive `start:stop:step` grid."""
    text = text.strip()
    try:
        if ":" not in text:
            return (float(text),)
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ConfigError(
            f"cannot parse sweep {text!r}; expected a number or start:stop:step"
        ) from None
    if step <= 0 or stop < start:
        raise ConfigError(f"bad sweep {text!r}: need step > 0 and stop >= start")
    values = []
    i = 0
    while True:
        value = start + i * step
        if value > stop + _SWEEP_EPS * max(1.0, abs(stop)):
            break
        values.append(min(value, stop))
        i += 1
    return tuple(values)


def parse_rs(text: str) -> tuple[int, int]:
    try:
        n_str, k_str = text.split(",")
        return int(n_str), int(k_str)
    except ValueError:
        raise ConfigError(f"cannot parse RS parameters {text!r}; expected N,K") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="piggyqec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("codes", help="print the builtin code catalog")

    p_cap = sub.add_parser("capacity", help="closed-form capacity table")
    p_cap.add_argument("--code", required=True)
    p_cap.add_argument("--p-psc", default="0:0.5:0.01", help="sweep, value or a:b:step")
    p_cap.add_argument("--out", help="CSV output path")
    p_cap.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_bnd = sub.add_parser("bounds", help="capacity lower bound or q-codeword error bound")
    p_bnd.add_argument("--code", help="code for the depolarizing capacity bound")
    p_bnd.add_argument("--pd", help="depolarizing sweep (default: log grid 1e-4..0.1)")
    p_bnd.add_argument("--rs", help="N,K for the q-codeword error bound")
    p_bnd.add_argument("--p-psc", help="corruption sweep for the error bound")
    p_bnd.add_argument("--out", help="CSV output path")
    p_bnd.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_sim = sub.add_parser("simulate", help="Monte Carlo sweep from a JSON config")
    p_sim.add_argument("--config", required=True)
    p_sim.add_argument("--out", help="CSV output path (overrides config)")

    p_fs = sub.add_parser("framesync", help="sync-word detection demo")
    p_fs.add_argument("--code", default="[[3,1]]")
    p_fs.add_argument("--frames", type=int, default=3)
    p_fs.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_ann = sub.add_parser("annotate", help="piggyback a bit string, noiselessly")
    p_ann.add_argument("--code", default="[[3,1]]")
    p_ann.add_argument("--bits", default="1101001010")
    p_ann.add_argument("--codewords", type=int, default=5)
    return parser


def _emit(rows: list[dict], out: str | None, summary: str, seed: int) -> None:
    print(f"# seed={seed} rows={len(rows)}")
    print(summary)
    if out:
        harness.write_csv(rows, out)
        print(f"wrote {out}")
    else:
        print(harness.csv_text(rows), end="")


def _cmd_codes(args) -> int:
    print(catalog_text())
    return 0


def _cmd_capacity(args) -> int:
    sweep = parse_sweep(args.p_psc)
    rows = harness.capacity_rows(args.code, sweep, seed=args.seed)
    code = get_code(args.code)
    flagged = sum(
        1 for p in sweep if p > analysis.uniform_error_point(code.n - code.k)
    )
    summary = f"capacity of {code.name} at {len(sweep)} p_PSC points"
    if flagged:
        summary += f" ({flagged} beyond the uniform point: raw values reported)"
    _emit(rows, args.out, summary, args.seed)
    return 0


def _cmd_bounds(args) -> int:
    if args.rs is not None:
        if args.p_psc is None:
            raise ConfigError("--rs needs --p-psc")
        rs_n, rs_k = parse_rs(args.rs)
        sweep = parse_sweep(args.p_psc)
        rows = harness.qep_bound_rows(rs_n, rs_k, sweep, seed=args.seed)
        t = (rs_n - rs_k) // 2
        summary = f"q-codeword error bound for RS({rs_n},{rs_k}), T={t}"
    elif args.code is not None:
        if args.pd is None:
            sweep = tuple(float(p) for p in np.logspace(-4, -1, 31))
        else:
            sweep = parse_sweep(args.pd)
        rows = harness.depolarizing_bound_rows(args.code, sweep, seed=args.seed)
        summary = f"capacity lower bound for {get_code(args.code).name} over p_d"
    else:
        raise ConfigError("bounds needs either --code (with --pd) or --rs (with --p-psc)")
    _emit(rows, args.out, summary, args.seed)
    return 0


def _cmd_simulate(args) -> int:
    config = harness.ExperimentConfig.from_json_file(args.config)
    out = args.out or config.output_path
    result = harness.run_psc_experiment(config)
    summary = (
        f"simulated {config.code} over {len(config.p_d_sweep)} points, "
        f"{config.trials_per_point} q-codewords per point"
    )
    if config.rs is not None:
        # block decoding holds back N q-codewords before recovery
        summary += f"; decode delay {config.rs[0]} q-codewords"
    _emit(result.rows, out, summary, config.seed)
    return 0


def _cmd_framesync(args) -> int:
    code = get_code(args.code)
    config = make_config(code)
    m = code.num_syndromes
    sync_word = [s % m for s in (1, 2, 3)]  # distinct nonzero symbols
    frame = [0, 0, 0, 0] + sync_word
    stream = frame * args.frames
    rng = np.random.default_rng(args.seed)
    from .psc import ChannelModel, NOISELESS, roundtrip

    records = roundtrip(config, ChannelModel(NOISELESS), stream, rng)
    received = [r.measured.symbol for r in records]
    positions = harness.find_sync(received, sync_word, max_mismatches=0)
    print(f"# seed={args.seed} code={code.name}")
    print(f"sync word symbols: {sync_word}")
    print(f"received symbols:  {received}")
    print(f"sync found at offsets: {positions}")
    return 0


def _cmd_annotate(args) -> int:
    code = get_code(args.code)
    config = make_config(code)
    transcript = harness.annotate_demo(config, args.bits.strip(), args.codewords)
    print(transcript.text)
    ok = transcript.recovered_bits == [int(b) for b in args.bits.strip()]
    print("roundtrip ok" if ok else "roundtrip FAILED")
    return 0 if ok else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "codes": _cmd_codes,
        "capacity": _cmd_capacity,
        "bounds": _cmd_bounds,
        "simulate": _cmd_simulate,
        "framesync": _cmd_framesync,
        "annotate": _cmd_annotate,
    }
    try:
        return handlers[args.command](args)
    except (ConfigError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - runtime failures
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
