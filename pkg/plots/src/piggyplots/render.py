"""Render experiment CSVs into publication-style figures.

Consumes the fixed-header CSV files the simulator writes (and nothing
else: this package never imports the simulator). Three figure kinds:

  capacity            capacity vs corruption probability, one curve per code
  depolarizing_bound  guaranteed capacity vs depolarizing p_d, log x-axis
  qep                 q-codeword error bound vs corruption, log y-axis,
                      one curve per T, empirical points with whiskers
                      wherever *_emp/*_ci columns are filled

Output is deterministic: fixed style, fixed SVG hash salt, no timestamps;
rendering the same input twice produces byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "piggyplots"
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

KINDS = ("capacity", "depolarizing_bound", "qep")

_REQUIRED = {
    "capacity": ("code", "p_psc_bound", "c_psc_closed"),
    "depolarizing_bound": ("code", "p_d", "c_psc_lb"),
    "qep": ("N", "K", "T", "p_psc_bound", "p_qep_bound"),
}

_AXES = {
    "capacity": ("corruption probability", "capacity [bits/q-codeword]"),
    "depolarizing_bound": ("depolarizing probability", "capacity [bits/q-codeword]"),
    "qep": ("corruption probability", "q-codeword error probability"),
}


class SchemaError(ValueError):
    """Input CSV does not carry the columns the figure kind needs."""


@dataclass
class FigureSpec:
    inputs: list[str]
    kind: str
    output: str
    xlim: tuple[float, float] | None = None
    ylim: tuple[float, float] | None = None
    raster: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise SchemaError(f"unknown figure kind {self.kind!r}; choose from {KINDS}")
        if not self.inputs:
            raise SchemaError("no input CSV files given")


@dataclass
class Series:
    label: str
    x: list[float]
    y: list[float]
    yerr: list[float] | None = None
    empirical: bool = False


def _read_rows(path: str) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise SchemaError(f"{path}: empty file, missing column 'experiment'")
        rows = list(reader)
    return rows


def _check_columns(path: str, rows: list[dict], kind: str) -> None:
    present = set(rows[0].keys()) if rows else set()
    if not rows:
        raise SchemaError(f"{path}: no data rows, missing column values for {kind}")
    for column in _REQUIRED[kind]:
        if column not in present:
            raise SchemaError(f"{path}: missing column '{column}'")


def _floats(rows: list[dict], x_col: str, y_col: str):
    xs, ys = [], []
    for row in rows:
        if row.get(x_col) and row.get(y_col):
            xs.append(float(row[x_col]))
            ys.append(float(row[y_col]))
    return xs, ys


def load_series(paths: list[str], kind: str) -> list[Series]:
    """Extract the curves a figure kind draws, one Series per group."""
    rows: list[dict] = []
    for path in paths:
        file_rows = _read_rows(path)
        _check_columns(path, file_rows, kind)
        rows.extend(file_rows)

    series: list[Series] = []
    if kind in ("capacity", "depolarizing_bound"):
        x_col = "p_psc_bound" if kind == "capacity" else "p_d"
        y_col = "c_psc_closed" if kind == "capacity" else "c_psc_lb"
        for code in sorted({r["code"] for r in rows if r.get("code")}):
            group = [r for r in rows if r.get("code") == code]
            xs, ys = _floats(group, x_col, y_col)
            if xs:
                series.append(Series(label=code, x=xs, y=ys))
    else:
        keys = sorted(
            {(r["N"], r["K"], r["T"]) for r in rows if r.get("T")},
            key=lambda nkt: int(nkt[2]),
        )
        for n, k, t in keys:
            group = [r for r in rows if (r.get("N"), r.get("K"), r.get("T")) == (n, k, t)]
            xs, ys = _floats(group, "p_psc_bound", "p_qep_bound")
            if xs:
                series.append(Series(label=f"RS({n},{k}), T={t}", x=xs, y=ys))
            ex, ey = _floats(group, "p_psc_emp", "p_qep_emp")
            if ex:
                err = [
                    float(r["p_qep_ci"]) if r.get("p_qep_ci") else 0.0
                    for r in group
                    if r.get("p_psc_emp") and r.get("p_qep_emp")
                ]
                series.append(
                    Series(label=f"T={t} empirical", x=ex, y=ey, yerr=err, empirical=True)
                )
    if not series:
        raise SchemaError(f"no plottable rows for kind {kind!r}")
    for s in series:
        order = sorted(range(len(s.x)), key=lambda i: s.x[i])
        s.x = [s.x[i] for i in order]
        s.y = [s.y[i] for i in order]
        if s.yerr is not None:
            s.yerr = [s.yerr[i] for i in order]
    return series


def render(spec: FigureSpec) -> str:
    """Draw the figure and write it; returns the output path."""
    series = load_series(spec.inputs, spec.kind)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for s in series:
        if s.empirical:
            ax.errorbar(
                s.x, s.y, yerr=s.yerr, fmt="o", markersize=4,
                capsize=3, label=s.label,
            )
        else:
            ax.plot(s.x, s.y, label=s.label)
    if spec.kind == "depolarizing_bound":
        ax.set_xscale("log")
    if spec.kind == "qep":
        ax.set_yscale("log")
        ax.set_ylim(bottom=1e-12)
    xlabel, ylabel = _AXES[spec.kind]
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if spec.xlim:
        ax.set_xlim(spec.xlim)
    if spec.ylim:
        ax.set_ylim(spec.ylim)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    if spec.raster:
        fig.savefig(spec.output, dpi=150)
    else:
        fig.savefig(spec.output, format="svg", metadata={"Date": None})
    plt.close(fig)
    return spec.output


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render", description="Render experiment CSVs into figures."
    )
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--in", dest="inputs", required=True, nargs="+",
                        help="input CSV file(s)")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--xlim", help="x-axis range as min,max")
    parser.add_argument("--ylim", help="y-axis range as min,max")
    parser.add_argument("--raster", action="store_true",
                        help="write a raster image instead of SVG")
    args = parser.parse_args(argv)

    def parse_range(text):
        if text is None:
            return None
        try:
            lo, hi = (float(v) for v in text.split(","))
            return (lo, hi)
        except ValueError:
            raise SchemaError(f"cannot parse axis range {text!r}; expected min,max")

    try:
        spec = FigureSpec(
            inputs=args.inputs, kind=args.kind, output=args.out,
            xlim=parse_range(args.xlim), ylim=parse_range(args.ylim),
            raster=args.raster,
        )
        path = render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
