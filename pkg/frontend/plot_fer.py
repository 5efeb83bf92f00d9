#!/usr/bin/env python3
"""Render FER curves from a ratdec simulate CSV.

Usage: plot_fer.py <csv> <out.png> [--linear]

One curve per decoder over the shared channel-parameter axis, FER on a
log scale unless --linear is given. Zero-FER points cannot sit on a log
axis, so they are drawn at a floor of 1/(10 * trials) with a hollow
marker and the convention is disclosed in the legend.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

EXPECTED_VERSION = "# ratdec-csv v1"
EXPECTED_HEADER = "decoder,param,trials,frame_errors,fer,mean_list_size,mean_decode_us,seed"


class SchemaError(ValueError):
    pass


class CurveSet:
    """Per-decoder (param, fer, trials) series parsed from a v1 CSV.

    Raw string tokens are retained so re-serialization is lossless.
    """

    def __init__(self):
        self.curves: dict[str, list[tuple[float, float, int, str, str]]] = {}

    @classmethod
    def from_csv(cls, path: str) -> "CurveSet":
        with open(path) as fh:
            lines = [ln.rstrip("\n") for ln in fh]
        if not lines or lines[0].strip() != EXPECTED_VERSION:
            raise SchemaError(f"unsupported schema: expected {EXPECTED_VERSION!r}")
        if len(lines) < 2 or lines[1].strip() != EXPECTED_HEADER:
            raise SchemaError("missing or unexpected column header")
        out = cls()
        for lineno, line in enumerate(lines[2:], start=3):
            if not line.strip():
                continue
            fields = line.split(",")
            if len(fields) != 8:
                raise SchemaError(f"line {lineno}: expected 8 columns, got {len(fields)}")
            decoder, param_s, trials_s, _errors, fer_s = fields[:5]
            out.curves.setdefault(decoder, []).append(
                (float(param_s), float(fer_s), int(trials_s), param_s, fer_s))
        for series in out.curves.values():
            series.sort(key=lambda row: row[0])
        return out

    def reserialize_points(self, decoder: str) -> list[tuple[str, str]]:
        return [(p_s, f_s) for _, _, _, p_s, f_s in self.curves[decoder]]


def render(csv_path: str, out_path: str, log_y: bool = True) -> None:
    curves = CurveSet.from_csv(csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    floored_any = False
    for decoder, series in sorted(curves.curves.items()):
        params = [row[0] for row in series]
        fers = [row[1] for row in series]
        trials = [row[2] for row in series]
        if log_y:
            shown = [f if f > 0 else 1.0 / (10.0 * max(t, 1)) for f, t in zip(fers, trials)]
        else:
            shown = fers
        line, = ax.plot(params, shown, marker="o", label=decoder)
        if log_y:
            zero_pts = [(p, s) for p, f, s in zip(params, fers, shown) if f == 0]
            if zero_pts:
                floored_any = True
                ax.plot([p for p, _ in zero_pts], [s for _, s in zero_pts],
                        linestyle="none", marker="o", markerfacecolor="white",
                        markeredgecolor=line.get_color())
    if log_y:
        ax.set_yscale("log")
    ax.set_xlabel("channel parameter")
    ax.set_ylabel("frame error rate")
    ax.grid(True, which="both", alpha=0.3)
    if curves.curves:
        title = "FER vs channel parameter"
        if floored_any:
            ax.plot([], [], linestyle="none", marker="o", markerfacecolor="white",
                    markeredgecolor="gray", label="hollow: FER 0, drawn at 1/(10*trials)")
        ax.legend()
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv")
    parser.add_argument("out")
    parser.add_argument("--linear", action="store_true", help="linear FER axis")
    args = parser.parse_args(argv)
    try:
        render(args.csv, args.out, log_y=not args.linear)
    except (OSError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
