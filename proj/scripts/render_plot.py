#!/usr/bin/env python3
"""Render a .plot command file (see docs/formats.md) with matplotlib.

Usage: render_plot.py <file.plot> [out.png]
"""
import csv
import pathlib
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    plot_path = pathlib.Path(sys.argv[1])
    out_path = pathlib.Path(sys.argv[2]) if len(sys.argv) > 2 else plot_path.with_suffix(".png")

    directives = []
    for line in plot_path.read_text().splitlines():
        line = line.strip()
        if line:
            directives.append(line.split())

    csv_file = title = xlabel = ylabel = None
    series = []
    for d in directives:
        if d[0] == "csv":
            csv_file = plot_path.parent / d[1]
        elif d[0] == "title":
            title = " ".join(d[1:])
        elif d[0] == "xlabel":
            xlabel = d[1]
        elif d[0] == "ylabel":
            ylabel = d[1]
        elif d[0] == "series":
            series.append((d[1], d[2], d[3]))

    with open(csv_file, newline="") as f:
        rows = list(csv.DictReader(f))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name, xcol, ycol in series:
        xs, ys = [], []
        for r in rows:
            if r.get("error") == "1" or not r[ycol]:
                continue
            xs.append(float(r[xcol]))
            ys.append(float(r[ycol]))
        ax.plot(xs, ys, label=name, lw=1.2)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    print(f"wrote {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
