"""Deterministic CSV schemas for every artifact the tool emits.

Floats are printed with 17 significant digits so a written file parses
back to bit-identical values; no timestamps or environment data ever go
into a data file, which makes reproduction runs byte-comparable.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .analysis import ComparisonRow
from .continuum import ContinuumSolution, eval_fa, eval_fb
from .grover_core import Trajectory

DISTRIBUTION_HEADER = ["k", "p_k"]
TRAJECTORY_HEADER = ["r", "a_re", "a_im", "b_re", "b_im", "success_prob"]
CONTINUUM_HEADER = ["x", "f_a", "f_b"]
COMPARISON_HEADER = [
    "k",
    "p_k",
    "classical_steps",
    "grover_scale",
    "discrete_peak",
    "recip_classical",
    "recip_grover",
    "ln_classical",
    "ln_grover",
]


def fmt(x: float) -> str:
    """Round-trip-exact float formatting (17 significant digits)."""
    return format(float(x), ".17g")


def write_rows(path: Path, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_distribution(path: Path, labels, proportions) -> None:
    rows = [[str(k), fmt(p)] for k, p in zip(labels, proportions)]
    write_rows(path, DISTRIBUTION_HEADER, rows)


def write_trajectory(path: Path, traj: Trajectory) -> None:
    rows = [
        [
            str(pt.r),
            fmt(pt.state.a.real),
            fmt(pt.state.a.imag),
            fmt(pt.state.b.real),
            fmt(pt.state.b.imag),
            fmt(pt.success_prob),
        ]
        for pt in traj.points
    ]
    write_rows(path, TRAJECTORY_HEADER, rows)


def write_continuum(
    path: Path, sol: ContinuumSolution, x_max: float, x_step: float = 0.01
) -> list[tuple[float, float, float]]:
    """Sample f_a, f_b on a uniform grid and write them; returns the samples."""
    n = int(round(x_max / x_step))
    samples = []
    rows = []
    for i in range(n + 1):
        x = i * x_step
        fa, fb = eval_fa(sol, x), eval_fb(sol, x)
        samples.append((x, fa, fb))
        rows.append([fmt(x), fmt(fa), fmt(fb)])
    write_rows(path, CONTINUUM_HEADER, rows)
    return samples


def write_comparison(path: Path, rows: list[ComparisonRow]) -> None:
    out = [
        [
            str(row.k),
            fmt(row.p_k),
            fmt(row.classical_steps),
            fmt(row.grover_scale),
            "" if row.discrete_peak is None else str(row.discrete_peak),
            fmt(row.recip_classical),
            fmt(row.recip_grover),
            fmt(row.ln_classical),
            fmt(row.ln_grover),
        ]
        for row in rows
    ]
    write_rows(path, COMPARISON_HEADER, out)


def _read(path: Path, expected_header: list[str]) -> list[list[str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != expected_header:
            raise ValueError(f"{path}: unexpected header {header!r}")
        return list(reader)


def read_distribution(path: Path) -> list[tuple[int, float]]:
    return [(int(r[0]), float(r[1])) for r in _read(path, DISTRIBUTION_HEADER)]


def read_trajectory(path: Path) -> list[tuple[int, complex, complex, float]]:
    return [
        (int(r[0]), complex(float(r[1]), float(r[2])), complex(float(r[3]), float(r[4])), float(r[5]))
        for r in _read(path, TRAJECTORY_HEADER)
    ]


def read_continuum(path: Path) -> list[tuple[float, float, float]]:
    return [(float(r[0]), float(r[1]), float(r[2])) for r in _read(path, CONTINUUM_HEADER)]


def read_comparison(path: Path) -> list[ComparisonRow]:
    rows = []
    for r in _read(path, COMPARISON_HEADER):
        rows.append(
            ComparisonRow(
                k=int(r[0]),
                p_k=float(r[1]),
                classical_steps=float(r[2]),
                grover_scale=float(r[3]),
                discrete_peak=None if r[4] == "" else int(r[4]),
                recip_classical=float(r[5]),
                recip_grover=float(r[6]),
                ln_classical=float(r[7]),
                ln_grover=float(r[8]),
            )
        )
    return rows
