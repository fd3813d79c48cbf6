"""Command-line front end.

    wgrover dist|simulate|continuum|compare  --spec FILE | --inline JSON
            [--target K] [--rmax N] [--out DIR] [--svg]
    wgrover repro fig2|fig3|fig4|fig5|fig6   [--out DIR]

CSV files are always written; SVG plots on request (always for repro).
Exit codes: 0 success, 1 validation error, 2 I/O error, 3 numeric error
(for example no success-probability peak within --rmax).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import analysis, continuum, csvio, grover_core, svg
from .amplitudes import AmplitudeDistribution, load_spec
from .errors import ConsistencyError, DomainError, NoPeakError

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_NUMERIC = 3

# Figure parameters fixed by the reproduction captions.
FIGURE_ALPHAS = (0.8, 1.6, 2.4, 3.2)
FIGURE_Q1 = 1
FIGURE_N = 20
FIG2_N = 20
FIG2_TARGET = 1
FIG4_ALPHA = 0.8
FIG4_TARGET = 3
FIG_TRAJECTORY_STEPS = 40


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs of one CLI invocation."""

    dist: AmplitudeDistribution | None
    target: int | None
    r_max: int
    out_dir: Path
    want_svg: bool


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments by default; keep 2 reserved for I/O.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_VALIDATION)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wgrover", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_spec=True):
        if needs_spec:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--spec", type=Path, help="JSON distribution spec file")
            group.add_argument("--inline", help="JSON distribution spec string")
        p.add_argument("--target", type=int, default=None, help="target basis label k")
        p.add_argument("--rmax", type=int, default=200, help="iteration budget (default 200)")
        p.add_argument("--out", type=Path, default=None,
                       help="output directory (default $WGROVER_OUT or ./out)")
        p.add_argument("--svg", action="store_true", help="also write SVG plots")

    add_common(sub.add_parser("dist", help="emit the probability distribution"))
    add_common(sub.add_parser("simulate", help="run the discrete recurrence"))
    add_common(sub.add_parser("continuum", help="evaluate the damped-oscillation solution"))
    add_common(sub.add_parser("compare", help="classical vs Grover step comparison"))
    repro = sub.add_parser("repro", help="reproduce a figure's artifacts")
    repro.add_argument("figure", choices=["fig2", "fig3", "fig4", "fig5", "fig6"])
    add_common(repro, needs_spec=False)
    return parser


def _load_config(args) -> RunConfig:
    dist = None
    if getattr(args, "spec", None) is not None:
        text = args.spec.read_text(encoding="utf-8")
        dist = _parse_spec(text, source=str(args.spec))
    elif getattr(args, "inline", None) is not None:
        dist = _parse_spec(args.inline, source="--inline")
    if args.rmax < 1:
        raise DomainError(f"--rmax must be >= 1, got {args.rmax}")
    out_dir = args.out or Path(os.environ.get("WGROVER_OUT", "out"))
    return RunConfig(
        dist=dist,
        target=args.target,
        r_max=args.rmax,
        out_dir=out_dir,
        want_svg=bool(args.svg),
    )


def _parse_spec(text: str, source: str) -> AmplitudeDistribution:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{source}: invalid JSON: {exc}") from None
    return load_spec(obj)


def _require_target(config: RunConfig) -> int:
    if config.target is None:
        raise DomainError("this command needs --target K")
    return config.target


def _ensure_out(config: RunConfig, *subdirs: str) -> Path:
    path = config.out_dir.joinpath(*subdirs)
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_dist(config: RunConfig) -> int:
    out = _ensure_out(config)
    dist = config.dist
    csvio.write_distribution(out / "dist.csv", dist.labels, dist.proportions())
    if config.want_svg:
        svg.bar_plot(out / "dist.svg", list(dist.labels), list(dist.proportions()),
                     "database distribution", "label k", "p_k")
    print(f"wrote {out / 'dist.csv'}")
    return EXIT_OK


def cmd_simulate(config: RunConfig) -> int:
    out = _ensure_out(config)
    k = _require_target(config)
    traj = grover_core.iterate(config.dist, k, config.r_max)
    csvio.write_trajectory(out / "trajectory.csv", traj)
    if config.want_svg:
        rs = [float(pt.r) for pt in traj.points]
        svg.line_plot(
            out / "trajectory.svg",
            [
                ("a_r", rs, [pt.state.a.real for pt in traj.points]),
                ("b_r", rs, [pt.state.b.real for pt in traj.points]),
            ],
            f"recurrence, target k={k}", "iteration r", "coefficient",
        )
    r_star, prob = grover_core.first_peak(traj)
    print(f"r*={r_star} prob={prob:.6g}")
    return EXIT_OK


def cmd_continuum(config: RunConfig) -> int:
    out = _ensure_out(config)
    k = _require_target(config)
    p_k = config.dist.amplitude(k)
    sol = continuum.fit_one_step_solution(p_k)
    t_period = continuum.period(p_k)
    samples = csvio.write_continuum(out / "continuum.csv", sol, x_max=3.0 * t_period)
    if config.want_svg:
        xs = [s[0] for s in samples]
        svg.line_plot(
            out / "continuum.svg",
            [("f_a", xs, [s[1] for s in samples]), ("f_b", xs, [s[2] for s in samples])],
            f"continuum approximation, target k={k}", "x", "f",
        )
    x_star = continuum.predicted_peak_step(sol)
    print(f"x*={x_star:.6g} T={t_period:.6g}")
    return EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    out = _ensure_out(config)
    rows = analysis.comparison_table(config.dist)
    csvio.write_comparison(out / "comparison.csv", rows)
    if config.want_svg:
        _comparison_svgs(out / "comparison_recip.svg", out / "comparison_log.svg", rows)
    verdict = analysis.global_speedup(config.dist)
    failures = analysis.local_failures(config.dist)
    print(
        f"global speedup: {verdict.holds} "
        f"(max 1/dt = {verdict.max_grover_scale:.6g} at k={verdict.grover_witness}, "
        f"min 1/p = {verdict.min_classical_steps:.6g} at k={verdict.classical_witness})"
    )
    if failures:
        print(f"local condition fails for k = {failures}")
    else:
        print("local condition holds for every k")
    return EXIT_OK


def _comparison_svgs(recip_path: Path, log_path: Path, rows) -> None:
    ks = [float(r.k) for r in rows]
    svg.line_plot(
        recip_path,
        [
            ("classical p_k", ks, [r.recip_classical for r in rows]),
            ("grover dt(k)", ks, [r.recip_grover for r in rows]),
        ],
        "reciprocal step numbers", "label k", "1/steps",
    )
    svg.line_plot(
        log_path,
        [
            ("classical", ks, [r.ln_classical for r in rows]),
            ("grover", ks, [r.ln_grover for r in rows]),
        ],
        "log step numbers", "label k", "ln(steps)",
    )


def _repro_check(out: Path, dist: AmplitudeDistribution, k: int, title: str) -> None:
    """Discrete trajectory plus continuum curves for one target."""
    traj = grover_core.iterate(dist, k, FIG_TRAJECTORY_STEPS)
    csvio.write_trajectory(out / "trajectory.csv", traj)
    rs = [float(pt.r) for pt in traj.points]
    svg.line_plot(
        out / "trajectory.svg",
        [
            ("a_r", rs, [pt.state.a.real for pt in traj.points]),
            ("b_r", rs, [pt.state.b.real for pt in traj.points]),
        ],
        f"{title}: recurrence", "iteration r", "coefficient",
    )
    p_k = dist.amplitude(k)
    sol = continuum.fit_one_step_solution(p_k)
    samples = csvio.write_continuum(out / "continuum.csv", sol, x_max=3.0 * continuum.period(p_k))
    xs = [s[0] for s in samples]
    svg.line_plot(
        out / "continuum.svg",
        [("f_a", xs, [s[1] for s in samples]), ("f_b", xs, [s[2] for s in samples])],
        f"{title}: continuum", "x", "f",
    )


def _coherent_figure_dist(alpha: float) -> AmplitudeDistribution:
    return load_spec(
        {"kind": "coherent", "alpha_re": alpha, "alpha_im": 0.0, "q1": FIGURE_Q1, "n": FIGURE_N}
    )


def cmd_repro(config: RunConfig, figure: str) -> int:
    out = _ensure_out(config, figure)
    if figure == "fig2":
        _repro_check(out, load_spec({"kind": "uniform", "n": FIG2_N}), FIG2_TARGET,
                     "uniform N=20")
    elif figure == "fig3":
        for alpha in FIGURE_ALPHAS:
            dist = _coherent_figure_dist(alpha)
            csvio.write_distribution(out / f"alpha_{alpha}.csv", dist.labels, dist.proportions())
            svg.bar_plot(out / f"alpha_{alpha}.svg", list(dist.labels),
                         list(dist.proportions()),
                         f"coherent distribution, alpha={alpha}", "label k", "p_k")
    elif figure == "fig4":
        _repro_check(out, _coherent_figure_dist(FIG4_ALPHA), FIG4_TARGET,
                     f"coherent alpha={FIG4_ALPHA}, k={FIG4_TARGET}")
    elif figure in ("fig5", "fig6"):
        for alpha in FIGURE_ALPHAS:
            rows = analysis.comparison_table(_coherent_figure_dist(alpha))
            csvio.write_comparison(out / f"alpha_{alpha}.csv", rows)
            ks = [float(r.k) for r in rows]
            if figure == "fig5":
                svg.line_plot(
                    out / f"alpha_{alpha}_recip.svg",
                    [
                        ("classical p_k", ks, [r.recip_classical for r in rows]),
                        ("grover dt(k)", ks, [r.recip_grover for r in rows]),
                    ],
                    f"reciprocal steps, alpha={alpha}", "label k", "1/steps",
                )
            else:
                svg.line_plot(
                    out / f"alpha_{alpha}_log.svg",
                    [
                        ("classical", ks, [r.ln_classical for r in rows]),
                        ("grover", ks, [r.ln_grover for r in rows]),
                    ],
                    f"log steps, alpha={alpha}", "label k", "ln(steps)",
                )
    print(f"wrote {figure} artifacts under {out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _load_config(args)
        if args.command == "dist":
            return cmd_dist(config)
        if args.command == "simulate":
            return cmd_simulate(config)
        if args.command == "continuum":
            return cmd_continuum(config)
        if args.command == "compare":
            return cmd_compare(config)
        if args.command == "repro":
            return cmd_repro(config, args.figure)
        raise DomainError(f"unknown command {args.command!r}")
    except DomainError as exc:
        print(f"wgrover: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"wgrover: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NoPeakError, ConsistencyError) as exc:
        print(f"wgrover: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
