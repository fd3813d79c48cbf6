"""Classical versus Grover step-count comparison.

Classical search for label k needs about 1/p_k queries; Grover search
needs about 1/delta_tilde(k) applications of G (the constant pi/4 is
dropped since only the order matters).  Comparing reciprocals gives the
two speedup predicates:

  local   delta_tilde(k)^-1 < 1/p_k           (one chosen target)
  global  max_k delta_tilde(k)^-1 < min_j 1/p_j   (uniformly over targets)

The local inequality is equivalent to |P(k)| < sqrt(1 - |P(k)|^2), i.e.
it flips exactly at |P| = 1/sqrt(2) and always holds below |P| = 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import grover_core
from .amplitudes import AmplitudeDistribution, WeightedDatabase
from .continuum import delta_tilde
from .errors import DomainError, NoPeakError

# Tail labels of a coherent window can need ~1e12 iterations to peak; rows
# whose closed-form estimate exceeds this budget report no discrete peak.
DEFAULT_PEAK_BUDGET = 100_000


@dataclass(frozen=True)
class ComparisonRow:
    """Per-target step metrics behind the reciprocal and log comparisons."""

    k: int
    p_k: float
    classical_steps: float
    grover_scale: float
    discrete_peak: int | None
    recip_classical: float
    recip_grover: float
    ln_classical: float
    ln_grover: float


@dataclass(frozen=True)
class SpeedupVerdict:
    """Outcome of the global condition with its witness labels.

    grover_witness maximizes delta_tilde^-1 (the slowest Grover target);
    classical_witness minimizes 1/p_j (the easiest classical target).
    """

    holds: bool
    grover_witness: int
    classical_witness: int
    max_grover_scale: float
    min_classical_steps: float


def classical_bounds(db: WeightedDatabase) -> tuple[float, float]:
    """Range [min 1/p_j, max 1/p_j] of classical step counts over targets."""
    recips = [1.0 / p for p in db.proportions]
    return min(recips), max(recips)


def local_speedup(dist: AmplitudeDistribution, k: int) -> bool:
    """Does Grover beat classical search for this one target?"""
    p_k = dist.amplitude(k)
    prop = abs(p_k) ** 2
    if prop == 0.0 or prop >= 1.0:
        raise DomainError(f"|P({k})|^2 = {prop!r} is degenerate")
    return 1.0 / delta_tilde(p_k) < 1.0 / prop


def global_speedup(dist: AmplitudeDistribution) -> SpeedupVerdict:
    """Does Grover beat classical search for every target simultaneously?"""
    scales = []
    for k in dist.labels:
        p_k = dist.amplitude(k)
        prop = abs(p_k) ** 2
        if prop == 0.0 or prop >= 1.0:
            raise DomainError(f"|P({k})|^2 = {prop!r} is degenerate")
        scales.append((k, 1.0 / delta_tilde(p_k), 1.0 / prop))
    grover_k, max_scale, _ = max(scales, key=lambda t: t[1])
    classical_j, _, min_steps = min(scales, key=lambda t: t[2])
    return SpeedupVerdict(
        holds=max_scale < min_steps,
        grover_witness=grover_k,
        classical_witness=classical_j,
        max_grover_scale=max_scale,
        min_classical_steps=min_steps,
    )


def comparison_table(
    dist: AmplitudeDistribution, peak_budget: int = DEFAULT_PEAK_BUDGET
) -> list[ComparisonRow]:
    """One row per label with classical and Grover step metrics.

    discrete_peak comes from the actual recurrence (grover_core.first_peak
    semantics); labels whose estimated peak lies beyond peak_budget get
    None instead of burning an unbounded number of iterations.
    """
    rows = []
    for k in dist.labels:
        p_k = dist.amplitude(k)
        prop = abs(p_k) ** 2
        if prop == 0.0 or prop >= 1.0:
            raise DomainError(f"|P({k})|^2 = {prop!r} is degenerate")
        dt = delta_tilde(p_k)
        peak: int | None
        if grover_core.estimated_peak(p_k) + 2 > peak_budget:
            peak = None
        else:
            try:
                peak, _ = grover_core.scan_first_peak(dist, k, peak_budget)
            except NoPeakError:
                peak = None
        rows.append(
            ComparisonRow(
                k=k,
                p_k=prop,
                classical_steps=1.0 / prop,
                grover_scale=1.0 / dt,
                discrete_peak=peak,
                recip_classical=prop,
                recip_grover=dt,
                ln_classical=math.log(1.0 / prop),
                ln_grover=math.log(1.0 / dt),
            )
        )
    return rows


def local_failures(dist: AmplitudeDistribution) -> list[int]:
    """Labels for which the local speedup condition fails."""
    return [k for k in dist.labels if not local_speedup(dist, k)]
