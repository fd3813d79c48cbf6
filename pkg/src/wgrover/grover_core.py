"""Exact discrete Grover evolution on a weighted database.

Two independent realizations of the same dynamics live here:

* the 2-d coefficient recurrence
      a_r = (1 - 4|P(k)|^2) a_{r-1} - 2 conj(P(k)) b_{r-1}
      b_r = b_{r-1} + 2 P(k) a_{r-1}
  tracking the state G^r|D> = a_r|D> + b_r|k>, and

* a matrix-free dense oracle applying G = U_D U_k to a full state vector
  (one component flip, one rank-1 reflection, O(N) per step).

Because |D> and |k> are not orthogonal, the measurable success amplitude
is a*P(k) + b rather than b alone; all probabilities reported here use
that projection, which keeps them in [0, 1] and in exact agreement with
the dense oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import AmplitudeDistribution
from .errors import ConsistencyError, DomainError, NoPeakError

PROB_OVERSHOOT_TOL = 1e-9
SUBSPACE_RESIDUAL_TOL = 1e-8
STATE_NORM_TOL = 1e-9


@dataclass(frozen=True)
class TwoDState:
    """Coefficient pair (a, b) of the non-orthogonal decomposition a|D> + b|k>."""

    a: complex
    b: complex


@dataclass(frozen=True)
class TrajectoryPoint:
    r: int
    state: TwoDState
    success_prob: float


@dataclass(frozen=True, eq=False)
class Trajectory:
    """History of the recurrence for one target label.

    points[r] holds (a_r, b_r) and the success probability |a_r P(k) + b_r|^2;
    point 0 is always (1, 0) with probability |P(k)|^2.
    """

    target: int
    p_k: complex
    points: tuple[TrajectoryPoint, ...]

    def success_probs(self) -> np.ndarray:
        return np.array([pt.success_prob for pt in self.points])


def _check_target_amplitude(p_k: complex) -> None:
    mag = abs(p_k)
    if mag == 0.0:
        raise DomainError("|P(k)| = 0: the target is absent from the database")
    if mag >= 1.0:
        raise DomainError(
            f"|P(k)| = {mag!r}: a unit-weight target is found in one step (trivial)"
        )


def step(state: TwoDState, p_k: complex) -> TwoDState:
    """One application of G to a|D> + b|k> in the 2-d subspace."""
    _check_target_amplitude(p_k)
    p = complex(p_k)
    a, b = complex(state.a), complex(state.b)
    factor = 1.0 - 4.0 * abs(p) ** 2
    return TwoDState(a=factor * a - 2.0 * p.conjugate() * b, b=b + 2.0 * p * a)


def success_probability(state: TwoDState, p_k: complex) -> float:
    """Probability of measuring the target: |a P(k) + b|^2.

    Values within 1e-9 above 1 are clamped (floating drift); anything
    larger means the evolution code is broken and raises.
    """
    amp = complex(state.a) * complex(p_k) + complex(state.b)
    prob = abs(amp) ** 2
    if prob > 1.0 + PROB_OVERSHOOT_TOL:
        raise ConsistencyError(
            f"success probability {prob!r} exceeds 1 beyond tolerance; "
            "the recurrence state is inconsistent"
        )
    return min(max(prob, 0.0), 1.0)


def iterate(dist: AmplitudeDistribution, k: int, r_max: int) -> Trajectory:
    """Run the recurrence from (a, b) = (1, 0) for r_max steps."""
    if r_max < 1:
        raise DomainError(f"r_max must be >= 1, got {r_max}")
    p_k = dist.amplitude(k)
    _check_target_amplitude(p_k)
    state = TwoDState(a=1.0 + 0.0j, b=0.0 + 0.0j)
    points = [TrajectoryPoint(0, state, success_probability(state, p_k))]
    for r in range(1, r_max + 1):
        state = step(state, p_k)
        points.append(TrajectoryPoint(r, state, success_probability(state, p_k)))
    return Trajectory(target=k, p_k=p_k, points=tuple(points))


def _first_local_max(probs) -> tuple[int, float] | None:
    """First interior r with probs[r] >= both neighbors; ties go to smaller r."""
    for r in range(1, len(probs) - 1):
        if probs[r] >= probs[r - 1] and probs[r] >= probs[r + 1]:
            return r, probs[r]
    return None


def first_peak(traj: Trajectory) -> tuple[int, float]:
    """First local maximum of the success probability over integer r."""
    if len(traj.points) < 3:
        raise NoPeakError(
            f"trajectory has only {len(traj.points)} points; need at least 3 "
            "to bracket a peak (increase r_max)"
        )
    found = _first_local_max([pt.success_prob for pt in traj.points])
    if found is None:
        r_max = traj.points[-1].r
        raise NoPeakError(
            f"no success-probability peak within r_max = {r_max}; rerun with a larger r_max"
        )
    return found


def scan_first_peak(dist: AmplitudeDistribution, k: int, r_limit: int) -> tuple[int, float]:
    """Streaming version of iterate + first_peak with O(1) memory.

    Steps the recurrence until the first interior local maximum appears,
    never materializing the trajectory; identical result to
    first_peak(iterate(dist, k, r)) for any r large enough.
    """
    if r_limit < 2:
        raise NoPeakError(f"r_limit = {r_limit} cannot bracket a peak")
    p_k = dist.amplitude(k)
    _check_target_amplitude(p_k)
    state = TwoDState(a=1.0 + 0.0j, b=0.0 + 0.0j)
    prev = success_probability(state, p_k)
    state = step(state, p_k)
    cur = success_probability(state, p_k)
    for r in range(1, r_limit):
        state = step(state, p_k)
        nxt = success_probability(state, p_k)
        if cur >= prev and cur >= nxt:
            return r, cur
        prev, cur = cur, nxt
    raise NoPeakError(
        f"no success-probability peak within r_max = {r_limit}; rerun with a larger r_max"
    )


def estimated_peak(p_k: complex) -> float:
    """Closed-form location pi/(4 arcsin|P(k)|) - 1/2 of the first peak.

    Used to budget iteration counts before scanning; exact for real
    amplitude ratios up to rounding of the nearest integer.
    """
    _check_target_amplitude(p_k)
    return math.pi / (4.0 * math.asin(abs(p_k))) - 0.5


def _database_vector(dist: AmplitudeDistribution) -> np.ndarray:
    return np.asarray(dist.amplitudes, dtype=np.complex128)


def dense_apply_G(state: np.ndarray, dist: AmplitudeDistribution, k: int) -> np.ndarray:
    """Apply G = U_D U_k to a dense state vector, matrix-free.

    U_k flips the target component; U_D reflects about |D>, realized as
    2 <D|v> D - v.  Norm is preserved to rounding.
    """
    v = np.asarray(state, dtype=np.complex128)
    if v.shape != dist.amplitudes.shape:
        raise DomainError(
            f"state has shape {v.shape}, distribution has {dist.amplitudes.shape}"
        )
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise DomainError(f"state norm {norm!r} is not 1 within {STATE_NORM_TOL}")
    idx = dist.index_of(k)
    d = _database_vector(dist)
    v = v.copy()
    v[idx] = -v[idx]
    return 2.0 * np.vdot(d, v) * d - v


def project_onto_subspace(
    state: np.ndarray, dist: AmplitudeDistribution, k: int
) -> TwoDState:
    """Recover (a, b) with state = a|D> + b|e_k> by solving the 2x2 Gram system.

    The pair {|D>, |e_k>} is not orthogonal (overlap P(k)), so this is a
    least-squares solve; a residual above 1e-8 means the state left the
    2-d subspace, which G can never do, and raises.
    """
    v = np.asarray(state, dtype=np.complex128)
    if v.shape != dist.amplitudes.shape:
        raise DomainError(
            f"state has shape {v.shape}, distribution has {dist.amplitudes.shape}"
        )
    idx = dist.index_of(k)
    p_k = complex(dist.amplitudes[idx])
    if abs(p_k) >= 1.0:
        raise DomainError("|P(k)| = 1 makes {D, e_k} colinear; Gram system singular")
    d = _database_vector(dist)
    rhs_d = np.vdot(d, v)  # <D|v>
    rhs_k = complex(v[idx])  # <e_k|v>
    det = 1.0 - abs(p_k) ** 2
    a = (rhs_d - p_k.conjugate() * rhs_k) / det
    b = (rhs_k - p_k * rhs_d) / det
    recon = a * d
    recon[idx] += b
    residual = float(np.linalg.norm(recon - v))
    if residual > SUBSPACE_RESIDUAL_TOL:
        raise ConsistencyError(
            f"state left the 2-d subspace span{{D, e_k}}: residual {residual!r}"
        )
    return TwoDState(a=complex(a), b=complex(b))
