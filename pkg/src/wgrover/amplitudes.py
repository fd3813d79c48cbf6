"""Amplitude distributions encoding weighted databases.

A weighted database {(y_1, p_1), ..., (y_N, p_N)} is encoded as a complex
amplitude vector P(n) over integer basis labels with |P(n)|^2 = p_n.  This
module builds the two families used throughout the package (uniform and
truncated coherent-state distributions), converts classical weight tables
to amplitudes, and answers proportion queries.

Coherent-state amplitudes are evaluated in the log domain (log-gamma
factorials plus a shifted log-sum-exp normalization) so that large photon
numbers neither overflow nor lose the relative structure of the tail.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, LabelNotFoundError

NORM_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class AmplitudeDistribution:
    """Complex amplitudes P(n) over strictly increasing integer labels.

    Invariants checked at construction: at least two entries, unit total
    probability (within 1e-12), unique ascending labels.  Instances are
    immutable; the amplitude array is marked read-only.
    """

    labels: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "labels", tuple(int(l) for l in self.labels))
        if len(self.labels) < 2:
            raise DomainError(
                f"a database needs at least 2 entries, got {len(self.labels)} "
                "(a single entry is found in one step and is excluded)"
            )
        if len(self.labels) != amps.shape[0] or amps.ndim != 1:
            raise DomainError("labels and amplitudes must be 1-d and equally long")
        if any(b <= a for a, b in zip(self.labels, self.labels[1:])):
            raise DomainError(f"labels must be strictly increasing, got {self.labels}")
        total = float(np.sum(np.abs(amps) ** 2))
        if abs(total - 1.0) > NORM_TOL:
            raise DomainError(
                f"amplitudes are not normalized: sum |P|^2 = {total!r} "
                f"(must be 1 within {NORM_TOL})"
            )
        amps.setflags(write=False)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, k: int) -> int:
        """Position of label k in the amplitude array."""
        try:
            return self._index[k]
        except KeyError:
            raise LabelNotFoundError(
                f"label {k} not in distribution (labels {self.labels[0]}..{self.labels[-1]})"
            ) from None

    def amplitude(self, k: int) -> complex:
        """P(k) for basis label k."""
        return complex(self.amplitudes[self.index_of(k)])

    def proportions(self) -> np.ndarray:
        """All |P(n)|^2 in label order."""
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True, eq=False)
class WeightedDatabase:
    """Classical view of the database: (label, proportion) pairs.

    Proportions must be positive and sum to 1 within 1e-12.
    """

    entries: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        entries = tuple((int(k), float(p)) for k, p in self.entries)
        object.__setattr__(self, "entries", entries)
        if any(p <= 0 for _, p in entries):
            raise DomainError("all proportions must be positive")
        total = math.fsum(p for _, p in entries)
        if abs(total - 1.0) > NORM_TOL:
            raise DomainError(
                f"proportions sum to {total!r}, must be 1 within {NORM_TOL}"
            )

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    @property
    def proportions(self) -> tuple[float, ...]:
        return tuple(p for _, p in self.entries)


def uniform(n: int) -> AmplitudeDistribution:
    """Uniform distribution P(k) = 1/sqrt(N) over labels 1..N.

    This is the unstructured-search special case; N must be at least 2.
    """
    if n < 2:
        raise DomainError(f"uniform database needs N >= 2, got {n}")
    amps = np.full(n, 1.0 / math.sqrt(n), dtype=np.complex128)
    return AmplitudeDistribution(labels=tuple(range(1, n + 1)), amplitudes=amps)


def _log_sum_exp(values: np.ndarray) -> float:
    m = float(np.max(values))
    return m + math.log(float(np.sum(np.exp(values - m))))


def coherent_normalization(alpha: complex, q1: int, n: int) -> float:
    """Normalization factor N_q of the truncated coherent state.

    N_q = [sum_{q=q1}^{q1+N} e^{-|a|^2} |a|^{2q} / q!]^{-1/2}, computed in
    the log domain so large q1 or |alpha| cannot overflow.
    """
    _check_coherent_args(alpha, q1, n)
    lam = abs(alpha) ** 2
    ks = np.arange(q1, q1 + n + 1)
    log_terms = -lam + ks * math.log(lam) - np.array([math.lgamma(k + 1) for k in ks])
    return math.exp(-0.5 * _log_sum_exp(log_terms))


def truncated_coherent(alpha: complex, q1: int, n: int) -> AmplitudeDistribution:
    """Coherent-state amplitudes restricted to photon numbers q1..q1+N.

    The amplitude at label k is N_q e^{-|a|^2/2} a^k / sqrt(k!), which for
    complex alpha carries the phase arg(alpha)*k.  The truncation window
    contains N+1 labels.  Magnitudes are computed as exp(log-magnitude)
    relative to the in-window maximum, then renormalized exactly, so even
    deep Poisson tails keep their correct relative size.
    """
    _check_coherent_args(alpha, q1, n)
    lam = abs(alpha) ** 2
    ks = np.arange(q1, q1 + n + 1)
    lgam = np.array([math.lgamma(k + 1) for k in ks])
    # log |P(k)| up to the common normalization constant
    log_mag = ks * (0.5 * math.log(lam)) - 0.5 * lgam
    log_mag -= 0.5 * _log_sum_exp(2.0 * log_mag)
    phase = cmath.phase(complex(alpha))
    amps = np.exp(log_mag) * np.exp(1j * phase * ks)
    amps /= np.linalg.norm(amps)
    return AmplitudeDistribution(labels=tuple(int(k) for k in ks), amplitudes=amps)


def from_weights(db: WeightedDatabase) -> AmplitudeDistribution:
    """Encode a classical weight table as real amplitudes sqrt(p_n), phase 0."""
    amps = np.sqrt(np.array(db.proportions, dtype=np.float64)).astype(np.complex128)
    return AmplitudeDistribution(labels=db.labels, amplitudes=amps)


def proportion(dist: AmplitudeDistribution, k: int) -> float:
    """|P(k)|^2 for label k."""
    return abs(dist.amplitude(k)) ** 2


def weights_from_list(weights: list[float]) -> WeightedDatabase:
    """Weight list with implicit labels 1..N, renormalized on load.

    The sum must already be within 1e-6 of 1; anything further off is
    rejected as a malformed database rather than silently rescaled.
    """
    total = math.fsum(float(w) for w in weights)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise DomainError(
            f"weights sum to {total!r}; must be within {WEIGHT_SUM_TOL} of 1"
        )
    entries = tuple((i + 1, float(w) / total) for i, w in enumerate(weights))
    return WeightedDatabase(entries=entries)


def load_spec(spec: dict) -> AmplitudeDistribution:
    """Build a distribution from the JSON run-spec object.

    Accepted kinds:
      {"kind": "uniform", "n": 20}
      {"kind": "coherent", "alpha_re": 0.8, "alpha_im": 0.0, "q1": 1, "n": 20}
      {"kind": "weights", "weights": [...]}
    """
    if not isinstance(spec, dict):
        raise DomainError(f"distribution spec must be a JSON object, got {type(spec).__name__}")
    kind = spec.get("kind")
    try:
        if kind == "uniform":
            return uniform(int(spec["n"]))
        if kind == "coherent":
            alpha = complex(float(spec["alpha_re"]), float(spec.get("alpha_im", 0.0)))
            return truncated_coherent(alpha, int(spec["q1"]), int(spec["n"]))
        if kind == "weights":
            weights = spec["weights"]
            if not isinstance(weights, (list, tuple)):
                raise DomainError("'weights' must be a list of numbers")
            return from_weights(weights_from_list(list(weights)))
    except KeyError as exc:
        raise DomainError(f"distribution spec is missing field {exc}") from None
    except DomainError:
        raise
    except (TypeError, ValueError) as exc:
        raise DomainError(f"malformed distribution spec: {exc}") from None
    raise DomainError(f"unknown distribution kind {kind!r}")


def _check_coherent_args(alpha: complex, q1: int, n: int) -> None:
    if abs(alpha) == 0:
        raise DomainError("alpha = 0 puts all weight on q = 0; degenerate database")
    if q1 < 0:
        raise DomainError(f"q1 must be a non-negative photon number, got {q1}")
    if n < 2:
        raise DomainError(f"coherent window needs N >= 2, got {n}")
