"""Continuum approximation of the Grover recurrence.

Replacing the difference equations by derivatives turns the coefficient
pair into the linear system

    f_a' = -4 |P|^2 f_a - 2 P* f_b,      f_b' = 2 P f_a,

whose second-order form f_a'' + 4|P|^2 f_a' + 4|P|^2 f_a = 0 has the
discriminant Delta = 16|P|^4 - 16|P|^2.  For every non-degenerate target
(0 < |P| < 1) the discriminant is negative and the solution is a damped
oscillation

    f_a(x) = e^{-2|P|^2 x} (C1 cos(2 dt x) + C2 sin(2 dt x)),

with dt = sqrt(|P|^2 - |P|^4) and period T = pi/dt.  For complex P the
pair (a_r, b_r) is phase-rotated so that the system above becomes exactly
real (b replaced by b conj(P)/|P|); everything here operates on that real
convention.

The continuum clock starts one iteration in, at f_a(0) = a_1 and
f_b(0) = b_1, so continuum coordinate x maps to discrete iteration
r = x + 1; predicted_peak_step applies that offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import DomainError

Branch = Literal["overdamped", "critical", "oscillatory"]


@dataclass(frozen=True)
class DiscriminantClass:
    """Discriminant and characteristic roots of the second-order equation."""

    delta: float
    q1: complex
    q2: complex
    branch: Branch


@dataclass(frozen=True)
class ContinuumSolution:
    """Fitted damped oscillation for one target amplitude.

    gamma = -2|P|^2 is the damping rate per step, beta = 2 dt the angular
    frequency; c1 and c2 come from the initial conditions.  Only the
    oscillatory branch ever instantiates this type.
    """

    p_k: complex
    gamma: float
    beta: float
    c1: float
    c2: float

    def __post_init__(self) -> None:
        if not (self.gamma < 0 and self.beta > 0):
            raise DomainError(
                f"not an oscillatory solution: gamma={self.gamma!r}, beta={self.beta!r}"
            )


def _check_nondegenerate(p_k: complex) -> float:
    mag = abs(p_k)
    if mag == 0.0 or mag >= 1.0:
        raise DomainError(
            f"|P(k)| = {mag!r} is degenerate; the oscillatory branch needs 0 < |P(k)| < 1"
        )
    return mag


def delta_tilde(p_k: complex) -> float:
    """Half angular frequency sqrt(|P|^2 - |P|^4); its reciprocal is the Grover step scale."""
    mag = _check_nondegenerate(p_k)
    return math.sqrt(mag**2 - mag**4)


def period(p_k: complex) -> float:
    """Full oscillation period T = pi / delta_tilde."""
    return math.pi / delta_tilde(p_k)


def classify(p_k: complex) -> DiscriminantClass:
    """Discriminant branch of the characteristic equation.

    Valid database amplitudes (|P| < 1) always land in the oscillatory
    branch; critical requires |P| in {0, 1} and overdamped |P| > 1, both
    kept only to cover the full case analysis.
    """
    mag2 = abs(p_k) ** 2
    delta = 16.0 * mag2**2 - 16.0 * mag2
    if delta < 0:
        branch: Branch = "oscillatory"
        root = complex(0.0, math.sqrt(-delta))
    else:
        branch = "critical" if delta == 0 else "overdamped"
        root = complex(math.sqrt(delta), 0.0)
    q1 = (-4.0 * mag2 + root) / 2.0
    q2 = (-4.0 * mag2 - root) / 2.0
    return DiscriminantClass(delta=delta, q1=q1, q2=q2, branch=branch)


def fit_solution(p_k: complex, fa0: float, fb0: complex) -> ContinuumSolution:
    """Fit C1, C2 to initial values f_a(0), f_b(0).

    C1 = f_a(0) directly; C2 follows from the derivative constraint
    f_a'(0) = -4 f_a(0)|P|^2 - 2 Re(P* f_b(0)), the real part implementing
    the phase-rotated convention for complex amplitudes.
    """
    mag = _check_nondegenerate(p_k)
    dt = math.sqrt(mag**2 - mag**4)
    gamma = -2.0 * mag**2
    beta = 2.0 * dt
    c1 = float(fa0)
    fa_prime0 = -4.0 * c1 * mag**2 - 2.0 * (complex(p_k).conjugate() * complex(fb0)).real
    c2 = (fa_prime0 + 2.0 * mag**2 * c1) / beta
    return ContinuumSolution(p_k=complex(p_k), gamma=gamma, beta=beta, c1=c1, c2=c2)


def fit_one_step_solution(p_k: complex) -> ContinuumSolution:
    """Fit with the after-one-application values f_a(0) = a_1 = 1 - 4|P|^2, f_b(0) = b_1 = 2P."""
    mag = _check_nondegenerate(p_k)
    return fit_solution(p_k, 1.0 - 4.0 * mag**2, 2.0 * complex(p_k))


def eval_fa(sol: ContinuumSolution, x: float) -> float:
    """f_a(x) = e^{gamma x} (c1 cos(beta x) + c2 sin(beta x))."""
    return math.exp(sol.gamma * x) * (
        sol.c1 * math.cos(sol.beta * x) + sol.c2 * math.sin(sol.beta * x)
    )


def eval_fb(sol: ContinuumSolution, x: float) -> float:
    """Closed-form f_b(x) of the real-convention system.

    Derived from f_b = -(f_a' + 4|P|^2 f_a) / (2|P|); satisfies
    f_b' = 2 |P| f_a exactly, so f_b is stationary wherever f_a vanishes.
    """
    mag = abs(sol.p_k)
    cos_term = sol.beta * sol.c2 - sol.gamma * sol.c1
    sin_term = sol.beta * sol.c1 + sol.gamma * sol.c2
    return (
        -math.exp(sol.gamma * x)
        * (cos_term * math.cos(sol.beta * x) - sin_term * math.sin(sol.beta * x))
        / (2.0 * mag)
    )


def predicted_peak_step(sol: ContinuumSolution) -> float:
    """Analytic location (in discrete-step units) of the first maximum of f_b.

    The trigonometric factor of f_a is R cos(beta x - phi) with
    phi = atan2(c2, c1); f_b peaks at the first x >= 0 where that factor
    crosses zero downward, i.e. beta x = phi + pi/2 (mod 2 pi).  The x = 0
    root counts when c1 = 0 and f_b starts at its crest.  The +1 converts
    the continuum clock (which starts at iteration 1) to iteration count.
    """
    if sol.c1 == 0.0 and sol.c2 == 0.0:
        raise DomainError("zero solution has no peak")
    phi = math.atan2(sol.c2, sol.c1)
    x0 = (phi + 0.5 * math.pi) / sol.beta
    if x0 < -1e-12:
        x0 += 2.0 * math.pi / sol.beta
    return max(x0, 0.0) + 1.0
