"""Spin-1/2 XX dimer: Hamiltonian, exact spectrum, q-deformed thermal state.

Matrices use the standard two-qubit product ordering {|00>, |01>, |10>, |11>}.
The Hamiltonian convention is fixed by

    <00|H|00> = -B,   <11|H|11> = +B,
    (|01> + |10>)/sqrt(2)  ->  +J,
    (|01> - |10>)/sqrt(2)  ->  -J,

so J > 0 is antiferromagnetic (the singlet is the J-sector ground state)
and the spectrum is {-B, +B, +J, -J}.

The thermal state at entropic index q and pseudo inverse temperature b* is

    rho = exp_q(-b* H) / Z,    Z = Tr[exp_q(-b* H)]
        = 2 [cosh_q(b* J) + cosh_q(b* B)],

an X-shaped matrix: diagonal (exp_q(+b*B), cosh_q(b*J), cosh_q(b*J),
exp_q(-b*B)) / Z with off-diagonal -sinh_q(b*J)/Z between |01> and |10>.
Matrix powers of rho are always taken through its eigenvalues (the four
q-weights over Z), never element-wise.

All functions are pure; the module is thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qcalc
from .errors import DegenerateState, DomainError

#: Tolerance below which a fractional power of a negative population is
#: accepted as an integer power (past-pole continuation only).
_INT_POWER_TOL = 1e-12


@dataclass(frozen=True)
class DimerParams:
    """Exchange coupling J and magnetic field B, both in energy units."""

    J: float
    B: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.J) and math.isfinite(self.B)):
            raise DomainError(f"J and B must be finite, got J={self.J!r}, B={self.B!r}")

    def field_ratio(self) -> float:
        """B/J; requires J != 0."""
        if self.J == 0.0:
            raise DomainError("B/J undefined for J = 0")
        return self.B / self.J


@dataclass(frozen=True)
class Spectrum:
    """Exact eigensystem, ordered (-B, +B, +J, -J).

    ``vectors`` holds the orthonormal eigenvectors as columns, in the
    same order, with components in the {|00>, |01>, |10>, |11>} basis:
    |00>, |11>, (|01>+|10>)/sqrt(2), (|01>-|10>)/sqrt(2).
    """

    energies: tuple[float, float, float, float]
    vectors: np.ndarray


def hamiltonian(p: DimerParams) -> np.ndarray:
    """4x4 real symmetric Hamiltonian in the product basis."""
    h = np.zeros((4, 4))
    h[0, 0] = -p.B
    h[3, 3] = p.B
    h[1, 2] = h[2, 1] = p.J
    return h


def spectrum(p: DimerParams) -> Spectrum:
    """Exact eigenvalues and eigenvectors of :func:`hamiltonian`."""
    s = 1.0 / math.sqrt(2.0)
    vectors = np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, s, s],
            [0.0, 0.0, s, -s],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )
    return Spectrum(energies=(-p.B, p.B, p.J, -p.J), vectors=vectors)


def thermal_weights(
    p: DimerParams, q: float, beta_star: float, past_pole: bool = False
) -> tuple[float, float, float, float]:
    """q-Boltzmann weights exp_q(-b* E) for the four eigenstates.

    Ordered like :func:`spectrum`: (|00>, |11>, symmetric, antisymmetric).
    With ``past_pole`` the q > 1 weights are continued through their first
    pole (integer-exponent q only) and may be negative; the continuation
    stops at the second distinct pole position, beyond which every branch
    of the map is an artifact of stacked continuations.
    """
    energies = (-p.B, p.B, p.J, -p.J)
    if past_pole and q > 1.0 + qcalc.EPS_SWITCH:
        poles = sorted({1.0 / ((q - 1.0) * -e) for e in energies if e < 0.0})
        if len(poles) > 1 and beta_star >= poles[1]:
            raise DomainError(
                f"beta_star={beta_star} beyond the first continuation sheet "
                f"(second pole at {poles[1]})"
            )
    f = qcalc.q_exp_continued if past_pole else qcalc.q_exp
    return tuple(f(q, -beta_star * e) for e in energies)


@dataclass(frozen=True)
class ThermalState:
    """Normalized q-thermal state of the dimer.

    Carries the generating parameters together with the assembled matrix;
    ``weights`` are the unnormalized q-Boltzmann weights in spectrum
    order and ``Z`` their sum, so ``populations()`` gives the exact
    eigenvalues of ``rho`` without re-diagonalizing.
    """

    rho: np.ndarray
    q: float
    beta_star: float
    weights: tuple[float, float, float, float]
    Z: float

    def populations(self) -> tuple[float, float, float, float]:
        """Eigenvalues of rho in spectrum order (-B, +B, +J, -J)."""
        return tuple(w / self.Z for w in self.weights)


def thermal_state(
    p: DimerParams, q: float, beta_star: float, past_pole: bool = False
) -> ThermalState:
    """Assemble rho = exp_q(-b* H)/Z from the closed block form.

    Raises
    ------
    DomainError
        If any required q-weight is undefined (q > 1 window exceeded).
    DegenerateState
        If Z = 0 (all weights cut off, or continued weights cancelling).
    """
    w = thermal_weights(p, q, beta_star, past_pole)
    return _assemble_state(w, q, beta_star)


def _assemble_state(
    weights: tuple[float, float, float, float], q: float, beta_star: float
) -> ThermalState:
    w00, w11, wsym, wanti = weights
    z = w00 + w11 + wsym + wanti
    if z == 0.0:
        raise DegenerateState(f"partition function vanished at q={q}, beta_star={beta_star}")
    rho = np.zeros((4, 4))
    rho[0, 0] = w00 / z
    rho[3, 3] = w11 / z
    # Central block: cosh_q(b*J)/Z on the diagonal, -sinh_q(b*J)/Z off it;
    # eigenvectors (1, +-1)/sqrt(2) with eigenvalues wsym/Z and wanti/Z.
    c = 0.5 * (wsym + wanti) / z
    s = 0.5 * (wanti - wsym) / z
    rho[1, 1] = rho[2, 2] = c
    rho[1, 2] = rho[2, 1] = -s
    return ThermalState(rho=rho, q=q, beta_star=beta_star, weights=weights, Z=z)


def thermal_state_spectral(p: DimerParams, q: float, beta_star: float) -> np.ndarray:
    """Generic route: exp_q(-b* H) as a matrix function via eigendecomposition.

    Cross-check for :func:`thermal_state`; both must agree to 1e-12.
    """
    evals, evecs = np.linalg.eigh(hamiltonian(p))
    w = np.array([qcalc.q_exp(q, -beta_star * e) for e in evals])
    z = float(np.sum(w))
    if z == 0.0:
        raise DegenerateState(f"partition function vanished at q={q}, beta_star={beta_star}")
    return (evecs * (w / z)) @ evecs.T


def partition_fn(p: DimerParams, q: float, beta_star: float, past_pole: bool = False) -> float:
    """Z = Tr[exp_q(-b* H)] = 2 [cosh_q(b*J) + cosh_q(b*B)]."""
    return float(sum(thermal_weights(p, q, beta_star, past_pole)))


def _population_power(pop: float, q: float) -> float:
    """pop**q with 0**q = 0 for q > 0 and sign-aware integer powers.

    Negative populations only arise under the past-pole continuation,
    where q is integral by construction.
    """
    if pop > 0.0:
        return pop**q
    if pop == 0.0:
        if q <= 0.0:
            raise DomainError(f"0**q undefined for q={q}")
        return 0.0
    n = round(q)
    if abs(q - n) > _INT_POWER_TOL:
        raise DomainError(f"negative population with non-integer q={q}")
    return pop**n


def trace_rho_q(p: DimerParams, q: float, beta_star: float, past_pole: bool = False) -> float:
    """Tr[rho^q] from the eigenvalue powers sum_i (w_i/Z)^q."""
    state = thermal_state(p, q, beta_star, past_pole)
    if abs(q - 1.0) < qcalc.EPS_SWITCH:
        return float(sum(state.populations()))
    return float(sum(_population_power(pop, q) for pop in state.populations()))


def internal_energy_2nd(
    p: DimerParams, q: float, beta_star: float, past_pole: bool = False
) -> float:
    """Second-constraint energy U2 = Tr[rho^q H] = sum_i (w_i/Z)^q E_i."""
    state = thermal_state(p, q, beta_star, past_pole)
    energies = (-p.B, p.B, p.J, -p.J)
    if abs(q - 1.0) < qcalc.EPS_SWITCH:
        return float(sum(pop * e for pop, e in zip(state.populations(), energies)))
    return float(
        sum(_population_power(pop, q) * e for pop, e in zip(state.populations(), energies))
    )
