"""Concurrence of the two-qubit thermal states.

Ground truth is the spin-flip eigenvalue construction

    eta = rho (sy x sy) rho* (sy x sy),
    C = max{l1 - l2 - l3 - l4, 0},

with l_i the descending square roots of eta's eigenvalues.  For X-shaped
states (diagonal plus anti-diagonal) the equivalent closed form

    C = 2 max{0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)}

serves as a second, independent oracle.

The dimer family of explicit formulas:

    C_gb(beta)        = max{ (sinh(beta J) - 1)
                             / (cosh(beta J) + cosh(beta B)), 0 }

    C_varrho(b*)      = max{ (sinh_q(b* J) - e_q(b* B) e_q(-b* B))
                             / (cosh_q(b* J) + cosh_q(b* B)), 0 }

C_varrho keeps the unrooted weight product e_q(b*B) e_q(-b*B); the
eigenvalue oracle on the same state yields the square root of that
product instead (:func:`concurrence_varrho_rooted`).  Both variants are
exposed and the oracle arbitrates; they coincide at q = 1 or B = 0.

The physical-temperature curve C_rho reuses the same closed form at the
sweep's retained nodes while reporting the physical T = 1/beta as the
temperature axis.

Pure functions throughout; parallelizable across sweep points.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import qcalc
from .dimer import DimerParams, ThermalState, thermal_state
from .errors import NumericalBreakdown
from .thermo import SweepResult

#: (sy x sy) in the product basis; real since both factors are imaginary.
SIGMA_Y_PAIR = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)

#: eta eigenvalues are accepted down to this negative tolerance (roundoff).
ETA_EIG_TOL = -1e-9


class Variant(enum.Enum):
    RHO_PHYSICAL = "rho_physical"
    VARRHO_PSEUDO = "varrho_pseudo"
    GIBBS_BOLTZMANN = "gibbs_boltzmann"
    WOOTTERS_ORACLE = "wootters_oracle"


@dataclass(frozen=True)
class ConcurrenceSample:
    """One concurrence value with its temperature axis.

    ``T_axis`` is the physical T for RHO_PHYSICAL and GIBBS_BOLTZMANN and
    the pseudo temperature T* for VARRHO_PSEUDO.
    """

    T_axis: float
    value: float
    variant: Variant

    def __post_init__(self) -> None:
        if not math.isnan(self.value) and not (0.0 <= self.value <= 1.0):
            raise NumericalBreakdown(f"concurrence {self.value} outside [0, 1]")


def _as_matrix(rho) -> np.ndarray:
    if isinstance(rho, ThermalState):
        return rho.rho
    return np.asarray(rho)


def concurrence_oracle(rho) -> float:
    """Spin-flip eigenvalue concurrence of a two-qubit density matrix.

    Accepts a :class:`ThermalState` or a raw 4x4 real matrix.  The needed
    square roots of the eta = rho (sy x sy) rho* (sy x sy) spectrum are
    obtained as |eig(W)| of the real symmetric factor

        W = sqrt(rho) (sy x sy) sqrt(rho),

    since W^2 is similar to eta.  A symmetric eigensolver resolves W to
    machine precision, whereas square-rooting eta's near-zero eigenvalues
    would amplify roundoff to ~sqrt(eps) and miss tight tolerances.

    Raises
    ------
    NumericalBreakdown
        If the state fails positive semidefiniteness beyond the -1e-9
        roundoff window (eta's spectrum would leave it too).
    """
    mat = _as_matrix(rho)
    if np.iscomplexobj(mat):
        if np.max(np.abs(mat.imag)) > 1e-14:
            raise NumericalBreakdown("concurrence_oracle expects a real density matrix")
        mat = mat.real
    rho_evals, rho_evecs = np.linalg.eigh(mat)
    if np.min(rho_evals) < ETA_EIG_TOL:
        raise NumericalBreakdown(f"state eigenvalues {rho_evals} not positive semidefinite")
    sqrt_rho = (rho_evecs * np.sqrt(np.clip(rho_evals, 0.0, None))) @ rho_evecs.T
    w_factor = sqrt_rho @ SIGMA_Y_PAIR @ sqrt_rho
    lams = np.sort(np.abs(np.linalg.eigvalsh(w_factor)))[::-1]
    return float(min(max(lams[0] - lams[1] - lams[2] - lams[3], 0.0), 1.0))


def concurrence_xstate(rho) -> float:
    """Closed-form concurrence of an X-shaped two-qubit state."""
    mat = _as_matrix(rho)
    inner = abs(mat[1, 2]) - math.sqrt(max(mat[0, 0].real * mat[3, 3].real, 0.0))
    outer = abs(mat[0, 3]) - math.sqrt(max(mat[1, 1].real * mat[2, 2].real, 0.0))
    return float(min(max(2.0 * max(inner, outer), 0.0), 1.0))


def concurrence_gb(p: DimerParams, beta: float) -> float:
    """Gibbs-Boltzmann concurrence max{(sinh(bJ) - 1)/(cosh(bJ) + cosh(bB)), 0}.

    Evaluated with the common exponential scaled out so large |beta| does
    not overflow.  Vanishes for T >= J/arcsinh(1) independently of B.
    """
    a = beta * p.J
    b = beta * p.B
    m = max(a, -a, b, -b, 0.0)
    num = 0.5 * (math.exp(a - m) - math.exp(-a - m)) - math.exp(-m)
    den = 0.5 * (
        math.exp(a - m) + math.exp(-a - m) + math.exp(b - m) + math.exp(-b - m)
    )
    return float(min(max(num / den, 0.0), 1.0))


def _varrho_numerator_parts(p: DimerParams, q: float, beta_star: float):
    sq = qcalc.q_sinh(q, beta_star * p.J)
    cq = qcalc.q_cosh(q, beta_star * p.J)
    cb = qcalc.q_cosh(q, beta_star * p.B)
    product = qcalc.q_exp_pair_product(q, beta_star * p.B)
    return sq, cq, cb, product


def concurrence_varrho(p: DimerParams, q: float, beta_star: float) -> float:
    """Pseudo-temperature concurrence with the unrooted weight product.

    Raises
    ------
    DomainError
        Propagated when a q-weight is undefined (q > 1 window exceeded).
    """
    sq, cq, cb, product = _varrho_numerator_parts(p, q, beta_star)
    return float(min(max((sq - product) / (cq + cb), 0.0), 1.0))


def concurrence_varrho_rooted(p: DimerParams, q: float, beta_star: float) -> float:
    """Same as :func:`concurrence_varrho` but with sqrt of the weight product.

    This is the value the eigenvalue oracle assigns to the thermal state;
    the two variants coincide at q = 1 or B = 0.
    """
    sq, cq, cb, product = _varrho_numerator_parts(p, q, beta_star)
    return float(min(max((sq - math.sqrt(product)) / (cq + cb), 0.0), 1.0))


def concurrence_rho_physical(
    p: DimerParams, q: float, sweep: SweepResult, oracle_tol: float = 1e-10
) -> list[ConcurrenceSample]:
    """Concurrence on the physical-temperature axis, one sample per retained node.

    The sweep must already be physicality-filtered; non-physical nodes are
    excluded.  At every retained node the eigenvalue oracle is checked
    against the X-state closed form to ``oracle_tol``.

    Raises
    ------
    NumericalBreakdown
        If the two oracles disagree (invalid state or broken filter).
    """
    if not sweep.filtered:
        raise NumericalBreakdown("sweep must pass physicality_filter before C_rho")
    samples = []
    for pt in sweep.points:
        if not (pt.physical and pt.ok) or pt.beta == 0.0:
            continue
        state = thermal_state(p, q, pt.beta_star)
        oracle = concurrence_oracle(state)
        xclosed = concurrence_xstate(state)
        if abs(oracle - xclosed) > oracle_tol:
            raise NumericalBreakdown(
                f"oracle {oracle} vs X-state {xclosed} at beta_star={pt.beta_star}"
            )
        samples.append(
            ConcurrenceSample(
                T_axis=1.0 / pt.beta,
                value=concurrence_varrho(p, q, pt.beta_star),
                variant=Variant.RHO_PHYSICAL,
            )
        )
    return samples
