"""Gamma-fluctuation (chi-square) averages of Boltzmann factors.

A system whose inverse temperature fluctuates with a normalized Gamma
density

    f(bt) = (1/Gamma(c)) (c/beta)^c bt^(c-1) exp(-c bt / beta),

(shape c, scale b = beta/c, mean b c = beta) has the averaged Boltzmann
factor

    <exp(-bt E)> = [1 + (q-1) beta E]^(-1/(q-1)) = exp_q(-beta E)

under the identification c = 1/(q-1), which requires q > 1.  This module
verifies that equivalence numerically: generalized Gauss-Laguerre
quadrature (exponent c-1) integrates the average essentially exactly,
and a seeded Monte Carlo estimate provides an independent statistical
oracle.

Everything is pure; Monte Carlo uses a caller-supplied seed (or Generator)
so parallel draws can be made reproducible by spawning independent
generators from one ``numpy.random.SeedSequence``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, roots_genlaguerre

from . import qcalc
from .errors import DivergentIntegral, DomainError, NumericalBreakdown

#: Default number of Gauss-Laguerre nodes.
DEFAULT_NODES = 200

#: Node-doubling ceiling; scipy's recurrence overflows for much larger n.
MAX_NODES = 320

#: Successive-estimate agreement required to stop node doubling.
QUAD_CONVERGENCE = 1e-12


@dataclass(frozen=True)
class GammaFluctuation:
    """Normalized Gamma fluctuation density with mean beta_mean.

    c is the shape (= 1/(q-1)), b the scale, restricted by b*c = beta_mean.
    """

    c: float
    b: float
    beta_mean: float

    def __post_init__(self) -> None:
        if not (self.c > 0.0 and math.isfinite(self.c)):
            raise DomainError(
                f"Gamma shape must be positive (q > 1 required), got c={self.c!r}"
            )
        if not (self.b > 0.0 and math.isfinite(self.b)):
            raise DomainError(f"Gamma scale must be positive, got b={self.b!r}")
        if abs(self.b * self.c - self.beta_mean) > 1e-12 * max(1.0, abs(self.beta_mean)):
            raise DomainError(
                f"scale*shape = {self.b * self.c} must equal beta_mean = {self.beta_mean}"
            )

    @classmethod
    def from_q(cls, q: float, beta_mean: float) -> "GammaFluctuation":
        """Tsallis identification c = 1/(q-1), b = (q-1)*beta_mean."""
        if not q > 1.0:
            raise DomainError(
                f"chi-square identification needs q > 1 (c = 1/(q-1) > 0), got q={q}"
            )
        if not beta_mean > 0.0:
            raise DomainError(f"beta_mean must be positive, got {beta_mean}")
        c = 1.0 / (q - 1.0)
        return cls(c=c, b=beta_mean / c, beta_mean=beta_mean)

    @property
    def q(self) -> float:
        return 1.0 + 1.0 / self.c

    def convergence_bound(self) -> float:
        """The average over energies converges only for E > -1/b."""
        return -1.0 / self.b


def _quadrature_average(fl: GammaFluctuation, integrand, n: int) -> float:
    """(1/Gamma(c)) * integral x^(c-1) e^-x integrand(b*x) dx by Gauss-Laguerre."""
    nodes, weights = roots_genlaguerre(n, fl.c - 1.0)
    vals = integrand(fl.b * nodes)
    return float(np.sum(weights * vals) * math.exp(-gammaln(fl.c)))


def _converged_quadrature(fl: GammaFluctuation, integrand, n0: int) -> float:
    n = max(8, min(n0, MAX_NODES))
    prev = _quadrature_average(fl, integrand, n)
    while n < MAX_NODES:
        n = min(2 * n, MAX_NODES)
        cur = _quadrature_average(fl, integrand, n)
        if abs(cur - prev) < QUAD_CONVERGENCE * max(1.0, abs(cur)):
            return cur
        prev = cur
    return prev


def averaged_boltzmann_scalar(
    fl: GammaFluctuation,
    E: float,
    method: str = "quadrature",
    n: int = DEFAULT_NODES,
    seed=None,
) -> float:
    """Average of exp(-bt*E) over the fluctuation density.

    ``method='quadrature'`` uses generalized Gauss-Laguerre with node
    doubling until successive estimates agree to 1e-12; ``'montecarlo'``
    returns the mean of ``n`` i.i.d. Gamma draws (see
    :func:`monte_carlo_average` for the standard-error report).

    Raises
    ------
    DivergentIntegral
        If E <= -1/b, where the integrand outgrows the density.
    """
    if not math.isfinite(E):
        raise DomainError(f"energy must be finite, got {E!r}")
    if E <= fl.convergence_bound():
        raise DivergentIntegral(
            f"average diverges for E={E} <= -1/b = {fl.convergence_bound()}"
        )
    if method == "quadrature":
        return _converged_quadrature(fl, lambda bt: np.exp(-E * bt), n)
    if method == "montecarlo":
        mean, _ = monte_carlo_average(fl, E, n, seed)
        return mean
    raise DomainError(f"unknown method {method!r}")


def monte_carlo_average(
    fl: GammaFluctuation, E: float, n: int, seed=None
) -> tuple[float, float]:
    """(mean, standard error) of exp(-bt*E) over n i.i.d. Gamma draws."""
    if E <= fl.convergence_bound():
        raise DivergentIntegral(
            f"average diverges for E={E} <= -1/b = {fl.convergence_bound()}"
        )
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    draws = rng.gamma(shape=fl.c, scale=fl.b, size=int(n))
    vals = np.exp(-E * draws)
    return float(np.mean(vals)), float(np.std(vals, ddof=1) / math.sqrt(n))


def fluctuation_moment(fl: GammaFluctuation, power: int, n: int = DEFAULT_NODES) -> float:
    """Quadrature of bt^power against the fluctuation density."""
    return _converged_quadrature(fl, lambda bt: bt**power, n)


def averaged_boltzmann_operator(
    fl: GammaFluctuation,
    H: np.ndarray,
    method: str = "quadrature",
    n: int = DEFAULT_NODES,
    seed=None,
    check_tol: float = 1e-8,
) -> np.ndarray:
    """Average of exp(-bt*H) for a symmetric matrix H, eigenvalue by eigenvalue.

    The result is asserted against the closed-form matrix q-exponential
    exp_q(-beta_mean*H) (entrywise, to ``check_tol``) for the quadrature
    method; Monte Carlo results are statistical and not hard-checked.

    Raises
    ------
    DivergentIntegral
        If any eigenvalue of H violates the convergence bound.
    NumericalBreakdown
        If the quadrature disagrees with the closed form beyond check_tol.
    """
    H = np.asarray(H, dtype=float)
    if H.shape != (H.shape[0], H.shape[0]) or not np.allclose(H, H.T, atol=1e-12):
        raise DomainError("averaged_boltzmann_operator requires a symmetric matrix")
    evals, evecs = np.linalg.eigh(H)
    averaged = np.array(
        [averaged_boltzmann_scalar(fl, float(e), method, n, seed) for e in evals]
    )
    result = (evecs * averaged) @ evecs.T
    if method == "quadrature":
        q = fl.q
        closed = np.array([qcalc.q_exp(q, -fl.beta_mean * float(e)) for e in evals])
        reference = (evecs * closed) @ evecs.T
        err = float(np.max(np.abs(result - reference)))
        if err > check_tol:
            raise NumericalBreakdown(
                f"quadrature average deviates from exp_q(-beta*H) by {err:.3g}"
            )
    return result
