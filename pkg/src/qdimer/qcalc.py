"""q-deformed elementary functions: exponential, logarithm, cosh, sinh.

The deformed exponential is

    exp_q(x) = [1 + (1-q) x]^(1/(1-q))

and tends to the ordinary exp(x) as q -> 1.  Its inverse on x > 0 is

    ln_q(x) = (x^(1-q) - 1) / (1-q).

Domain semantics, applied consistently throughout the package:

* ``|q - 1| < EPS_SWITCH``: route to the classical exp/ln.  The direct
  formulas divide by (1-q) and lose all precision in this regime.
* ``q < 1``: whenever 1 + (1-q) x <= 0 the value is cut off to 0, so
  parameter sweeps remain total functions of x.
* ``q > 1``: 1 + (1-q) x <= 0 raises :class:`DomainError`.  There the
  expression diverges; clamping silently would hide the fact that the
  caller left the admissible temperature window.

A separate :func:`q_exp_continued` provides the algebraic continuation
through the q > 1 pole for the exceptional q where the exponent
1/(1-q) is an integer (notably q = 2, where exp_q(x) = 1/(1-x) is an
ordinary rational function).  The continuation is what produces the
negative-temperature branches of the q = 2 sweeps and is only ever used
when explicitly requested.

All functions are pure and stateless; they are safe to call concurrently
from any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

#: Below this |q - 1| the classical exp/ln are used instead of the direct
#: formulas, which suffer catastrophic cancellation in the (1-q) division.
EPS_SWITCH = 1e-9

#: Maximum distance of 1/(1-q) from the nearest integer for which the
#: past-pole continuation is considered exact.
_INT_EXPONENT_TOL = 1e-12


@dataclass(frozen=True)
class QParams:
    """Entropic index with basic validation.

    q = 1 is permitted and routes every deformed function to its
    classical counterpart.  Modules built on the chi-square/Gamma
    identification additionally require q > 1, since the fluctuation
    shape parameter c = 1/(q-1) must be positive (see ``superstat``).
    """

    q: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.q):
            raise DomainError(f"entropic index must be finite, got {self.q!r}")

    @property
    def is_classical(self) -> bool:
        return abs(self.q - 1.0) < EPS_SWITCH

    @property
    def chi2_compatible(self) -> bool:
        """True when the Gamma-fluctuation shape c = 1/(q-1) is positive."""
        return self.q > 1.0


def q_exp(q: float, x: float) -> float:
    """Deformed exponential [1 + (1-q) x]^(1/(1-q)).

    Returns exp(x) for |q-1| < EPS_SWITCH and 0 under the q < 1 cutoff.

    Raises
    ------
    DomainError
        If q > 1 and 1 + (1-q) x <= 0 (the expression diverges), or if
        either argument is not finite.
    """
    if not (math.isfinite(q) and math.isfinite(x)):
        raise DomainError(f"q_exp requires finite arguments, got q={q!r}, x={x!r}")
    if abs(q - 1.0) < EPS_SWITCH:
        return math.exp(x)
    u = (1.0 - q) * x
    if u <= -1.0:
        if q < 1.0:
            return 0.0
        raise DomainError(
            f"q_exp undefined for q={q}, x={x}: 1+(1-q)x = {1.0 + u:.3g} <= 0"
        )
    # exp(log1p(u)/(1-q)) keeps full precision as q -> 1, where the bare
    # power has a base near 1 raised to a huge exponent.
    try:
        return math.exp(math.log1p(u) / (1.0 - q))
    except OverflowError:
        return math.inf


def q_exp_continued(q: float, x: float) -> float:
    """q_exp extended through the q > 1 pole when 1/(1-q) is an integer.

    For integer exponents the defining power is an ordinary rational
    function of x and continues smoothly to negative bases; evaluating it
    past the pole yields the negative weights behind the q = 2
    negative-temperature branches.  Inside the ordinary domain this
    matches :func:`q_exp` exactly.

    Raises
    ------
    DomainError
        At the pole itself (base exactly 0) or when the exponent is not
        an integer, in which case no single-valued continuation exists.
    """
    if not (math.isfinite(q) and math.isfinite(x)):
        raise DomainError(f"q_exp_continued requires finite arguments, got q={q!r}, x={x!r}")
    if abs(q - 1.0) < EPS_SWITCH:
        return math.exp(x)
    u = (1.0 - q) * x
    if u > -1.0:
        return q_exp(q, x)
    if q < 1.0:
        return 0.0
    p = 1.0 / (1.0 - q)
    n = round(p)
    if abs(p - n) > _INT_EXPONENT_TOL:
        raise DomainError(
            f"no continuation past the pole for q={q}: exponent 1/(1-q)={p} is not an integer"
        )
    base = 1.0 + u
    if base == 0.0:
        raise DomainError(f"pole of the continued q-exponential at q={q}, x={x}")
    return base**n


def q_log(q: float, x: float) -> float:
    """Deformed logarithm (x^(1-q) - 1)/(1-q), the inverse of q_exp on x > 0.

    Raises
    ------
    DomainError
        For x <= 0 or non-finite arguments.
    """
    if not (math.isfinite(q) and math.isfinite(x)) or x <= 0.0:
        raise DomainError(f"q_log requires finite q and x > 0, got q={q!r}, x={x!r}")
    if abs(q - 1.0) < EPS_SWITCH:
        return math.log(x)
    return math.expm1((1.0 - q) * math.log(x)) / (1.0 - q)


def q_cosh(q: float, x: float) -> float:
    """(exp_q(x) + exp_q(-x)) / 2; even in x."""
    return 0.5 * (q_exp(q, x) + q_exp(q, -x))


def q_sinh(q: float, x: float) -> float:
    """(exp_q(x) - exp_q(-x)) / 2; odd in x."""
    return 0.5 * (q_exp(q, x) - q_exp(q, -x))


def q_exp_pair_product(q: float, x: float) -> float:
    """Product exp_q(x) * exp_q(-x), both factors deformed.

    Unlike the classical exponential this is not 1; it closes under the
    q-algebra as exp_q(x) exp_q(-x) = exp_q((q-1) x^2).
    """
    return q_exp(q, x) * q_exp(q, -x)


def q_exp_mixed_product(q: float, x: float) -> float:
    """Product exp_q(x) * exp(-x) with one classical factor.

    Exposed alongside :func:`q_exp_pair_product` because the two readings
    differ for q != 1: only the fully deformed product reduces to
    exp_q((q-1) x^2).
    """
    return q_exp(q, x) * math.exp(-x)
