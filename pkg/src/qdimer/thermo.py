"""Physical-temperature thermodynamics of the q-deformed dimer.

The tractable state rho*(b*) = exp_q(-b* H)/Z yields

    Tq(b*) = Tr[rho*^q],       U2(b*) = Tr[rho*^q H],

and the physical inverse temperature is parametrized as

    beta(b*) = b* Tq / (1 - (1-q) b* U2 / Tq).

Physical internal energy and entropy follow in closed form,

    U = U2 / Tq,
    S = (1 - Tq)/(q - 1) = ln_q Z + b* U2,

and satisfy dS/dU = beta identically on smooth branches (the Legendre
structure).  The generalized free energy is

    F = U - S/beta = -(1/beta) Lq,
    Lq(b*) = ln_q Z + (q-1) beta b* U^2,

where Lq is the q-logarithm of the effective physical-side partition
function.  The naive identification Lq = ln_q Z misses the
(q-1) beta b* U^2 term whenever q != 1; with it, the finite-difference
route of :func:`entropy_and_energy_physical` reproduces the closed forms
to truncation error.

Not every parametrized point is thermodynamically meaningful: the map
beta(b*) folds for some (q, B/J), so T is not single-valued and
1/T = dS/dU fails across folds.  :func:`physicality_filter` segments a
sweep into monotonic branches, validates the discrete dS/dU identity on
each link, and flags the surviving points as physical.

Point evaluations are pure and independently parallelizable across the
grid; the filter is a sequential pass over the ordered sweep.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field

import numpy as np

from . import qcalc
from .dimer import (
    DimerParams,
    ThermalState,
    _population_power,
    internal_energy_2nd,
    thermal_state,
    thermal_weights,
    trace_rho_q,
)
from .errors import (
    ConfigError,
    DegenerateState,
    DomainError,
    InsufficientGrid,
    SingularMap,
)

#: Default |d beta / d b*| below which the map derivative counts as zero.
TOL_DERIV = 1e-10

#: Default relative tolerance of the discrete dS/dU = 1/T identity.
REL_TOL_DSDU = 1e-3

#: Relative |dU| floor below which a link carries no thermodynamic
#: information (frozen sector); such links cannot certify dS/dU.
DEGENERATE_DU_TOL = 1e-12


def physical_beta(p: DimerParams, q: float, beta_star: float, past_pole: bool = False) -> float:
    """Physical inverse temperature beta(b*); negative values are legal.

    Raises
    ------
    SingularMap
        If the parametrization denominator 1 - (1-q) b* U2/Tq vanishes.
    """
    tq = trace_rho_q(p, q, beta_star, past_pole)
    u2 = internal_energy_2nd(p, q, beta_star, past_pole)
    den = 1.0 - (1.0 - q) * beta_star * u2 / tq
    if den == 0.0:
        raise SingularMap(f"temperature map pole at q={q}, beta_star={beta_star}")
    return beta_star * tq / den


def tsallis_entropy(rho_or_eigs, q: float) -> float:
    """S = (1 - sum p_i^q)/(q - 1), with the Gibbs limit -sum p ln p at q = 1.

    Accepts a density matrix (diagonalized with ``eigh``) or a sequence of
    eigenvalues.  Eigenvalues in [-1e-12, 0) are treated as roundoff zeros;
    0 ln 0 := 0 in the classical branch.
    """
    arr = np.asarray(rho_or_eigs, dtype=float)
    eigs = np.linalg.eigvalsh(arr) if arr.ndim == 2 else arr
    cleaned = []
    for lam in eigs:
        if lam < -1e-12:
            raise DomainError(f"negative probability {lam} in entropy computation")
        cleaned.append(max(lam, 0.0))
    if abs(q - 1.0) < qcalc.EPS_SWITCH:
        return float(-sum(lam * math.log(lam) for lam in cleaned if lam > 0.0))
    return float((1.0 - sum(lam**q for lam in cleaned)) / (q - 1.0))


def entropy_direct(state: ThermalState) -> float:
    """Tsallis entropy of a thermal state from its exact eigenvalues."""
    return tsallis_entropy(np.array(state.populations()), state.q)


def log_q_partition(p: DimerParams, q: float, beta_star: float, past_pole: bool = False) -> float:
    """ln_q Z(b*)."""
    z = sum(thermal_weights(p, q, beta_star, past_pole))
    if z <= 0.0:
        raise DegenerateState(f"ln_q Z undefined for Z={z} at q={q}, beta_star={beta_star}")
    return qcalc.q_log(q, z)


def _closed_point(p: DimerParams, q: float, beta_star: float, past_pole: bool):
    """(Z, Tq, U2, beta, U, S, Lq) at one b*; shared by sweep and FD paths."""
    w = thermal_weights(p, q, beta_star, past_pole)
    z = sum(w)
    if z == 0.0:
        raise DegenerateState(f"partition function vanished at q={q}, beta_star={beta_star}")
    pops = [wi / z for wi in w]
    energies = (-p.B, p.B, p.J, -p.J)
    classical = abs(q - 1.0) < qcalc.EPS_SWITCH
    if classical:
        tq = sum(pops)
        u2 = sum(pi * e for pi, e in zip(pops, energies))
    else:
        tq = sum(_population_power(pi, q) for pi in pops)
        u2 = sum(_population_power(pi, q) * e for pi, e in zip(pops, energies))
    den = 1.0 - (1.0 - q) * beta_star * u2 / tq
    if den == 0.0:
        raise SingularMap(f"temperature map pole at q={q}, beta_star={beta_star}")
    beta = beta_star * tq / den
    u_phys = u2 / tq
    if classical:
        entropy = -sum(pi * math.log(pi) for pi in pops if pi > 0.0)
        lq = math.log(z) if z > 0.0 else math.nan
    else:
        entropy = (1.0 - tq) / (q - 1.0)
        lq = qcalc.q_log(q, z) + (q - 1.0) * beta * beta_star * u_phys**2 if z > 0.0 else math.nan
    return z, tq, u2, beta, u_phys, entropy, lq


def entropy_and_energy_physical(
    p: DimerParams,
    q: float,
    beta_star: float,
    h: float | None = None,
    past_pole: bool = False,
    tol_deriv: float = TOL_DERIV,
) -> tuple[float, float]:
    """(S, U) from second-order central differences along the b* parametrization.

    U = -(d beta/d b*)^(-1) d Lq/d b* and S = Lq + beta U, both derivatives
    taken centrally with step ``h``.  The two expressions assemble the
    derivative of beta^(-1) Lq without evaluating it at beta = 0, and agree
    with the closed forms U2/Tq and the direct Tsallis entropy to O(h^2) on
    smooth branches.

    The default step is 1e-5 * max(1, b*), shrunk by the parametrization
    denominator when the node sits close to a pole of the map: the local
    curvature of beta(b*) grows like the inverse cube of that denominator,
    so a step proportional to it keeps the relative truncation error
    uniform along the branch.

    Raises
    ------
    SingularMap
        If |d beta/d b*| < ``tol_deriv`` (a fold of the temperature map).
    """
    if h is None:
        _, tq0, u20, _, _, _, _ = _closed_point(p, q, beta_star, past_pole)
        den = abs(1.0 - (1.0 - q) * beta_star * u20 / tq0)
        h = 1e-5 * max(1.0, abs(beta_star)) * min(1.0, den)
    _, _, _, beta_plus, _, _, lq_plus = _closed_point(p, q, beta_star + h, past_pole)
    _, _, _, beta_minus, _, _, lq_minus = _closed_point(p, q, beta_star - h, past_pole)
    _, _, _, beta_0, _, _, lq_0 = _closed_point(p, q, beta_star, past_pole)
    dbeta = (beta_plus - beta_minus) / (2.0 * h)
    if abs(dbeta) < tol_deriv:
        raise SingularMap(
            f"temperature map is stationary at beta_star={beta_star} (|d beta/d b*|={abs(dbeta):.3g})"
        )
    du = -((lq_plus - lq_minus) / (2.0 * h)) / dbeta
    return lq_0 + beta_0 * du, du


@dataclass(frozen=True)
class ThermoPoint:
    """One sweep sample.  Non-evaluable nodes carry NaN and ok=False."""

    t_star: float
    beta_star: float
    beta: float = math.nan
    Z: float = math.nan
    trace_q: float = math.nan
    u2: float = math.nan
    U: float = math.nan
    S: float = math.nan
    F: float = math.nan
    physical: bool = False
    branch_id: int = -1
    ok: bool = True
    note: str = ""

    @property
    def T_physical(self) -> float:
        if not self.ok or self.beta == 0.0 or math.isnan(self.beta):
            return math.nan
        return 1.0 / self.beta


@dataclass(frozen=True)
class Branch:
    """Maximal run of consecutive valid sweep points with uniform character.

    ``kind`` is one of 'rising', 'falling', 'degenerate' (frozen sector or
    failed dS/dU link), or 'singleton'; ``sign`` is the sign of beta on the
    branch.  Only rising branches can be flagged physical.
    """

    branch_id: int
    first: int
    last: int
    kind: str
    sign: int
    physical: bool = False
    reject_reason: str = ""

    def indices(self) -> range:
        return range(self.first, self.last + 1)


@dataclass(frozen=True)
class SweepResult:
    """Ordered sweep samples plus provenance.

    ``points`` are strictly increasing in beta_star (descending pseudo
    temperature).  ``branches`` is populated by :func:`physicality_filter`.
    """

    points: tuple[ThermoPoint, ...]
    q: float
    params: DimerParams
    t_min: float
    t_max: float
    steps: int
    spacing: str
    fd_step: float = 1e-5
    past_pole: bool = False
    filtered: bool = False
    branches: tuple[Branch, ...] = field(default_factory=tuple)


def temperature_grid(t_min: float, t_max: float, steps: int, spacing: str = "uniform") -> list[float]:
    """Strictly increasing pseudo-temperature grid, uniform or log spaced."""
    if steps < 3:
        raise ConfigError(f"grid needs at least 3 steps, got {steps}")
    if not (t_min < t_max):
        raise ConfigError(f"t_min must be < t_max, got [{t_min}, {t_max}]")
    if spacing == "uniform":
        grid = np.linspace(t_min, t_max, steps)
    elif spacing == "log":
        if t_min <= 0.0:
            raise ConfigError("log spacing requires t_min > 0")
        grid = np.geomspace(t_min, t_max, steps)
    else:
        raise ConfigError(f"unknown spacing {spacing!r}")
    return [float(t) for t in grid]


def evaluate_point(p: DimerParams, q: float, t_star: float, past_pole: bool = False) -> ThermoPoint:
    """Evaluate all closed-form thermodynamic quantities at one grid node.

    Domain failures (inadmissible window, vanished Z, map pole) yield an
    ok=False point instead of raising, so grids stay aligned.
    """
    if t_star <= 0.0 or not math.isfinite(t_star):
        return ThermoPoint(t_star=t_star, beta_star=math.inf, ok=False, note="invalid t_star")
    beta_star = 1.0 / t_star
    try:
        z, tq, u2, beta, u_phys, entropy, lq = _closed_point(p, q, beta_star, past_pole)
    except (DomainError, DegenerateState, SingularMap) as exc:
        return ThermoPoint(
            t_star=t_star, beta_star=beta_star, ok=False, note=type(exc).__name__
        )
    f_phys = u_phys - entropy / beta if beta != 0.0 else math.nan
    return ThermoPoint(
        t_star=t_star,
        beta_star=beta_star,
        beta=beta,
        Z=z,
        trace_q=tq,
        u2=u2,
        U=u_phys,
        S=entropy,
        F=f_phys,
    )


def evaluate_sweep(
    p: DimerParams,
    q: float,
    t_min: float,
    t_max: float,
    steps: int,
    spacing: str = "uniform",
    fd_step: float = 1e-5,
    past_pole: bool = False,
) -> SweepResult:
    """Evaluate the closed-form thermodynamics over a pseudo-temperature grid.

    Points are returned in ascending beta_star (nodes are computed from the
    descending tail of the t* grid), unfiltered.
    """
    grid = temperature_grid(t_min, t_max, steps, spacing)
    points = tuple(evaluate_point(p, q, t, past_pole) for t in reversed(grid))
    return SweepResult(
        points=points,
        q=q,
        params=p,
        t_min=t_min,
        t_max=t_max,
        steps=steps,
        spacing=spacing,
        fd_step=fd_step,
        past_pole=past_pole,
    )


def _link_class(a: ThermoPoint, b: ThermoPoint, rel_tol_dsdu: float, deg_tol: float) -> str:
    """Classify the link between adjacent sweep points.

    'broken'  : either endpoint invalid, or beta changes sign (the link
                crosses a pole or zero of the map);
    'falling' : beta decreases (non-monotonic zone, never physical);
    'degenerate': |dU| too small to certify dS/dU (frozen sector), or the
                discrete slope leaves the link's beta bracket;
    'rising'  : monotonic and consistent with dS/dU = beta.

    The discrete slope dS/dU over a link equals beta at some interior
    point (Cauchy mean value), so on a healthy monotonic link it must lie
    between the endpoint betas up to ``rel_tol_dsdu``.
    """
    if not (a.ok and b.ok):
        return "broken"
    if a.beta == 0.0 or b.beta == 0.0 or (a.beta > 0.0) != (b.beta > 0.0):
        return "broken"
    dbeta = b.beta - a.beta
    if dbeta == 0.0:
        return "broken"
    if dbeta < 0.0:
        return "falling"
    du = b.U - a.U
    if abs(du) <= deg_tol * max(1.0, abs(a.U), abs(b.U)):
        return "degenerate"
    slope = (b.S - a.S) / du
    lo, hi = min(a.beta, b.beta), max(a.beta, b.beta)
    slack = rel_tol_dsdu * max(abs(a.beta), abs(b.beta)) + 1e-15
    if not (lo - slack <= slope <= hi + slack):
        return "degenerate"
    return "rising"


def physicality_filter(
    sweep: SweepResult,
    rel_tol_dsdu: float = REL_TOL_DSDU,
    deg_tol: float = DEGENERATE_DU_TOL,
) -> SweepResult:
    """Flag the thermodynamically admissible points of a sweep.

    A point is physical iff it belongs to a branch on which beta(b*) is
    strictly increasing, every link passes the discrete dS/dU = beta
    bracket test, and the branch's temperature range does not overlap an
    already-retained branch of the same temperature sign.  Overlaps are
    resolved longest-branch-first (ties toward the coldest end, largest
    b*); positive- and negative-temperature branches are tagged
    independently.

    Raises
    ------
    InsufficientGrid
        For sweeps of fewer than 3 points.
    """
    pts = list(sweep.points)
    if len(pts) < 3:
        raise InsufficientGrid(f"physicality analysis needs >= 3 points, got {len(pts)}")

    links = [
        _link_class(pts[i], pts[i + 1], rel_tol_dsdu, deg_tol) for i in range(len(pts) - 1)
    ]

    # Maximal runs of equal link class; invalid points stay unbranched.
    branches: list[Branch] = []
    i = 0
    while i < len(pts):
        if not pts[i].ok:
            i += 1
            continue
        j = i
        run_class = None
        while j + 1 < len(pts):
            cls = links[j]
            if cls == "broken":
                break
            if run_class is None:
                run_class = cls
            elif cls != run_class:
                break
            j += 1
        kind = run_class if run_class is not None else "singleton"
        sign = 1 if pts[i].beta > 0.0 else -1
        branches.append(Branch(branch_id=len(branches), first=i, last=j, kind=kind, sign=sign))
        i = j + 1

    # Retention: rising branches only, longest first per sign class,
    # ties resolved toward the cold end (largest beta_star).
    decided: list[Branch] = []
    retained_t_ranges: dict[int, list[tuple[float, float]]] = {1: [], -1: []}

    def priority(b: Branch):
        return (b.last - b.first, pts[b.last].beta_star)

    for br in sorted(branches, key=priority, reverse=True):
        if br.kind != "rising":
            reason = {
                "falling": "beta decreasing in beta_star",
                "degenerate": "dS/dU not certifiable on branch",
                "singleton": "isolated point",
            }[br.kind]
            decided.append(dataclasses.replace(br, physical=False, reject_reason=reason))
            continue
        temps = sorted(1.0 / pts[k].beta for k in br.indices())
        t_range = (temps[0], temps[-1])
        overlap = any(
            t_range[0] < hi and lo < t_range[1] for lo, hi in retained_t_ranges[br.sign]
        )
        if overlap:
            decided.append(
                dataclasses.replace(
                    br, physical=False, reject_reason="temperature range overlaps retained branch"
                )
            )
            continue
        retained_t_ranges[br.sign].append(t_range)
        decided.append(dataclasses.replace(br, physical=True))

    decided.sort(key=lambda b: b.branch_id)
    flagged = [dataclasses.replace(pt, physical=False, branch_id=-1) for pt in pts]
    for br in decided:
        for k in br.indices():
            flagged[k] = dataclasses.replace(
                flagged[k], physical=br.physical, branch_id=br.branch_id
            )
    return dataclasses.replace(
        sweep, points=tuple(flagged), filtered=True, branches=tuple(decided)
    )
