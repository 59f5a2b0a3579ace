"""Nonextensive thermodynamics and thermal entanglement of the spin-1/2 XX dimer.

The package computes q-deformed thermal states of a two-qubit XX dimer,
maps the pseudo temperature of the tractable state onto the physical
temperature, filters out the thermodynamically inadmissible regions of
that map, and evaluates Wootters concurrence along the retained branches.
A numerical fluctuation-average module verifies the Gamma/chi-square
superstatistics foundation of the q-exponential weights.
"""

from .dimer import (
    DimerParams,
    Spectrum,
    ThermalState,
    hamiltonian,
    internal_energy_2nd,
    partition_fn,
    spectrum,
    thermal_state,
    thermal_weights,
    trace_rho_q,
)
from .entanglement import (
    ConcurrenceSample,
    Variant,
    concurrence_gb,
    concurrence_oracle,
    concurrence_rho_physical,
    concurrence_varrho,
    concurrence_varrho_rooted,
    concurrence_xstate,
)
from .errors import (
    ConfigError,
    DegenerateState,
    DivergentIntegral,
    DomainError,
    InsufficientGrid,
    NumericalBreakdown,
    QDimerError,
    SingularMap,
)
from .qcalc import (
    EPS_SWITCH,
    QParams,
    q_cosh,
    q_exp,
    q_exp_continued,
    q_exp_mixed_product,
    q_exp_pair_product,
    q_log,
    q_sinh,
)
from .superstat import (
    GammaFluctuation,
    averaged_boltzmann_operator,
    averaged_boltzmann_scalar,
    monte_carlo_average,
)
from .thermo import (
    Branch,
    SweepResult,
    ThermoPoint,
    entropy_and_energy_physical,
    entropy_direct,
    evaluate_sweep,
    physical_beta,
    physicality_filter,
    tsallis_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ConcurrenceSample",
    "ConfigError",
    "DegenerateState",
    "DimerParams",
    "DivergentIntegral",
    "DomainError",
    "EPS_SWITCH",
    "GammaFluctuation",
    "InsufficientGrid",
    "NumericalBreakdown",
    "QDimerError",
    "QParams",
    "Spectrum",
    "SingularMap",
    "SweepResult",
    "ThermalState",
    "ThermoPoint",
    "Variant",
    "averaged_boltzmann_operator",
    "averaged_boltzmann_scalar",
    "concurrence_gb",
    "concurrence_oracle",
    "concurrence_rho_physical",
    "concurrence_varrho",
    "concurrence_varrho_rooted",
    "concurrence_xstate",
    "entropy_and_energy_physical",
    "entropy_direct",
    "evaluate_sweep",
    "hamiltonian",
    "internal_energy_2nd",
    "monte_carlo_average",
    "partition_fn",
    "physical_beta",
    "physicality_filter",
    "q_cosh",
    "q_exp",
    "q_exp_continued",
    "q_exp_mixed_product",
    "q_exp_pair_product",
    "q_log",
    "q_sinh",
    "spectrum",
    "thermal_state",
    "thermal_weights",
    "trace_rho_q",
    "tsallis_entropy",
]
