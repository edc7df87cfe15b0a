"""Quantum-battery simulator for a dipole-dipole coupled two-emitter dimer.

The package models a pair of two-level emitters thermalized as a whole,
charged by a collective X-drive, and evaluated through ergotropy,
anti-ergotropy, capacity, charging power and l1 coherence. See the CLI
(``dimerbattery --help``) for parameter sweeps and bundled figure presets.
"""

__version__ = "0.1.0"

from .charging import (
    ChargeConfig,
    charging_hamiltonian,
    charging_unitary,
    evolve,
    evolved_state_closed_form,
)
from .linalg import (
    EigenSystem4,
    NonHermitianInput,
    NonUnitaryInput,
    conjugate,
    hermitian_eig,
    matrix_exp,
    validate_density,
)
from .metrics import (
    MetricsSample,
    NegativeTau,
    ZeroTime,
    active_state,
    anti_ergotropy,
    average_power,
    capacity,
    ergotropy,
    injection_cost,
    instantaneous_power,
    l1_coherence,
    l1_coherence_computational,
    passive_state,
)
from .model import (
    AnalyticSpectrum,
    DegenerateGeometry,
    DimerParams,
    GeometryConfig,
    analytic_spectrum,
    coupling_from_geometry,
    emission_rate,
    energy_eigenbasis,
    gibbs_state,
    gibbs_state_numeric,
    hamiltonian,
    partition_function,
)
from .sweep import (
    InvalidSpec,
    IoFailure,
    ParseError,
    SweepResult,
    SweepSpec,
    UnknownPreset,
    ValidationError,
    emit_csv,
    emit_plot_script,
    figure_preset,
    parse_config,
    run_sweep,
)

__all__ = [
    "__version__",
    "AnalyticSpectrum",
    "ChargeConfig",
    "DegenerateGeometry",
    "DimerParams",
    "EigenSystem4",
    "GeometryConfig",
    "InvalidSpec",
    "IoFailure",
    "MetricsSample",
    "NegativeTau",
    "NonHermitianInput",
    "NonUnitaryInput",
    "ParseError",
    "SweepResult",
    "SweepSpec",
    "UnknownPreset",
    "ValidationError",
    "ZeroTime",
    "active_state",
    "analytic_spectrum",
    "anti_ergotropy",
    "average_power",
    "capacity",
    "charging_hamiltonian",
    "charging_unitary",
    "conjugate",
    "coupling_from_geometry",
    "emission_rate",
    "emit_csv",
    "emit_plot_script",
    "energy_eigenbasis",
    "ergotropy",
    "evolve",
    "evolved_state_closed_form",
    "figure_preset",
    "gibbs_state",
    "gibbs_state_numeric",
    "hamiltonian",
    "hermitian_eig",
    "injection_cost",
    "instantaneous_power",
    "l1_coherence",
    "l1_coherence_computational",
    "matrix_exp",
    "parse_config",
    "partition_function",
    "passive_state",
    "run_sweep",
    "validate_density",
]
