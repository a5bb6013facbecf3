"""Casimir-Polder interactions between two impurities on a tight-binding chain.

Two atoms side-coupled below the band of a 1D wire exchange virtual band
electrons; to second order in the tunnelling this splits the impurity
doublet and produces an attractive, exponentially decaying force between
the attachment sites.  The package evaluates the closed forms for this
interaction, checks them against exact diagonalisation and an
arbitrary-precision momentum integral, and extends them to finite
temperature.
"""

from ._version import __version__
from .casimir import (
    DecayProfile,
    ForceCurve,
    ForceRecord,
    continuum_decay_constant,
    cp_energy,
    cp_energy_continuum,
    decay_profile,
    ecp_force,
    force_curve,
)
from .errors import (
    BandEdgeError,
    ConvergenceError,
    DimensionError,
    InvalidRegime,
    NonConvergence,
    RegimeViolation,
)
from .lattice import (
    ChainParams,
    ImpurityConfig,
    RegimeReport,
    SymmetricSystem,
    brillouin_modes,
    dispersion,
    validate_regime,
)
from .oracle import (
    EDResult,
    SingleElectronMatrix,
    build_matrix,
    cp_energy_ed,
    cp_energy_quadrature,
    exact_diagonalize,
    write_triplets,
)
from .perturbation import (
    EffectiveCoefficients,
    SymmetricSpectrum,
    band_energies,
    effective_coefficients,
    geometric_ratio,
    symmetric_spectrum_closed,
    symmetric_spectrum_ksum,
)
from .thermal import (
    TemperatureForce,
    TemperatureSweep,
    ThermalEnsemble,
    force_vs_temperature,
    thermal_energy,
    thermal_ensemble,
    thermal_force,
)

__all__ = [
    "__version__",
    # lattice
    "ChainParams", "ImpurityConfig", "SymmetricSystem", "RegimeReport",
    "dispersion", "brillouin_modes", "validate_regime",
    # perturbation
    "EffectiveCoefficients", "SymmetricSpectrum", "effective_coefficients",
    "band_energies", "symmetric_spectrum_ksum", "symmetric_spectrum_closed",
    "geometric_ratio",
    # casimir
    "ForceRecord", "ForceCurve", "DecayProfile", "cp_energy", "ecp_force",
    "force_curve", "decay_profile", "continuum_decay_constant",
    "cp_energy_continuum",
    # oracle
    "SingleElectronMatrix", "EDResult", "build_matrix", "exact_diagonalize",
    "cp_energy_ed", "cp_energy_quadrature", "write_triplets",
    # thermal
    "ThermalEnsemble", "TemperatureForce", "TemperatureSweep",
    "thermal_ensemble", "thermal_energy", "thermal_force",
    "force_vs_temperature",
    # errors
    "RegimeViolation", "BandEdgeError", "InvalidRegime", "DimensionError",
    "ConvergenceError", "NonConvergence",
]
