"""Quantum transition state theory for hydrogen-transfer kinetics.

Classical Kramers rates with memory friction, quantum correction factors
above the crossover temperature, kinetic isotope effect prediction and
fitting, and friction/spectral-density models of a protein-solvent
environment.
"""

from .errors import (
    BelowCrossoverError,
    DivergentIntegralError,
    DomainError,
    FitConvergenceError,
    QtstError,
    SolverConvergenceError,
    UnitCompatibilityError,
)
from .fit import ArrheniusFit, FitConfig, FitResult, KIEDataset, fit_arrhenius, fit_kie
from .kie import (
    ApparentArrhenius,
    ArrheniusParams,
    ClassificationReport,
    KIEPrediction,
    apparent_arrhenius,
    classify,
    kie_qtst,
    load_barrier_frequencies,
    load_limits,
    load_table1,
    swain_schaad,
)
from .kramers import (
    BarrierSystem,
    EffectiveBarrier,
    RateResult,
    classical_kie,
    classical_rate,
    crossover_temperature,
    effective_barrier_frequency,
)
from .qcorr import (
    CorrectionResult,
    CrossoverParams,
    correction_closed,
    correction_crossover,
    correction_product,
    equilibrium_condition,
    kappa_parameter,
    matsubara_frequency,
    quantum_rate,
    semiclassical_rate,
    weak_friction_margin,
    wigner_rate,
)
from .spectral import (
    ChromophoreEstimate,
    DebyeDielectricFriction,
    DrudeFriction,
    FrictionModel,
    LinearProteinFriction,
    OhmicFriction,
    PeakedFriction,
    cavity_friction,
    chromophore_estimate,
    debye_dielectric,
    effective_curvature,
    friction_model_from_json,
    kernel_upper_bound,
)
from .units import Isotope, Quantity, Unit, convert, isotope_frequency
from .wkb import (
    CubicBarrier,
    EckartBarrier,
    ParabolicBarrier,
    TabulatedPotential,
    transmission,
    turning_points,
    wkb_action,
)

__version__ = "0.1.0"

__all__ = [
    "ApparentArrhenius",
    "ArrheniusFit",
    "ArrheniusParams",
    "BarrierSystem",
    "BelowCrossoverError",
    "ChromophoreEstimate",
    "ClassificationReport",
    "CorrectionResult",
    "CrossoverParams",
    "CubicBarrier",
    "DebyeDielectricFriction",
    "DivergentIntegralError",
    "DomainError",
    "DrudeFriction",
    "EckartBarrier",
    "EffectiveBarrier",
    "FitConfig",
    "FitConvergenceError",
    "FitResult",
    "FrictionModel",
    "Isotope",
    "KIEDataset",
    "KIEPrediction",
    "LinearProteinFriction",
    "OhmicFriction",
    "ParabolicBarrier",
    "PeakedFriction",
    "Quantity",
    "QtstError",
    "RateResult",
    "SolverConvergenceError",
    "TabulatedPotential",
    "Unit",
    "UnitCompatibilityError",
    "apparent_arrhenius",
    "cavity_friction",
    "chromophore_estimate",
    "classical_kie",
    "classical_rate",
    "classify",
    "convert",
    "correction_closed",
    "correction_crossover",
    "correction_product",
    "crossover_temperature",
    "debye_dielectric",
    "effective_barrier_frequency",
    "effective_curvature",
    "equilibrium_condition",
    "fit_arrhenius",
    "fit_kie",
    "friction_model_from_json",
    "isotope_frequency",
    "kappa_parameter",
    "kernel_upper_bound",
    "kie_qtst",
    "load_barrier_frequencies",
    "load_limits",
    "load_table1",
    "matsubara_frequency",
    "quantum_rate",
    "semiclassical_rate",
    "swain_schaad",
    "transmission",
    "turning_points",
    "weak_friction_margin",
    "wigner_rate",
    "wkb_action",
]
