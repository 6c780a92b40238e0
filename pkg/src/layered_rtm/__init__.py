"""Reverse time migration imaging of a locally rough interface between two
half-planes with a sound-soft obstacle buried in the lower one."""

from .errors import (
    ConfigurationError,
    ContractError,
    DegenerateRangeError,
    DomainError,
    FormatError,
    NumericalAccuracyError,
    RTMError,
    SingularityError,
    SolverError,
)
from .geometry import (
    Acquisition,
    InterfaceProfile,
    MediumConfig,
    ObstacleBoundary,
    PerturbationRegion,
    SamplingGrid,
    Scene,
    build_region,
    chi,
    preset_scene,
)
from .layered_green import GreenEvaluator, QuadratureConfig, green, green_gradient, green_scattered, phi
from .forward import ScatteringDataset, add_noise, assemble, generate_dataset, solve_source
from .rtm import IndicatorField, back_propagate, indicator, normalize, peak_report

__version__ = "0.1.0"
