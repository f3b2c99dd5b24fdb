"""Named, reproducible verification experiments."""

from typing import Dict, List, Type

from ..orchestrator.base import VerificationExperiment
from .basis_change import BasisChangeExperiment
from .co_vs_c0 import CoVsC0Experiment
from .contact_certificate import ContactCertificateExperiment
from .displacement_spectrum import DisplacementSpectrumExperiment
from .lift_endpoints import LiftEndpointsExperiment
from .path_independence import PathIndependenceExperiment
from .radial_spectrum import RadialSpectrumExperiment
from .rational_rotation import RationalRotationExperiment
from .rokhlin_demo import RokhlinDemoExperiment
from .spectrum_bound import SpectrumBoundExperiment
from .squeeze_formula import SqueezeFormulaExperiment

EXPERIMENT_CLASSES: List[Type[VerificationExperiment]] = [
    SpectrumBoundExperiment,
    LiftEndpointsExperiment,
    RadialSpectrumExperiment,
    RationalRotationExperiment,
    DisplacementSpectrumExperiment,
    RokhlinDemoExperiment,
    CoVsC0Experiment,
    ContactCertificateExperiment,
    SqueezeFormulaExperiment,
    PathIndependenceExperiment,
    BasisChangeExperiment,
]

EXPERIMENTS: Dict[str, Type[VerificationExperiment]] = {
    cls.name: cls for cls in EXPERIMENT_CLASSES
}


def default_experiments() -> List[VerificationExperiment]:
    """A fresh instance of every experiment, in suite order."""
    return [cls() for cls in EXPERIMENT_CLASSES]


__all__ = [
    "EXPERIMENT_CLASSES",
    "EXPERIMENTS",
    "default_experiments",
    "BasisChangeExperiment",
    "CoVsC0Experiment",
    "ContactCertificateExperiment",
    "DisplacementSpectrumExperiment",
    "LiftEndpointsExperiment",
    "PathIndependenceExperiment",
    "RadialSpectrumExperiment",
    "RationalRotationExperiment",
    "RokhlinDemoExperiment",
    "SpectrumBoundExperiment",
    "SqueezeFormulaExperiment",
]
