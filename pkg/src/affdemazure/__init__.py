"""Demazure modules of affine Kac-Moody algebras: characters, alcove-walk
words, LS path crystals and executable checks."""
from .affine_weyl import (
    AffineWeight,
    DiagramAut,
    ExtendedAffineElement,
    decompose_translation,
    translate,
)
from .char_ring import (
    Character,
    GradedClassicalCharacter,
    decompose_g,
    demazure_character,
    dimension,
    restrict_graded,
)
from .path_crystal import Path, demazure_crystal, demazure_paths, to_dot
from .root_data import (
    ConfigurationError,
    PreconditionError,
    ResourceError,
    RootSystem,
    build_root_system,
    parse_type,
)
from .theorem_suite import CHECKS, CheckReport, run_checks

__version__ = "0.1.0"
