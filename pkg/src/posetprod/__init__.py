"""Computations with finite pointed posets: classification, higher limits
of module diagrams, polyhedral tensor products, Stanley-Reisner rings,
simplicial transforms and polyhedral-product spaces."""

from . import errors
from .limits import PosetDiagram, cochain_complex, higher_limits
from .linalg import F2, QQ, FieldSpec, GradedLinearMap, GradedVectorSpace
from .poset import Bounds, PointedPoset, PosetReport, classify, down_isomorphism, reduce_poset
from .polytensor import MorphismCollection, build_T, polyhedral_tensor
from .spaces import FiniteSimplicialSet, SimplicialMap, homology, polyhedral_product_space, polyprod_homology
from .stanley import RingPresentation, ideal_generators, presentation_report, quotient_dims
from .transform import f_transform_predict, f_vector, simplicial_transform

__all__ = [
    "Bounds",
    "F2",
    "FieldSpec",
    "FiniteSimplicialSet",
    "GradedLinearMap",
    "GradedVectorSpace",
    "MorphismCollection",
    "PointedPoset",
    "PosetDiagram",
    "PosetReport",
    "QQ",
    "RingPresentation",
    "SimplicialMap",
    "build_T",
    "classify",
    "cochain_complex",
    "down_isomorphism",
    "errors",
    "f_transform_predict",
    "f_vector",
    "higher_limits",
    "homology",
    "ideal_generators",
    "polyhedral_product_space",
    "polyhedral_tensor",
    "polyprod_homology",
    "presentation_report",
    "quotient_dims",
    "reduce_poset",
    "simplicial_transform",
]

__version__ = "0.1.0"
