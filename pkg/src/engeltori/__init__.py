"""Invariants of transverse tori in Engel manifolds and Legendrian tori in
even contact manifolds, built on exact integer homology."""
from .errors import (BasisMismatch, Cancelled, EngelToriError, HypothesisViolated,
                     InvalidBraid, InvalidFront, MultiComponent, NotAComplex,
                     NotClosed3Manifold, ShapeMismatch, TorsionCoordinate, UnknownId,
                     ValidationError)
from .homology import (ChainComplex, FgAbGroup, GradedGroup, IntMatrix, SmithForm,
                       alexander_duality, divisibility, group_from_presentation,
                       homology, is_exact, is_primitive, kunneth_predict,
                       smith_normal_form, tensor)
from .knots import (BraidWord, ClassicalInvariants, Event, FrontWord, bennequin_check,
                    legendrian_stabilize, markov_stabilize, orient_front,
                    rot_of_front, sl_of_braid, tb_of_front, transverse_pushoff,
                    validate_braid, validate_front)
from .tori import (HomClass, LegendrianTorusModel, TransverseTorusModel, Verdict,
                   build_dpv_torus, build_legendrian_torus, complement_h2_product,
                   complement_h2_transverse, distinguish, self_linking_class,
                   stabilize_torus, tb_class, theorem_family)

__all__ = [
    "alexander_duality",
    "BasisMismatch",
    "bennequin_check",
    "BraidWord",
    "build_dpv_torus",
    "build_legendrian_torus",
    "Cancelled",
    "ChainComplex",
    "ClassicalInvariants",
    "complement_h2_product",
    "complement_h2_transverse",
    "distinguish",
    "divisibility",
    "EngelToriError",
    "Event",
    "FgAbGroup",
    "FrontWord",
    "GradedGroup",
    "group_from_presentation",
    "HomClass",
    "homology",
    "HypothesisViolated",
    "IntMatrix",
    "InvalidBraid",
    "InvalidFront",
    "is_exact",
    "is_primitive",
    "kunneth_predict",
    "legendrian_stabilize",
    "LegendrianTorusModel",
    "markov_stabilize",
    "MultiComponent",
    "NotAComplex",
    "NotClosed3Manifold",
    "orient_front",
    "rot_of_front",
    "self_linking_class",
    "ShapeMismatch",
    "sl_of_braid",
    "smith_normal_form",
    "SmithForm",
    "stabilize_torus",
    "tb_class",
    "tb_of_front",
    "tensor",
    "theorem_family",
    "TorsionCoordinate",
    "transverse_pushoff",
    "TransverseTorusModel",
    "UnknownId",
    "validate_braid",
    "validate_front",
    "ValidationError",
    "Verdict",
]

__version__ = "0.1.0"
