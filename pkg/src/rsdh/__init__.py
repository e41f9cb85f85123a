"""Error distances of received words to Reed-Solomon codes over GF(p^m)."""

from .closed_form import ClosedFormCase, closed_form_distance
from .code import RSCode, ReceivedWord, encode, hamming_distance, top_coefficients, top_word
from .distance import (
    classify_deep_hole,
    consistency_check,
    distance_deg_k1,
    distance_deg_k2,
    dp_distance,
    error_distance,
    max_agreement_oracle,
    verify_witness,
)
from .field import Field, FieldElement, build_field, gf
from .poly import Poly, lagrange_interpolate, monic_from_roots, symmetric_profile
from .results import DistanceResult, Witness
from .subset_dp import subset_symmetric_dp

__all__ = [
    "ClosedFormCase", "DistanceResult", "Field", "FieldElement", "Poly", "RSCode", "ReceivedWord",
    "Witness", "build_field", "classify_deep_hole", "closed_form_distance", "consistency_check",
    "distance_deg_k1", "distance_deg_k2", "dp_distance", "encode", "error_distance", "gf",
    "hamming_distance", "lagrange_interpolate", "max_agreement_oracle", "monic_from_roots",
    "subset_symmetric_dp", "symmetric_profile", "top_coefficients", "top_word", "verify_witness",
]
