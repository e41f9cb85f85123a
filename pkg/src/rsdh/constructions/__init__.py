"""Explicit witness sets and quadratic-form solution counts."""

from .discriminant import discriminant, discriminant_witness, in_target_set
from .power_sums import full_field_power_sums, power_sums, witness_power_sums
from .products import (
    STRICT,
    WEAK,
    all_units_pair_products,
    pair_product_constant,
    witness_pair_products,
    witness_pair_products_zero,
)
from .quadratic import QuadraticForm, brute_force_count, quadratic_form_count
from .spec import LEMMAS, ConstructionSpec, build_witness, normalize_tag
from .sums import FULL, UNITS, domain_elements, witness_sum

__all__ = [
    "FULL", "UNITS", "STRICT", "WEAK", "LEMMAS",
    "ConstructionSpec", "QuadraticForm",
    "all_units_pair_products", "brute_force_count", "build_witness", "discriminant",
    "discriminant_witness", "domain_elements", "full_field_power_sums", "in_target_set",
    "normalize_tag", "pair_product_constant", "power_sums", "quadratic_form_count",
    "witness_pair_products", "witness_pair_products_zero", "witness_power_sums", "witness_sum",
]
