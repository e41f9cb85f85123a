"""A tagged request for one of the witness generators, with its target check."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..errors import OutOfRange
from ..field import Field
from ..poly import symmetric_profile
from .discriminant import discriminant, discriminant_witness, in_target_set
from .power_sums import witness_power_sums
from .products import STRICT, WEAK, all_units_pair_products, witness_pair_products, witness_pair_products_zero
from .sums import FULL, witness_sum

# tag -> (parameters used besides t, short description)
LEMMAS = {
    "thm1-sum": (("domain", "b"), "t distinct elements of F_q or F_q^* summing to b"),
    "l5i": (("c",), "t distinct units with sum_{i<j} x_i x_j = c != 0, p = 2"),
    "l5ii": (("c",), "t distinct units with sum_{i<=j} x_i x_j = c != 0, p = 2"),
    "l5iii": ((), "all q-1 units, whose pair-product sum is 0"),
    "l6": ((), "t distinct units with sum_{i<j} x_i x_j = 0, t small"),
    "cor1": ((), "t distinct units with sum_{i<=j} x_i x_j = 0, t > q/2"),
    "l8": (("r", "r1", "mu", "b", "c"), "t distinct units with m^2 - r n in the target set, p odd"),
    "l9": (("zeta",), "t distinct elements with sum 0 and sum of squares zeta, p odd"),
    "cor2": (("zeta",), "as l9 with p | t"),
}

DEFAULTS = {"domain": FULL, "b": 0, "c": 1, "r": 1, "r1": 1, "mu": 1, "zeta": 1}


def normalize_tag(tag: str) -> str:
    key = tag.strip().lower()
    if key not in LEMMAS:
        raise OutOfRange(f"unknown lemma tag {tag!r}; choose from {', '.join(LEMMAS)}")
    return key


@dataclass(frozen=True)
class ConstructionSpec:
    lemma: str
    field: Field
    t: int | None = None
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "lemma", normalize_tag(self.lemma))
        unknown = set(self.params) - set(LEMMAS[self.lemma][0])
        if unknown:
            raise OutOfRange(f"{self.lemma} takes no parameter(s) {sorted(unknown)}")

    def param(self, name):
        return self.params.get(name, DEFAULTS[name])

    @property
    def size(self) -> int:
        if self.lemma == "l5iii":
            return self.field.q - 1
        if self.t is None:
            raise OutOfRange(f"{self.lemma} needs a size t")
        return self.t

    def build(self) -> list[int]:
        F, t, tag = self.field, self.size, self.lemma
        if tag == "thm1-sum":
            return witness_sum(F, self.param("domain"), t, self.param("b"))
        if tag in ("l5i", "l5ii"):
            return witness_pair_products(F, t, self.param("c"), STRICT if tag == "l5i" else WEAK)
        if tag == "l5iii":
            return all_units_pair_products(F)
        if tag in ("l6", "cor1"):
            small = F.q - 2 - 2 * t > 0
            if small != (tag == "l6"):
                raise OutOfRange(f"t={t} is outside the {tag} range for q={F.q}")
            return witness_pair_products_zero(F, t)
        if tag == "l8":
            return discriminant_witness(F, t, *(self.param(k) for k in ("r", "r1", "mu", "b", "c")))
        return witness_power_sums(F, t, self.param("zeta"), require_p_divides=(tag == "cor2"))

    def target(self) -> dict:
        """The quantity the witness must realise, by name."""
        F, tag = self.field, self.lemma
        if tag == "thm1-sum":
            return {"e1": F.coerce(self.param("b"))}
        if tag == "l5i":
            return {"e2": F.coerce(self.param("c"))}
        if tag == "l5ii":
            return {"weak_e2": F.coerce(self.param("c"))}
        if tag in ("l5iii", "l6"):
            return {"e2": 0}
        if tag == "cor1":
            return {"weak_e2": 0}
        if tag == "l8":
            return {"discriminant_in_target_set": True}
        return {"psum1": 0, "psum2": F.coerce(self.param("zeta"))}

    def measure(self, elements) -> dict:
        """The same quantities evaluated on ``elements``."""
        F = self.field
        prof = symmetric_profile(F, elements)
        if self.lemma == "l8":
            r, r1, mu, b, c = (F.coerce(self.param(k)) for k in ("r", "r1", "mu", "b", "c"))
            return {"discriminant_in_target_set": in_target_set(F, discriminant(F, elements, r), r, r1, mu, b, c)}
        values = {"e1": prof.e1, "e2": prof.e2, "weak_e2": prof.weak_e2(F),
                  "psum1": prof.psum1, "psum2": prof.psum2}
        return {k: values[k] for k in self.target()}

    def domain(self) -> list[int]:
        if self.lemma == "thm1-sum" and self.param("domain") == FULL:
            return list(range(self.field.q))
        if self.lemma in ("l9", "cor2"):
            return list(range(self.field.q))
        return list(range(1, self.field.q))

    def check(self, elements) -> bool:
        """Distinct, inside the domain, and meeting the target exactly."""
        elements = list(elements)
        return (len(set(elements)) == len(elements) == self.size
                and set(elements) <= set(self.domain())
                and self.measure(elements) == self.target())


def build_witness(spec: ConstructionSpec) -> list[int]:
    out = spec.build()
    if not spec.check(out):
        raise AssertionError(f"{spec.lemma} produced {out}, which misses {spec.target()}")
    return out

