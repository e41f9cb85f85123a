"""Verdict and certificate types returned by every distance method."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly

EXACT = "exact"
UPPER_BOUND = "upper_bound"
UNKNOWN = "unknown"

ORACLE = "Oracle"
SUBSET_DP = "SubsetDP"
CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class Witness:
    """Certificate for a distance value.

    ``elements`` are points of D (the split roots of u - v); ``extra_root``
    is the root of the additional linear factor when certifying n - k - 1
    for a degree k+2 word; ``codeword`` is a nearest codeword found by the
    oracle.
    """

    elements: tuple[int, ...] = ()
    extra_root: int | None = None
    quotient: Poly | None = None
    codeword: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"elements": list(self.elements), "extra_root": self.extra_root}
        if self.codeword is not None:
            out["codeword"] = list(self.codeword)
        return out


@dataclass(frozen=True)
class DistanceResult:
    verdict: str
    d: int | None
    method: str
    paper_case: str | None = None
    witness: Witness | None = None

    @property
    def is_exact(self) -> bool:
        return self.verdict == EXACT

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "d": self.d,
            "method": self.method,
            "paper_case": self.paper_case,
            "witness": None if self.witness is None else self.witness.to_json(),
        }

    def admits(self, d: int) -> bool:
        """Is the true distance d compatible with this verdict?"""
        if self.verdict == EXACT:
            return d == self.d
        if self.verdict == UPPER_BOUND:
            return d <= self.d
        return True


def exact(d, method, case=None, witness=None) -> DistanceResult:
    return DistanceResult(EXACT, d, method, case, witness)
