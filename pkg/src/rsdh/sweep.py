"""Cross-validation sweeps: closed form vs subset DP vs exhaustive oracle.

Each sweep yields rows in a fixed order (q, then k, then b, then c), so two
runs with the same configuration produce identical tables regardless of how
many worker processes were used.
"""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .closed_form import ClosedFormCase, closed_form_distance
from .code import RSCode, top_word
from .constructions import ConstructionSpec, build_witness
from .constructions.discriminant import in_target_set
from .errors import NoWitness, OutOfRange, OutOfTheoremRange, TooLarge
from .field import gf
from .poly import Poly
from .distance import distance_deg_k1_from_top, distance_deg_k2_from_top, max_agreement_oracle
from .subset_dp import profile_table

TOP = "top"
PROP8 = "prop8"


@dataclass(frozen=True)
class VerifyRow:
    q: int
    kind: str
    k: int
    b: int | None
    c: int | None
    verdict: str
    closed_form: int | None
    dp: int | None
    oracle: int | str | None
    agree: bool
    case: str

    HEADER = ("q", "kind", "k", "b", "c", "verdict", "closed_form", "dp", "oracle", "agree", "case")

    def tsv(self) -> str:
        def cell(v):
            return "-" if v is None else str(v)
        return "\t".join(cell(getattr(self, name)) for name in self.HEADER)


@dataclass(frozen=True)
class SweepConfig:
    family: str
    q_list: tuple[int, ...]
    kind: str = "standard"
    degree: int = 1  # deg u - k
    oracle_q_max: int = 9
    samples: int = 10
    seed: int = 0
    literal: bool = False

    def digest(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]


def _k_range(q: int, kind: str, degree: int) -> range:
    if degree == 1:
        return range(1, q - 1) if kind == "standard" else range(1, q - 2)
    return range(1, q - 2)


def _oracle(code, u, use_oracle):
    if not use_oracle:
        return None
    try:
        return max_agreement_oracle(code, u).d
    except TooLarge:
        return "cap"


def _top_cells(config: SweepConfig, q: int, k: int) -> list[VerifyRow]:
    F = gf(q)
    code = RSCode.standard(F, k) if config.kind == "standard" else RSCode.primitive(F, k)
    use_oracle = q <= config.oracle_q_max
    rows = []
    cs = [None] if config.degree == 1 else range(q)
    for b in range(q):
        for c in cs:
            try:
                cf = closed_form_distance(ClosedFormCase.for_code(code, b, c), literal=config.literal)
            except OutOfTheoremRange as exc:
                cf = None
                case = f"out of range: {exc}"
            if c is None:
                dp = distance_deg_k1_from_top(code, b).d
            else:
                dp = distance_deg_k2_from_top(code, b, c).d
            oracle = _oracle(code, top_word(code, b, c), use_oracle)
            agree = oracle in (None, "cap") or oracle == dp
            if cf is not None:
                agree = agree and cf.admits(dp)
                case = cf.paper_case
            rows.append(VerifyRow(q, config.kind, k, b, c, cf.verdict if cf else "none",
                                  cf.d if cf else None, dp, oracle, agree, case))
    return rows


def _prop8_cells(config: SweepConfig, q: int, k: int) -> list[VerifyRow]:
    """u = a x^{q-2} + v with deg v < k on a primitive code: always a deep hole."""
    F = gf(q)
    code = RSCode.primitive(F, k)
    rng = random.Random(f"{config.seed}-{q}-{k}")
    rows = []
    for a in range(1, q):
        for _ in range(config.samples):
            v = [rng.randrange(q) for _ in range(k)]
            u = code.word_from_poly(Poly(F, v) + Poly.monomial(F, q - 2, a))
            d = max_agreement_oracle(code, u).d
            rows.append(VerifyRow(q, "primitive", k, a, None, "deep_hole", code.n - k, None, d,
                                  d == code.n - k, "u = a x^(q-2) + v"))
    return rows


def _cell_tasks(config: SweepConfig):
    for q in config.q_list:
        if config.family == PROP8:
            ks = range(2, q - 1)
        else:
            ks = _k_range(q, config.kind, config.degree)
        for k in ks:
            yield q, k


def _run_cell(args):
    config, q, k = args
    if config.family == PROP8:
        return _prop8_cells(config, q, k)
    return _top_cells(config, q, k)


def run_sweep(config: SweepConfig, jobs: int = 1) -> list[VerifyRow]:
    """All rows of the sweep in deterministic order."""
    tasks = [(config, q, k) for q, k in _cell_tasks(config)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_cell, tasks))
    else:
        chunks = [_run_cell(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def write_tsv(rows, path) -> None:
    with open(path, "w") as fh:
        fh.write("\t".join(VerifyRow.HEADER) + "\n")
        for row in rows:
            fh.write(row.tsv() + "\n")


# -- construction sweep -------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionRow:
    q: int
    lemma: str
    t: int
    params: str
    status: str  # "ok", "no_witness" or "invalid"
    dp_exists: bool

    @property
    def agree(self) -> bool:
        if self.status == "ok":
            return self.dp_exists
        return self.status == "no_witness" and not self.dp_exists


def _l8_samples(F):
    pairs = [(0, 0), (0, 1), (1, 0), (1, 1), (F.q - 1, 2 % F.q)]
    for r in range(1, F.q):
        mu = F.add(1, r)
        if mu == 0:
            continue
        for b, c in pairs:
            yield {"r": r, "r1": r, "mu": mu, "b": b, "c": c}


def construction_params(F):
    """Every (tag, t, params) the sweep exercises over GF(q), in a fixed order."""
    q = F.q
    for domain in ("F_q", "F_q*"):
        size = q if domain == "F_q" else q - 1
        for t in range(1, size + 1):
            for b in range(q):
                yield "thm1-sum", t, {"domain": domain, "b": b}
    if F.p == 2:
        for tag, top in (("l5i", q - 2), ("l5ii", q - 3)):
            for t in range(2, top + 1):
                for c in range(1, q):
                    yield tag, t, {"c": c}
    if q >= 4:
        yield "l5iii", q - 1, {}
        step = 4 if F.p == 2 else F.p
        for t in range(step, q, step):
            if q - 2 - 2 * t > 0:
                yield "l6", t, {}
        for t in range(q // 2 + 1, q):
            if (q - 1 - t) % step == 0:
                yield "cor1", t, {}
    if F.p != 2:
        for t in range(4, (q + 1) // 2 + 1, 2):
            if t < (q + 1) / 2:
                for params in _l8_samples(F):
                    yield "l8", t, params
        for t in range(4, q - 3):
            if 2 * t in (q - 1, q + 1):
                continue
            for zeta in range(1, q):
                yield "l9", t, {"zeta": zeta}
                if t % F.p == 0:
                    yield "cor2", t, {"zeta": zeta}


def dp_realises(spec: ConstructionSpec) -> bool:
    """Independent existence check of the spec's target by the subset DP."""
    F, t = spec.field, spec.size
    points = tuple(spec.domain())
    if spec.lemma == "thm1-sum":
        return profile_table(F, points, t, False).exists(t, F.coerce(spec.param("b")))
    table = profile_table(F, points, t, True)
    q = F.q
    reach = table.layer(t).reshape(q, q)
    target = spec.target()
    if "e2" in target:
        return bool(reach[:, target["e2"]].any())
    if "weak_e2" in target:
        # sum_{i<=j} = e1^2 - e2
        return any(reach[e1, F.sub(F.mul(e1, e1), target["weak_e2"])] for e1 in range(q))
    if "psum2" in target:
        # e1 = 0 and sum of squares = e1^2 - 2 e2
        return bool(reach[0, F.div(F.neg(target["psum2"]), F.scalar(2))])
    r, r1, mu, b, c = (F.coerce(spec.param(k)) for k in ("r", "r1", "mu", "b", "c"))
    for e1, e2 in zip(*reach.nonzero()):
        e1, e2 = int(e1), int(e2)
        psum2 = F.sub(F.mul(e1, e1), F.mul(F.scalar(2), e2))
        if in_target_set(F, F.sub(F.mul(e1, e1), F.mul(r, psum2)), r, r1, mu, b, c):
            return True
    return False


def construction_sweep(q: int) -> list[ConstructionRow]:
    F = gf(q)
    rows = []
    for tag, t, params in construction_params(F):
        spec = ConstructionSpec(tag, F, t, params)
        try:
            build_witness(spec)
            status = "ok"
        except NoWitness:
            status = "no_witness"
        except (OutOfRange, AssertionError) as exc:
            status = f"invalid: {exc}"
        label = ",".join(f"{k}={v}" for k, v in params.items())
        rows.append(ConstructionRow(q, tag, t, label, status, dp_realises(spec)))
    return rows


__all__ = ["SweepConfig", "VerifyRow", "ConstructionRow", "run_sweep", "write_tsv",
           "construction_sweep", "construction_params", "dp_realises", "TOP", "PROP8"]
