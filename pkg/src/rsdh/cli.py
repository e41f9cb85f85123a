"""rsdh command line: distance queries, verification sweeps, witness generation.

Exit codes: 0 on an Exact or UpperBound verdict (or a clean sweep), 3 on an
Unknown verdict, 1 when a sweep finds a disagreement, 2 on bad input or
parameters outside a construction's range.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from .code import RSCode
from .constructions import ConstructionSpec, LEMMAS, build_witness
from .constructions.sums import FULL, UNITS
from .distance import (
    closed_form_for_word,
    dp_distance,
    error_distance,
    max_agreement_oracle,
)
from .errors import NoWitness, RSDHError
from .parsing import parse_element, parse_elements, parse_field, parse_poly
from .poly import symmetric_profile
from .results import UNKNOWN
from .sweep import PROP8, TOP, SweepConfig, construction_sweep, run_sweep, write_tsv

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3

METHODS = {
    "auto": error_distance,
    "closed-form": closed_form_for_word,
    "dp": dp_distance,
    "oracle": max_agreement_oracle,
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _build_code(args, F) -> RSCode:
    if args.eval_set:
        return RSCode(F, tuple(parse_elements(F, args.eval_set)), args.k)
    if args.kind == "standard":
        return RSCode.standard(F, args.k)
    if args.kind == "primitive":
        return RSCode.primitive(F, args.k)
    raise RSDHError("--kind generalized needs --eval-set")


def cmd_distance(args) -> int:
    F = parse_field(args.field)
    code = _build_code(args, F)
    if (args.word is None) == (args.poly is None):
        raise RSDHError("give exactly one of --word and --poly")
    if args.word is not None:
        u = code.word(parse_elements(F, args.word))
    else:
        u = code.word_from_poly(parse_poly(F, args.poly))
    result = METHODS[args.method](code, u)
    if args.format == "tsv":
        print("\t".join(str(v) for v in (result.verdict, result.d, result.method, result.paper_case)))
    else:
        print(_dump(result.to_json()))
    return EXIT_UNKNOWN if result.verdict == UNKNOWN else EXIT_OK


def _q_list(text: str) -> tuple[int, ...]:
    return tuple(parse_field(part).q for part in text.split(","))


def cmd_verify(args) -> int:
    qs = _q_list(args.field)
    if args.family == "constructions":
        rows = [row for q in qs for row in construction_sweep(q)]
        bad = [row for row in rows if not row.agree]
        header = ("q", "lemma", "t", "params", "status", "dp_exists", "agree")
        lines = ["\t".join(str(getattr(r, h)) for h in header) for r in rows]
        digest = SweepConfig("constructions", qs).digest()
    else:
        config = SweepConfig(args.family, qs, kind=args.kind, degree=args.degree,
                             oracle_q_max=args.oracle_max, samples=args.samples,
                             seed=args.seed, literal=args.literal)
        rows = run_sweep(config, jobs=args.jobs)
        bad = [row for row in rows if not row.agree]
        header = None
        lines = None
        digest = config.digest()

    out = args.out or os.path.join("results", f"verify-{digest}.{args.format}")
    os.makedirs(os.path.dirname(out) or ".", exist_ok=True)
    if args.format == "json":
        with open(out, "w") as fh:
            json.dump([asdict(r) for r in rows], fh, sort_keys=True, indent=1)
    elif lines is not None:
        with open(out, "w") as fh:
            fh.write("\t".join(header) + "\n")
            fh.writelines(line + "\n" for line in lines)
    else:
        write_tsv(rows, out)
    print(_dump({"rows": len(rows), "disagreements": len(bad), "output": out}))
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_witness(args) -> int:
    if args.field is None and args.q is None:
        raise RSDHError("give --q or --field")
    F = parse_field(args.field if args.field is not None else str(args.q))
    tag = args.lemma.strip().lower()
    names = LEMMAS.get(tag, ((), ""))[0]
    params = {}
    for name in names:
        raw = getattr(args, name)
        if raw is None:
            continue
        params[name] = raw if name == "domain" else parse_element(F, raw)
    spec = ConstructionSpec(tag, F, args.t, params)
    try:
        elements = build_witness(spec)
    except NoWitness as exc:
        print(_dump({"lemma": spec.lemma, "q": F.q, "t": spec.size, "witness": None, "reason": str(exc)}))
        return EXIT_OK
    prof = symmetric_profile(F, elements)
    print(_dump({
        "lemma": spec.lemma,
        "q": F.q,
        "t": spec.size,
        "elements": elements,
        "profile": {"e1": prof.e1, "e2": prof.e2, "weak_e2": prof.weak_e2(F),
                    "psum1": prof.psum1, "psum2": prof.psum2},
        "target": spec.target(),
        "verified": spec.check(elements),
    }))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsdh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="error distance of one received word")
    p.add_argument("--field", required=True, help="q, p^m or p^m/mod=c0,...,cm")
    p.add_argument("--kind", choices=("standard", "primitive", "generalized"), default="standard")
    p.add_argument("--eval-set", help="comma list of evaluation points (overrides --kind)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--word", help="comma list of received symbols")
    p.add_argument("--poly", help="polynomial: comma list or expression like x^3+g*x")
    p.add_argument("--method", choices=sorted(METHODS), default="auto")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("verify", help="sweep closed form, DP and oracle against each other")
    p.add_argument("--family", choices=(TOP, PROP8, "constructions"), default=TOP)
    p.add_argument("--field", required=True, help="comma list of field orders, e.g. 4,5,7")
    p.add_argument("--kind", choices=("standard", "primitive"), default="standard")
    p.add_argument("--degree", type=int, choices=(1, 2), default=1, help="deg u - k")
    p.add_argument("--oracle-max", type=int, default=9, help="largest q checked by the oracle")
    p.add_argument("--samples", type=int, default=10, help="random words per cell (prop8)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--literal", action="store_true", help="apply every theorem clause verbatim")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", help="output path (default results/verify-<hash>.<format>)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="build and verify an explicit witness set")
    p.add_argument("--lemma", required=True, help=", ".join(LEMMAS))
    p.add_argument("--q", type=int)
    p.add_argument("--field")
    p.add_argument("--t", type=int)
    p.add_argument("--domain", choices=(FULL, UNITS))
    for name in ("b", "c", "r", "r1", "mu", "zeta"):
        p.add_argument(f"--{name}")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RSDHError, ValueError) as exc:
        print(f"rsdh: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
