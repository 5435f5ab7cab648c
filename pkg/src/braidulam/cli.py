"""Batch command line front end.

Subcommands: classify, witness, verify, relations, search, epsilon.
All machine output is JSON on standard output (sorted keys, so runs with
the same flags and seed are byte-identical); ``--format text`` renders
the same data for humans.  Exit codes: 0 success, 1 not verified or
failed checks, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import oracle
from .classifier import (
    Certificate,
    classify_ma,
    classify_t3,
    verify_certificate,
    verify_system,
    witness_ma,
)
from .freegroup import enclosed_area, parse_word
from .fundamental import (
    HomClassMA,
    HomClassT3,
    Involution,
    class_from_descriptor,
    class_to_descriptor,
)
from .param_braid import Bundle, parametrized_relations_report
from .torus_braid import presentation_report

USAGE_ERROR = 2
NOT_VERIFIED = 1


class UsageError(Exception):
    pass


def _dump(doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _seed(args) -> int:
    env = os.environ.get("BRAIDULAM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"BRAIDULAM_SEED must be an integer, got {env!r}") from None
    return args.seed


def _parse_class_flag(text: str) -> HomClassMA:
    fields = {}
    try:
        for piece in text.split(","):
            key, _, value = piece.partition("=")
            fields[key.strip()] = int(value)
        return HomClassMA(fields["r"], fields["s"], fields["u"], fields["v"])
    except (KeyError, ValueError):
        raise UsageError(
            f"bad --class value {text!r}; expected r=<int>,s=<int>,u=<int>,v=<int>"
        ) from None


def _parse_matrix_flag(text: str) -> HomClassT3:
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";")]
        (r1, r3, u), (r2, r4, v) = rows
        return HomClassT3(r1, r2, r3, r4, u, v)
    except ValueError:
        raise UsageError(
            f"bad --matrix value {text!r}; expected r1,r3,u;r2,r4,v"
        ) from None


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path!r}: {exc}") from None


def _load_class(args):
    """Resolve the homomorphism class from --descriptor, --class or --matrix."""
    sources = [s for s in (args.descriptor, args.klass, args.matrix) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --descriptor, --class, --matrix")
    if args.descriptor is not None:
        try:
            cls = class_from_descriptor(_read_json(args.descriptor))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.klass is not None:
        cls = _parse_class_flag(args.klass)
    else:
        cls = _parse_matrix_flag(args.matrix)
    bundle = (args.bundle or "").lower()
    if bundle == "ma" and not isinstance(cls, HomClassMA):
        raise UsageError("--bundle ma needs an MA class descriptor")
    if bundle == "t3" and not isinstance(cls, HomClassT3):
        raise UsageError("--bundle t3 needs a T3 matrix descriptor")
    return cls


def _involution(args, cls) -> Optional[Involution]:
    if isinstance(cls, HomClassMA):
        if args.involution in (None, "tau"):
            return Involution.MA_TAU
        raise UsageError("the unipotent bundle has the single involution 'tau'")
    if args.involution is None:
        raise UsageError("--involution tau1|tau2 is required for the trivial bundle")
    try:
        return Involution(args.involution)
    except ValueError:
        raise UsageError(f"unknown involution {args.involution!r}") from None


def _render_certificate(cert: Certificate) -> None:
    doc = cert.to_json()
    print(f"bundle:     {doc['bundle']}")
    print(f"involution: {doc['involution']}")
    print(f"verdict:    {doc['verdict']}")
    evidence = doc["evidence"]
    print(f"evidence:   {evidence['type']}")
    if evidence["type"] == "witness":
        for name, text in sorted(evidence["witness"].items()):
            print(f"  {name} = {text}")
        for eq in evidence["equations"]:
            print(f"  {eq['label']}: {'ok' if eq['holds'] else 'FAILED'}")
        print(f"  diagram: {'ok' if evidence['diagram']['holds'] else 'FAILED'}")
    elif evidence["type"] == "parity-obstruction":
        print(f"  seed={evidence['seed']} samples={evidence['samples']}")
        areas = [c["area"] for c in evidence["candidates"]]
        print(f"  residual areas all odd: {all(a % 2 == 1 for a in areas)}")
        print(f"  bounded search hits: {evidence['search']['hits']}")
    else:
        for key, value in sorted(evidence["conditions"].items()):
            print(f"  {key}: {value}")


def _cmd_classify(args) -> int:
    cls = _load_class(args)
    involution = _involution(args, cls)
    if isinstance(cls, HomClassMA):
        cert = classify_ma(cls, seed=_seed(args), samples=args.samples)
    else:
        cert = classify_t3(cls, involution)
    if args.format == "text":
        _render_certificate(cert)
    else:
        _dump(cert.to_json())
    return 0


def _cmd_witness(args) -> int:
    cls = _load_class(args)
    if not isinstance(cls, HomClassMA):
        raise UsageError("witnesses exist only for the unipotent bundle")
    try:
        w = witness_ma(cls)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify_system(w, cls)
    doc = {
        "schema": "braidulam.witness/1",
        "witness": w.to_text(),
        "equations": [{"label": e.label, "holds": e.holds} for e in report.equations],
    }
    doc.update(class_to_descriptor(cls))
    if args.format == "text":
        for name, text in sorted(doc["witness"].items()):
            print(f"{name} = {text}")
        for eq in doc["equations"]:
            print(f"{eq['label']}: {'ok' if eq['holds'] else 'FAILED'}")
    else:
        _dump(doc)
    return 0 if report.ok else NOT_VERIFIED


def _cmd_verify(args) -> int:
    doc = _read_json(args.certificate)
    try:
        cert = Certificate.from_json(doc)
        ok, problems = verify_certificate(cert)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return NOT_VERIFIED
    result = {"schema": "braidulam.verification/1", "verified": ok, "problems": problems}
    if args.format == "text":
        print("verified" if ok else "NOT VERIFIED")
        for problem in problems:
            print(f"  - {problem}")
    else:
        _dump(result)
    return 0 if ok else NOT_VERIFIED


def _cmd_relations(args) -> int:
    groups = [
        ("torus braid presentations", presentation_report()),
        ("unipotent bundle conjugations", parametrized_relations_report(Bundle.MA_UNIPOTENT)),
        ("trivial bundle conjugations", parametrized_relations_report(Bundle.T3_TRIVIAL)),
    ]
    all_hold = all(check.holds for _, checks in groups for check in checks)
    if args.format == "text":
        for name, checks in groups:
            print(f"{name}:")
            for check in checks:
                print(f"  {check.label}: {'ok' if check.holds else 'FAILED'}")
        print("all relations hold" if all_hold else "RELATION FAILURES")
    else:
        _dump(
            {
                "schema": "braidulam.relations/1",
                "groups": [
                    {
                        "name": name,
                        "relations": [
                            {"label": c.label, "holds": c.holds} for c in checks
                        ],
                    }
                    for name, checks in groups
                ],
                "all_hold": all_hold,
            }
        )
    return 0 if all_hold else NOT_VERIFIED


def _cmd_search(args) -> int:
    cls = _load_class(args)
    if not isinstance(cls, HomClassMA):
        raise UsageError("the equation system search applies to the unipotent bundle")
    try:
        hits = oracle.search_system(cls, args.max_factors, args.max_exp, limit=args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = {
        "schema": "braidulam.search/1",
        "bounds": {"max_factors": args.max_factors, "max_exp": args.max_exp},
        "seed": _seed(args),
        "hits": [
            {"candidate": hit.candidate.to_json(), "witness": hit.witness.to_text()}
            for hit in hits
        ],
    }
    doc.update(class_to_descriptor(cls))
    _dump(doc)
    return 0


def _cmd_epsilon(args) -> int:
    try:
        word = parse_word(args.word)
        value = enclosed_area(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidulam",
        description="classify fiber-preserving homotopy classes over the circle "
        "and emit machine-checkable certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_class_flags(p):
        p.add_argument("--bundle", choices=["ma", "t3"], help="bundle kind sanity check")
        p.add_argument("--class", dest="klass", metavar="r=..,s=..,u=..,v=..",
                       help="inline unipotent-bundle class")
        p.add_argument("--matrix", metavar="r1,r3,u;r2,r4,v",
                       help="inline trivial-bundle class")
        p.add_argument("--descriptor", metavar="FILE",
                       help="JSON class descriptor ('-' for stdin)")

    p = sub.add_parser("classify", help="decide a class and print a certificate")
    add_class_flags(p)
    p.add_argument("--involution", choices=["tau", "tau1", "tau2"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=64,
                   help="candidate families sampled for even-degree evidence")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("witness", help="print the explicit odd-degree witness")
    add_class_flags(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="re-check a certificate")
    p.add_argument("certificate", metavar="FILE", help="certificate JSON ('-' for stdin)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("relations", help="replay every presentation relation")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_relations)

    p = sub.add_parser("search", help="exhaustive bounded search over the system")
    add_class_flags(p)
    p.add_argument("--max-factors", type=int, default=1)
    p.add_argument("--max-exp", type=int, default=1)
    p.add_argument("--limit", type=int, default=5_000_000,
                   help="refuse bounds whose cost model exceeds this many candidates")
    p.add_argument("--seed", type=int, default=0,
                   help="recorded in the output; enumeration itself is deterministic")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("epsilon", help="evaluate the area invariant of a balanced word")
    p.add_argument("word", help="word in the text grammar, e.g. 'B' or 'x y^-1 x^-1 y'")
    p.set_defaults(func=_cmd_epsilon)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
