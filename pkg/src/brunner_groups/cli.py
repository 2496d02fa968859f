"""Command-line front end.

Presentations are comma triples ``l,m,k``; words use the text format of
:mod:`brunner_groups.words`.  Exit status is 0 on success, 1 on domain
errors and 2 on usage errors.  A negative ``l`` must be attached with ``=``
(``--pres=-4,3,2``) so it is not mistaken for an option.
"""

from __future__ import annotations

import argparse
import json
import sys

from .brunner import (
    GPresentation,
    GroupMap,
    abelianization,
    finite_quotient_scan,
    g_equal,
    g_reduce,
    normalize_k_sign,
    relator_image,
    verify_homomorphism,
)
from .classify import (
    Condition,
    Tag,
    census,
    classify_advisory,
    is_non_hopfian,
    is_residually_finite,
    is_residually_p,
)
from .errors import DomainError
from .homsynth import synth_epi_pair, synth_iso_2_2
from .words import parse

FORMATS = ("text", "json", "csv")


def _triple(text: str) -> tuple[int, int, int]:
    try:
        l, m, k = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected l,m,k, got {text!r}") from None
    return l, m, k


def _emit(args, record: dict, text: str):
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    elif args.format == "csv":
        keys = list(record)
        print(",".join(keys))
        print(",".join("" if record[k] is None else str(record[k]) for k in keys))
    else:
        print(text)


def _canonical(triple) -> tuple[tuple[int, int, int], str | None]:
    l, m, k = triple
    if k < 0:
        target, _ = normalize_k_sign(l, m, k)
        return (l, m, -k), f"G({l},{m};{k}) replaced by {target} via a -> a^-1, t -> t"
    return triple, None


def cmd_reduce(args):
    pres = GPresentation(*args.pres)
    out = str(g_reduce(pres, parse(args.word)))
    _emit(args, {"pres": list(args.pres), "word": args.word, "reduced": out}, out)


def cmd_equal(args):
    pres = GPresentation(*args.pres)
    result = g_equal(pres, parse(args.word1), parse(args.word2))
    _emit(args, {"pres": list(args.pres), "equal": result}, str(result).lower())


def cmd_classify(args):
    t1, note1 = _canonical(args.g1)
    t2, note2 = _canonical(args.g2)
    verdict = classify_advisory(t1, t2)
    notes = [n for n in (note1, note2) if n]
    record = {"g1": list(t1), "g2": list(t2), **verdict.to_record(), "notes": notes}
    text = "\n".join([verdict.tag.value if verdict.condition is None else
                      f"{verdict.tag.value} {verdict.condition.value}",
                      f"reason: {verdict.reason}", *(f"note: {n}" for n in notes)])
    _emit(args, record, text)


def cmd_predicates(args):
    l, m, k = args.pres
    record = {
        "pres": [l, m, k],
        "residually_finite": is_residually_finite(l, m, k),
        "non_hopfian": abs(l) > m and is_non_hopfian(GPresentation(l, m, k)),
    }
    if abs(l) > m:
        record["abelianization_torsion"] = abelianization(GPresentation(l, m, k)).torsion
    if args.prime is not None:
        record[f"residually_{args.prime}"] = is_residually_p(l, m, k, args.prime)
    text = "\n".join(f"{key}: {str(v).lower() if isinstance(v, bool) else v}"
                     for key, v in record.items() if key != "pres")
    _emit(args, record, text)


def _map_record(phi: GroupMap) -> dict:
    return {**phi.to_record(), "verified": verify_homomorphism(phi)}


def cmd_synth(args):
    g1, g2 = GPresentation(*args.g1), GPresentation(*args.g2)
    verdict = classify_advisory(args.g1, args.g2)
    record = {"verdict": verdict.to_record(), "maps": [], "recipes": []}
    if verdict.condition is Condition.C2_2:
        forward, inverse = synth_iso_2_2(g1.l, g1.m, g1.k, g2.k)
        record["maps"] = [_map_record(forward), _map_record(inverse)]
        record["kind"] = "mutually inverse isomorphisms"
    elif verdict.condition is Condition.C2_3 or verdict.tag is Tag.MUTUAL_EPI_NOT_ISO:
        recipes = synth_epi_pair(g1.l, g1.m, g1.k, g2.k)
        record["recipes"] = [r.to_record() for r in recipes]
        record["maps"] = [_map_record(r.to_map()) for r in recipes]
        record["kind"] = "epimorphisms in both directions"
    elif verdict.condition is Condition.C2_1:
        ident = GroupMap(g1, g2, parse("a"), parse("t"))
        record["maps"] = [_map_record(ident)]
        record["kind"] = "identity"
    else:
        raise DomainError(f"no homomorphisms to synthesize: {verdict}")
    lines = [str(verdict), record["kind"] + ":"]
    for rec in record["maps"]:
        lines.append(f"  G{tuple(rec['source'])} -> G{tuple(rec['target'])}: "
                     f"a -> {rec['image_a']}, t -> {rec['image_t']}  verified={rec['verified']}")
    _emit(args, record, "\n".join(lines))


def cmd_verify(args):
    if args.map is not None:
        stream = sys.stdin if args.map == "-" else open(args.map)
        with stream:
            phi = GroupMap.from_record(json.load(stream))
    else:
        if None in (args.source, args.target, args.image_a, args.image_t):
            raise DomainError("give --map or all of --source --target --image-a --image-t")
        phi = GroupMap(GPresentation(*args.source), GPresentation(*args.target),
                       parse(args.image_a), parse(args.image_t))
    image = relator_image(phi)
    ok = not image
    record = {**phi.to_record(), "verified": ok, "relator_image": str(image)}
    text = str(ok).lower() if ok else f"false\nreduced relator image: {image}"
    _emit(args, record, text)


def cmd_census(args):
    result = census(args.l_max, args.k_max)
    if args.format == "csv":
        sys.stdout.write(result.to_csv())
    elif args.format == "json":
        sys.stdout.write(result.to_jsonl())
    else:
        lines = [f"{r.l},{r.m},{r.k1},{r.k2}: {r.verdict}" for r in result.rows]
        for name, rows in result.orderings().items():
            lines.append(f"MutualEpiNotIso ordered by {name}:")
            lines += [f"  {r.l},{r.m},{r.k1},{r.k2}" for r in rows]
        print("\n".join(lines))


def cmd_quotient_scan(args):
    report = finite_quotient_scan(GPresentation(*args.pres), args.degree)
    _emit(args, report.to_record(), str(report))


def cmd_normalize(args):
    target, witness = normalize_k_sign(*args.pres)
    back = GroupMap(witness.target, witness.source, witness.image_a, witness.image_t)
    record = {
        "canonical": [target.l, target.m, target.k],
        "witness": _map_record(witness),
        "inverse": _map_record(back),
    }
    text = (f"{target}\nwitness: a -> {witness.image_a}, t -> {witness.image_t} "
            f"(verified both ways: {record['witness']['verified'] and record['inverse']['verified']})")
    _emit(args, record, text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")

    parser = argparse.ArgumentParser(prog="brunner", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="t-reduce a word")
    p.add_argument("--pres", type=_triple, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("equal", parents=[common], help="decide equality of two words")
    p.add_argument("--pres", type=_triple, required=True)
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    for name, func, helptext in (
        ("classify", cmd_classify, "classify a pair of groups"),
        ("synth", cmd_synth, "build and verify homomorphisms between two groups"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--g1", type=_triple, required=True)
        p.add_argument("--g2", type=_triple, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("predicates", parents=[common], help="residual and Hopf properties")
    p.add_argument("--pres", type=_triple, required=True)
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_predicates)

    p = sub.add_parser("verify", parents=[common], help="check a map is a homomorphism")
    p.add_argument("--map", help="JSON file with source, target, image_a, image_t ('-' for stdin)")
    p.add_argument("--source", type=_triple)
    p.add_argument("--target", type=_triple)
    p.add_argument("--image-a")
    p.add_argument("--image-t")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="classify all pairs in a box")
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("quotient-scan", parents=[common], help="enumerate maps onto S_n")
    p.add_argument("--pres", type=_triple, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_quotient_scan)

    p = sub.add_parser("normalize", parents=[common], help="make k positive")
    p.add_argument("--pres", type=_triple, required=True)
    p.set_defaults(func=cmd_normalize)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (DomainError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
