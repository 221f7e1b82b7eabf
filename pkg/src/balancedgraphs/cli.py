"""Command-line front end.

Subcommands: check, realize, pullback, count, pairings, ssyt, mirror,
export.  Exit codes: 0 for a positive verdict, 1 for a negative one
(not balanced, not realizable, unverifiable input), 2 for malformed
input or usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import balance, enrichment, labeling, monodromy, real_combinatorics, render
from .errors import (
    BalancedGraphsError,
    NoPerfectMatching,
    ParseError,
    SizeLimitExceeded,
    UnsupportedFormat,
)
from .surface_map import alternating_coloring, deserialize, serialize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParseError(f"--a expects comma-separated integers, got {text!r}") from exc


def cmd_check(args) -> int:
    doc = deserialize(_read_input(args.input))
    coloring = doc.colors if doc.colors is not None else None
    report = balance.is_locally_balanced(doc.map, coloring, cap=args.cap_regions)
    if not report.globally_balanced:
        print(f"not globally balanced: {report.reason}")
        return EXIT_NEGATIVE
    print(f"globally balanced, d={report.d}, g={doc.map.genus()}")
    print(f"corner bound holds: {balance.corner_bound_check(doc.map)}")
    if report.locally_balanced:
        print("locally balanced")
        return EXIT_OK
    region = report.violation
    which = "flipped coloring" if report.violation_on_flipped else "coloring"
    print(f"not locally balanced ({which}): {report.reason}")
    print(f"certificate faces: {list(region.sorted_faces())}")
    return EXIT_NEGATIVE


def cmd_realize(args) -> int:
    doc = deserialize(_read_input(args.input))
    coloring = doc.colors if doc.colors is not None else alternating_coloring(doc.map)
    gb = balance.is_globally_balanced(doc.map, coloring)
    if not gb.ok:
        print(f"not globally balanced: {gb.reason}")
        return EXIT_NEGATIVE
    dg = enrichment.dot_graph(doc.map, coloring)
    try:
        matching = enrichment.perfect_matching(dg)
    except NoPerfectMatching as exc:
        faces = sorted({f for f, _ in exc.witness})
        print(f"not locally balanced; Hall witness B faces: {faces}")
        return EXIT_NEGATIVE
    enriched = enrichment.enrich(doc.map, matching)
    lab = labeling.admissible_labeling(enriched, coloring)
    constellation = monodromy.constellation_from(enriched, coloring, lab)
    passport = labeling.passport_of(enriched, lab)
    report = monodromy.verify_constellation(constellation, passport)
    if not report.ok:
        print(f"constellation failed verification: {report.failures}")
        return EXIT_NEGATIVE
    print(serialize(enriched, labels=lab.labels, coloring=coloring))
    print(monodromy.serialize_constellation(constellation))
    return EXIT_OK


def cmd_pullback(args) -> int:
    constellation = monodromy.deserialize_constellation(_read_input(args.input))
    report = monodromy.verify_constellation(constellation)
    if not report.ok:
        print(f"constellation failed verification: {'; '.join(report.failures)}")
        return EXIT_NEGATIVE
    m, coloring, lab = monodromy.pullback_from_constellation(constellation)
    print(serialize(m, labels=lab.labels, coloring=coloring))
    return EXIT_OK


def cmd_count(args) -> int:
    d = args.d
    if args.a is not None:
        weights = _parse_weights(args.a)
        t = real_combinatorics.WeightComposition(d, weights)
        print(f"a={','.join(map(str, weights))} K={real_combinatorics.kostka(t)}")
        return EXIT_OK
    print(f"d={d} catalan={real_combinatorics.catalan(d)}")
    for a in real_combinatorics.compositions(2 * d - 2, d - 1):
        if not 2 <= len(a) <= 2 * d - 2:
            continue
        t = real_combinatorics.WeightComposition(d, a)
        print(f"a={','.join(map(str, a))} K={real_combinatorics.kostka(t)}")
    return EXIT_OK


def _composition_from_args(args) -> real_combinatorics.WeightComposition:
    if args.a is None:
        raise ParseError("--a is required")
    weights = _parse_weights(args.a)
    return real_combinatorics.WeightComposition(args.d, weights)


def cmd_pairings(args) -> int:
    t = _composition_from_args(args)
    for p in real_combinatorics.enumerate_pairings(t):
        print(real_combinatorics.serialize_pairing(p))
    return EXIT_OK


def cmd_ssyt(args) -> int:
    t = _composition_from_args(args)
    for tb in real_combinatorics.enumerate_ssyt(t):
        print(real_combinatorics.serialize_tableau(tb))
    return EXIT_OK


def cmd_mirror(args) -> int:
    pairing = real_combinatorics.deserialize_pairing(_read_input(args.input))
    m, coloring, real_cycle = real_combinatorics.mirror_graph(pairing)
    print(serialize(m, coloring=coloring, real_cycle=real_cycle))
    return EXIT_OK


def cmd_export(args) -> int:
    doc = deserialize(_read_input(args.input))
    if args.format == "dot":
        sys.stdout.write(render.to_dot(doc.map))
        return EXIT_OK
    sys.stdout.write(render.to_svg(doc.map, doc.real_cycle, doc.colors))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balancedgraphs",
        description="Balance checks, covering realization, and pairing counts for cell graphs.",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized helpers")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", default="-", help="input document path, - for stdin")
        return p

    p = with_input(sub.add_parser("check", help="balance verdict for a map document"))
    p.add_argument("--cap-regions", type=int, default=balance.DEFAULT_REGION_CAP)
    p.set_defaults(func=cmd_check)

    p = with_input(sub.add_parser("realize", help="enrich, label and extract monodromy"))
    p.set_defaults(func=cmd_realize)

    p = with_input(sub.add_parser("pullback", help="map document from a constellation"))
    p.set_defaults(func=cmd_pullback)

    p = sub.add_parser("count", help="pairing counts per weight composition")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", help="comma-separated weights; omit to list all")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("pairings", help="enumerate non-crossing pairings")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", required=True)
    p.set_defaults(func=cmd_pairings)

    p = sub.add_parser("ssyt", help="enumerate two-row tableaux")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", required=True)
    p.set_defaults(func=cmd_ssyt)

    p = with_input(sub.add_parser("mirror", help="mirror graph of a pairing document"))
    p.set_defaults(func=cmd_mirror)

    p = with_input(sub.add_parser("export", help="render a map document"))
    p.add_argument("--format", choices=("dot", "svg"), default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (UnsupportedFormat, SizeLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BalancedGraphsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
