"""Command-line interface: gen, rank, z-list, verify-lemma, game, facts.

Exit codes: 0 success/pass, 1 verification fail, 2 input error, 3 resource
limit.  Identical arguments (including seeds) produce identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from matroid_forge import __version__
from matroid_forge.adversary import (
    answer_queries,
    honest_oracle,
    indistinguishable_alternative,
    random_queries,
    read_transcript,
)
from matroid_forge.bias import load_biased_graph
from matroid_forge.bitset import parse_mask
from matroid_forge.errors import InputError, ResourceLimitError
from matroid_forge.family import build_crossed_prism, iter_covering_pairs
from matroid_forge.graph import graph_to_json
from matroid_forge.matroid import FrameOracle, LiftOracle, enumerate_facts
from matroid_forge.surgery import relax, tighten
from matroid_forge.verify import LEMMA_CHECKS

MODELS = ("lm", "fm", "lm-relaxed", "fm-tightened")


def _config_echo(args: argparse.Namespace) -> dict:
    skip = {"func"}
    return {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in skip and value is not None
    }


def _payload(args: argparse.Namespace, body: dict) -> dict:
    return {"tool": "matroid-forge", "version": __version__, "config": _config_echo(args), **body}


def _write(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit(args: argparse.Namespace, body: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        _write(args, json.dumps(_payload(args, body), indent=2))
    else:
        _write(args, "\n".join(text_lines))


def _parse_subset(graph, spec: str) -> int:
    spec = spec.strip()
    if spec in ("", "-", "empty"):
        return 0
    if spec.startswith("0x") or spec.startswith("0X"):
        mask = parse_mask(spec)
        graph.check_mask(mask)
        return mask
    return graph.mask_of(name.strip() for name in spec.split(","))


def _build_model(args: argparse.Namespace):
    bg = load_biased_graph(args.graph, getattr(args, "bias", None))
    base = LiftOracle(bg) if args.model.startswith("lm") else FrameOracle(bg)
    if args.model in ("lm", "fm"):
        return bg, base
    if args.site is None:
        raise InputError(f"model {args.model!r} requires --site")
    site = _parse_subset(bg.graph, args.site)
    if args.model == "lm-relaxed":
        return bg, relax(base, site)
    return bg, tighten(base, site)


def _cmd_gen(args: argparse.Namespace) -> int:
    fam = build_crossed_prism(args.n)
    _write(args, json.dumps(graph_to_json(fam.graph), indent=2))
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    bg, oracle = _build_model(args)
    mask = _parse_subset(bg.graph, args.subset)
    rank = oracle.rank(mask)
    _emit(args, {"rank": rank, "subset": bg.graph.names_of(mask)}, [str(rank)])
    return 0


def _cmd_zlist(args: argparse.Namespace) -> int:
    fam = build_crossed_prism(args.n)
    entries = []
    lines = []
    for pair in iter_covering_pairs(fam):
        names = fam.graph.names_of(pair.z)
        selection = list(pair.selection.indices)
        entries.append(
            {
                "selection": selection,
                "z": names,
                "cycles": [
                    fam.graph.names_of(pair.cycle_a),
                    fam.graph.names_of(pair.cycle_b),
                ],
            }
        )
        sel_text = "{" + ",".join(map(str, selection)) + "}"
        lines.append(f"S={sel_text} z={','.join(names)}")
    _emit(args, {"count": len(entries), "family": entries}, lines)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = LEMMA_CHECKS[args.id](args.n)
    doc = report.to_json()
    lines = [
        f"lemma {report.lemma} n={report.n}: {'PASS' if report.passed else 'FAIL'} "
        f"({report.elapsed_s:.2f}s)"
    ]
    for key, value in report.details.items():
        lines.append(f"  {key}: {value}")
    lines.extend(f"  witness: {w}" for w in report.witnesses)
    _emit(args, doc, lines)
    return 0 if report.passed else 1


def _cmd_game(args: argparse.Namespace) -> int:
    fam = build_crossed_prism(args.n)
    if args.transcript:
        entries = read_transcript(args.transcript)
        queries = [mask for mask, _ in entries]
        for mask in queries:
            fam.graph.check_mask(mask)
        oracle = honest_oracle(fam, args.kind)
        for mask, answer in entries:
            if answer is not None and answer != oracle.rank(mask):
                raise InputError(
                    f"transcript answer {answer} for {hex(mask)} is not the honest rank"
                )
    else:
        queries = random_queries(fam.graph.m, args.random, args.seed)
    outcome = indistinguishable_alternative(fam, args.kind, queries)
    doc = outcome.to_json(fam)
    agree = sum(outcome.agreement)
    lines = [
        f"site S={{{','.join(map(str, outcome.site.selection.indices))}}} "
        f"z={','.join(fam.graph.names_of(outcome.site.z))}",
        f"alternative: {outcome.alternative.kind}",
        f"agreement {agree}/{len(outcome.agreement)}: "
        f"{'PASS' if outcome.all_agree else 'FAIL'}",
    ]
    _emit(args, doc, lines)
    return 0 if outcome.all_agree else 1


def _cmd_facts(args: argparse.Namespace) -> int:
    bg, oracle = _build_model(args)
    sets = enumerate_facts(oracle, args.kind)
    named = [bg.graph.names_of(mask) for mask in sets]
    lines = [",".join(names) if names else "(empty set)" for names in named]
    _emit(args, {"kind": args.kind, "count": len(named), "sets": named}, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument("-o", "--output", help="write output to a file")

    parser = argparse.ArgumentParser(
        prog="matroid-forge",
        description="Lift/frame matroid oracles, basis surgeries, and the "
        "rank-query distinguishing game over the crossed-prism family.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit the crossed prism as graph JSON")
    p.add_argument("n", type=int, help="ring size (even, >= 4)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("rank", parents=[common], help="rank of one subset under a model")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--bias", help="optional JSON file carrying 'balanced' cycles")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--site", help="surgery site (edge names or hex) for surgered models")
    p.add_argument("--subset", required=True, help="edge names, hex mask, or 'empty'")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("z-list", parents=[common], help="list the covering-pair family")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_zlist)

    p = sub.add_parser("verify-lemma", parents=[common], help="run one structural check")
    p.add_argument("id", choices=sorted(LEMMA_CHECKS))
    p.add_argument("-n", type=int, default=4, help="ring size (default 4)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("game", parents=[common], help="play the distinguishing game")
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--kind", choices=("frame", "lift"), required=True)
    p.add_argument("--transcript", help="query-log file (hex mask per line)")
    p.add_argument("--random", type=int, help="draw this many random queries instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_game)

    p = sub.add_parser("facts", parents=[common], help="dump circuits/hyperplanes/...")
    p.add_argument("--graph", required=True)
    p.add_argument("--bias")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--site")
    p.add_argument(
        "--kind", choices=("circuits", "hyperplanes", "cocircuits", "bases"), required=True
    )
    p.set_defaults(func=_cmd_facts)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.func is _cmd_game and bool(args.transcript) == (args.random is not None):
        parser.error("game needs exactly one of --transcript or --random")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
