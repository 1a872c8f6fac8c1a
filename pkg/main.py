#!/usr/bin/env python3
"""
RainbowHunter - rainbow 4-cycle detection, bipartization, extremal
constructions, theorem checks and counterexample hunts from the command line.
"""
import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from bipartize.erdos import erdos_bipartize
from bipartize.lemma7 import lemma7_bipartize
from bipartize.partition import initial_split
from config.config import (
    CONJECTURE10_PART_RANGE,
    DEFAULT_SEED,
    DIGRAPH_MODELS,
    GENERATOR_MODELS,
    PROBLEM9_ORDER_RANGE,
)
from config.settings import OUTPUT_FORMATS, RUNTIME
from core.ecg_format import read_graph, serialize
from core.errors import HunterError, InputError
from hunt.conjecture10 import conjecture10_check, conjecture10_hunt, sample_threshold_digraph
from hunt.digraph import brute_force_directed_c4, read_digraph, serialize_dcg
from hunt.problem9 import problem9_hunt
from projective.incidence import rainbow_incidence_graph
from projective.plane import build_plane
from rainbow.detector import find_rainbow_c3, find_rainbow_c4
from utils.generators import generate
from utils.progress import display_progress, set_verbose
from verify.case1 import case1_exhaustive
from verify.case2 import trace_theorem6
from verify.theorems import check_theorem, confirm_violation, theorem_id

@dataclass
class RunConfig:
    """One fully parsed invocation."""

    command: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    n: Optional[int] = None
    p: Optional[float] = None
    budget: int = 1000
    theorem: str = "6"
    cycle_length: int = 4
    method: str = "lemma7"
    init: str = "parity"
    hunt: str = "problem9"
    order_range: Optional[Tuple[int, int]] = None
    model: str = "uniform"
    b_size: Optional[int] = None
    prune: bool = True
    trace: bool = False
    output_format: str = "text"
    workers: int = 1


def build_parser():
    # --format is also accepted after the subcommand
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="rainbow-hunter", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=RUNTIME["format"])
    parser.add_argument("--verbose", action="store_true", default=RUNTIME["verbose"],
                        help="Print timestamped progress on stderr")
    parser.add_argument("--workers", type=int, default=RUNTIME["workers"],
                        help="Thread pool size for hunts")
    sub = parser.add_subparsers(dest="command", required=True)

    detect = sub.add_parser("detect", parents=[output], help="Find a rainbow C3 or C4 in an .ecg file")
    detect.add_argument("input_path")
    length = detect.add_mutually_exclusive_group()
    length.add_argument("--c3", dest="cycle_length", action="store_const", const=3)
    length.add_argument("--c4", dest="cycle_length", action="store_const", const=4)
    detect.set_defaults(cycle_length=4)

    bip = sub.add_parser("bipartize", parents=[output], help="Spanning bipartite subgraph by local search")
    bip.add_argument("input_path")
    bip.add_argument("--method", choices=("lemma7", "erdos"), default="lemma7")
    bip.add_argument("--init", choices=("parity", "random"), default="parity")
    bip.add_argument("--seed", type=int, default=DEFAULT_SEED)

    plane = sub.add_parser("plane", parents=[output], help="Rainbow-colored incidence graph of the plane of prime order p")
    plane.add_argument("--p", type=int, required=True)
    plane.add_argument("--out", dest="output_path")

    verify = sub.add_parser("verify", parents=[output], help="Check a theorem (1-6) on .ecg or conjecture C10 on .dcg")
    verify.add_argument("input_path")
    verify.add_argument("--theorem", required=True)
    verify.add_argument("--trace", action="store_true", help="Also follow the proof route of theorem 6")

    case1 = sub.add_parser("case1", parents=[output], help="Enumerate proper colorings of K_n")
    case1.add_argument("--n", type=int, required=True)
    case1.add_argument("--no-prune", dest="prune", action="store_false")

    hunt = sub.add_parser("hunt", parents=[output], help="Seeded counterexample hunt")
    hunt.add_argument("hunt", choices=("problem9", "conjecture10"))
    hunt.add_argument("--budget", type=int, default=1000)
    hunt.add_argument("--seed", type=int, default=DEFAULT_SEED)
    hunt.add_argument("--min", dest="range_min", type=int)
    hunt.add_argument("--max", dest="range_max", type=int)

    gen = sub.add_parser("gen", parents=[output], help="Write a random instance")
    gen.add_argument("--model", choices=GENERATOR_MODELS + DIGRAPH_MODELS, default="uniform")
    gen.add_argument("--n", type=int, required=True, help="Order (|A| for threshold-digraph)")
    gen.add_argument("--b", dest="b_size", type=int, help="|B| for threshold-digraph, defaults to --n")
    gen.add_argument("--seed", type=int, default=DEFAULT_SEED)
    gen.add_argument("--p", type=float)
    gen.add_argument("--out", dest="output_path")
    return parser


def config_from_args(args) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    config = RunConfig(**values)
    if args.command == "hunt":
        default = PROBLEM9_ORDER_RANGE if args.hunt == "problem9" else CONJECTURE10_PART_RANGE
        low = args.range_min if args.range_min is not None else default[0]
        high = args.range_max if args.range_max is not None else default[1]
        config.order_range = (low, high)
    return config


def validate_paths(config: RunConfig) -> None:
    """Fail before any work when an input is missing or an output directory does not exist."""
    if config.input_path is not None and not os.path.isfile(config.input_path):
        raise FileNotFoundError(f"input file not found: {config.input_path}")
    if config.output_path is not None:
        directory = os.path.dirname(os.path.abspath(config.output_path))
        if not os.path.isdir(directory):
            raise FileNotFoundError(f"output directory does not exist: {directory}")


def _emit_instance(text: str, config: RunConfig) -> str:
    if config.output_path is None:
        return text
    with open(config.output_path, "w", encoding="utf-8") as handle:
        handle.write(text)
    display_progress(f"Wrote {config.output_path}")
    return f"wrote {config.output_path}\n"


def _render(payload, text: str, config: RunConfig) -> str:
    if config.output_format == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return text


def run_detect(config: RunConfig) -> str:
    graph = read_graph(config.input_path)
    finder = find_rainbow_c3 if config.cycle_length == 3 else find_rainbow_c4
    witness = finder(graph)
    text = f"{witness}\n" if witness is not None else "NONE\n"
    return _render({"witness": witness.to_dict() if witness else None}, text, config)


def run_bipartize(config: RunConfig) -> str:
    graph = read_graph(config.input_path)
    rng = random.Random(config.seed) if config.init == "random" else None
    start = initial_split(graph, rng)
    if config.method == "erdos":
        part, trace = erdos_bipartize(graph, initial=start), None
    else:
        part, trace = lemma7_bipartize(graph, initial=start)
    part = part.normalized()
    text = f"{part}\n" + (trace.export() if trace is not None else "")
    payload = {
        "method": config.method,
        "bipartition": part.to_dict(),
        "trace": trace.to_dict() if trace is not None else None,
    }
    return _render(payload, text, config)


def run_plane(config: RunConfig) -> str:
    graph = rainbow_incidence_graph(build_plane(int(config.p)))
    return _emit_instance(serialize(graph), config)


def _with_recheck(verdict, confirmed):
    """Verdict payload and text, plus the brute-force recheck of a reported violation."""
    payload = verdict.to_dict()
    out = verdict.to_text()
    if verdict.is_violation:
        recheck = "confirmed" if confirmed() else "refuted"
        display_progress(f"Brute-force recheck of the violation: {recheck}")
        payload["recheck"] = recheck
        out += f"recheck={recheck}\n"
    return payload, out


def run_verify(config: RunConfig) -> str:
    if str(config.theorem).strip().upper() == "C10":
        digraph = read_digraph(config.input_path)
        verdict = conjecture10_check(digraph)
        payload, out = _with_recheck(verdict, lambda: brute_force_directed_c4(digraph) is None)
        return _render(payload, out, config)

    key = theorem_id(config.theorem)
    graph = read_graph(config.input_path)
    verdict = check_theorem(graph, key)
    payload, out = _with_recheck(verdict, lambda: confirm_violation(graph, verdict))
    if config.trace:
        if key != "T6":
            raise InputError("--trace is only available for theorem 6")
        route = trace_theorem6(graph)
        payload["route"] = route.to_dict()
        out += f"route={route.branch}\n"
        if route.witness is not None:
            out += f"route_witness={route.witness}\n"
    return _render(payload, out, config)


def run_case1(config: RunConfig) -> str:
    report = case1_exhaustive(config.n, prune=config.prune)
    return _render(report.to_dict(), report.to_text(), config)


def run_hunt(config: RunConfig) -> str:
    if config.workers < 1:
        raise InputError(f"workers must be at least 1, got {config.workers}")
    use_concurrent = config.workers > 1
    if config.hunt == "problem9":
        report = problem9_hunt(config.order_range, config.budget, config.seed, use_concurrent, config.workers)
    else:
        report = conjecture10_hunt(config.order_range, config.budget, config.seed, use_concurrent, config.workers)
    return report.to_json() if config.output_format == "json" else report.to_text()


def run_gen(config: RunConfig) -> str:
    rng = random.Random(config.seed)
    if config.model in DIGRAPH_MODELS:
        b_size = config.b_size if config.b_size is not None else config.n
        text = serialize_dcg(sample_threshold_digraph(config.n, b_size, rng))
    else:
        text = serialize(generate(config.model, config.n, rng, config.p))
    return _emit_instance(text, config)


HANDLERS = {
    "detect": run_detect,
    "bipartize": run_bipartize,
    "plane": run_plane,
    "verify": run_verify,
    "case1": run_case1,
    "hunt": run_hunt,
    "gen": run_gen,
}


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    """
    Execute one parsed invocation.

    Returns:
        int: 0 on success (including "no witness"), 1 on domain or I/O errors.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        validate_paths(config)
        output = HANDLERS[config.command](config)
    except (HunterError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return 1
    stdout.write(output)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments and run; argparse exits with status 2 on usage errors."""
    args = build_parser().parse_args(argv)
    set_verbose(args.verbose)
    config = config_from_args(args)
    display_progress(f"Running {config.command}")
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
