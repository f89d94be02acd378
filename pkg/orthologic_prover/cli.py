"""Command-line front end: ``orthologic prove|check|translate|bench|refute|gen``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, List, Optional, Sequence, Tuple

import structlog
import yaml
from pydantic import ValidationError

from .bench import REPORT_COLUMNS, corpus_from_config, gen_family, gen_random, random_corpus, run_bench, write_report
from .config_loader import load_config
from .exceptions import OrthologicError, ProofCheckError
from .formula import Formula, format_formula
from .helpers.logging_helper import configure_logging
from .models.config_model import BenchConfig, FamilyConfig, RandomConfig, SearchConfig
from .models.proof_model import dump_proof, load_proof, to_document
from .ol_calculus import erase
from .ol_oracle import DEFAULT_BUDGET, OracleVerdict, prove_ol_oracle
from .olf_calculus import TranslationTag, translate_ol_to_olf, translate_olf0_to_olf
from .ortholattice import load_lattice, refute_validity
from .parser import parse_formula
from .proofs import Calculus, Proof, check, format_sequent, ol
from .search import Algo, deadline_after, prove_formula, prove_sequent
from .translation import translate_ol_to_olf0

LOGGER = structlog.get_logger()

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

DEFAULT_LATTICES = ["hexagon", "boolean2"]
CALCULI = {c.value.lower(): c for c in Calculus}


def parse_range(text: str) -> List[int]:
    """Indices from ``"5"``, ``"0..10"`` or comma-separated mixes of both."""
    indices: List[int] = []
    for part in text.split(","):
        if ".." in part:
            low, high = part.split("..", 1)
            indices.extend(range(int(low), int(high) + 1))
        else:
            indices.append(int(part))
    return indices


def _write_proof(p: Proof, path: Optional[str]) -> None:
    if path is None:
        print(json.dumps(to_document(p), ensure_ascii=False, indent=1))
    else:
        dump_proof(p, path)


def cmd_prove(args: argparse.Namespace) -> int:
    config = SearchConfig(
        algo=args.algo,
        timeout_seconds=args.timeout,
        use_filter=not args.no_filter,
        oracle_budget=args.oracle_budget,
    )
    a = parse_formula(args.formula)
    b = a if args.right is None else parse_formula(args.right)
    deadline = deadline_after(config.timeout_seconds)
    if args.right is not None:
        if config.algo != Algo.BWF.value:
            raise OrthologicError("two-formula goals are only searched with bwf")
        outcome = prove_sequent(a, b, deadline)
    else:
        outcome = prove_formula(a, Algo(config.algo), deadline, config.use_filter)
    print(outcome.verdict.value)
    if outcome.proof is not None and args.proof is not None:
        dump_proof(outcome.proof, args.proof)
    if args.cross_check:
        oracle = prove_ol_oracle(ol(a, b), config.oracle_budget)
        print(f"oracle: {oracle.verdict.value}", file=sys.stderr)
        decided = oracle.verdict is not OracleVerdict.BUDGET_EXCEEDED
        if decided and (oracle.verdict is OracleVerdict.PROVABLE) != outcome.provable:
            LOGGER.warning("Oracle disagrees with the search", formula=args.formula, oracle=oracle.verdict.value)
            return EXIT_ERROR
    return EXIT_OK if outcome.provable else EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace) -> int:
    try:
        p = load_proof(args.proof)
        conclusion = check(p)
    except ProofCheckError as e:
        print(f"invalid proof: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    print(f"{p.calculus.value}: {format_sequent(conclusion)}")
    return EXIT_OK


def _translate(p: Proof, target: Calculus) -> Proof:
    if target is p.calculus:
        return p
    if target is Calculus.OL:
        return erase(p)
    if p.calculus is not Calculus.OL:
        p = erase(p)
    if target is Calculus.OLF0:
        return translate_ol_to_olf0(p)
    return translate_ol_to_olf(p)


def cmd_translate(args: argparse.Namespace) -> int:
    p = load_proof(args.proof)
    check(p)
    target = CALCULI[args.to]
    if p.calculus is Calculus.OLF0 and target is Calculus.OLF:
        result = translate_olf0_to_olf(p)
        if result.tag is not TranslationTag.SAME:
            print(f"translated to the {result.tag.value} form", file=sys.stderr)
        translated = result.proof
    else:
        translated = _translate(p, target)
    check(translated)
    _write_proof(translated, args.output)
    LOGGER.info("Translated proof", source=p.calculus.value, target=target.value)
    return EXIT_OK


def _bench_config(args: argparse.Namespace) -> Tuple[BenchConfig, bool]:
    """The benchmark section and the forward filter switch, from a file or from flags."""
    if args.config is not None:
        config = load_config(args.config)
        return config.bench, config.search.use_filter
    families = [FamilyConfig(name=name, n=parse_range(args.n)) for name in args.family or []]
    random = None
    if args.random is not None:
        random = RandomConfig(size=args.random, count=args.count, num_vars=args.vars, seed=args.seed)
    bench = BenchConfig(
        families=families,
        random=random,
        algos=args.algo or [Algo.BWF.value],
        timeout_seconds=args.timeout,
        output=args.output,
    )
    return bench, not args.no_filter


def cmd_bench(args: argparse.Namespace) -> int:
    config, use_filter = _bench_config(args)
    report = run_bench(corpus_from_config(config), config.algos, config.timeout_seconds, use_filter, config.timezone)
    if config.output is not None:
        write_report(report, config.output)
    print(",".join(REPORT_COLUMNS))
    for r in report.rows:
        print(f"{r.label},{r.algo},{r.verdict},{r.total_rules},{r.elapsed_ms},{r.visited},{r.timeout},{r.peak_memo}")
    return EXIT_OK


def cmd_refute(args: argparse.Namespace) -> int:
    f = parse_formula(args.formula)
    for spec in args.lattice or DEFAULT_LATTICES:
        lattice = load_lattice(spec)
        valuation = refute_validity(f, lattice)
        if valuation is not None:
            assignment = ", ".join(f"{name}={value}" for name, value in valuation.items())
            print(f"countermodel in {lattice.name}: {assignment}")
            return EXIT_OK
    print("no countermodel in the given lattices")
    return EXIT_NEGATIVE


def cmd_gen(args: argparse.Namespace) -> int:
    formulas: List[Formula]
    if args.family is not None:
        formulas = [gen_family(args.family, args.n)]
    elif args.count is not None:
        formulas = [f for _, f in random_corpus(args.random, args.count, args.vars, args.seed)]
    else:
        formulas = [gen_random(args.random, args.vars, args.seed)]
    for f in formulas:
        print(format_formula(f))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthologic", description="Orthologic prover and proof kernel")
    subparsers = parser.add_subparsers(dest="command", required=True)

    s = subparsers.add_parser("prove", help="Decide whether a formula holds in every ortholattice")
    s.add_argument("formula")
    s.add_argument("--right", help="Second formula: decide the sequent |- formula, right with bwf")
    s.add_argument("--algo", choices=[a.value for a in Algo], default=Algo.BWF.value)
    s.add_argument("--proof", help="Write the proof document to this path")
    s.add_argument("--timeout", type=int, default=60, help="Seconds before giving up")
    s.add_argument("--no-filter", action="store_true", help="Disable the forward sub-formula filter")
    s.add_argument("--cross-check", action="store_true", help="Also run the bounded OL search and compare verdicts")
    s.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET, help="Expansion budget of the cross-check")
    s.set_defaults(handler=cmd_prove)

    s = subparsers.add_parser("check", help="Check a proof document")
    s.add_argument("proof")
    s.set_defaults(handler=cmd_check)

    s = subparsers.add_parser("translate", help="Translate a proof document between calculi")
    s.add_argument("proof")
    s.add_argument("--to", required=True, choices=sorted(CALCULI), type=str.lower)
    s.add_argument("--output", help="Write the translated proof here instead of stdout")
    s.set_defaults(handler=cmd_translate)

    s = subparsers.add_parser("bench", help="Run the benchmark families and random formulas")
    s.add_argument("--config", help="YAML benchmark configuration; other flags are ignored")
    s.add_argument("--family", action="append", choices=["e1", "e2", "e3", "phi", "psi"])
    s.add_argument("--n", default="0", help="Family indices, e.g. 0..10 or 0,5,10")
    s.add_argument("--random", type=int, help="Size of random formulas")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--vars", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--algo", action="append", choices=[a.value for a in Algo])
    s.add_argument("--timeout", type=int, default=60)
    s.add_argument("--output", help="CSV report path")
    s.add_argument("--no-filter", action="store_true")
    s.set_defaults(handler=cmd_bench)

    s = subparsers.add_parser("refute", help="Search finite ortholattices for a countermodel")
    s.add_argument("formula")
    s.add_argument("--lattice", action="append", help="hexagon, boolean2 or a lattice file; may repeat")
    s.set_defaults(handler=cmd_refute)

    s = subparsers.add_parser("gen", help="Print a benchmark or random formula")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", choices=["e1", "e2", "e3", "phi", "psi"])
    group.add_argument("--random", type=int, help="Size of the random formula")
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--vars", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, help="Print this many random formulas")
    s.set_defaults(handler=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand.

    Returns:
        0 on success, 1 on a negative answer, 2 on any error.
    """
    configure_logging()
    args = build_parser().parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.handler
    LOGGER.info("Running command", command=args.command)
    try:
        status = handler(args)
    except (OrthologicError, ValidationError, json.JSONDecodeError, yaml.YAMLError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        LOGGER.info("Command failed", command=args.command, error=type(e).__name__)
        return EXIT_ERROR
    LOGGER.info("Command finished", command=args.command, status=status)
    return status


if __name__ == "__main__":
    sys.exit(main())
