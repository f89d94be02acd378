"""Benchmark formula families, random formulas and the measurement harness."""

from __future__ import annotations

import csv
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import pytz
import structlog

from .exceptions import InfeasibleSizeError, SearchTimeout, UnknownFamilyError
from .formula import BOT, TOP, And, Formula, NegVar, Or, Var, negate
from .helpers.logging_helper import log, log_and_raise_error
from .models.config_model import BenchConfig
from .parser import parse_formula
from .search import Algo, deadline_after, prove_formula

LOGGER = structlog.get_logger()

TIMEOUT_VERDICT = "TO"
REPORT_COLUMNS = ["label", "algo", "verdict", "total_rules", "elapsed_ms", "visited", "timeout", "peak_memo"]
RULE_COLUMNS = ["label", "algo", "rule", "count"]

E1 = "((~X | Y) & X) | ((X & ~Y) | ((~X & ((X | ~Y) & (X | Y))) | (~X & ((~X & Y) | (~X & ~Y)))))"
E2 = "X | ((~X & ((X | ~Y) & (X | Y))) | (~X & ((~X & Y) | (~X & ~Y))))"
E3 = "(((X | ~Y) & (X | Y)) & (~X | (X & ~Y))) | (~X | Y)"

LEAF_CONSTANT_WEIGHT = 0.05


def _phi(n: int) -> Formula:
    f: Formula = Or(Var("X0"), NegVar("X0"))
    for i in range(n):
        x, y, z = Var(f"X{i}"), Var(f"Y{i}"), Var(f"Z{i}")
        f = Or(And(And(x, y), And(x, z)), Or(Or(And(negate(x), f), negate(y)), negate(z)))
    return f


def _psi(n: int) -> Formula:
    conj: Formula = TOP
    disj: Formula = BOT
    for i in range(n):
        conj = And(conj, Var(f"X{i}"))
        disj = Or(disj, Var(f"Y{i}"))
    x, y = Var("X"), Var("Y")
    left = And(Or(x, And(y, disj)), conj)
    right = Or(And(y, Or(x, conj)), disj)
    return Or(negate(left), right)


def gen_family(name: str, n: int = 0) -> Formula:
    """A formula of a benchmark family.

    Args:
        name: e1, e2 or e3 (n is ignored), phi or psi.
        n: index in the family.

    Raises:
        UnknownFamilyError: the family is not known.
    """
    key = name.lower()
    if key == "e1":
        return parse_formula(E1)
    if key == "e2":
        return parse_formula(E2)
    if key == "e3":
        return parse_formula(E3)
    if key == "phi":
        return _phi(n)
    if key == "psi":
        return _psi(n)
    raise UnknownFamilyError(f"unknown formula family '{name}'")


def family_label(name: str, n: int) -> str:
    key = name.lower()
    return key if key in ("e1", "e2", "e3") else f"{key}{n}"


def gen_random(size: int, num_vars: int = 3, seed: int = 0) -> Formula:
    """A random formula of exactly the given size, deterministic in the seed.

    Leaves are ⊤ or ⊥ with probability 5% each and otherwise a literal over
    X0..X{num_vars-1}, positive or negated with equal chance. Inner nodes are ∧
    or ∨ with equal chance, and split the remaining size into two odd parts
    uniformly.

    Raises:
        InfeasibleSizeError: size is not a positive odd number, since every
            formula has odd size.
    """
    if size < 1 or size % 2 == 0:
        raise InfeasibleSizeError(f"no formula has size {size}")
    if num_vars < 1:
        raise InfeasibleSizeError("random formulas need at least one variable")
    rng = random.Random(seed)

    def grow(budget: int) -> Formula:
        if budget == 1:
            draw = rng.random()
            if draw < LEAF_CONSTANT_WEIGHT:
                return TOP
            if draw < 2 * LEAF_CONSTANT_WEIGHT:
                return BOT
            name = f"X{rng.randrange(num_vars)}"
            return Var(name) if rng.random() < 0.5 else NegVar(name)
        connective = And if rng.random() < 0.5 else Or
        left = 2 * rng.randrange((budget - 1) // 2) + 1
        return connective(grow(left), grow(budget - 1 - left))

    return grow(size)


def random_corpus(size: int, count: int, num_vars: int = 3, seed: int = 0) -> List[Tuple[str, Formula]]:
    """Labelled random formulas whose sizes average to ``size``.

    An even size is reached by alternating size-1 and size+1; the average is
    exact when count is even.
    """
    sizes = [size] if size % 2 else [size - 1, size + 1]
    rng = random.Random(seed)
    corpus = []
    for i in range(count):
        target = sizes[i % len(sizes)]
        corpus.append((f"rnd{size}_{i}", gen_random(target, num_vars, rng.randrange(2**32))))
    return corpus


@dataclass
class BenchRow:
    """Measurements of one (formula, algorithm) cell."""

    label: str
    algo: str
    verdict: str
    total_rules: int = 0
    elapsed_ms: float = 0.0
    visited: int = 0
    timeout: bool = False
    peak_memo: int = 0
    rules: Counter = field(default_factory=Counter)


@dataclass
class BenchReport:
    rows: List[BenchRow]
    generated_at: datetime

    def row(self, label: str, algo: Union[Algo, str]) -> BenchRow:
        algo = Algo(algo).value
        return next(r for r in self.rows if r.label == label and r.algo == algo)


def _measure(label: str, formula: Formula, algo: Algo, timeout_seconds: float, use_filter: bool) -> BenchRow:
    started = time.monotonic()
    try:
        outcome = prove_formula(formula, algo, deadline_after(timeout_seconds), use_filter)
    except SearchTimeout:
        LOGGER.info("Benchmark cell timed out", label=label, algo=algo.value, timeout=timeout_seconds)
        elapsed = time.monotonic() - started
        return BenchRow(label, algo.value, TIMEOUT_VERDICT, elapsed_ms=round(elapsed * 1000, 3), timeout=True)
    stats = outcome.stats
    return BenchRow(
        label=label,
        algo=algo.value,
        verdict=outcome.verdict.value,
        total_rules=stats.total_rules,
        elapsed_ms=round(stats.elapsed * 1000, 3),
        visited=stats.sequents_visited,
        peak_memo=stats.peak_memo,
        rules=Counter({rule.value: count for rule, count in stats.rules_applied.items()}),
    )


def run_bench(
    formulas: Sequence[Tuple[str, Formula]],
    algos: Sequence[Union[Algo, str]] = (Algo.BWF,),
    timeout_seconds: float = 60,
    use_filter: bool = True,
    timezone: str = "Europe/Amsterdam",
) -> BenchReport:
    """Run every algorithm on every formula.

    Args:
        formulas: (label, formula) pairs.
        algos: algorithms to run on each formula.
        timeout_seconds: wall-clock limit per cell; cells past it are reported as TO.
        use_filter: forward filter switch for FWF cells.
        timezone: pytz zone of the report timestamp.

    Returns:
        One row per cell, in input order.
    """
    generated_at = datetime.now(pytz.timezone(timezone))
    rows = []
    for label, formula in formulas:
        for algo in algos:
            rows.append(_measure(label, formula, Algo(algo), timeout_seconds, use_filter))
    log("Benchmark finished", cells=len(rows), generated_at=generated_at.isoformat())
    return BenchReport(rows, generated_at)


def rules_path(path: Union[str, Path]) -> Path:
    """Path of the per-rule companion file of a report."""
    path = Path(path)
    return path.with_name(f"{path.stem}.rules.csv")


def write_report(report: BenchReport, path: Union[str, Path]) -> Path:
    """Write the report CSV and its per-rule companion file.

    Returns:
        The path of the companion file.
    """
    path = Path(path)
    companion = rules_path(path)
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(REPORT_COLUMNS)
            for r in report.rows:
                writer.writerow([r.label, r.algo, r.verdict, r.total_rules, r.elapsed_ms, r.visited, r.timeout, r.peak_memo])
        with open(companion, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(RULE_COLUMNS)
            for r in report.rows:
                for rule in sorted(r.rules):
                    writer.writerow([r.label, r.algo, rule, r.rules[rule]])
    except OSError as e:
        log_and_raise_error(f"Unable to write benchmark report {path}: {e.strerror}", OSError, path=str(path))
    log("Benchmark report written", path=str(path), rules_path=str(companion))
    return companion


def corpus_from_config(config: BenchConfig) -> List[Tuple[str, Formula]]:
    """The labelled formulas a benchmark configuration asks for."""
    corpus = []
    for family in config.families:
        for n in family.n:
            corpus.append((family_label(family.name, n), gen_family(family.name, n)))
    if config.random is not None:
        r = config.random
        corpus.extend(random_corpus(r.size, r.count, r.num_vars, r.seed))
    return corpus

