"""Experiment harness: config parsing, seeded campaigns, statistics, export.

A campaign is the cross product of the configured algorithms and problems,
each pair run ``runs_per_pair`` times. Every run's seed is derived from the
base seed and the pair identity (never from execution order), so campaigns
are reproducible run-for-run, results can be gathered from parallel workers
deterministically, and reordering the config changes nothing.

Config files are TOML. The full grammar (all keys optional except the
algorithm/problem names):

    runs_per_pair = 30          # seeded runs per (algorithm, problem) pair
    base_seed = 0
    output_dir = "results"

    [budget]                    # at least one bound; checked between iterations
    max_iterations = 1000
    max_evaluations = 50000

    [[algorithms]]              # one table per algorithm
    name = "pso"                # pso | abc | bat | firefly | cuckoo | aco
    alpha = 1.0                 # remaining keys override that algorithm's config

    [[problems]]                # one table per problem
    name = "sphere"             # benchmark name, or "tsp"
    dimension = 10              # benchmarks only (default 2)
    # file = "instance.tsp"     # tsp only; path relative to the config file

Unknown keys anywhere are rejected. ``aco`` pairs only with tsp problems and
the continuous algorithms only with benchmarks, so a single campaign is
either continuous or TSP.
"""

from __future__ import annotations

import csv
import hashlib
import json
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - exercised only on 3.10
    import tomli as tomllib

from . import benchmarks
from .aco import AcoConfig, TspInstance, aco_run, load_tsp_file
from .classical import newton_root
from .core import ConfigurationError, Problem, RunResult
from .swarm import ALGORITHMS, Budget, run

SUMMARY_HEADER = "algorithm,problem,runs,best,worst,mean,median,std,mean_evals,mean_wall_time_s"

RANKING_FOOTER = (
    "Note: this ranking is a zero-sum comparison on the benchmark set above and is\n"
    "valid only for that set of benchmarks; other problem sets can rank the\n"
    "algorithms differently (no-free-lunch)."
)

_CONTINUOUS = tuple(ALGORITHMS)
ALGORITHM_NAMES = _CONTINUOUS + ("aco",)


@dataclass(frozen=True)
class ProblemRef:
    """Picklable reference to a problem, resolvable inside worker processes."""

    kind: str  # "benchmark" | "tsp"
    name: str
    dimension: int = 0
    instance: Optional[TspInstance] = None

    @property
    def label(self) -> str:
        if self.kind == "benchmark":
            return f"{self.name}-d{self.dimension}"
        return f"tsp-{self.name}"

    def resolve(self) -> Problem | TspInstance:
        if self.kind == "benchmark":
            return benchmarks.lookup(self.name, self.dimension)
        return self.instance


@dataclass(frozen=True)
class AlgorithmEntry:
    name: str
    config: object


@dataclass(frozen=True)
class ExperimentConfig:
    algorithms: tuple[AlgorithmEntry, ...]
    problems: tuple[ProblemRef, ...]
    runs_per_pair: int = 30
    base_seed: int = 0
    budget: Budget = Budget(max_iterations=1000)
    output_dir: str = "results"


@dataclass(frozen=True)
class SummaryRow:
    """Aggregate of the final best fitness over one pair's runs."""

    algorithm: str
    problem: str
    runs: int
    best: float
    worst: float
    mean: float
    median: float
    std: float
    mean_evals: float
    mean_wall_time_s: float


@dataclass(frozen=True)
class RunRecord:
    algorithm: str
    problem: str
    run_index: int
    seed: int
    result: Optional[RunResult] = None
    error: Optional[str] = None


def run_seed(base_seed: int, algorithm: str, problem: str, run_index: int) -> int:
    """Order-independent 64-bit run seed.

    First 8 bytes (big-endian) of sha256("<base>|<algorithm>|<problem>|<index>"),
    so a run's seed depends only on the pair identity and run index.
    """
    digest = hashlib.sha256(
        f"{base_seed}|{algorithm}|{problem}|{run_index}".encode()
    ).digest()
    return int.from_bytes(digest[:8], "big")


def _reject_unknown(table: dict, allowed: set[str], context: str) -> None:
    unknown = set(table) - allowed
    if unknown:
        raise ConfigurationError(f"unknown key(s) {sorted(unknown)} in {context}")


def _build_algorithm(table: dict) -> AlgorithmEntry:
    if "name" not in table:
        raise ConfigurationError("each [[algorithms]] table needs a 'name'")
    name = table["name"]
    if name not in ALGORITHM_NAMES:
        raise ConfigurationError(
            f"unknown algorithm {name!r}; available: {', '.join(ALGORITHM_NAMES)}"
        )
    overrides = {key: value for key, value in table.items() if key != "name"}
    config_cls = AcoConfig if name == "aco" else ALGORITHMS[name].config_cls
    try:
        config = config_cls(**overrides)
    except TypeError:
        valid = [f for f in config_cls.__dataclass_fields__]
        raise ConfigurationError(
            f"invalid parameter for algorithm {name!r}; valid keys: {', '.join(valid)}"
        ) from None
    return AlgorithmEntry(name=name, config=config)


def _build_problem(table: dict, config_dir: Path) -> ProblemRef:
    if "name" not in table:
        raise ConfigurationError("each [[problems]] table needs a 'name'")
    name = table["name"]
    if name == "tsp":
        _reject_unknown(table, {"name", "file"}, "problem 'tsp'")
        if "file" not in table:
            raise ConfigurationError("tsp problem needs a 'file' key")
        path = Path(table["file"])
        if not path.is_absolute():
            path = config_dir / path
        instance = load_tsp_file(path)
        return ProblemRef(kind="tsp", name=instance.name, instance=instance)
    _reject_unknown(table, {"name", "dimension"}, f"problem {name!r}")
    dimension = table.get("dimension", 2)
    if not isinstance(dimension, int) or dimension < 1:
        raise ConfigurationError(f"problem {name!r}: dimension must be a positive integer")
    benchmarks.get_spec(name, dimension)  # validates the name and dimension now
    return ProblemRef(kind="benchmark", name=name, dimension=dimension)


def load_config(path: str | Path) -> ExperimentConfig:
    """Parse and fully validate an experiment config file.

    Applies defaults (30 runs per pair, 1000-iteration budget), rejects
    unknown keys, resolves every algorithm and problem name, and checks that
    every (algorithm, problem) pair is runnable.
    """
    path = Path(path)
    try:
        raw = tomllib.loads(path.read_text())
    except FileNotFoundError:
        raise ConfigurationError(f"config file not found: {path}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f"{path}: parse error: {exc}") from None

    _reject_unknown(
        raw,
        {"runs_per_pair", "base_seed", "output_dir", "budget", "algorithms", "problems"},
        "top level",
    )
    runs_per_pair = raw.get("runs_per_pair", 30)
    if not isinstance(runs_per_pair, int) or runs_per_pair < 1:
        raise ConfigurationError("runs_per_pair must be a positive integer")
    base_seed = raw.get("base_seed", 0)
    if not isinstance(base_seed, int):
        raise ConfigurationError("base_seed must be an integer")

    budget_table = raw.get("budget", {"max_iterations": 1000})
    _reject_unknown(budget_table, {"max_iterations", "max_evaluations"}, "[budget]")
    budget = Budget(
        max_iterations=budget_table.get("max_iterations"),
        max_evaluations=budget_table.get("max_evaluations"),
    )

    algorithm_tables = raw.get("algorithms", [])
    problem_tables = raw.get("problems", [])
    if not algorithm_tables:
        raise ConfigurationError("config needs at least one [[algorithms]] table")
    if not problem_tables:
        raise ConfigurationError("config needs at least one [[problems]] table")
    algorithms = tuple(_build_algorithm(table) for table in algorithm_tables)
    problems = tuple(_build_problem(table, path.parent) for table in problem_tables)

    names = [entry.name for entry in algorithms]
    if len(set(names)) != len(names):
        raise ConfigurationError("duplicate algorithm names would collide in outputs")
    labels = [ref.label for ref in problems]
    if len(set(labels)) != len(labels):
        raise ConfigurationError("duplicate problem entries would collide in outputs")

    for entry in algorithms:
        for ref in problems:
            wants = "tsp" if entry.name == "aco" else "benchmark"
            if ref.kind != wants:
                raise ConfigurationError(
                    f"algorithm {entry.name!r} cannot run problem {ref.label!r}"
                )

    return ExperimentConfig(
        algorithms=algorithms,
        problems=problems,
        runs_per_pair=runs_per_pair,
        base_seed=base_seed,
        budget=budget,
        output_dir=raw.get("output_dir", "results"),
    )


@dataclass(frozen=True)
class _Task:
    algorithm: str
    config: object
    problem: ProblemRef
    budget: Budget
    run_index: int
    seed: int


def _execute_task(task: _Task) -> RunRecord:
    try:
        target = task.problem.resolve()
        if task.algorithm == "aco":
            result = aco_run(
                target,
                task.config,
                task.seed,
                max_iterations=task.budget.max_iterations,
                max_evaluations=task.budget.max_evaluations,
            )
        else:
            result = run(ALGORITHMS[task.algorithm], task.config, target, task.budget, task.seed)
        return RunRecord(
            algorithm=task.algorithm,
            problem=task.problem.label,
            run_index=task.run_index,
            seed=task.seed,
            result=result,
        )
    except Exception as exc:  # noqa: BLE001 - a failed run must not sink the campaign
        return RunRecord(
            algorithm=task.algorithm,
            problem=task.problem.label,
            run_index=task.run_index,
            seed=task.seed,
            error=f"{type(exc).__name__}: {exc}",
        )


def execute_campaign(config: ExperimentConfig, jobs: int = 1) -> list[RunRecord]:
    """Run every (algorithm, problem, run_index) task.

    With ``jobs`` > 1 the tasks go to a process pool; records are always
    assembled in task order (pair by pair, run index ascending), never in
    completion order.
    """
    tasks = [
        _Task(
            algorithm=entry.name,
            config=entry.config,
            problem=ref,
            budget=config.budget,
            run_index=run_index,
            seed=run_seed(config.base_seed, entry.name, ref.label, run_index),
        )
        for entry in config.algorithms
        for ref in config.problems
        for run_index in range(config.runs_per_pair)
    ]
    if jobs <= 1:
        return [_execute_task(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_execute_task, tasks))


def summarize(config: ExperimentConfig, records: Sequence[RunRecord]) -> list[SummaryRow]:
    """One row per configured pair, aggregating the runs that succeeded.

    ``std`` is the population standard deviation, so a single run reports 0.
    """
    by_pair: dict[tuple[str, str], list[RunRecord]] = {}
    for record in records:
        by_pair.setdefault((record.algorithm, record.problem), []).append(record)
    rows = []
    for entry in config.algorithms:
        for ref in config.problems:
            pair_records = by_pair.get((entry.name, ref.label), [])
            finals = [r.result.best_fitness for r in pair_records if r.result is not None]
            if not finals:
                continue
            rows.append(
                SummaryRow(
                    algorithm=entry.name,
                    problem=ref.label,
                    runs=len(finals),
                    best=min(finals),
                    worst=max(finals),
                    mean=statistics.fmean(finals),
                    median=statistics.median(finals),
                    std=float(np.std(finals)),
                    mean_evals=statistics.fmean(
                        r.result.evaluations for r in pair_records if r.result is not None
                    ),
                    mean_wall_time_s=statistics.fmean(
                        r.result.wall_time for r in pair_records if r.result is not None
                    ),
                )
            )
    return rows


def _fmt(value: float) -> str:
    return format(value, ".17g")


def trace_filename(record: RunRecord) -> str:
    return f"{record.algorithm}_{record.problem}_{record.run_index}.csv"


def export(
    records: Sequence[RunRecord],
    rows: Sequence[SummaryRow],
    output_dir: str | Path,
    formats: Sequence[str] = ("csv", "json"),
) -> list[Path]:
    """Write summary.{csv,json}, per-run trace files, and ranking.txt.

    CSV floats carry 17 significant digits; the JSON writer uses Python's
    shortest round-trip float form, so parsing either reproduces the numbers
    exactly. Trace files have one (iteration, best_fitness) row per executed
    iteration, iteration numbering starting at 1.
    """
    for fmt in formats:
        if fmt not in ("csv", "json"):
            raise ConfigurationError(f"unknown export format {fmt!r}")
    output_dir = Path(output_dir)
    traces_dir = output_dir / "traces"
    traces_dir.mkdir(parents=True, exist_ok=True)
    written = []

    if "csv" in formats:
        summary_csv = output_dir / "summary.csv"
        with summary_csv.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(SUMMARY_HEADER.split(","))
            for row in rows:
                writer.writerow(
                    [
                        row.algorithm,
                        row.problem,
                        row.runs,
                        _fmt(row.best),
                        _fmt(row.worst),
                        _fmt(row.mean),
                        _fmt(row.median),
                        _fmt(row.std),
                        _fmt(row.mean_evals),
                        _fmt(row.mean_wall_time_s),
                    ]
                )
        written.append(summary_csv)

    if "json" in formats:
        summary_json = output_dir / "summary.json"
        payload = {
            "summary": [asdict(row) for row in rows],
            "failures": [
                {
                    "algorithm": r.algorithm,
                    "problem": r.problem,
                    "run_index": r.run_index,
                    "seed": r.seed,
                    "error": r.error,
                }
                for r in records
                if r.error is not None
            ],
        }
        summary_json.write_text(json.dumps(payload, indent=2) + "\n")
        written.append(summary_json)

    for record in records:
        if record.result is None:
            continue
        trace_path = traces_dir / trace_filename(record)
        with trace_path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["iteration", "best_fitness"])
            for iteration, value in enumerate(record.result.trace, start=1):
                writer.writerow([iteration, _fmt(float(value))])
        written.append(trace_path)

    ranking_path = output_dir / "ranking.txt"
    ranking_path.write_text(ranking_report(rows))
    written.append(ranking_path)
    return written


def ranking_report(rows: Sequence[SummaryRow]) -> str:
    """Per-problem algorithm ranking by mean final fitness, with the scope caveat."""
    lines = []
    problems = sorted({row.problem for row in rows})
    for problem in problems:
        lines.append(f"{problem}:")
        ranked = sorted((row for row in rows if row.problem == problem), key=lambda r: r.mean)
        for rank, row in enumerate(ranked, start=1):
            lines.append(f"  {rank}. {row.algorithm}  mean={row.mean:.6g}  best={row.best:.6g}")
    lines.append("")
    lines.append(RANKING_FOOTER)
    return "\n".join(lines) + "\n"


def _check_writable(output_dir: Path) -> None:
    # Pre-flight so an unwritable destination fails before any run starts.
    output_dir.mkdir(parents=True, exist_ok=True)
    probe = output_dir / ".write_probe"
    probe.write_text("")
    probe.unlink()


def run_experiment(
    config: ExperimentConfig,
    jobs: int = 1,
    output_dir: str | Path | None = None,
) -> tuple[list[RunRecord], list[SummaryRow]]:
    """Execute the campaign and write all output files.

    Returns the per-run records and the summary rows. Rerunning the same
    config reproduces every numeric output byte for byte except wall times.
    """
    destination = Path(output_dir if output_dir is not None else config.output_dir)
    _check_writable(destination)
    records = execute_campaign(config, jobs=jobs)
    rows = summarize(config, records)
    export(records, rows, destination)
    return records, rows


def newton_demo() -> list[dict]:
    """Run the four canonical quadratic root-finding cases and print a table.

    The polynomial is p(x) = x^2 + 9x - 10 with roots 1 and -10; the starts
    10, 100, -5 land in one basin or the other, and -4.5 sits exactly where
    the derivative vanishes.
    """
    p = lambda x: x * x + 9.0 * x - 10.0  # noqa: E731
    dp = lambda x: 2.0 * x + 9.0  # noqa: E731
    cases = [10.0, 100.0, -5.0, -4.5]
    rows = []
    print(f"{'start':>8}  {'status':<20} {'iterations':>10}  {'final x':>22}  {'residual':>12}")
    for x0 in cases:
        outcome = newton_root(p, dp, x0, tol=1e-9, max_iter=100)
        rows.append(
            {
                "start": x0,
                "status": outcome.status,
                "iterations": outcome.iterations,
                "value": float(outcome.value),
                "residual": outcome.residual,
            }
        )
        print(
            f"{x0:>8.2f}  {outcome.status:<20} {outcome.iterations:>10}  "
            f"{float(outcome.value):>22.12g}  {outcome.residual:>12.3g}"
        )
    return rows
