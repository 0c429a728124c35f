"""Command-line entry point.

Exit codes: 0 on full success, 1 when any run in a campaign failed, 2 on a
configuration error (bad config file, unknown name, unreadable instance).
"""

from __future__ import annotations

import sys
from dataclasses import replace
from pathlib import Path

import click

from . import benchmarks, harness
from .core import ConfigurationError
from .harness import ALGORITHM_NAMES, ProblemRef, load_config


def _fail_config(exc: ConfigurationError) -> None:
    click.echo(f"config error: {exc}", err=True)
    sys.exit(2)


def _run_campaign(config, jobs: int, out: str | None) -> None:
    try:
        records, rows = harness.run_experiment(config, jobs=jobs, output_dir=out)
    except ConfigurationError as exc:
        _fail_config(exc)
    except OSError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(2)
    failures = [record for record in records if record.error is not None]
    destination = Path(out if out is not None else config.output_dir)
    click.echo(
        f"{len(records)} runs, {len(rows)} summary rows -> {destination}/summary.csv"
    )
    for failure in failures:
        click.echo(
            f"run failed: {failure.algorithm} on {failure.problem} "
            f"run {failure.run_index} (seed {failure.seed}): {failure.error}",
            err=True,
        )
    if failures:
        sys.exit(1)


@click.group()
def main() -> None:
    """Seeded optimization campaigns over swarm algorithms and benchmarks."""


@main.command(name="run")
@click.option("--config", "config_path", required=True, type=click.Path(), help="TOML experiment config.")
@click.option("--jobs", default=1, show_default=True, help="Parallel worker processes.")
@click.option("--out", default=None, type=click.Path(), help="Output directory (overrides the config).")
def run_command(config_path: str, jobs: int, out: str | None) -> None:
    """Execute the campaign described by a config file."""
    try:
        config = load_config(config_path)
    except ConfigurationError as exc:
        _fail_config(exc)
    _run_campaign(config, jobs, out)


@main.command(name="tsp")
@click.option("--file", "instance_path", required=True, type=click.Path(), help="TSP instance file (n, then 'id x y' lines).")
@click.option("--config", "config_path", required=True, type=click.Path(), help="TOML experiment config (its aco entry and run settings are used).")
@click.option("--jobs", default=1, show_default=True, help="Parallel worker processes.")
@click.option("--out", default=None, type=click.Path(), help="Output directory (overrides the config).")
def tsp_command(instance_path: str, config_path: str, jobs: int, out: str | None) -> None:
    """Run the colony optimizer on one TSP instance."""
    try:
        config = load_config(config_path)
        aco_entries = tuple(e for e in config.algorithms if e.name == "aco")
        if not aco_entries:
            raise ConfigurationError("config has no [[algorithms]] entry with name = \"aco\"")
        from .aco import load_tsp_file

        instance = load_tsp_file(instance_path)
        config = replace(
            config,
            algorithms=aco_entries,
            problems=(ProblemRef(kind="tsp", name=instance.name, instance=instance),),
        )
    except ConfigurationError as exc:
        _fail_config(exc)
    _run_campaign(config, jobs, out)


@main.command(name="newton-demo")
def newton_demo_command() -> None:
    """Print the quadratic root-finding walkthrough table."""
    harness.newton_demo()


@main.command(name="list")
def list_command() -> None:
    """List available algorithms and benchmark problems."""
    click.echo("algorithms:")
    for name in ALGORITHM_NAMES:
        click.echo(f"  {name}")
    click.echo("benchmarks:")
    for name in benchmarks.available_names():
        click.echo(f"  {name}")
    click.echo("problems of kind 'tsp' take a 'file' key pointing at an instance file")


if __name__ == "__main__":
    main()
