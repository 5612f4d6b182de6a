#!/usr/bin/env python3
"""
Command-line front end: batch reports over tree and schema files

Reports go to standard output; logs and error messages go to standard error.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""
import functools
import logging
import sys
from pathlib import Path
from typing import Callable, Iterable, List, Optional

import click
from rich.console import Console
from rich.table import Table

from ultratree.classify import (
    classify,
    classify_tree,
    find_ray_or_hub,
    format_report,
    format_witness,
    synthesize_labeling,
)
from ultratree.config import Settings, load_settings
from ultratree.core.textformat import format_number, load_tree, serialize_tree
from ultratree.core.tree import LabeledTree, hull
from ultratree.errors import UltratreeError
from ultratree.lazygen import Budget, FiniteBall, explore_ball, instantiate, load_schema
from ultratree.metric import (
    DegenerateEdge,
    ball,
    ball_partition,
    build_index,
    dist_indexed,
    dist_naive,
    packing_number,
    validate_labeling,
)

logger = logging.getLogger(__name__)

error_console = Console(stderr=True)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

existing_file = click.Path(exists=True, dir_okay=False, path_type=Path)


def _configure(config: Optional[Path], verbose: bool) -> Settings:
    try:
        settings = load_settings(config)
    except (OSError, ValueError) as e:
        raise click.UsageError(f"bad configuration: {e}") from None
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    return settings


def command(name: str, budgeted: bool = False) -> Callable:
    """Register a subcommand with the shared --config/-v options and error mapping"""

    def decorate(fn: Callable) -> Callable:
        @functools.wraps(fn)
        def run(config, verbose, budget_vertices=None, budget_depth=None, **kwargs):
            settings = _configure(config, verbose)
            if budgeted:
                kwargs["budget"] = Budget(budget_vertices or settings.budget_vertices,
                                          budget_depth or settings.budget_depth)
            try:
                fn(settings=settings, **kwargs)
            except UltratreeError as e:
                logger.debug("Domain error", exc_info=True)
                error_console.print(f"error: {e}", style="red", markup=False, highlight=False,
                                    soft_wrap=True)
                sys.exit(1)

        run = click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr")(run)
        run = click.option("--config", type=existing_file, default=None,
                           help="YAML settings file")(run)
        if budgeted:
            run = click.option("--budget-depth", type=click.IntRange(min=1), default=None,
                               help="Deepest materialized depth (default from settings)")(run)
            run = click.option("--budget-vertices", type=click.IntRange(min=1), default=None,
                               help="Most materialized vertices (default from settings)")(run)
        return main.command(name)(run)

    return decorate


def _split(values: Optional[str]) -> Optional[List[str]]:
    if values is None:
        return None
    return [v for v in (part.strip() for part in values.split(",")) if v]


def _exactly_one(file: Optional[Path], schema: Optional[Path]) -> None:
    if (file is None) == (schema is None):
        raise click.UsageError("give exactly one of --file and --schema")


def _names(vertices: Iterable[str]) -> str:
    return " ".join(vertices)


@click.group()
@click.version_option(package_name="ultratree")
def main():
    """Ultrametric spaces generated by labeled trees"""


@command("validate")
@click.option("--file", "file", type=existing_file, help="Finite tree file")
@click.option("--schema", type=existing_file, help="Schema file")
def validate(settings: Settings, file: Optional[Path], schema: Optional[Path]):
    """Check a labeling for non-degeneracy, or a schema for validity"""
    _exactly_one(file, schema)
    if schema is not None:
        s = load_schema(schema)
        click.echo(f"schema: ok ({s.name}, {len(s.types)} types)")
        return
    verdict = validate_labeling(load_tree(file))
    if isinstance(verdict, DegenerateEdge):
        click.echo(f"labeling: degenerate (edge {verdict.u} {verdict.v})")
    else:
        click.echo("labeling: non-degenerate")


@command("dist")
@click.option("--file", "file", type=existing_file, required=True)
@click.option("--from", "source", required=True, help="First vertex")
@click.option("--to", "target", required=True, help="Second vertex")
@click.option("--naive", is_flag=True, help="Scan the path instead of using the index")
def dist(settings: Settings, file: Path, source: str, target: str, naive: bool):
    """Distance d_l between two vertices"""
    t = load_tree(file)
    d = dist_naive(t, source, target) if naive else dist_indexed(build_index(t), source, target)
    click.echo(f"d = {format_number(d)}")


@command("ball")
@click.option("--file", "file", type=existing_file, required=True)
@click.option("--center", required=True)
@click.option("--radius", type=click.FloatRange(min=0), required=True)
def ball_command(settings: Settings, file: Path, center: str, radius: float):
    """Closed ball around a vertex"""
    b = ball(load_tree(file), center, radius)
    click.echo(f"ball: center {b.center} radius {format_number(b.radius)}")
    click.echo(f"members: {_names(sorted(b.members))}")


@command("hull")
@click.option("--file", "file", type=existing_file, required=True)
@click.option("--vertices", required=True, help="Comma-separated vertex ids")
def hull_command(settings: Settings, file: Path, vertices: str):
    """Smallest subtree containing the given vertices"""
    click.echo(serialize_tree(hull(load_tree(file), _split(vertices))), nl=False)


def _subset(t: LabeledTree, vertices: Optional[str]) -> List[str]:
    chosen = _split(vertices)
    return list(t.vertices) if chosen is None else chosen


@command("partition")
@click.option("--file", "file", type=existing_file, required=True)
@click.option("--epsilon", type=click.FloatRange(min=0, min_open=True), required=True)
@click.option("--vertices", default=None, help="Comma-separated subset (default: all)")
def partition(settings: Settings, file: Path, epsilon: float, vertices: Optional[str]):
    """Classes of the relation d_l <= epsilon"""
    t = load_tree(file)
    for k, cls in enumerate(ball_partition(t, _subset(t, vertices), epsilon), start=1):
        click.echo(f"class {k}: {_names(sorted(cls))}")


@command("packing")
@click.option("--file", "file", type=existing_file, required=True)
@click.option("--epsilon", type=click.FloatRange(min=0, min_open=True), required=True)
@click.option("--vertices", default=None, help="Comma-separated subset (default: all)")
def packing(settings: Settings, file: Path, epsilon: float, vertices: Optional[str]):
    """Largest number of points pairwise farther apart than epsilon"""
    t = load_tree(file)
    click.echo(f"packing = {packing_number(t, _subset(t, vertices), epsilon)}")


@command("classify")
@click.option("--file", "file", type=existing_file, help="Finite tree file")
@click.option("--schema", type=existing_file, help="Schema file")
@click.option("--certificates", is_flag=True, help="Append the derivation behind each verdict")
def classify_command(settings: Settings, file: Optional[Path], schema: Optional[Path],
                     certificates: bool):
    """Cardinality, separability and local finiteness"""
    _exactly_one(file, schema)
    report = classify(load_schema(schema)) if schema is not None else classify_tree(load_tree(file))
    click.echo(format_report(report, certificates), nl=False)


@command("witness")
@click.option("--schema", type=existing_file, required=True)
def witness(settings: Settings, schema: Path):
    """A vertex of infinite degree, a ray, or neither"""
    click.echo(format_witness(find_ray_or_hub(load_schema(schema))), nl=False)


@command("synth-labeling", budgeted=True)
@click.option("--file", "file", type=existing_file, help="Finite tree file")
@click.option("--schema", type=existing_file, help="Schema file")
def synth_labeling(settings: Settings, budget: Budget, file: Optional[Path], schema: Optional[Path]):
    """Relabel by BFS ordinal, which is locally finite"""
    _exactly_one(file, schema)
    if file is not None:
        click.echo(serialize_tree(synthesize_labeling(load_tree(file))), nl=False)
        return
    truncation = synthesize_labeling(load_schema(schema)).truncate(budget)
    click.echo(serialize_tree(truncation.tree), nl=False)


@command("explore", budgeted=True)
@click.option("--schema", type=existing_file, required=True)
@click.option("--radius", type=click.FloatRange(min=0), required=True)
def explore(settings: Settings, budget: Budget, schema: Path, radius: float):
    """Semi-decide whether the ball around the root is finite"""
    result = explore_ball(load_schema(schema), radius, budget)
    if isinstance(result, FiniteBall):
        click.echo("ball: finite")
        click.echo(f"members: {_names(sorted(result.members, key=lambda v: int(v[1:])))}")
    else:
        click.echo(f"ball: budget-exceeded ({result.reason})")
        click.echo(f"frontier: {_names(result.frontier)}")


@command("instantiate", budgeted=True)
@click.option("--schema", type=existing_file, required=True)
@click.option("--table", is_flag=True, help="Render the vertices as a table")
def instantiate_command(settings: Settings, budget: Budget, schema: Path, table: bool):
    """Materialize a schema under a budget"""
    truncation = instantiate(load_schema(schema), budget, settings.uncountable_sample)
    frontier = [v for v in truncation.in_order() if v in truncation.frontier]
    if not table:
        click.echo(serialize_tree(truncation.tree), nl=False)
        click.echo(f"# frontier: {_names(frontier)}")
        return

    grid = Table(title=f"{truncation.schema_name} ({len(truncation.tree)} vertices)",
                 show_header=True, header_style="bold blue")
    for column in ("vertex", "type", "depth", "label", "frontier"):
        grid.add_column(column)
    for v in truncation.in_order():
        grid.add_row(v, truncation.types[v], str(truncation.depths[v]),
                     format_number(truncation.tree.label(v)),
                     "yes" if v in truncation.frontier else "")
    Console().print(grid)


if __name__ == "__main__":
    main()
