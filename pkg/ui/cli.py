"""
Command-line front end.

Usage:
    python main.py [--output table|json] [-v] <command> ...

Commands: rank, bounds, isometric, min-embed, dense-check, gen-subspace,
faces, uniform-check, survey. Exit codes: 0 success, 1 negative finding
under --strict, 2 bad input or usage.
"""
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click

from config.constants import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_OUTPUT_MODE,
    ENVVAR_PREFIX,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    JSON_INDENT,
    OUTPUT_MODES,
    SURVEY_DEFAULT_EXAMPLES,
)
from config.log import setup_logging
from core.bounds import bounds_report
from core.errors import HammingError
from core.hamming import (
    column_contribution,
    column_histograms,
    count_faces,
    distance_matrix,
    distance_sum,
    is_isometric,
    rank,
    smallest_face,
)
from entities.reports import SearchConfig, Verdict, histogram_row
from systems.density import density_survey, is_metrically_dense, min_embedding_dimension
from systems.finite_field import (
    column_uniformity,
    format_poly,
    generator_from_points,
    is_uniform_columns,
    make_field,
    random_subspace,
    span,
)
from systems.pointset_io import format_point_set, read_point_set, write_point_set
from ui import tables

logger = logging.getLogger(__name__)

FILE = click.Path(dir_okay=False, path_type=Path)


@dataclass(frozen=True)
class CliConfig:
    """One validated invocation"""
    command: str
    output_mode: str = DEFAULT_OUTPUT_MODE
    budget: int = DEFAULT_NODE_BUDGET
    seed: Optional[int] = None
    strict: bool = False
    max_dim: Optional[int] = None
    q: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    generators: Optional[Path] = None

    def validate(self) -> "CliConfig":
        if self.output_mode not in OUTPUT_MODES:
            raise click.UsageError(f"--output must be one of {', '.join(OUTPUT_MODES)}")
        if self.budget < 1:
            raise click.UsageError("--budget must be >= 1")
        if self.max_dim is not None and self.max_dim < 1:
            raise click.UsageError("--max-dim must be >= 1")
        if self.q is not None and self.q < 2:
            raise click.UsageError("--q must be >= 2")
        if self.command == "gen-subspace":
            if (self.seed is None) == (self.generators is None):
                raise click.UsageError("gen-subspace needs exactly one of --seed or --generators")
            if self.seed is not None and None in (self.q, self.n, self.k):
                raise click.UsageError("gen-subspace --seed needs --q, --n and --k")
        if self.command == "faces" and None in (self.q, self.n, self.k):
            raise click.UsageError("faces needs --n, --k and --q")
        return self


def _config(ctx: click.Context, command: str, **kwargs: Any) -> CliConfig:
    return CliConfig(command=command, output_mode=ctx.obj["output"], **kwargs).validate()


def _emit(config: CliConfig, payload: Dict[str, Any], render: Callable[[], str]) -> None:
    if config.output_mode == "json":
        click.echo(json.dumps(payload, indent=JSON_INDENT, ensure_ascii=False))
    else:
        click.echo(render())


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--output", "output", type=click.Choice(OUTPUT_MODES), default=DEFAULT_OUTPUT_MODE,
              show_default=True, help="Report format.")
@click.option("-v", "--verbose", count=True, help="Log to stderr (-v info, -vv debug).")
@click.pass_context
def cli(ctx: click.Context, output: str, verbose: int):
    """Rank, bounds and metric density of subsets of the Hamming space E_q^n."""
    setup_logging(verbose)
    ctx.obj = {"output": output}


@cli.command("rank")
@click.argument("path", type=FILE)
@click.pass_context
def rank_command(ctx: click.Context, path: Path) -> int:
    """Rank, distance sum and per-column histograms."""
    config = _config(ctx, "rank")
    points = read_point_set(path)
    face = smallest_face(points)
    payload = {
        "q": points.q,
        "n": points.n,
        "m": points.m,
        "rank": rank(points),
        "distance_sum": distance_sum(points) if points.m >= 2 else None,
        "columns": [histogram_row(j, h.counts, column_contribution(h))
                    for j, h in enumerate(column_histograms(points))],
        "face": {"free_columns": list(face.free_columns), "fixed": [list(p) for p in face.fixed]},
    }
    _emit(config, payload, lambda: tables.render_rank(payload))
    return EXIT_OK


@cli.command("bounds")
@click.argument("path", type=FILE)
@click.pass_context
def bounds_command(ctx: click.Context, path: Path) -> int:
    """Both rank bounds, tightness and the density certificate."""
    config = _config(ctx, "bounds")
    report = bounds_report(read_point_set(path))
    _emit(config, report.to_dict(), lambda: tables.render_bounds(report))
    return EXIT_OK


@cli.command("isometric")
@click.argument("first", type=FILE)
@click.argument("second", type=FILE)
@click.pass_context
def isometric_command(ctx: click.Context, first: Path, second: Path) -> int:
    """Least distance-preserving bijection between two sets, if any."""
    config = _config(ctx, "isometric")
    witness = is_isometric(read_point_set(first), read_point_set(second))
    payload = {
        "isometric": witness is not None,
        "witness": list(witness.mapping) if witness is not None else None,
    }
    _emit(config, payload, lambda: tables.render_isometry(payload))
    return EXIT_OK


@cli.command("min-embed")
@click.argument("path", type=FILE)
@click.option("--q", "q", type=int, default=None, help="Alphabet size of the search (default: the file's).")
@click.option("--budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True, help="Search node budget.")
@click.option("--max-dim", "max_dim", type=int, default=None, help="Largest dimension to try.")
@click.pass_context
def min_embed_command(ctx: click.Context, path: Path, q: Optional[int], budget: int, max_dim: Optional[int]) -> int:
    """Least dimension realizing the set's distance matrix."""
    config = _config(ctx, "min-embed", q=q, budget=budget, max_dim=max_dim)
    points = read_point_set(path)
    alphabet = config.q or points.q
    search = SearchConfig(q=alphabet, node_budget=config.budget, max_dimension=config.max_dim)
    result = min_embedding_dimension(distance_matrix(points), alphabet, search)
    _emit(config, result.to_dict(), lambda: tables.render_embedding(result))
    return EXIT_OK


@cli.command("dense-check")
@click.argument("path", type=FILE)
@click.option("--budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True, help="Search node budget.")
@click.option("--max-dim", "max_dim", type=int, default=None, help="Largest dimension to try.")
@click.option("--strict", is_flag=True, help="Exit 1 unless the verdict is dense.")
@click.pass_context
def dense_check_command(ctx: click.Context, path: Path, budget: int, max_dim: Optional[int], strict: bool) -> int:
    """Decide metric density: certificate first, exact search otherwise."""
    config = _config(ctx, "dense-check", budget=budget, max_dim=max_dim, strict=strict)
    points = read_point_set(path)
    search = SearchConfig(q=points.q, node_budget=config.budget, max_dimension=config.max_dim)
    verdict = is_metrically_dense(points, search)
    _emit(config, verdict.to_dict(), lambda: tables.render_verdict(verdict))
    if config.strict and verdict.verdict is not Verdict.DENSE:
        return EXIT_NEGATIVE
    return EXIT_OK


@cli.command("gen-subspace")
@click.option("--q", "q", type=int, default=None, help="Field order (a prime power).")
@click.option("--n", "n", type=int, default=None, help="Word length.")
@click.option("--k", "k", type=int, default=None, help="Subspace dimension.")
@click.option("--seed", type=int, default=None, help="Seed for a random generator matrix.")
@click.option("--generators", type=FILE, default=None, help="Generator matrix file.")
@click.option("-o", "--out", "out", type=FILE, default=None, help="Write the span to this file.")
@click.pass_context
def gen_subspace_command(ctx: click.Context, q: Optional[int], n: Optional[int], k: Optional[int],
                         seed: Optional[int], generators: Optional[Path], out: Optional[Path]) -> int:
    """Span of a random or given generator matrix, as a point-set file."""
    config = _config(ctx, "gen-subspace", q=q, n=n, k=k, seed=seed, generators=generators)
    if config.generators is not None:
        matrix = generator_from_points(read_point_set(config.generators))
        for flag, given, actual in (("--q", config.q, matrix.field.q), ("--n", config.n, matrix.n),
                                    ("--k", config.k, matrix.k)):
            if given is not None and given != actual:
                raise click.UsageError(f"{flag} {given} disagrees with the generator file ({actual})")
    else:
        matrix = random_subspace(config.n, config.k, make_field(config.q), config.seed)
    points = span(matrix)
    comment = f"span of {matrix.k} generators over {matrix.field}"

    if out is not None:
        write_point_set(points, out, comment)
        summary = {"written": str(out), "q": points.q, "n": points.n, "k": matrix.k, "m": points.m}
        _emit(config, summary, lambda: tables.format_pairs(list(summary.items())))
        return EXIT_OK

    payload = {
        "q": points.q,
        "n": points.n,
        "k": matrix.k,
        "modulus": format_poly(matrix.field.modulus),
        "generators": [list(r) for r in matrix.rows],
        "points": [list(w) for w in points.words],
    }
    _emit(config, payload, lambda: format_point_set(points, comment).rstrip("\n"))
    return EXIT_OK


@cli.command("faces")
@click.option("--n", "n", type=int, default=None, help="Word length.")
@click.option("--k", "k", type=int, default=None, help="Face dimension.")
@click.option("--q", "q", type=int, default=None, help="Alphabet size.")
@click.pass_context
def faces_command(ctx: click.Context, n: Optional[int], k: Optional[int], q: Optional[int]) -> int:
    """Number of k-dimensional faces of E_q^n."""
    config = _config(ctx, "faces", n=n, k=k, q=q)
    count = count_faces(config.n, config.k, config.q)
    payload = {"n": config.n, "k": config.k, "q": config.q, "faces": count}
    _emit(config, payload, lambda: tables.format_pairs(list(payload.items())))
    return EXIT_OK


@cli.command("uniform-check")
@click.argument("path", type=FILE)
@click.pass_context
def uniform_check_command(ctx: click.Context, path: Path) -> int:
    """Whether every non-constant column uses each symbol m/q times."""
    config = _config(ctx, "uniform-check")
    points = read_point_set(path)
    detail = column_uniformity(points)
    payload = {
        "q": points.q,
        "m": points.m,
        "divisible": points.m % points.q == 0,
        "uniform": is_uniform_columns(points),
        "columns": [
            {"column": c.column, "histogram": list(c.histogram.counts), "constant": c.constant, "uniform": c.uniform}
            for c in detail
        ],
    }
    _emit(config, payload, lambda: tables.render_uniformity(payload))
    return EXIT_OK


@cli.command("survey")
@click.option("--q", "q", type=int, required=True, help="Alphabet size.")
@click.option("--n", "n", type=int, required=True, help="Word length.")
@click.option("--m", "m", type=int, required=True, help="Subset size.")
@click.option("--budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True, help="Node budget per set.")
@click.option("--examples", type=int, default=SURVEY_DEFAULT_EXAMPLES, show_default=True,
              help="Dense but non-uniform sets to list.")
@click.pass_context
def survey_command(ctx: click.Context, q: int, n: int, m: int, budget: int, examples: int) -> int:
    """Tally density against uniform column distribution over all m-subsets."""
    config = _config(ctx, "survey", q=q, n=n, m=m, budget=budget)
    report = density_survey(config.q, config.n, config.m,
                            SearchConfig(q=config.q, node_budget=config.budget), examples=max(examples, 0))
    _emit(config, report.to_dict(), lambda: tables.render_survey(report))
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    """Run one invocation and return its exit code"""
    try:
        result = cli.main(args=argv, prog_name="hamrank", standalone_mode=False,
                          auto_envvar_prefix=ENVVAR_PREFIX)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted", err=True)
        return EXIT_USAGE
    except HammingError as exc:
        click.echo(f"❌ Error: {exc}", err=True)
        return EXIT_USAGE
    except OSError as exc:
        click.echo(f"❌ Error: cannot read {exc.filename or 'input'}: {exc.strerror or exc}", err=True)
        return EXIT_USAGE
    except MemoryError:
        click.echo("❌ Error: out of memory; the input is too large for this command", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())
