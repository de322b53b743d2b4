# acx/acx/__main__.py

from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

import click

from .config import ProverConfigManager
from .errors import AcxError, BudgetExceededError, ProblemError
from .frontend.bench import BenchParams, generate, render_grid, run_grid
from .frontend.parser import parse_problem
from .frontend.problem import render_problem
from .frontend.prover import prove_problem, render_report
from .frontend.selftest import run_selftest
from .logger_utils import logger, set_verbosity

EXIT_VALID = 0
EXIT_USAGE = 1
EXIT_PROBLEM = 2
EXIT_BUDGET = 3
EXIT_ENGINE = 4
EXIT_INVALID = 10


def _config(budget: Optional[int], no_trace: bool = False):
    manager = ProverConfigManager()
    user = {}
    if budget is not None:
        user["inference_budget"] = budget
    if no_trace:
        user["record_trace"] = False
    manager.apply_config(user)
    return manager.config


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise click.UsageError(f"cannot read {path}: {e}") from None


def _fail(e: Exception, code: int) -> None:
    logger.error(str(e))
    sys.exit(code)


class AcxGroup(click.Group):
    """Command group mapping failures to exit codes.

    Usage errors exit with 1, problem errors with 2, exhausted budgets with 3
    and any other engine error with 4.
    """

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            return super().main(*args, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            sys.exit(EXIT_USAGE)
        except ProblemError as e:
            _fail(e, EXIT_PROBLEM)
        except BudgetExceededError as e:
            _fail(e, EXIT_BUDGET)
        except AcxError as e:
            _fail(e, EXIT_ENGINE)


@click.group(cls=AcxGroup)
@click.option("--verbose", is_flag=True, help="Log every inference.")
@click.option("--quiet", is_flag=True, help="Only log warnings and errors.")
def cli(verbose: bool, quiet: bool) -> None:
    """Ground AC completion modulo the empty theory or linear arithmetic."""
    if verbose:
        set_verbosity("DEBUG")
    elif quiet:
        set_verbosity("WARNING")


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--theory", type=click.Choice(["empty", "lia"]), default=None, help="Override the file's theory.")
@click.option("--trace", is_flag=True, help="Print the completion trace table.")
@click.option("--trace-file", type=click.Path(dir_okay=False), default=None, help="Write the trace table to a file.")
@click.option("--budget", type=int, default=None, help="Inference budget.")
@click.option("--show-rules", is_flag=True, help="Print the final rules.")
@click.option("--per-goal", is_flag=True, help="Print a verdict for every goal.")
def prove(file: str, theory: Optional[str], trace: bool, trace_file: Optional[str], budget: Optional[int],
          show_rules: bool, per_goal: bool) -> None:
    """Decide the goals of a problem FILE."""
    problem = parse_problem(_read(file), theory)
    report = prove_problem(problem, _config(budget))
    click.echo(render_report(report, trace=trace, show_rules=show_rules, per_goal=per_goal))
    if trace_file is not None:
        report.verdict.result.trace.write(trace_file)
    sys.exit(EXIT_VALID if report.verdict.valid else EXIT_INVALID)


@cli.command()
@click.argument("family", type=click.Choice(["c1", "c2"]))
@click.option("--n", "n", type=int, default=3, show_default=True, help="Number of hypothesis equations.")
@click.option("--d", "d", type=int, default=3, show_default=True, help="Depth of the AC terms.")
@click.option("--grid", is_flag=True, help="Run every (n, d) in {3, 6, 12} x {3, 6, 12}.")
@click.option("--mutate", is_flag=True, help="Generate the invalid variant.")
@click.option("--emit", type=click.Path(dir_okay=False), default=None, help="Write the problem file.")
@click.option("--workers", type=int, default=1, show_default=True, help="Worker processes for --grid.")
@click.option("--budget", type=int, default=None, help="Inference budget.")
def bench(family: str, n: int, d: int, grid: bool, mutate: bool, emit: Optional[str], workers: int,
          budget: Optional[int]) -> None:
    """Generate and decide a C1 or C2 benchmark problem."""
    config = _config(budget, no_trace=True)
    if grid:
        config.bench_workers = workers
        results = run_grid(family, config, mutate=mutate, workers=config.bench_workers)
        click.echo(render_grid(results))
        sys.exit(EXIT_VALID if all(r.valid for r in results) else EXIT_INVALID)

    try:
        params = BenchParams(n, d)
    except ValueError as e:
        raise click.UsageError(str(e)) from None
    problem = generate(family, params, mutate=mutate)
    if emit is not None:
        Path(emit).write_text(render_problem(problem), encoding="utf-8")
        logger.info("Problem file has been written as %(path)s", {"path": f"'{emit}'"})
    report = prove_problem(problem, config)
    click.echo(render_report(report))
    sys.exit(EXIT_VALID if report.verdict.valid else EXIT_INVALID)


@cli.command()
def selftest() -> None:
    """Replay the bundled problems and check them against the oracle."""
    config = ProverConfigManager().config
    results = run_selftest(config)
    for r in results:
        click.echo(f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.detail}")
    sys.exit(EXIT_VALID if all(r.ok for r in results) else EXIT_USAGE)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--theory", type=click.Choice(["empty", "lia"]), default=None, help="Override the file's theory.")
@click.option("--quality", type=click.Choice(["low_quality", "medium_quality", "high_quality"]),
              default="low_quality", show_default=True)
@click.option("--output", type=str, default=None, help="Output video file name.")
def animate(file: str, theory: Optional[str], quality: str, output: Optional[str]) -> None:
    """Render the completion trace of FILE as a video (needs manim)."""
    try:
        from .animation import render_trace
    except ImportError:
        raise click.UsageError("animate needs manim: pip install 'acx[animate]'") from None
    report = prove_problem(parse_problem(_read(file), theory), _config(None))
    render_trace(report, quality=quality, output_file=output, title=Path(file).stem)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
