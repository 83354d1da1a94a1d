"""
    Command line for reductions, exact solving, checking and the counterexample reproductions.

    Exit status: 0 SAT / CONSISTENT / all PASS, 1 VIOLATION / FAIL, 2 usage error,
    20 UNSAT, 30 UNKNOWN, otherwise the ``code`` of the library error raised.
"""
import functools
import json
import logging
import multiprocessing
import os
import queue
import signal
import sys

import click

from pydfacons.automata import is_consistent, to_dot
from pydfacons.cnf import evaluate, parse_dimacs
from pydfacons.counterexamples import verify_all
from pydfacons.exceptions import LibraryError
from pydfacons.models import Assignment
from pydfacons.reduction import dlh_reduce, extract_assignment, gold_reduce, witness_dfa
from pydfacons.solver import find_consistent_dfa
from pydfacons.utils import constant as const
from pydfacons.utils.formats import format_dfa, format_sample, parse_dfa, parse_sample

logger = logging.getLogger(__name__)

BUDGET_EXPIRED = object()


def handle_errors(func):
    """Turn library errors into a diagnostic on stderr and the error's exit code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LibraryError as ex:
            click.echo(f"error: {ex.__class__.__name__}: {ex.message}", err=True)
            sys.exit(ex.code)

    return wrapper


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging.")
def cli(verbose):
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command("reduce", short_help="reduce a pure CNF to a DFA consistency sample.")
@click.argument("cnf_file", type=click.File("r"))
@click.argument("out_file", type=click.File("w"))
@click.option(
    "--construction",
    type=click.Choice(const.CONSTRUCTIONS),
    default=const.GOLD_STYLE,
    show_default=True,
)
@click.option("--extra-state", is_flag=True, help="dlh only: report k = n + 1 instead of n.")
@handle_errors
def reduce_command(cnf_file, out_file, construction, extra_state):
    cnf = parse_dimacs(cnf_file.read())
    if construction == const.GOLD_STYLE:
        instance = gold_reduce(cnf)
    else:
        instance = dlh_reduce(cnf, extra_state=extra_state)
    out_file.write(format_sample(instance.sample))
    sample = instance.sample
    click.echo(f"k={instance.k} |P|={len(sample.positives)} |N|={len(sample.negatives)}")


def _solve_worker(sample, k, parallel, workers, results):
    if hasattr(os, "setpgrp"):
        # own process group, so a budget kill also reaches parallel search workers
        os.setpgrp()
    try:
        dfa = find_consistent_dfa(sample, k, parallel=parallel, workers=workers)
        results.put(("ok", dfa))
    except LibraryError as ex:
        results.put(("error", (type(ex), dict(ex.__dict__))))
    except Exception as ex:
        results.put(("error", (LibraryError, {"message": f"solver crashed: {ex!r}"})))


def _stop(process):
    if process.is_alive():
        if hasattr(os, "killpg"):
            try:
                os.killpg(process.pid, signal.SIGTERM)
            except ProcessLookupError:
                pass
        else:
            process.terminate()
    process.join()


def solve_with_budget(sample, k, budget, parallel=False, workers=None):
    """
    Run the solver in a child process.

    :return: The DFA, None for no DFA, or BUDGET_EXPIRED.
    """
    results = multiprocessing.Queue()
    process = multiprocessing.Process(
        target=_solve_worker, args=(sample, k, parallel, workers, results)
    )
    process.start()
    try:
        status, payload = results.get(timeout=budget)
    except queue.Empty:
        logger.info(f"Solve budget of {budget}s expired")
        return BUDGET_EXPIRED
    finally:
        _stop(process)
    if status == "error":
        error_cls, attributes = payload
        raise error_cls(attributes)
    return payload


@cli.command("solve", short_help="find a DFA with at most k states consistent with a sample.")
@click.argument("sample_file", type=click.File("r"))
@click.option("--k", "k", type=click.IntRange(min=1), required=True, help="State bound.")
@click.option(
    "--budget",
    type=click.FloatRange(min=0, min_open=True),
    default=const.DEFAULT_SOLVE_BUDGET,
    envvar="DFACONS_BUDGET",
    show_default=True,
    help="Wall-clock seconds before answering UNKNOWN.",
)
@click.option("--dot", "emit_dot", is_flag=True, help="Also print the DFA as DOT.")
@click.option("--parallel", is_flag=True, help="Search in worker processes, witness may vary.")
@click.option("--workers", type=click.IntRange(min=1), envvar="DFACONS_WORKERS")
@click.option("-o", "--output", type=click.File("w"), help="Write the DFA table file.")
@handle_errors
def solve_command(sample_file, k, budget, emit_dot, parallel, workers, output):
    sample = parse_sample(sample_file.read())
    dfa = solve_with_budget(sample, k, budget, parallel=parallel, workers=workers)
    if dfa is BUDGET_EXPIRED:
        click.echo("UNKNOWN")
        sys.exit(const.EXIT_UNKNOWN)
    if dfa is None:
        click.echo("UNSAT")
        sys.exit(const.EXIT_UNSAT)
    click.echo("SAT")
    click.echo(format_dfa(dfa), nl=False)
    if emit_dot:
        click.echo(to_dot(dfa), nl=False)
    if output is not None:
        output.write(format_dfa(dfa))
    sys.exit(const.EXIT_SAT)


@cli.command("check", short_help="check a DFA table file against a sample.")
@click.argument("sample_file", type=click.File("r"))
@click.argument("dfa_file", type=click.File("r"))
@handle_errors
def check_command(sample_file, dfa_file):
    sample = parse_sample(sample_file.read())
    dfa = parse_dfa(dfa_file.read(), alphabet=sample.alphabet)
    verdict = is_consistent(dfa, sample)
    if verdict.consistent:
        click.echo("CONSISTENT")
        sys.exit(const.EXIT_CONSISTENT)
    click.echo(f"VIOLATION {verdict.word or const.EMPTY_WORD_DISPLAY} {verdict.polarity}")
    sys.exit(const.EXIT_VIOLATION)


@cli.command("witness", short_help="build the witness DFA of a satisfying assignment.")
@click.argument("cnf_file", type=click.File("r"))
@click.argument("assignment")
@click.option("-o", "--output", type=click.File("w"), default="-", help="DFA table file.")
@click.option("--dot", "dot_file", type=click.File("w"), help="Also write the DFA as DOT.")
@handle_errors
def witness_command(cnf_file, assignment, output, dot_file):
    cnf = parse_dimacs(cnf_file.read())
    dfa = witness_dfa(cnf, Assignment.from_bits(assignment))
    output.write(format_dfa(dfa))
    if dot_file is not None:
        dot_file.write(to_dot(dfa))


@cli.command("extract", short_help="read a satisfying assignment off a consistent DFA.")
@click.argument("cnf_file", type=click.File("r"))
@click.argument("dfa_file", type=click.File("r"))
@handle_errors
def extract_command(cnf_file, dfa_file):
    cnf = parse_dimacs(cnf_file.read())
    beta = extract_assignment(cnf, parse_dfa(dfa_file.read()))
    click.echo(f"{beta.to_bits()} {'SATISFIES' if evaluate(cnf, beta) else 'FALSIFIES'}")


@cli.command("dot", short_help="render a DFA table file as DOT.")
@click.argument("dfa_file", type=click.File("r"))
@handle_errors
def dot_command(dfa_file):
    click.echo(to_dot(parse_dfa(dfa_file.read())), nl=False)


@cli.command("verify-paper", short_help="run every counterexample reproduction.")
@click.option("--json", "as_json", is_flag=True, help="One JSON record per report.")
def verify_command(as_json):
    reports = verify_all(raise_on_failure=False)
    for report in reports:
        if as_json:
            record = report.to_record()
            record["elapsed"] = round(report.elapsed, 3)
            click.echo(json.dumps(record))
        else:
            click.echo(
                f"{report.name} {report.elapsed:.3f}s {report.verdict} {'PASS' if report.passed else 'FAIL'}"
            )
    all_passed = all(report.passed for report in reports)
    sys.exit(const.EXIT_SAT if all_passed else const.EXIT_FAILURE)


if __name__ == "__main__":
    cli()
