"""
Command-line interface.

Exit codes: 0 for ACCEPT or success, 1 for REJECT or a failed check, 2 for
usage, parse and file errors, 3 when a search limit was reached.
"""

import logging
import sys

from pathlib import Path

import click

from wkpc_simulator.engine import Verdict
from wkpc_simulator.engine import get_search_limits
from wkpc_simulator.engine import get_trace_report
from wkpc_simulator.engine import search
from wkpc_simulator.bruteforce import brute_force_accepts
from wkpc_simulator.constructions import SquaresVariant
from wkpc_simulator.constructions import build_squares_system
from wkpc_simulator.files import SystemFileError
from wkpc_simulator.files import format_scan_records
from wkpc_simulator.files import format_scan_report
from wkpc_simulator.files import parse_system
from wkpc_simulator.files import parse_trace
from wkpc_simulator.files import serialize_system
from wkpc_simulator.files import serialize_trace
from wkpc_simulator.verification import DEFAULT_SCAN_MAX_LENGTH
from wkpc_simulator.verification import get_errata_report
from wkpc_simulator.verification import get_report_discrepancies
from wkpc_simulator.verification import scan_unary


logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

VERDICT_EXIT_CODES = {
    Verdict.ACCEPT: EXIT_SUCCESS,
    Verdict.REJECT: EXIT_FAILURE,
    Verdict.LIMIT: EXIT_LIMIT,
}

LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]

SYSTEM_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


def read_file(path):

    try:
        return path.read_text(encoding="utf-8")

    except UnicodeDecodeError as error:

        raise click.FileError(str(path), f"not UTF-8 text ({error.reason})") from None

    except OSError as error:

        raise click.FileError(str(path), error.strerror or str(error)) from None


def write_file(path, text):

    try:
        path.write_text(text, encoding="utf-8")

    except OSError as error:

        raise click.FileError(str(path), error.strerror or str(error)) from None


def load_system(path):

    """ Parse a system file, reporting errors with the file name. """

    try:
        return parse_system(read_file(path))

    except SystemFileError as error:

        raise click.UsageError(f"{path}: {error}") from None


def get_word(word):

    """ '-' on the command line stands for λ. """

    return "" if word == "-" else word


# 1) Group

@click.group()
@click.option("-v", "--verbose", count=True,
              help="Log progress on stderr (-v for INFO, -vv for DEBUG).")
def cli(verbose):

    """ Simulator for parallel communicating Watson-Crick automata systems. """

    level = LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)]

    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


# 2) Check

@cli.command()
@click.argument("system_file", type=SYSTEM_FILE)
@click.option("--word", "-w", required=True, help="Input word ('-' for λ).")
@click.option("--trace", "trace_file", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the accepting run to this file.")
@click.option("--engine", type=click.Choice(["lazy", "bruteforce"]), default="lazy",
              show_default=True, help="Membership engine.")
@click.option("--max-configs", type=click.IntRange(min=1), default=None,
              help="Configuration budget.")
@click.option("--max-strand", type=click.IntRange(min=0), default=None,
              help="Longest committed lower strand.")
def check(system_file, word, trace_file, engine, max_configs, max_strand):

    """ Decide whether the system accepts a word. """

    system = load_system(system_file)

    word = get_word(word)

    limits = get_search_limits(max_configurations=max_configs, max_strand_length=max_strand)

    try:
        if engine == "lazy":
            result = search(system, word, limits)
        else:
            result = brute_force_accepts(system, word, limits)

    except ValueError as error:

        raise click.UsageError(str(error)) from None

    click.echo(result.verdict.value)

    if result.accepted:

        click.echo(f"witness {result.witness_lower or '-'}")

        if trace_file is not None:

            write_file(trace_file, serialize_trace(word, result.trace))

            logger.info("trace written to %s", trace_file)

    elif trace_file is not None:

        click.echo(f"no accepting run, {trace_file} not written", err=True)

    click.echo(f"configurations {result.stats.explored}", err=True)

    return VERDICT_EXIT_CODES[result.verdict]


# 3) Scan

@cli.command()
@click.argument("system_file", type=SYSTEM_FILE)
@click.option("--symbol", "-s", required=True, help="Symbol of the unary words.")
@click.option("--max", "max_length", type=click.IntRange(min=0),
              default=DEFAULT_SCAN_MAX_LENGTH, show_default=True, help="Largest length.")
@click.option("--report", "report_file", type=click.Path(dir_okay=False, path_type=Path),
              help="Write one structured record per length to this file.")
@click.option("--max-configs", type=click.IntRange(min=1), default=None,
              help="Configuration budget per length (scales with the length by default).")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes.")
@click.option("--cross-check", is_flag=True,
              help="Compare the accepted lengths with the squares n² > 1.")
@click.option("--progress", is_flag=True, help="Show a progress bar.")
def scan(system_file, symbol, max_length, report_file, max_configs, workers, cross_check, progress):

    """ Run the membership search on symbol^m for m = 0..max. """

    system = load_system(system_file)

    if symbol not in system.alphabet:

        raise click.UsageError(f"Symbol '{symbol}' is not in the system alphabet")

    limits = get_search_limits(max_configurations=max_configs) if max_configs else None

    report = scan_unary(system, symbol, max_length, limits, workers=workers, progress=progress)

    discrepancies = get_report_discrepancies(system, report) if cross_check else None

    click.echo(format_scan_report(report, discrepancies), nl=False)

    if report_file is not None:

        write_file(report_file, format_scan_records(report))

    if discrepancies:

        return EXIT_FAILURE

    return EXIT_LIMIT if report.limited_lengths else EXIT_SUCCESS


# 4) Builtin Systems

@cli.group()
def builtin():

    """ Write built-in systems. """


@builtin.command()
@click.option("--variant", type=click.Choice([variant.value for variant in SquaresVariant]),
              default=SquaresVariant.CORRECTED.value, show_default=True,
              help="Transition table variant.")
@click.option("--out", "out_file", type=click.Path(dir_okay=False, path_type=Path),
              help="Output file (stdout if omitted).")
def squares(variant, out_file):

    """ The two-component system accepting a^(n²), n > 1. """

    text = serialize_system(build_squares_system(SquaresVariant(variant)))

    if out_file is None:

        click.echo(text, nl=False)

    else:

        write_file(out_file, text)

    return EXIT_SUCCESS


# 5) Validate Trace

@cli.command("validate-trace")
@click.argument("system_file", type=SYSTEM_FILE)
@click.option("--word", "-w", required=True, help="Input word ('-' for λ).")
@click.option("--trace", "trace_file", required=True,
              type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Trace file to check.")
def validate_trace(system_file, word, trace_file):

    """ Replay a trace file and check that it is an accepting run. """

    system = load_system(system_file)

    word = get_word(word)

    try:
        trace_word, trace = parse_trace(read_file(trace_file), system)

    except SystemFileError as error:

        raise click.UsageError(f"{trace_file}: {error}") from None

    if trace_word != word:

        click.echo(f"invalid: trace is for the word '{trace_word or '-'}'", err=True)

        return EXIT_FAILURE

    report = get_trace_report(system, word, trace)

    if report is not None:

        click.echo(f"invalid: {report}", err=True)

        return EXIT_FAILURE

    click.echo(f"valid: {len(trace.steps)} steps")

    return EXIT_SUCCESS


# 6) Errata

@cli.command()
@click.option("--max", "max_length", type=click.IntRange(min=0), default=64, show_default=True,
              help="Largest length.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes.")
def errata(max_length, workers):

    """ Compare the squares system's table as printed with the corrected one. """

    report = get_errata_report(max_length, workers=workers)

    for name, scan_report in (("corrected", report.corrected), ("as printed", report.as_printed)):

        accepted = " ".join(str(length) for length in scan_report.accepted_lengths) or "none"

        click.echo(f"{name}: {accepted}")

    click.echo("only corrected: " + (" ".join(map(str, report.only_corrected)) or "none"))
    click.echo("only as printed: " + (" ".join(map(str, report.only_as_printed)) or "none"))

    for discrepancy in report.as_printed_discrepancies:

        click.echo(f"  {discrepancy}")

    return EXIT_SUCCESS


# 7) Entry Points

def run_cli(argv=None):

    """
    Run the command line and return its exit code instead of exiting.

    Args:
        argv (list of str, optional): Arguments without the program name.

    Returns:
        int: 0 ACCEPT or success, 1 REJECT or failed check, 2 usage, file or
        parse error, 3 limit reached.
    """

    try:
        exit_code = cli.main(args=argv, prog_name="wkpc", standalone_mode=False)

    except click.ClickException as error:

        error.show()

        return EXIT_USAGE if isinstance(error, (click.UsageError, click.FileError)) else EXIT_FAILURE

    except click.Abort:

        click.echo("Aborted!", err=True)

        return EXIT_FAILURE

    return exit_code if isinstance(exit_code, int) else EXIT_SUCCESS


def main():

    sys.exit(run_cli(sys.argv[1:]))
