"""
Oracles and cross-checks for unary scans.

A scan runs the membership search on symbol^m for every m up to a bound. For
the squares construction the expected accepted lengths are the squares n²
with n > 1, and every accepting run must carry a witness strand made of n
alternating blocks of length n.
"""

import logging
import math
import warnings

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Optional

from tqdm import tqdm

from wkpc_simulator.engine import SearchLimits
from wkpc_simulator.engine import Verdict
from wkpc_simulator.engine import check_trace
from wkpc_simulator.engine import search
from wkpc_simulator.engine import TraceError
from wkpc_simulator.constructions import SquaresVariant
from wkpc_simulator.constructions import build_squares_system


logger = logging.getLogger(__name__)

DEFAULT_SCAN_MAX_LENGTH = 100

SCAN_CONFIGURATIONS_PER_SYMBOL = 5000
SCAN_MIN_CONFIGURATIONS = 20000


# 1) Oracles

def is_square_gt1(m):

    """ True iff m = n² for an integer n > 1. """

    if m < 4:

        return False

    root = math.isqrt(m)

    return root * root == m


def witness_form_check(lower):

    """
    Check that a strand has the squares witness form.

    Args:
        lower (str): Lower strand over {b, c}.

    Returns:
        int or None: n if the strand consists of exactly n alternating blocks
        of length n starting with 'b', None otherwise.

    Example:
    >>> witness_form_check("bbcc")
    2
    >>> witness_form_check("bbc") is None
    True
    """

    n = math.isqrt(len(lower))

    if n == 0 or n * n != len(lower):

        return None

    blocks = "".join(("b" if block % 2 == 0 else "c") * n for block in range(n))

    return n if lower == blocks else None


# 2) Scans

@dataclass(frozen=True)
class ScanEntry:

    length: int
    verdict: Verdict
    witness: Optional[str]
    explored: int
    trace: object = None


@dataclass(frozen=True)
class ScanReport:

    """
    Verdicts of a unary scan, one entry per length 0..max_length.

    Args:
        max_length (int): Largest scanned length.
        symbol (str): Scanned symbol.
        entries (tuple of ScanEntry): Entries ordered by length.
        variant (SquaresVariant, optional): Table variant of a squares scan.
    """

    max_length: int
    symbol: str
    entries: tuple
    variant: Optional[SquaresVariant] = None

    @property
    def accepted_lengths(self):

        return [entry.length for entry in self.entries if entry.verdict is Verdict.ACCEPT]

    @property
    def limited_lengths(self):

        return [entry.length for entry in self.entries if entry.verdict is Verdict.LIMIT]

    def get_entry(self, length):

        return self.entries[length]


def get_scan_limits(length):

    """ Configuration budget for one scanned length, linear in the length. """

    max_configurations = max(SCAN_MIN_CONFIGURATIONS, SCAN_CONFIGURATIONS_PER_SYMBOL * length)

    return SearchLimits(max_configurations=max_configurations)


def scan_length(system, symbol, limits, search_arguments, length):

    """ Search symbol^length; module-level so that process pools can pickle it. """

    word_limits = limits or get_scan_limits(length)

    result = search(system, symbol * length, word_limits, **search_arguments)

    logger.info("scan m=%d: %s (%d configurations)",
                length, result.verdict.value, result.stats.explored)

    return ScanEntry(length=length,
                     verdict=result.verdict,
                     witness=result.witness_lower,
                     explored=result.stats.explored,
                     trace=result.trace)


def scan_unary(system, symbol, max_length=DEFAULT_SCAN_MAX_LENGTH, limits=None, **key_arguments):

    """
    Run the membership search on symbol^m for m = 0..max_length.

    Args:
        system (PCWKSystem): The system.
        symbol (str): Symbol of the system alphabet.
        max_length (int): Largest length.
        limits (SearchLimits, optional): Budget per length. If None, the
            budget grows linearly with the length (`get_scan_limits`).
        **key_arguments:
            workers (int): Number of worker processes (default 1).
            progress (bool): Show a tqdm progress bar (default False).
            variant (SquaresVariant): Recorded in the report.
            Remaining arguments are passed to `search`.

    Returns:
        ScanReport: Entries ordered by length. LIMIT verdicts are recorded,
        they do not abort the scan.
    """

    # Parameters

    workers = key_arguments.pop("workers", 1) or 1
    progress = key_arguments.pop("progress", False)
    variant = key_arguments.pop("variant", None)

    if symbol not in system.alphabet:

        raise ValueError(f"Symbol '{symbol}' is not in the system alphabet")

    if max_length < 0:

        raise ValueError("max_length must be non-negative")

    lengths = range(max_length + 1)

    if workers > len(lengths):

        warnings.warn(f"{workers} workers requested for {len(lengths)} lengths", UserWarning)

        workers = len(lengths)

    scan_function = partial(scan_length, system, symbol, limits, key_arguments)

    # Scan

    if workers == 1:

        entries = [scan_function(length)
                   for length in tqdm(lengths, desc="scan", disable=not progress)]

    else:

        with ProcessPoolExecutor(max_workers=workers) as executor:

            entries = list(tqdm(executor.map(scan_function, lengths),
                                total=len(lengths), desc="scan", disable=not progress))

    entries.sort(key=lambda entry: entry.length)

    return ScanReport(max_length=max_length,
                      symbol=symbol,
                      entries=tuple(entries),
                      variant=SquaresVariant(variant) if variant is not None else None)


# 3) Cross Checks

def get_report_discrepancies(system, report):

    """
    Compare a scan report against the squares language.

    Returns:
        list of str: One line per length whose verdict, witness or trace
        disagrees with {m : is_square_gt1(m)}.
    """

    discrepancies = []

    for entry in report.entries:

        length = entry.length

        expected = is_square_gt1(length)

        if entry.verdict is Verdict.LIMIT:

            discrepancies.append(f"m={length}: search limit reached")

            continue

        accepted = entry.verdict is Verdict.ACCEPT

        if accepted != expected:

            verdict = "accepted" if accepted else "rejected"

            discrepancies.append(f"m={length}: {verdict}, expected "
                                 f"{'acceptance' if expected else 'rejection'}")

            continue

        if not accepted:

            continue

        # Witness and Trace

        n = witness_form_check(entry.witness)

        if n is None or n * n != length:

            discrepancies.append(f"m={length}: witness {entry.witness} is not "
                                 f"{math.isqrt(length)} alternating blocks")

        if entry.trace is not None:

            try:
                check_trace(system, report.symbol * length, entry.trace)

            except TraceError as error:

                discrepancies.append(f"m={length}: invalid trace, {error}")

    return discrepancies


def cross_check(system, symbol, max_length=DEFAULT_SCAN_MAX_LENGTH, limits=None, **key_arguments):

    """
    Check that a system accepts exactly the squares n² > 1 up to a bound.

    Args:
        system (PCWKSystem): The system.
        symbol (str): Scanned symbol.
        max_length (int): Largest length.
        limits (SearchLimits, optional): Budget per length.
        **key_arguments: Additional keyword arguments for `scan_unary`.

    Returns:
        tuple: (ok, discrepancies) where ok is True iff the list of
        discrepancies is empty.
    """

    report = scan_unary(system, symbol, max_length, limits, **key_arguments)

    discrepancies = get_report_discrepancies(system, report)

    return not discrepancies, discrepancies


# 4) Errata

@dataclass(frozen=True)
class ErrataReport:

    """
    Side-by-side scan of both table variants of the squares system.

    Args:
        max_length (int): Largest scanned length.
        corrected (ScanReport): Scan of the corrected table.
        as_printed (ScanReport): Scan of the table as printed.
        as_printed_discrepancies (list of str): Cross-check of the printed
            table against the squares language.
    """

    max_length: int
    corrected: ScanReport
    as_printed: ScanReport
    as_printed_discrepancies: list

    @property
    def only_corrected(self):

        return sorted(set(self.corrected.accepted_lengths) - set(self.as_printed.accepted_lengths))

    @property
    def only_as_printed(self):

        return sorted(set(self.as_printed.accepted_lengths) - set(self.corrected.accepted_lengths))


def get_errata_report(max_length=64, limits=None, **key_arguments):

    """
    Scan both variants of the squares system and diff their accepted lengths.

    Args:
        max_length (int): Largest scanned length.
        limits (SearchLimits, optional): Budget per length.
        **key_arguments: Additional keyword arguments for `scan_unary`.

    Returns:
        ErrataReport: Both scans with their differences.
    """

    reports = {}

    for variant in SquaresVariant:

        system = build_squares_system(variant)

        reports[variant] = scan_unary(system, "a", max_length, limits,
                                      variant=variant, **key_arguments)

    as_printed_system = build_squares_system(SquaresVariant.AS_PRINTED)

    discrepancies = get_report_discrepancies(as_printed_system, reports[SquaresVariant.AS_PRINTED])

    return ErrataReport(max_length=max_length,
                        corrected=reports[SquaresVariant.CORRECTED],
                        as_printed=reports[SquaresVariant.AS_PRINTED],
                        as_printed_discrepancies=discrepancies)
