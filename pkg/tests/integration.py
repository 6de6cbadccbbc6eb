"""
Module containing functions to run and compare engines for integration tests.
"""

from collections import Counter

from wkpc_simulator import Rule1Step
from wkpc_simulator import Rule2Step
from wkpc_simulator import Verdict
from wkpc_simulator import SearchLimits
from wkpc_simulator import search
from wkpc_simulator import brute_force_accepts
from wkpc_simulator import replay_trace
from wkpc_simulator import get_all_words


# Parameters

ENGINE_LIMITS = SearchLimits(max_configurations=10 ** 6)

BRUTE_FORCE_LIMITS = SearchLimits(max_configurations=10 ** 7)


# Trace Functions

def get_component_moves(trace, component_index):

    """ Transitions applied by one component, one per lockstep step, in order. """

    return [step.moves[component_index] for step in trace.steps
            if isinstance(step, Rule1Step)]


def get_upper_chunk_counts(trace, component_index):

    moves = get_component_moves(trace, component_index)

    return Counter(len(move.upper_read) for move in moves if move.upper_read)


def get_first_read_configuration(system, upper, trace, component_index, lower_symbol):

    """
    Configuration right after a component first reads a lower symbol.

    Returns:
        SystemConfiguration or None: None if the symbol is never read.
    """

    configurations = replay_trace(system, upper, trace)

    for index, step in enumerate(trace.steps):

        if not isinstance(step, Rule1Step):
            continue

        if lower_symbol in step.moves[component_index].lower_read:

            return configurations[index + 1]

    return None


# Compare Functions

def compare_engines(system, words, engine_limits=ENGINE_LIMITS,
                    brute_force_limits=BRUTE_FORCE_LIMITS):

    """
    Run the lazy search and the brute-force oracle on every word.

    Words on which either engine reaches its limit are skipped.

    Returns:
        list of tuple: (word, lazy verdict, brute-force verdict) for every
        disagreement.
        int: Number of words both engines decided.
    """

    disagreements = []

    decided_count = 0

    for word in words:

        lazy = search(system, word, engine_limits)
        brute = brute_force_accepts(system, word, brute_force_limits)

        if Verdict.LIMIT in (lazy.verdict, brute.verdict):
            continue

        decided_count += 1

        if lazy.verdict is not brute.verdict:

            disagreements.append((word, lazy.verdict, brute.verdict))

    return disagreements, decided_count


def compare_engines_on_words(system, max_length, **key_arguments):

    words = get_all_words(system.alphabet, max_length)

    return compare_engines(system, words, **key_arguments)


# Acceptance Functions

def has_communication(trace):

    return any(isinstance(step, Rule2Step) for step in trace.steps)


def get_acceptance_counts(system, max_length, limits=ENGINE_LIMITS):

    """
    Count the words up to a length that the lazy search accepts.

    Returns:
        dict: Counts under the keys 'words', 'accepted', 'communicating'
        (accepted through a run with a communication step) and 'rejected'.
    """

    counts = {'words': 0, 'accepted': 0, 'communicating': 0, 'rejected': 0}

    for word in get_all_words(system.alphabet, max_length):

        result = search(system, word, limits)

        counts['words'] += 1

        if result.verdict is Verdict.ACCEPT:

            counts['accepted'] += 1
            counts['communicating'] += has_communication(result.trace)

        elif result.verdict is Verdict.REJECT:

            counts['rejected'] += 1

    return counts
