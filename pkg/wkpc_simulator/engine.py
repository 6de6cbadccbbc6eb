"""
Parallel communicating Watson-Crick automata systems.

A system of degree n runs n Watson-Crick automata in lockstep on the same
double-stranded input. Two kinds of steps exist:

- a lockstep step (rule 1) applies one transition in every component and is
  only possible when no component is in a query state;
- a communication step (rule 2) replaces every query state K_j by the current
  state of component j, unless that component is itself in a query state.
  Tapes do not move in a communication step.

The lower strand of the input is chosen nondeterministically and is shared by
all components. The search commits it lazily: whenever a lower read runs past
the part fixed so far, the new symbols are drawn from the complements of the
upper symbols at those positions and become visible to every component.

Membership is decided by breadth-first search over configurations. Configurations
are memoized on a canonical key that forgets the part of the lower strand that no
head can read again, so the search space stays polynomial for the systems the
package is built around.
"""

import enum
import itertools
import logging
import time
import warnings

from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from typing import NamedTuple
from typing import Optional

from wkpc_simulator.core import check_alphabet
from wkpc_simulator.core import check_word
from wkpc_simulator.controls import get_control_analysis
from wkpc_simulator.controls import get_receptions
from wkpc_simulator.controls import get_received_states


logger = logging.getLogger(__name__)

DEFAULT_MAX_CONFIGURATIONS = 10 ** 6


# 1) Systems

@dataclass(frozen=True)
class PCWKSystem:

    """
    Parallel communicating Watson-Crick automata system A = (V, ρ, A1, ..., An, K).

    Args:
        alphabet (tuple of str): Input alphabet V.
        relation (ComplementarityRelation): Complementarity relation ρ.
        components (tuple of WKAutomaton): Components A1, ..., An (n >= 1).
        query_states (tuple of (str, int)): Query states K_i with the 1-based
            index of the component they query, in declaration order.

    Raises:
        ValueError: If there is no component, a component uses another
        alphabet or relation, a query target is out of range or a query
        state belongs to no component.
    """

    alphabet: tuple
    relation: object
    components: tuple
    query_states: tuple = ()

    def __post_init__(self):

        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "query_states", tuple((state, int(target))
                                                       for state, target in self.query_states))

        if not self.components:

            raise ValueError("At least one component required")

        for index, component in enumerate(self.components, start=1):

            if component.alphabet != self.alphabet:

                raise ValueError(f"Component {index} alphabet differs from the system alphabet")

            if component.relation != self.relation:

                raise ValueError(f"Component {index} relation differs from the system relation")

        # Query States

        all_states = {state for component in self.components for state in component.states}

        seen = set()

        for state, target in self.query_states:

            if state in seen:

                raise ValueError(f"Query state '{state}' declared twice")

            seen.add(state)

            if not 1 <= target <= len(self.components):

                raise ValueError(f"Query state '{state}' targets missing component {target}")

            if state not in all_states:

                raise ValueError(f"Query state '{state}' is not a state of any component")

    @cached_property
    def query_map(self):

        """ Query state to 1-based target component index. """

        return dict(self.query_states)

    @property
    def degree(self):

        return len(self.components)


class SystemConfiguration(NamedTuple):

    """
    Configuration of a system on a fixed upper word.

    Positions index the upper word and the committed lower strand; the
    committed lower strand is shared by all components and its length equals
    the largest lower position.
    """

    states: tuple
    upper_positions: tuple
    lower_positions: tuple
    committed_lower: str


class Rule1Step(NamedTuple):

    """ Lockstep step: the transition applied by every component, in order. """

    moves: tuple


class Rule2Step(NamedTuple):

    """ Communication step: (component, query state, received state) triples. """

    receptions: tuple


class RunTrace(NamedTuple):

    """ Replayable record of a run from its initial to its final configuration. """

    initial: SystemConfiguration
    steps: tuple
    final: SystemConfiguration


class Verdict(enum.Enum):

    ACCEPT = "ACCEPT"
    REJECT = "REJECT"
    LIMIT = "LIMIT"


@dataclass(frozen=True)
class SearchLimits:

    """
    Search budget.

    Args:
        max_configurations (int): Maximum number of configurations explored.
        max_strand_length (int, optional): Maximum committed lower strand
            length. The input length always bounds it as well.
    """

    max_configurations: int = DEFAULT_MAX_CONFIGURATIONS
    max_strand_length: Optional[int] = None

    def get_strand_bound(self, upper):

        if self.max_strand_length is None:

            return len(upper)

        return min(len(upper), self.max_strand_length)


def get_search_limits(**key_arguments):

    """
    Build search limits from keyword arguments.

    Args:
        **key_arguments: 'max_configurations' and 'max_strand_length';
            missing or None values fall back to the defaults.

    Returns:
        SearchLimits: The limits.
    """

    max_configurations = key_arguments.pop("max_configurations", None)
    max_strand_length = key_arguments.pop("max_strand_length", None)

    if key_arguments:

        raise TypeError(f"Unexpected search limit arguments: {sorted(key_arguments)}")

    if max_configurations is None:

        max_configurations = DEFAULT_MAX_CONFIGURATIONS

    if max_configurations < 1:

        raise ValueError("max_configurations must be positive")

    return SearchLimits(max_configurations, max_strand_length)


@dataclass(frozen=True)
class SearchStats:

    explored: int = 0
    visited: int = 0
    pruned: int = 0
    depth: int = 0


@dataclass(frozen=True)
class MembershipResult:

    """
    Outcome of a membership search.

    Witness lower strand and trace are present iff the verdict is ACCEPT.
    """

    verdict: Verdict
    witness_lower: Optional[str] = None
    trace: Optional[RunTrace] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def accepted(self):

        return self.verdict is Verdict.ACCEPT


class TraceError(ValueError):

    """
    Invalid run trace.

    Args:
        step (int or None): 0-based index of the first invalid step, or None
            when the trace as a whole (its endpoints) is invalid.
        reason (str): What is wrong with it.
    """

    def __init__(self, step, reason):

        self.step = step
        self.reason = reason

        if step is None:
            message = reason
        else:
            message = f"step {step}: {reason}"

        super().__init__(message)


# 2) Configurations

def initial_configuration(system):

    """ All components in their initial states, every head at position 0, λ committed. """

    degree = system.degree

    return SystemConfiguration(states=tuple(component.initial for component in system.components),
                               upper_positions=(0,) * degree,
                               lower_positions=(0,) * degree,
                               committed_lower="")


def has_query_state(system, configuration):

    query_map = system.query_map

    return any(state in query_map for state in configuration.states)


def is_accepting(system, configuration, upper):

    """
    Check whether a configuration accepts the upper word.

    Returns:
        bool: True iff every component has read both strands completely
        and is in one of its final states.
    """

    length = len(upper)

    return (all(position == length for position in configuration.upper_positions)
            and all(position == length for position in configuration.lower_positions)
            and all(component.is_final(state)
                    for component, state in zip(system.components, configuration.states)))


def get_canonical_key(configuration, canonical_keys=True):

    """
    Get the memoization key of a configuration.

    Lower-strand symbols before the smallest lower position can never be
    read again, so the canonical key keeps only the committed window from
    that position on.

    Args:
        configuration (SystemConfiguration): The configuration.
        canonical_keys (bool): If False, the full configuration is the key.

    Returns:
        tuple: The key.
    """

    if not canonical_keys:

        return configuration

    window_start = min(configuration.lower_positions)

    return (configuration.states,
            configuration.upper_positions,
            configuration.lower_positions,
            configuration.committed_lower[window_start:])


# 3) Lockstep Steps

def extend_committed(system, upper, committed, position, chunk, strand_bound):

    """
    Read a lower chunk at a position of the shared lower strand.

    The part of the chunk inside the committed strand must match it; the
    part beyond is committed, each symbol being a complement of the upper
    symbol at its position.

    Returns:
        str or None: The committed strand after the read, or None if the
        chunk cannot be read there.
    """

    end = position + len(chunk)

    if end > strand_bound:

        return None

    frontier = len(committed)

    # Re-read Part

    overlap_end = min(end, frontier)

    if overlap_end > position and committed[position:overlap_end] != chunk[:overlap_end - position]:

        return None

    if end <= frontier:

        return committed

    # Committed Part

    for strand_position in range(frontier, end):

        symbol = chunk[strand_position - position]

        if symbol not in system.relation.get_complements(upper[strand_position]):

            return None

    return committed + chunk[frontier - position:]


def apply_moves(system, configuration, upper, moves, strand_bound=None):

    """
    Apply one transition per component as a lockstep step.

    Args:
        system (PCWKSystem): The system.
        configuration (SystemConfiguration): Current configuration.
        upper (str): Upper word.
        moves (tuple of WKTransition): Transition for every component.
        strand_bound (int, optional): Maximum committed length, defaults to
            the length of the upper word.

    Returns:
        SystemConfiguration or None: The successor, or None if some upper
        chunk does not match or the lower chunks are not realizable on the
        shared strand.
    """

    if strand_bound is None:

        strand_bound = len(upper)

    committed = configuration.committed_lower

    upper_positions = []
    lower_positions = []

    for move, upper_position, lower_position in zip(moves,
                                                    configuration.upper_positions,
                                                    configuration.lower_positions):

        if not upper.startswith(move.upper_read, upper_position):

            return None

        committed = extend_committed(system, upper, committed, lower_position,
                                     move.lower_read, strand_bound)

        if committed is None:

            return None

        upper_positions.append(upper_position + len(move.upper_read))
        lower_positions.append(lower_position + len(move.lower_read))

    return SystemConfiguration(states=tuple(move.target for move in moves),
                               upper_positions=tuple(upper_positions),
                               lower_positions=tuple(lower_positions),
                               committed_lower=committed)


def get_rule1_steps(system, configuration, upper, strand_bound=None):

    """
    Enumerate lockstep steps in generation order.

    Components are taken in index order and their transitions in declaration
    order; a combination contributes only when all its chunks are readable
    on the shared strand.

    Returns:
        list of (Rule1Step, SystemConfiguration): Steps with their successors.
    """

    if strand_bound is None:

        strand_bound = len(upper)

    committed = configuration.committed_lower

    # Per-component Candidates

    choices = []

    for component, state, upper_position, lower_position in zip(system.components,
                                                                configuration.states,
                                                                configuration.upper_positions,
                                                                configuration.lower_positions):

        candidates = [transition for transition in component.get_transitions(state)
                      if upper.startswith(transition.upper_read, upper_position)
                      and extend_committed(system, upper, committed, lower_position,
                                           transition.lower_read, strand_bound) is not None]

        if not candidates:

            return []

        choices.append(candidates)

    # Consistent Combinations

    steps = []

    for moves in itertools.product(*choices):

        successor = apply_moves(system, configuration, upper, moves, strand_bound)

        if successor is not None:

            steps.append((Rule1Step(moves), successor))

    return steps


def rule1_successors(system, configuration, upper, strand_bound=None):

    """
    Get the successors of a configuration under lockstep steps.

    Args:
        system (PCWKSystem): The system.
        configuration (SystemConfiguration): Configuration without query states.
        upper (str): Upper word.
        strand_bound (int, optional): Maximum committed length.

    Returns:
        list of SystemConfiguration: Distinct successors in generation order;
        empty when the branch is stuck.

    Raises:
        ValueError: If a component is in a query state.
    """

    if has_query_state(system, configuration):

        raise ValueError("Rule 1 requires that no component is in a query state")

    steps = get_rule1_steps(system, configuration, upper, strand_bound)

    return list(dict.fromkeys(successor for _, successor in steps))


# 4) Communication Steps

def rule2_successor(system, configuration):

    """
    Get the successor of a configuration under a communication step.

    Heads and the committed strand stay where they are.

    Raises:
        ValueError: If no component is in a query state.
    """

    if not has_query_state(system, configuration):

        raise ValueError("Rule 2 requires a component in a query state")

    receptions = get_receptions(system, configuration.states)

    return configuration._replace(states=get_received_states(configuration.states, receptions))


# 5) Successor Relation

def get_steps(system, configuration, upper, strand_bound=None):

    """
    Enumerate the steps of the ⊢ relation from a configuration.

    A step leading back to the configuration itself is dropped.

    Returns:
        list of (Rule1Step or Rule2Step, SystemConfiguration): Steps with
        their successors, in generation order.
    """

    if has_query_state(system, configuration):

        receptions = get_receptions(system, configuration.states)

        if not receptions:

            return []

        successor = configuration._replace(
            states=get_received_states(configuration.states, receptions))

        return [(Rule2Step(receptions), successor)]

    return [(step, successor)
            for step, successor in get_rule1_steps(system, configuration, upper, strand_bound)
            if successor != configuration]


def successors(system, configuration, upper, strand_bound=None):

    """
    Get the ⊢-successors of a configuration.

    Returns:
        list of SystemConfiguration: The communication successor if some
        component is in a query state, the lockstep successors otherwise;
        a successor equal to the configuration is discarded.
    """

    steps = get_steps(system, configuration, upper, strand_bound)

    return list(dict.fromkeys(successor for _, successor in steps))


# 6) Search

def search(system, upper, limits=None, **key_arguments):

    """
    Decide membership of an upper word in L(A) by breadth-first search.

    Args:
        system (PCWKSystem): The system.
        upper (str): Input word over the system alphabet.
        limits (SearchLimits, optional): Search budget.
        **key_arguments:
            canonical_keys (bool): Memoize on window-canonical keys
                (default True) or on full configurations.
            prune (bool): Discard configurations that can no longer reach
                acceptance (default True).
            callback (callable): Called after every BFS layer with keyword
                arguments depth, frontier, explored, visited, pruned,
                committed and time.

    Returns:
        MembershipResult: ACCEPT with witness and trace at the first
        accepting configuration, REJECT when the reachable configurations
        are exhausted, LIMIT when the budget runs out first.
    """

    # Parameters

    limits = limits or SearchLimits()

    canonical_keys = key_arguments.pop("canonical_keys", True)
    prune = key_arguments.pop("prune", True)
    callback = key_arguments.pop("callback", None)

    if key_arguments:

        raise TypeError(f"Unexpected search arguments: {sorted(key_arguments)}")

    check_word(system.alphabet, upper)

    length = len(upper)

    strand_bound = limits.get_strand_bound(upper)

    if strand_bound < length:

        warnings.warn(f"Strand limit {strand_bound} is below the word length {length}: "
                      f"no search performed", RuntimeWarning)

        return MembershipResult(Verdict.LIMIT)

    analysis = get_control_analysis(system) if prune else None

    # Breadth-first Search

    initial = initial_configuration(system)

    initial_key = get_canonical_key(initial, canonical_keys)

    records = {initial_key: (initial, None, None)}

    frontier = [initial_key]

    explored = 0
    pruned = 0
    depth = 0

    start_time = time.perf_counter()

    while frontier:

        next_frontier = []

        for key in frontier:

            configuration = records[key][0]

            if is_accepting(system, configuration, upper):

                stats = SearchStats(explored, len(records), pruned, depth)

                trace = get_recorded_trace(records, key)

                logger.debug("search |w|=%d: ACCEPT after %d configurations", length, explored)

                return MembershipResult(Verdict.ACCEPT, configuration.committed_lower, trace, stats)

            if explored >= limits.max_configurations:

                warnings.warn(f"Configuration limit {limits.max_configurations} reached "
                              f"on a word of length {length}", RuntimeWarning)

                return MembershipResult(Verdict.LIMIT,
                                        stats=SearchStats(explored, len(records), pruned, depth))

            explored += 1

            for step, successor in get_steps(system, configuration, upper, strand_bound):

                if analysis is not None and analysis.is_doomed(successor, length):

                    pruned += 1

                    continue

                successor_key = get_canonical_key(successor, canonical_keys)

                if successor_key in records:

                    continue

                records[successor_key] = (successor, key, step)

                next_frontier.append(successor_key)

        # Layer Callback

        if callback is not None:

            committed = max((len(records[key][0].committed_lower) for key in next_frontier),
                            default=0)

            callback(depth=depth,
                     frontier=len(next_frontier),
                     explored=explored,
                     visited=len(records),
                     pruned=pruned,
                     committed=committed,
                     time=time.perf_counter() - start_time)

        frontier = next_frontier

        depth += 1

    logger.debug("search |w|=%d: REJECT after %d configurations (%d pruned)",
                 length, explored, pruned)

    return MembershipResult(Verdict.REJECT,
                            stats=SearchStats(explored, len(records), pruned, depth))


def get_recorded_trace(records, key):

    """ Rebuild the trace leading to a recorded configuration from parent links. """

    final = records[key][0]

    steps = []

    while True:

        configuration, parent_key, step = records[key]

        if parent_key is None:

            break

        steps.append(step)

        key = parent_key

    return RunTrace(initial=configuration, steps=tuple(reversed(steps)), final=final)


# 7) Traces

def replay_trace(system, upper, trace):

    """
    Replay a trace from its initial configuration.

    Returns:
        list of SystemConfiguration: Initial configuration followed by the
        configuration after every step.

    Raises:
        TraceError: Naming the first step that is not a valid ⊢ step.
    """

    if trace.initial != initial_configuration(system):

        raise TraceError(None, "initial configuration is not the system's initial configuration")

    configurations = [trace.initial]

    for index, step in enumerate(trace.steps):

        configuration = configurations[-1]

        # Lockstep Step

        if isinstance(step, Rule1Step):

            if has_query_state(system, configuration):

                raise TraceError(index, "lockstep step taken while a component is in a query state")

            if len(step.moves) != system.degree:

                raise TraceError(index, f"{len(step.moves)} moves for {system.degree} components")

            for component_index, (component, move, state) in enumerate(
                    zip(system.components, step.moves, configuration.states), start=1):

                if move.source != state:

                    raise TraceError(index, f"component {component_index} is in state "
                                            f"'{state}', not '{move.source}'")

                if move not in component.transitions:

                    raise TraceError(index, f"component {component_index} has no transition {move}")

            successor = apply_moves(system, configuration, upper, step.moves)

            if successor is None:

                raise TraceError(index, "moves are not applicable on the shared strand")

        # Communication Step

        elif isinstance(step, Rule2Step):

            if not has_query_state(system, configuration):

                raise TraceError(index, "communication step taken without a query state")

            receptions = get_receptions(system, configuration.states)

            if tuple(step.receptions) != receptions:

                raise TraceError(index, f"receptions {tuple(step.receptions)} differ "
                                        f"from the communication step {receptions}")

            successor = rule2_successor(system, configuration)

        else:

            raise TraceError(index, f"unknown step {step!r}")

        if successor == configuration:

            raise TraceError(index, "step does not change the configuration")

        configurations.append(successor)

    return configurations


def check_trace(system, upper, trace):

    """
    Check a trace, raising on the first problem.

    Every step is replayed; the replayed final configuration must equal the
    recorded one and accept the upper word.

    Raises:
        TraceError: Describing the first problem.
    """

    configurations = replay_trace(system, upper, trace)

    if configurations[-1] != trace.final:

        raise TraceError(None, "replayed final configuration differs from the recorded one")

    if not is_accepting(system, trace.final, upper):

        raise TraceError(None, "final configuration is not accepting")

    return configurations


def validate_trace(system, upper, trace):

    """ True iff `check_trace` finds no problem. """

    try:
        check_trace(system, upper, trace)

    except TraceError:

        return False

    return True


def get_trace_report(system, upper, trace):

    """
    Describe the validity of a trace.

    Returns:
        str or None: None for a valid trace, the first failure otherwise.
    """

    try:
        check_trace(system, upper, trace)

    except TraceError as error:

        return str(error)

    return None
