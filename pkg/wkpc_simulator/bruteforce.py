"""
Brute-force membership oracle.

Independent check of the lazy search: every complete lower strand complementary
to the input is enumerated, and for each of them the configuration graph of
the system on that fixed double strand is explored without lazy commitment,
window canonicalization or pruning. An accepting run, if any, is recovered as a
shortest path of the explored graph with rustworkx.
"""

import itertools
import logging
import warnings

import rustworkx

from wkpc_simulator.core import check_word
from wkpc_simulator.controls import get_receptions
from wkpc_simulator.controls import get_received_states
from wkpc_simulator.engine import MembershipResult
from wkpc_simulator.engine import Rule1Step
from wkpc_simulator.engine import Rule2Step
from wkpc_simulator.engine import RunTrace
from wkpc_simulator.engine import SearchLimits
from wkpc_simulator.engine import SearchStats
from wkpc_simulator.engine import SystemConfiguration
from wkpc_simulator.engine import Verdict
from wkpc_simulator.engine import initial_configuration
from wkpc_simulator.engine import is_accepting


logger = logging.getLogger(__name__)


def get_complementary_strands(relation, upper):

    """
    Enumerate every lower strand complementary to an upper word.

    Strands are generated in lexicographic order of the relation's
    declaration order.

    Yields:
        str: Lower strands of the same length as `upper`.
    """

    choices = [relation.get_complements(symbol) for symbol in upper]

    for symbols in itertools.product(*choices):

        yield "".join(symbols)


def get_fixed_strand_steps(system, configuration, upper, lower):

    """
    Enumerate ⊢ steps on a fixed double strand upper/lower.

    Returns:
        list of (Rule1Step or Rule2Step, SystemConfiguration): Steps with
        their successors; self-loops are dropped.
    """

    query_map = system.query_map

    # Communication Step

    if any(state in query_map for state in configuration.states):

        receptions = get_receptions(system, configuration.states)

        if not receptions:

            return []

        states = get_received_states(configuration.states, receptions)

        return [(Rule2Step(receptions), configuration._replace(states=states))]

    # Lockstep Step

    choices = []

    for component, state, upper_position, lower_position in zip(system.components,
                                                                configuration.states,
                                                                configuration.upper_positions,
                                                                configuration.lower_positions):

        choices.append([transition for transition in component.get_transitions(state)
                        if upper.startswith(transition.upper_read, upper_position)
                        and lower.startswith(transition.lower_read, lower_position)])

    steps = []

    for moves in itertools.product(*choices):

        upper_positions = tuple(position + len(move.upper_read)
                                for move, position in zip(moves, configuration.upper_positions))

        lower_positions = tuple(position + len(move.lower_read)
                                for move, position in zip(moves, configuration.lower_positions))

        successor = SystemConfiguration(states=tuple(move.target for move in moves),
                                        upper_positions=upper_positions,
                                        lower_positions=lower_positions,
                                        committed_lower=lower[:max(lower_positions)])

        if successor != configuration:

            steps.append((Rule1Step(moves), successor))

    return steps


def search_fixed_strand(system, upper, lower, max_configurations):

    """
    Explore the configuration graph of a system on one fixed double strand.

    Args:
        system (PCWKSystem): The system.
        upper (str): Upper strand.
        lower (str): Lower strand, complementary to `upper`.
        max_configurations (int): Budget of explored configurations.

    Returns:
        tuple: (verdict, trace or None, explored count).
    """

    graph = rustworkx.PyDiGraph()

    initial = initial_configuration(system)

    indices = {initial: graph.add_node(initial)}

    queue = [initial]

    explored = 0

    for configuration in queue:

        if is_accepting(system, configuration, upper):

            return Verdict.ACCEPT, get_graph_trace(graph, indices, initial, configuration), explored

        if explored >= max_configurations:

            return Verdict.LIMIT, None, explored

        explored += 1

        for step, successor in get_fixed_strand_steps(system, configuration, upper, lower):

            if successor not in indices:

                indices[successor] = graph.add_node(successor)

                queue.append(successor)

            graph.add_edge(indices[configuration], indices[successor], step)

    return Verdict.REJECT, None, explored


def get_graph_trace(graph, indices, initial, final):

    """ Recover a run as a shortest path of the explored configuration graph. """

    source = indices[initial]
    target = indices[final]

    if source == target:

        return RunTrace(initial=initial, steps=(), final=final)

    paths = rustworkx.dijkstra_shortest_paths(graph, source, target=target)

    path = list(paths[target])

    steps = tuple(graph.get_edge_data(node, next_node)
                  for node, next_node in zip(path, path[1:]))

    return RunTrace(initial=initial, steps=steps, final=final)


def brute_force_accepts(system, upper, limits=None):

    """
    Decide membership by enumerating complete lower strands.

    Args:
        system (PCWKSystem): The system.
        upper (str): Input word over the system alphabet.
        limits (SearchLimits, optional): The configuration budget is shared
            by all enumerated strands.

    Returns:
        MembershipResult: ACCEPT with the first accepted strand (in
        enumeration order) and its run, REJECT if no strand admits an
        accepting run, LIMIT if the budget runs out first.
    """

    limits = limits or SearchLimits()

    check_word(system.alphabet, upper)

    explored = 0

    for lower in get_complementary_strands(system.relation, upper):

        verdict, trace, strand_explored = search_fixed_strand(
            system, upper, lower, limits.max_configurations - explored)

        explored += strand_explored

        if verdict is Verdict.ACCEPT:

            logger.debug("brute force |w|=%d: ACCEPT with strand %s", len(upper), lower)

            return MembershipResult(Verdict.ACCEPT, lower, trace, SearchStats(explored=explored))

        if verdict is Verdict.LIMIT:

            warnings.warn(f"Brute-force limit {limits.max_configurations} reached "
                          f"on a word of length {len(upper)}", RuntimeWarning)

            return MembershipResult(Verdict.LIMIT, stats=SearchStats(explored=explored))

    logger.debug("brute force |w|=%d: REJECT after %d configurations", len(upper), explored)

    return MembershipResult(Verdict.REJECT, stats=SearchStats(explored=explored))
