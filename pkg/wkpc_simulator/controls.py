"""
Joint control-state analysis of parallel communicating systems.

The control of a system is the tuple of its component states. Abstracting the
tapes away gives a finite graph over control tuples: a communication step is
taken exactly as on the real system, while a lockstep step is allowed for every
combination of per-component transitions, whatever the rules read. Every
control tuple met by a real run is therefore a node of this graph, and every
real step follows one of its edges.

The graph is built with the "rustworkx" graph library:

https://www.rustworkx.org/apiref/rustworkx.ancestors.html

A component is upper-live (lower-live) at a control tuple if some lockstep step
reachable from it moves the component's upper (lower) head. A configuration in
which a component still has unread input on a head that is no longer live can
never reach acceptance, so the search may discard it.
"""

import itertools
import logging

from collections import deque
from functools import lru_cache

import rustworkx


logger = logging.getLogger(__name__)


# 1) Communication

def get_receptions(system, states):

    """
    Get the state substitutions of a communication step.

    Every component in a query state K_j whose target component j is not
    itself in a query state receives the state of component j. All
    substitutions read the states before the step.

    Args:
        system (PCWKSystem): The system.
        states (tuple of str): Current component states.

    Returns:
        tuple of (int, str, str): (component, query state, received state)
        triples with 1-based component indices, in component order.
    """

    query_map = system.query_map

    receptions = []

    for index, state in enumerate(states):

        target = query_map.get(state)

        if target is None:

            continue

        target_state = states[target - 1]

        if target_state not in query_map:

            receptions.append((index + 1, state, target_state))

    return tuple(receptions)


def get_received_states(states, receptions):

    """ Apply communication substitutions to a state tuple. """

    new_states = list(states)

    for component, _, received_state in receptions:

        new_states[component - 1] = received_state

    return tuple(new_states)


# 2) Control Graph

class ControlAnalysis:

    """
    Head liveness per component over the reachable control tuples.

    Args:
        graph (PyDiGraph): Control graph with control tuples as node payloads.
        upper_live (list of set): Per component, control tuples where its
            upper head may still move.
        lower_live (list of set): Per component, control tuples where its
            lower head may still move.
    """

    def __init__(self, graph, upper_live, lower_live):

        self.graph = graph
        self.controls = set(graph.nodes())
        self.upper_live = upper_live
        self.lower_live = lower_live

    def is_doomed(self, configuration, length):

        """
        Check whether a configuration can no longer reach acceptance.

        Args:
            configuration (SystemConfiguration): The configuration.
            length (int): Length of the input word.

        Returns:
            bool: True if some component has unread input on a head that no
            reachable step moves again.
        """

        control = configuration.states

        if control not in self.controls:

            return False

        for index in range(len(control)):

            if (configuration.upper_positions[index] < length
                    and control not in self.upper_live[index]):

                return True

            if (configuration.lower_positions[index] < length
                    and control not in self.lower_live[index]):

                return True

        return False


def get_control_graph(system):

    """
    Build the graph of control tuples reachable from the initial states.

    Args:
        system (PCWKSystem): The system.

    Returns:
        tuple: (graph, upper_sources, lower_sources) where graph is a
        rustworkx PyDiGraph with control tuples as node payloads, and the
        source lists hold, per component, the node indices with an outgoing
        lockstep step that moves that component's upper / lower head.
    """

    components = system.components
    degree = len(components)

    graph = rustworkx.PyDiGraph()

    initial = tuple(component.initial for component in components)

    indices = {initial: graph.add_node(initial)}

    upper_sources = [set() for _ in range(degree)]
    lower_sources = [set() for _ in range(degree)]

    queue = deque([initial])

    while queue:

        control = queue.popleft()

        node_index = indices[control]

        # Communication Step

        if any(state in system.query_map for state in control):

            receptions = get_receptions(system, control)

            successors = {get_received_states(control, receptions)}

        # Lockstep Step

        else:

            choices = [component.get_transitions(state)
                       for component, state in zip(components, control)]

            if not all(choices):

                continue

            for index, transitions in enumerate(choices):

                if any(transition.upper_read for transition in transitions):
                    upper_sources[index].add(node_index)

                if any(transition.lower_read for transition in transitions):
                    lower_sources[index].add(node_index)

            targets = [dict.fromkeys(transition.target for transition in transitions)
                       for transitions in choices]

            successors = set(itertools.product(*targets))

        # Edges

        for successor in successors:

            if successor not in indices:

                indices[successor] = graph.add_node(successor)

                queue.append(successor)

            graph.add_edge(node_index, indices[successor], None)

    return graph, upper_sources, lower_sources


def get_live_controls(graph, sources):

    """
    Get the control tuples from which some source node is reachable.

    Args:
        graph (PyDiGraph): Control graph.
        sources (set of int): Node indices.

    Returns:
        set of tuple: Payloads of the sources and of all their ancestors.
    """

    if not sources:

        return set()

    # Single Sink

    augmented_graph = graph.copy()

    sink = augmented_graph.add_node(None)

    augmented_graph.add_edges_from_no_data([(source, sink) for source in sources])

    live_indices = rustworkx.ancestors(augmented_graph, sink)

    return {graph[node_index] for node_index in live_indices}


@lru_cache(maxsize=64)
def get_control_analysis(system):

    """
    Get the head liveness analysis of a system (cached per system).

    Args:
        system (PCWKSystem): The system.

    Returns:
        ControlAnalysis: Liveness sets for every component and head.
    """

    graph, upper_sources, lower_sources = get_control_graph(system)

    upper_live = [get_live_controls(graph, sources) for sources in upper_sources]
    lower_live = [get_live_controls(graph, sources) for sources in lower_sources]

    logger.debug("Control graph: %d control tuples, %d edges",
                 graph.num_nodes(), graph.num_edges())

    return ControlAnalysis(graph, upper_live, lower_live)
