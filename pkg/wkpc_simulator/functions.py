""" Service Functions used for WKPC Simulator examples and checks. """

import itertools

from dataclasses import replace

import numpy as np

from wkpc_simulator.core import LAMBDA
from wkpc_simulator.core import ComplementarityRelation
from wkpc_simulator.automaton import WKTransition
from wkpc_simulator.automaton import WKAutomaton
from wkpc_simulator.engine import PCWKSystem


FINALS_RATE = 0.5


# 1) Get All Words

def get_all_words(alphabet, max_length):

    """
    Enumerate every word over an alphabet up to a length.

    Args:
        alphabet (iterable of str): Symbols.
        max_length (int): Largest word length.

    Yields:
        str: Words ordered by length, then lexicographically in alphabet order.
    """

    alphabet = list(alphabet)

    for length in range(max_length + 1):

        for symbols in itertools.product(alphabet, repeat=length):

            yield "".join(symbols)


# 2) Get Random Relation

def get_random_relation(alphabet, generator):

    """
    Draw a complementarity relation in which every symbol has a complement.

    Args:
        alphabet (tuple of str): Symbols.
        generator (numpy.random.Generator): Random generator.

    Returns:
        ComplementarityRelation: Relation with pairs in alphabet order.
    """

    pairs = []

    for symbol in alphabet:

        mask = generator.random(len(alphabet)) < 0.5

        if not mask.any():

            mask[generator.integers(len(alphabet))] = True

        pairs += [(symbol, complement) for complement, chosen in zip(alphabet, mask) if chosen]

    return ComplementarityRelation(pairs)


def get_random_chunk(generator, symbols, max_read):

    length = int(generator.integers(0, max_read + 1))

    return "".join(symbols[index] for index in generator.integers(0, len(symbols), size=length))


# 3) Get Random Automaton

def get_random_automaton(alphabet, relation,
                         states_count=4, transitions_count=8, max_read=2,
                         query_states=(), idle_finals=False, generator=None, seed=None):

    """
    Generate a random Watson-Crick automaton.

    States are named q0, q1, ...; q0 is initial. Query states, if any, are
    extra states that transitions may lead into but never leave.
    About half of the ordinary states are final.
    Args:
        alphabet (tuple of str): Input alphabet.
        relation (ComplementarityRelation): Complementarity relation.
        states_count (int, optional): Number of ordinary states.
        transitions_count (int, optional): Number of transitions.
        max_read (int, optional): Longest upper or lower chunk.
        query_states (tuple of str, optional): Query states of the component.
        idle_finals (bool, optional): Give every final state a λ/λ loop, so
            that a component that has read its input can wait for the others.
        generator (numpy.random.Generator, optional): Random generator.
        seed (int, optional): Seed used when no generator is given.

    Returns:
        WKAutomaton: The automaton.
    """

    if generator is None:

        generator = np.random.default_rng(seed)

    alphabet = tuple(alphabet)

    states = [f"q{index}" for index in range(states_count)]

    targets = states + list(query_states)

    lower_symbols = tuple(dict.fromkeys(lower for _, lower in relation.pairs))

    transitions = []

    for _ in range(transitions_count):

        transition = WKTransition(source=states[generator.integers(len(states))],
                                  upper_read=get_random_chunk(generator, alphabet, max_read),
                                  lower_read=get_random_chunk(generator, lower_symbols, max_read),
                                  target=targets[generator.integers(len(targets))])

        if transition not in transitions:

            transitions.append(transition)

    # Final States

    finals_mask = generator.random(states_count) < FINALS_RATE

    if not finals_mask.any():

        finals_mask[generator.integers(states_count)] = True

    finals = tuple(state for state, final in zip(states, finals_mask) if final)

    if idle_finals:

        for final in finals:

            loop = WKTransition(final, LAMBDA, LAMBDA, final)

            if loop not in transitions:
                transitions.append(loop)

    return WKAutomaton(alphabet=alphabet,
                       relation=relation,
                       states=tuple(targets),
                       initial="q0",
                       finals=finals,
                       transitions=tuple(transitions))


# 4) Get Random System

def add_transitions(automaton, transitions):

    added = [transition for transition in transitions if transition not in automaton.transitions]

    return automaton.transitions + tuple(added)


def add_communication_backbone(first, second):

    """
    Wire two random components so that accepting runs communicate.

    Component 1 leaves q0 only through q0 λ/λ -> K2 and q0 is not final for
    it, so every accepting run of component 1 goes through a communication
    step. Component 2 may move q0 λ/λ -> q1; q1 is final in both components
    and reads the first alphabet symbol against its first complement, so the
    system accepts every power of that symbol.

    Args:
        first (WKAutomaton): Component 1, with the query state K2.
        second (WKAutomaton): Component 2.

    Returns:
        tuple of WKAutomaton: The rewired components.
    """

    symbol = first.alphabet[0]
    complement = first.relation.get_complements(symbol)[0]

    reading = WKTransition("q1", symbol, complement, "q1")

    # Component 1

    first_transitions = (WKTransition("q0", LAMBDA, LAMBDA, "K2"),)
    first_transitions += tuple(transition for transition in first.transitions
                               if transition.source != "q0")

    first_finals = tuple(dict.fromkeys(
        [final for final in first.finals if final != "q0"] + ["q1"]))

    first = replace(first, finals=first_finals, transitions=first_transitions)

    first = replace(first, transitions=add_transitions(
        first, [reading, WKTransition("q1", LAMBDA, LAMBDA, "q1")]))

    # Component 2

    second = replace(second, finals=tuple(dict.fromkeys(second.finals + ("q1",))))

    second = replace(second, transitions=add_transitions(
        second, [WKTransition("q0", LAMBDA, LAMBDA, "q1"), reading,
                 WKTransition("q1", LAMBDA, LAMBDA, "q1")]))

    return first, second


def get_random_system(degree=1, alphabet=("a", "b"),
                      states_count=4, transitions_count=8, max_read=2,
                      with_queries=True, seed=None):

    """
    Generate a random PC Watson-Crick automata system of degree 1 or 2.

    Degree-2 systems give their final states λ/λ loops. With queries,
    component 1 gets the query state K2, component 2 gets K1 and the
    components are wired by `add_communication_backbone`.

    Args:
        degree (int, optional): Number of components, 1 or 2.
        alphabet (tuple of str, optional): Input alphabet.
        states_count (int, optional): Ordinary states per component, at
            least 2.
        transitions_count (int, optional): Random transitions per component.
        max_read (int, optional): Longest upper or lower chunk.
        with_queries (bool, optional): Add query states for degree 2.
        seed (int, optional): Seed of the numpy generator.

    Returns:
        PCWKSystem: The system.
    """

    if degree not in (1, 2):

        raise ValueError(f"Random systems have degree 1 or 2, got {degree}")

    if states_count < 2:

        raise ValueError(f"Random systems need at least 2 states, got {states_count}")

    generator = np.random.default_rng(seed)

    alphabet = tuple(alphabet)

    relation = get_random_relation(alphabet, generator)

    use_queries = with_queries and degree == 2

    components = []

    for index in range(1, degree + 1):

        query_states = (f"K{3 - index}",) if use_queries else ()

        component = get_random_automaton(alphabet, relation,
                                         states_count=states_count,
                                         transitions_count=transitions_count,
                                         max_read=max_read,
                                         query_states=query_states,
                                         idle_finals=degree == 2,
                                         generator=generator)

        components.append(component)

    if use_queries:

        components = add_communication_backbone(*components)

    query_map = (("K2", 2), ("K1", 1)) if use_queries else ()

    return PCWKSystem(alphabet=alphabet,
                      relation=relation,
                      components=tuple(components),
                      query_states=query_map)
