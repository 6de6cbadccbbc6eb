"""
Watson-Crick finite automata.

A Watson-Crick automaton is a finite automaton with two read heads working on
the two strands of a double-stranded tape. Both heads are driven by a single
state; a transition q(w1/w2) -> q' reads the chunk w1 with the upper head and
the chunk w2 with the lower head, where either chunk may be empty.

The lower strand is not part of the input: a word is accepted when some lower
strand complementary to it admits an accepting derivation. Membership is
therefore decided by the nondeterministic search of `wkpc_simulator.engine`,
with the automaton wrapped as a system of degree 1.
"""

from dataclasses import dataclass

from functools import cached_property

from wkpc_simulator.core import LAMBDA
from wkpc_simulator.core import check_alphabet
from wkpc_simulator.core import check_word


@dataclass(frozen=True)
class WKTransition:

    """
    Transition rule q(upper_read/lower_read) -> q'.

    Args:
        source (str): State the rule starts from.
        upper_read (str): Chunk read on the upper strand (may be λ).
        lower_read (str): Chunk read on the lower strand (may be λ).
        target (str): State the rule moves to.
    """

    source: str
    upper_read: str
    lower_read: str
    target: str

    def __str__(self):

        upper = self.upper_read or "λ"
        lower = self.lower_read or "λ"

        return f"{self.source} --{upper}/{lower}--> {self.target}"

    def is_silent(self):

        """ True for λ/λ rules, which move no head. """

        return self.upper_read == LAMBDA and self.lower_read == LAMBDA


@dataclass(frozen=True)
class WKAutomaton:

    """
    Watson-Crick finite automaton M = (V, ρ, Q, q0, F, δ).

    States, finals and transitions are kept as tuples in declaration order so
    that searches and serializations are reproducible.

    Args:
        alphabet (tuple of str): Input alphabet V.
        relation (ComplementarityRelation): Complementarity relation ρ.
        states (tuple of str): State set Q.
        initial (str): Initial state q0.
        finals (tuple of str): Final states F.
        transitions (tuple of WKTransition): Transition rules δ.

    Raises:
        ValueError: If the initial state, a final state or a transition
        endpoint is not a state, or a transition reads an unknown symbol.
    """

    alphabet: tuple
    relation: object
    states: tuple
    initial: str
    finals: tuple
    transitions: tuple

    def __post_init__(self):

        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "finals", tuple(self.finals))
        object.__setattr__(self, "transitions", tuple(self.transitions))

        states = set(self.states)

        if not states:

            raise ValueError("Automaton has no states")

        if any(not state for state in self.states):

            raise ValueError("State names must be nonempty")

        if self.initial not in states:

            raise ValueError(f"Initial state '{self.initial}' is not a state")

        for final in self.finals:

            if final not in states:

                raise ValueError(f"Final state '{final}' is not a state")

        for transition in self.transitions:

            for state in (transition.source, transition.target):

                if state not in states:

                    raise ValueError(f"Transition {transition} uses undeclared state '{state}'")

            check_word(self.alphabet, transition.upper_read)
            check_word(self.alphabet, transition.lower_read)

        for symbol in self.relation.get_symbols():

            if symbol not in self.alphabet:

                raise ValueError(f"Relation symbol '{symbol}' is not in the alphabet")

    @cached_property
    def transition_table(self):

        """ Transitions grouped by source state, in declaration order. """

        table = {}

        for transition in self.transitions:

            table.setdefault(transition.source, []).append(transition)

        return {state: tuple(transitions) for state, transitions in table.items()}

    def get_transitions(self, state):

        return self.transition_table.get(state, ())

    def is_final(self, state):

        return state in self.finals


def get_automaton(alphabet, relation, initial, finals, transitions, states=None):

    """
    Build a Watson-Crick automaton, deriving its states when not given.

    Args:
        alphabet (iterable of str): Input alphabet.
        relation (ComplementarityRelation): Complementarity relation.
        initial (str): Initial state.
        finals (iterable of str): Final states.
        transitions (iterable of WKTransition): Transition rules.
        states (iterable of str, optional): Explicit state set. If None,
            the states are collected in first-appearance order from the
            initial state, the transitions and the final states.

    Returns:
        WKAutomaton: The automaton.
    """

    transitions = tuple(transitions)
    finals = tuple(finals)

    if states is None:

        appearances = [initial]

        for transition in transitions:

            appearances.extend([transition.source, transition.target])

        appearances.extend(finals)

        states = tuple(dict.fromkeys(appearances))

    return WKAutomaton(alphabet=tuple(alphabet),
                       relation=relation,
                       states=tuple(states),
                       initial=initial,
                       finals=finals,
                       transitions=transitions)


def applicable_transitions(automaton, state, upper_remaining, lower_remaining):

    """
    Get transitions applicable in a state to the unread parts of both strands.

    Args:
        automaton (WKAutomaton): The automaton.
        state (str): Current state.
        upper_remaining (str): Unread part of the upper strand.
        lower_remaining (str): Unread part of the lower strand.

    Returns:
        list of WKTransition: Rules leaving `state` whose upper and lower
        chunks are prefixes of the remaining strands, in declaration order.
    """

    return [transition for transition in automaton.get_transitions(state)
            if upper_remaining.startswith(transition.upper_read)
            and lower_remaining.startswith(transition.lower_read)]


def wk_accepts(automaton, upper, limits=None, **key_arguments):

    """
    Decide membership of a word in L(M).

    The automaton is wrapped as a system of degree 1 without query states
    and handed to the system search.

    Args:
        automaton (WKAutomaton): The automaton.
        upper (str): Input word.
        limits (SearchLimits, optional): Search budget.
        **key_arguments: Additional keyword arguments for `search`.

    Returns:
        MembershipResult: ACCEPT with witness lower strand and trace,
        REJECT, or LIMIT.
    """

    from wkpc_simulator.engine import PCWKSystem
    from wkpc_simulator.engine import search

    system = PCWKSystem(alphabet=automaton.alphabet,
                        relation=automaton.relation,
                        components=(automaton,))

    return search(system, upper, limits, **key_arguments)
