import pytest

from wkpc_simulator import ComplementarityRelation
from wkpc_simulator import WKTransition
from wkpc_simulator import PCWKSystem
from wkpc_simulator import SquaresVariant
from wkpc_simulator import get_automaton
from wkpc_simulator import build_squares_system


VARIANTS = list(SquaresVariant)

IDENTITY_PAIRS = (("a", "a"), ("b", "b"))

SQUARES_PAIRS = (("a", "b"), ("a", "c"))


# Relations

@pytest.fixture
def squares_relation():

    return ComplementarityRelation(SQUARES_PAIRS)


@pytest.fixture
def identity_relation():

    return ComplementarityRelation(IDENTITY_PAIRS)


# Squares Systems

@pytest.fixture(scope="session", params=VARIANTS)
def squares_variant(request):

    return request.param


@pytest.fixture(scope="session")
def squares_system(squares_variant):

    return build_squares_system(squares_variant)


@pytest.fixture(scope="session")
def corrected_system():

    return build_squares_system(SquaresVariant.CORRECTED)


@pytest.fixture(scope="session")
def as_printed_system():

    return build_squares_system(SquaresVariant.AS_PRINTED)


# Small Automata

@pytest.fixture
def anbn_automaton(identity_relation):

    """
    Accepts a^n b^n, n >= 1: the upper head runs over the a's, then both
    heads move together, then the lower head reads the b's alone.
    """

    transitions = [
        WKTransition("q0", "a", "", "q0"),
        WKTransition("q0", "b", "a", "q1"),
        WKTransition("q1", "b", "a", "q1"),
        WKTransition("q1", "", "b", "q1"),
    ]

    return get_automaton(alphabet=("a", "b"),
                         relation=identity_relation,
                         initial="q0",
                         finals=["q1"],
                         transitions=transitions)


@pytest.fixture
def anbn_system(anbn_automaton):

    return PCWKSystem(alphabet=anbn_automaton.alphabet,
                      relation=anbn_automaton.relation,
                      components=(anbn_automaton,))


@pytest.fixture
def query_system(identity_relation):

    """
    Component 1 asks component 2 for its state right away while component 2
    reads one symbol on both strands; afterwards component 2 may idle until
    component 1 catches up. Accepts a^n, n >= 1.
    """

    first = get_automaton(alphabet=("a", "b"),
                          relation=identity_relation,
                          initial="q0",
                          finals=["p"],
                          transitions=[WKTransition("q0", "", "", "K2"),
                                       WKTransition("p", "a", "a", "p")],
                          states=("q0", "K2", "p"))

    second = get_automaton(alphabet=("a", "b"),
                           relation=identity_relation,
                           initial="q0",
                           finals=["p"],
                           transitions=[WKTransition("q0", "a", "a", "p"),
                                        WKTransition("p", "a", "a", "p"),
                                        WKTransition("p", "", "", "p")])

    return PCWKSystem(alphabet=("a", "b"),
                      relation=identity_relation,
                      components=(first, second),
                      query_states=(("K2", 2),))


@pytest.fixture
def mutual_query_system(identity_relation):

    """ Both components enter query states for each other in the first step. """

    components = []

    for query_state in ("K2", "K1"):

        component = get_automaton(alphabet=("a", "b"),
                                  relation=identity_relation,
                                  initial="q0",
                                  finals=["q0"],
                                  transitions=[WKTransition("q0", "", "", query_state)])

        components.append(component)

    return PCWKSystem(alphabet=("a", "b"),
                      relation=identity_relation,
                      components=tuple(components),
                      query_states=(("K1", 1), ("K2", 2)))
