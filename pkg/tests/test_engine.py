import pytest

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from wkpc_simulator import PCWKSystem
from wkpc_simulator import SystemConfiguration
from wkpc_simulator import Rule1Step
from wkpc_simulator import Rule2Step
from wkpc_simulator import SearchLimits
from wkpc_simulator import TraceError
from wkpc_simulator import Verdict
from wkpc_simulator import WKTransition
from wkpc_simulator import get_search_limits
from wkpc_simulator import initial_configuration
from wkpc_simulator import is_accepting
from wkpc_simulator import get_canonical_key
from wkpc_simulator import rule1_successors
from wkpc_simulator import rule2_successor
from wkpc_simulator import successors
from wkpc_simulator import search
from wkpc_simulator import replay_trace
from wkpc_simulator import check_trace
from wkpc_simulator import validate_trace
from wkpc_simulator import get_trace_report
from wkpc_simulator import is_valid_double_strand
from wkpc_simulator import get_random_system
from wkpc_simulator import get_all_words

from wkpc_simulator.engine import DEFAULT_MAX_CONFIGURATIONS
from wkpc_simulator.engine import get_steps


def explore(system, upper, max_configurations=2000):

    """ Enumerate reachable (configuration, step, successor) triples breadth-first. """

    initial = initial_configuration(system)

    seen = {initial}
    queue = [initial]

    for configuration in queue:

        if len(seen) > max_configurations:

            return

        for step, successor in get_steps(system, configuration, upper):

            yield configuration, step, successor

            if successor not in seen:

                seen.add(successor)
                queue.append(successor)


# Test Systems

def test_system_requires_component(identity_relation):

    with pytest.raises(ValueError, match="At least one component required"):

        PCWKSystem(alphabet=("a", "b"), relation=identity_relation, components=())


def test_query_target_missing(anbn_automaton):

    with pytest.raises(ValueError, match="targets missing component 2"):

        PCWKSystem(alphabet=("a", "b"),
                   relation=anbn_automaton.relation,
                   components=(anbn_automaton,),
                   query_states=(("q1", 2),))


def test_query_state_not_a_state(anbn_automaton):

    with pytest.raises(ValueError, match="not a state of any component"):

        PCWKSystem(alphabet=("a", "b"),
                   relation=anbn_automaton.relation,
                   components=(anbn_automaton,),
                   query_states=(("K1", 1),))


def test_component_alphabet_mismatch(anbn_automaton):

    with pytest.raises(ValueError, match="alphabet differs"):

        PCWKSystem(alphabet=("a", "b", "c"),
                   relation=anbn_automaton.relation,
                   components=(anbn_automaton,))


def test_query_map(corrected_system):

    assert corrected_system.query_map == {"K1": 1, "K2": 2}
    assert corrected_system.degree == 2


# Test Configurations

def test_initial_configuration(corrected_system):

    initial = initial_configuration(corrected_system)

    assert initial == SystemConfiguration(("q0", "q0"), (0, 0), (0, 0), "")


def test_canonical_key_drops_read_prefix():

    configuration = SystemConfiguration(("p", "q"), (1, 2), (2, 3), "bcb")

    assert get_canonical_key(configuration) == (("p", "q"), (1, 2), (2, 3), "b")
    assert get_canonical_key(configuration, canonical_keys=False) == configuration


def test_lazy_commitment(corrected_system):

    initial = initial_configuration(corrected_system)

    committed = [successor.committed_lower
                 for successor in rule1_successors(corrected_system, initial, "aaaa")]

    assert committed == ["b", "c"]


def test_lazy_commitment_respects_relation(squares_system):

    initial = initial_configuration(squares_system)

    # 'b' has no complement, so no lower symbol can be committed.

    assert rule1_successors(squares_system, initial, "b") == []


def test_rule1_with_query_state(query_system):

    configuration = SystemConfiguration(("K2", "p"), (0, 1), (0, 1), "a")

    with pytest.raises(ValueError):

        rule1_successors(query_system, configuration, "aa")


def test_rule2_without_query_state(query_system):

    with pytest.raises(ValueError):

        rule2_successor(query_system, initial_configuration(query_system))


def test_rule2_keeps_heads(query_system):

    (configuration,) = successors(query_system, initial_configuration(query_system), "aa")

    assert configuration == SystemConfiguration(("K2", "p"), (0, 1), (0, 1), "a")

    received = rule2_successor(query_system, configuration)

    assert received.states == ("p", "p")
    assert received.upper_positions == configuration.upper_positions
    assert received.lower_positions == configuration.lower_positions
    assert received.committed_lower == configuration.committed_lower


def test_mutual_query_is_stuck(mutual_query_system):

    (configuration,) = successors(mutual_query_system,
                                  initial_configuration(mutual_query_system), "a")

    assert configuration.states == ("K2", "K1")
    assert successors(mutual_query_system, configuration, "a") == []


def test_mutual_query_rejects(mutual_query_system):

    assert search(mutual_query_system, "a").verdict is Verdict.REJECT


def test_empty_word_acceptance(mutual_query_system, corrected_system):

    initial = initial_configuration(mutual_query_system)

    assert is_accepting(mutual_query_system, initial, "")
    assert search(mutual_query_system, "").verdict is Verdict.ACCEPT

    assert search(corrected_system, "").verdict is Verdict.REJECT


def test_accepting_configuration(query_system):

    configuration = SystemConfiguration(("p", "p"), (2, 2), (2, 2), "aa")

    assert is_accepting(query_system, configuration, "aa")


def test_lower_head_short_is_not_accepting(query_system):

    configuration = SystemConfiguration(("p", "p"), (2, 2), (2, 1), "aa")

    assert not is_accepting(query_system, configuration, "aa")


def test_non_final_state_is_not_accepting(query_system):

    configuration = SystemConfiguration(("p", "q0"), (2, 2), (2, 2), "aa")

    assert not is_accepting(query_system, configuration, "aa")


def test_final_state_with_lower_remaining(anbn_system):

    configuration = SystemConfiguration(("q1",), (3,), (1,), "a")

    assert not is_accepting(anbn_system, configuration, "aab")
    assert search(anbn_system, "aab").verdict is Verdict.REJECT


# Test Search

@pytest.mark.parametrize("word, verdict", [
    ("", Verdict.REJECT),
    ("a", Verdict.ACCEPT),
    ("aaa", Verdict.ACCEPT),
    ("b", Verdict.REJECT),
    ("ab", Verdict.REJECT),
])
def test_query_system_search(query_system, word, verdict):

    assert search(query_system, word).verdict is verdict


def test_search_result_fields(corrected_system):

    result = search(corrected_system, "aaaa")

    assert result.accepted
    assert result.witness_lower == "bbcc"
    assert result.trace.final.committed_lower == "bbcc"
    assert result.stats.explored > 0


def test_rejection_has_no_witness(corrected_system):

    result = search(corrected_system, "aaa")

    assert result.verdict is Verdict.REJECT
    assert result.witness_lower is None
    assert result.trace is None


@pytest.mark.parametrize("length", range(7))
def test_search_switches_agree(squares_system, length):

    word = "a" * length

    reference = search(squares_system, word).verdict

    assert search(squares_system, word, canonical_keys=False).verdict is reference
    assert search(squares_system, word, prune=False).verdict is reference


def assert_switches_agree(system, max_length):

    for word in get_all_words(system.alphabet, max_length):

        reference = search(system, word).verdict

        for switches in ({"canonical_keys": False}, {"prune": False},
                         {"canonical_keys": False, "prune": False}):

            assert search(system, word, **switches).verdict is reference, (word, switches)


def test_search_switches_agree_small_systems(anbn_system, query_system, mutual_query_system):

    for system in (anbn_system, query_system, mutual_query_system):

        assert_switches_agree(system, 5)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("degree", [1, 2])
def test_search_switches_agree_random(seed, degree):

    assert_switches_agree(get_random_system(degree=degree, seed=seed), 4)


def test_search_limit(corrected_system):

    with pytest.warns(RuntimeWarning, match="Configuration limit 3"):

        result = search(corrected_system, "aaaa", SearchLimits(max_configurations=3))

    assert result.verdict is Verdict.LIMIT
    assert result.stats.explored == 3


def test_strand_limit(corrected_system):

    with pytest.warns(RuntimeWarning, match="Strand limit"):

        result = search(corrected_system, "aaaa", SearchLimits(max_strand_length=2))

    assert result.verdict is Verdict.LIMIT


def test_search_unknown_symbol(corrected_system):

    with pytest.raises(ValueError, match="Unknown symbol 'x'"):

        search(corrected_system, "axa")


def test_search_unexpected_argument(corrected_system):

    with pytest.raises(TypeError):

        search(corrected_system, "aaaa", seed=1)


def test_search_callback(corrected_system):

    depths = []

    def callback(**parameters):

        depths.append(parameters["depth"])

    search(corrected_system, "aaaa", callback=callback)

    assert depths == list(range(len(depths)))
    assert depths


def test_get_search_limits():

    assert get_search_limits() == SearchLimits(DEFAULT_MAX_CONFIGURATIONS, None)
    assert get_search_limits(max_configurations=5, max_strand_length=3) == SearchLimits(5, 3)

    with pytest.raises(ValueError):

        get_search_limits(max_configurations=0)

    with pytest.raises(TypeError):

        get_search_limits(workers=2)


# Test Traces

def test_trace_opening_steps(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    assert trace.steps[0] == Rule1Step((WKTransition("q0", "", "b", "q0_l_b"),
                                        WKTransition("q0", "", "", "K1")))

    assert trace.steps[1] == Rule2Step(((2, "K1", "q0_l_b"),))


def test_replay_trace(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    configurations = replay_trace(corrected_system, "aaaa", trace)

    assert len(configurations) == len(trace.steps) + 1
    assert configurations[-1] == trace.final

    for step, before, after in zip(trace.steps, configurations, configurations[1:]):

        if isinstance(step, Rule2Step):

            assert before.upper_positions == after.upper_positions
            assert before.lower_positions == after.lower_positions
            assert before.committed_lower == after.committed_lower


def test_valid_trace(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    assert validate_trace(corrected_system, "aaaa", trace)
    assert get_trace_report(corrected_system, "aaaa", trace) is None


def test_trace_missing_step(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    tampered = trace._replace(steps=trace.steps[1:])

    with pytest.raises(TraceError) as error:

        check_trace(corrected_system, "aaaa", tampered)

    assert error.value.step == 0


def test_trace_wrong_reception(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    steps = list(trace.steps)
    steps[1] = Rule2Step(((2, "K1", "q0_l_c"),))

    tampered = trace._replace(steps=tuple(steps))

    assert not validate_trace(corrected_system, "aaaa", tampered)
    assert get_trace_report(corrected_system, "aaaa", tampered).startswith("step 1:")


def test_trace_wrong_final(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    with pytest.raises(TraceError) as error:

        check_trace(corrected_system, "aaaa", trace._replace(final=trace.initial))

    assert error.value.step is None


def test_trace_on_other_word(corrected_system):

    trace = search(corrected_system, "aaaa").trace

    assert not validate_trace(corrected_system, "aaaaa", trace)


# Test Invariants

@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10 ** 6),
       upper=st.text(alphabet="ab", max_size=4))
def test_step_invariants(seed, upper):

    system = get_random_system(degree=2, states_count=3, transitions_count=6, seed=seed)

    for configuration, step, successor in explore(system, upper):

        # Committed strand is complementary and as long as the furthest lower head.

        committed = successor.committed_lower

        assert len(committed) == max(successor.lower_positions)
        assert is_valid_double_strand(system.relation, upper[:len(committed)], committed)
        assert committed.startswith(configuration.committed_lower)

        if isinstance(step, Rule2Step):

            assert successor.upper_positions == configuration.upper_positions
            assert successor.lower_positions == configuration.lower_positions
            assert committed == configuration.committed_lower
