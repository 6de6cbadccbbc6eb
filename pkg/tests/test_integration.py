import pytest

from wkpc_simulator import Verdict
from wkpc_simulator import search
from wkpc_simulator import brute_force_accepts
from wkpc_simulator import squares_witness
from wkpc_simulator import cross_check
from wkpc_simulator import get_random_system
from wkpc_simulator import get_all_words

from tests.integration import get_upper_chunk_counts
from tests.integration import get_first_read_configuration
from tests.integration import compare_engines
from tests.integration import compare_engines_on_words
from tests.integration import get_acceptance_counts
from tests.integration import BRUTE_FORCE_LIMITS


# Parameters

SCAN_MAX_LENGTH = 100

FAST_SCAN_MAX_LENGTH = 36

ORACLE_MAX_LENGTH = 8
ORACLE_MAX_LENGTH_SLOW = 12

RANDOM_SEEDS = range(5)
RANDOM_SEEDS_SLOW = range(50)

RANDOM_MAX_LENGTH = 4
RANDOM_MAX_LENGTH_SLOW = 6


def get_words_count(system, max_length):

    return len(list(get_all_words(system.alphabet, max_length)))


# Test Squares Language

def test_cross_check_squares(corrected_system):

    ok, discrepancies = cross_check(corrected_system, "a", FAST_SCAN_MAX_LENGTH)

    assert ok, discrepancies


@pytest.mark.slow
@pytest.mark.parametrize("max_length", [64, SCAN_MAX_LENGTH])
def test_cross_check_squares_full(corrected_system, max_length):

    ok, discrepancies = cross_check(corrected_system, "a", max_length, workers=2)

    assert ok, discrepancies


@pytest.mark.parametrize("n", [2, 3, 4])
def test_head_lag(corrected_system, n):

    upper = "a" * (n * n)

    result = search(corrected_system, upper)

    assert result.witness_lower == squares_witness(n)

    configuration = get_first_read_configuration(corrected_system, upper, result.trace, 0, "c")

    assert configuration.upper_positions[0] == 0
    assert configuration.lower_positions[0] == n + 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_upper_chunk_counts(corrected_system, n):

    result = search(corrected_system, "a" * (n * n))

    counts = get_upper_chunk_counts(result.trace, 0)

    assert counts[3] == 1
    assert counts[2] == n - 2
    assert counts[1] == (n - 1) ** 2

    assert sum(size * count for size, count in counts.items()) == n * n


# Test Engine Agreement

def test_squares_oracle(squares_system):

    words = ["a" * m for m in range(ORACLE_MAX_LENGTH + 1)]

    disagreements, decided_count = compare_engines(squares_system, words)

    assert disagreements == []
    assert decided_count == len(words)


@pytest.mark.slow
def test_squares_oracle_full(squares_system):

    words = ["a" * m for m in range(ORACLE_MAX_LENGTH_SLOW + 1)]

    disagreements, decided_count = compare_engines(squares_system, words)

    assert disagreements == []
    assert decided_count == len(words)


@pytest.mark.parametrize("seed", RANDOM_SEEDS)
@pytest.mark.parametrize("degree", [1, 2])
def test_random_systems(seed, degree):

    system = get_random_system(degree=degree, seed=seed)

    disagreements, decided_count = compare_engines_on_words(system, RANDOM_MAX_LENGTH)

    assert disagreements == []
    assert decided_count == get_words_count(system, RANDOM_MAX_LENGTH)


@pytest.mark.slow
@pytest.mark.parametrize("seed", RANDOM_SEEDS_SLOW)
@pytest.mark.parametrize("degree", [1, 2])
def test_random_systems_full(seed, degree):

    system = get_random_system(degree=degree, states_count=6, seed=seed)

    disagreements, decided_count = compare_engines_on_words(system, RANDOM_MAX_LENGTH_SLOW)

    assert disagreements == []
    assert decided_count == get_words_count(system, RANDOM_MAX_LENGTH_SLOW)


# Test Communication

@pytest.mark.parametrize("seed", RANDOM_SEEDS)
def test_random_systems_communicate(seed):

    system = get_random_system(degree=2, seed=seed)

    counts = get_acceptance_counts(system, RANDOM_MAX_LENGTH)

    # every power of the first symbol, at least
    assert counts["accepted"] >= RANDOM_MAX_LENGTH + 1
    assert counts["communicating"] == counts["accepted"]


def test_random_systems_reject_words():

    rejected = sum(get_acceptance_counts(get_random_system(degree=2, seed=seed),
                                         RANDOM_MAX_LENGTH)["rejected"]
                   for seed in RANDOM_SEEDS)

    assert rejected > 0


@pytest.mark.slow
@pytest.mark.parametrize("seed", RANDOM_SEEDS_SLOW)
def test_random_systems_communicate_full(seed):

    system = get_random_system(degree=2, states_count=6, seed=seed)

    counts = get_acceptance_counts(system, RANDOM_MAX_LENGTH_SLOW)

    assert counts["accepted"] >= RANDOM_MAX_LENGTH_SLOW + 1
    assert counts["communicating"] == counts["accepted"]


# Test Empty Word

def test_empty_word_agrees(anbn_system, query_system, mutual_query_system, corrected_system):

    for system in (anbn_system, query_system, mutual_query_system, corrected_system):

        lazy = search(system, "")
        brute = brute_force_accepts(system, "", BRUTE_FORCE_LIMITS)

        assert lazy.verdict is brute.verdict
        assert lazy.verdict is not Verdict.LIMIT


@pytest.mark.parametrize("seed", RANDOM_SEEDS)
def test_empty_word_random(seed):

    system = get_random_system(degree=2, seed=seed)

    assert search(system, "").verdict is brute_force_accepts(system, "", BRUTE_FORCE_LIMITS).verdict
