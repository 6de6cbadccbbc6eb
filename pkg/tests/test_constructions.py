import pytest

from wkpc_simulator import SquaresVariant
from wkpc_simulator import WKTransition
from wkpc_simulator import build_squares_system
from wkpc_simulator import squares_witness
from wkpc_simulator import boundary_count
from wkpc_simulator import search

from wkpc_simulator.constructions import get_tuple_state


def get_rows(component):

    return {(transition.source, transition.upper_read, transition.lower_read, transition.target)
            for transition in component.transitions}


# Test Tuple States

def test_tuple_state_names():

    assert get_tuple_state("q0", "", "b") == "q0_l_b"
    assert get_tuple_state("q1", "aaa", "", "b") == "q1_aaa_l_b"


# Test Squares System

def test_squares_system_shape(squares_system):

    assert squares_system.alphabet == ("a", "b", "c")
    assert squares_system.relation.pairs == (("a", "b"), ("a", "c"))
    assert squares_system.query_states == (("K1", 1), ("K2", 2))

    for component in squares_system.components:

        assert component.initial == "q0"
        assert component.finals == ("q4",)


def test_first_component_is_shared():

    corrected = build_squares_system(SquaresVariant.CORRECTED)
    as_printed = build_squares_system(SquaresVariant.AS_PRINTED)

    assert corrected.components[0] == as_printed.components[0]


def test_first_component_rows(corrected_system):

    rows = get_rows(corrected_system.components[0])

    assert ("s2", "", "", "K2") in rows
    assert ("q0", "", "b", "q0_l_b") in rows
    assert ("q0_l_b", "", "", "s2") in rows
    assert ("q1", "aaa", "", "q1_aaa_l") in rows
    assert ("q2", "aa", "b", "q2_aa_b") in rows
    assert ("q4", "", "", "q4_l_l") in rows


def test_second_component_rows(corrected_system):

    rows = get_rows(corrected_system.components[1])

    for state in ("q0", "q1", "q2", "q3", "q4"):

        assert (state, "", "", "K1") in rows

    assert ("q1_aaa_l", "a", "b", "q1_aaa_l_b") in rows
    assert ("q3_a_b_c", "", "", "q3") in rows
    assert ("q2_l_l", "a", "c", "q2_l_l_c") in rows
    assert ("q3_l_l", "a", "b", "q3_l_l_b") in rows
    assert ("q4_l_l", "a", "c", "q4_l_l_c") in rows


def test_as_printed_rows(as_printed_system):

    rows = get_rows(as_printed_system.components[1])

    assert ("q3_a_b_c", "", "", "s3") in rows
    assert ("q2_l_l", "a", "b", "q2_l_l_b") in rows
    assert ("q3_l_l", "a", "c", "q3_l_l_c") in rows
    assert ("q4_l_l", "a", "c", "q3_l_l_c") in rows

    assert "s3" in as_printed_system.components[1].states


def test_corrected_has_no_s3(corrected_system):

    assert "s3" not in corrected_system.components[1].states


def test_variant_from_string():

    assert build_squares_system("as-printed") == build_squares_system(SquaresVariant.AS_PRINTED)

    with pytest.raises(ValueError):

        build_squares_system("reprinted")


def test_transitions_are_unique(squares_system):

    for component in squares_system.components:

        assert len(set(component.transitions)) == len(component.transitions)


def test_transition_types(corrected_system):

    assert all(isinstance(transition, WKTransition)
               for component in corrected_system.components
               for transition in component.transitions)


# Test Witness Strands

@pytest.mark.parametrize("n, witness", [
    (2, "bbcc"),
    (3, "bbbcccbbb"),
    (4, "bbbbccccbbbbcccc"),
])
def test_squares_witness(n, witness):

    assert squares_witness(n) == witness
    assert boundary_count(witness) == n - 1


def test_squares_witness_too_small():

    with pytest.raises(ValueError):

        squares_witness(1)


def test_boundary_count():

    assert boundary_count("") == 0
    assert boundary_count("bcbc") == 3

    with pytest.raises(ValueError):

        boundary_count("bac")


@pytest.mark.parametrize("n", [2, 3])
def test_corrected_witness(corrected_system, n):

    result = search(corrected_system, "a" * (n * n))

    assert result.witness_lower == squares_witness(n)
