"""
Two-component system accepting the unary language {a^(n²) : n > 1}.

Over V = {a, b, c} with the non-injective relation ρ = {(a, b), (a, c)}, every
word a^m has 2^m complementary lower strands. a^m belongs to the language iff
one of them consists of n alternating blocks b^n c^n b^n ... of length n each,
that is a strand with n - 1 boundaries ('bc' or 'cb' pairs) whose first block
has length n.

Component A1 walks its lower head over the first block and the first 'c',
leaving its upper head n symbols behind. From then on every lower symbol read
by A1 costs one upper 'a', every boundary one extra 'a' (two extra at the first
boundary), so both heads of A1 finish together iff there are n - 1 boundaries.
Component A2 trails A1 by exactly n lower positions and, queried after every A1
step, checks that the symbol n positions back differs, which forces blocks of
equal length. A1 hands control over through the state s2 and the query state
K2; A2 answers through K1.

The transition table is kept in two variants. AS_PRINTED is the table exactly
as published. CORRECTED repairs three entries:

- the target s3 of A2's rule on (q3, a, b, c) is q3 (s3 occurs nowhere else);
- the two endgame rows of A2 read the letter of the block A1 has just
  finished: (q2, λ, λ) reads a/c and (q3, λ, λ) reads a/b;
- A2's rule (q4, λ, λ) a/c leads to (q4, λ, λ, c) instead of (q3, λ, λ, c);
  both continue to q4, so this repair only unifies the naming.

Tuple states are flattened to names joined by '_' with λ written as 'l', so
(q1, aaa, λ, b) becomes q1_aaa_l_b.
"""

import enum

from wkpc_simulator.core import ComplementarityRelation
from wkpc_simulator.automaton import WKTransition
from wkpc_simulator.automaton import get_automaton
from wkpc_simulator.engine import PCWKSystem


SQUARES_ALPHABET = ("a", "b", "c")
SQUARES_RELATION = (("a", "b"), ("a", "c"))

PHASE_STATES = ("q0", "q1", "q2", "q3", "q4")


class SquaresVariant(enum.Enum):

    AS_PRINTED = "as-printed"
    CORRECTED = "corrected"


def get_tuple_state(*parts):

    """ Flatten a tuple state such as (q0, λ, b) to 'q0_l_b'. """

    return "_".join(part or "l" for part in parts)


T = get_tuple_state


# 1) Transition Table

def get_first_component_rows():

    """ Rows (source, upper, lower, target) of component A1. """

    rows = [("s2", "", "", "K2")]

    # Read Chunks, then Hand Over through s2

    chunks = [
        ("q0", "", "b"),
        ("q0", "", "c"),
        ("q1", "aaa", ""),
        ("q2", "a", "c"),
        ("q2", "aa", "b"),
        ("q3", "a", "b"),
        ("q3", "aa", "c"),
        ("q2", "", ""),
        ("q3", "", ""),
        ("q4", "", ""),
    ]

    for state, upper, lower in chunks:

        rows.append((state, upper, lower, T(state, upper, lower)))
        rows.append((T(state, upper, lower), "", "", "s2"))

    return rows


def get_second_component_rows(variant):

    """ Rows (source, upper, lower, target) of component A2 for a table variant. """

    corrected = variant is SquaresVariant.CORRECTED

    rows = [(state, "", "", "K1") for state in PHASE_STATES]

    # Copied States

    rows += [
        (T("q0", "", "b"), "", "", T("q0", "", "b", "")),
        (T("q0", "", "b", ""), "", "", "q0"),
        (T("q0", "", "c"), "", "", T("q0", "", "c", "")),
        (T("q0", "", "c", ""), "", "", "q1"),
        (T("q1", "aaa", ""), "a", "b", T("q1", "aaa", "", "b")),
        (T("q1", "aaa", "", "b"), "", "", "q2"),
        (T("q2", "a", "c"), "a", "b", T("q2", "a", "c", "b")),
        (T("q2", "a", "c", "b"), "", "", "q2"),
        (T("q2", "aa", "b"), "a", "c", T("q2", "aa", "b", "c")),
        (T("q2", "aa", "b", "c"), "", "", "q3"),
        (T("q3", "a", "b"), "a", "c", T("q3", "a", "b", "c")),
        (T("q3", "a", "b", "c"), "", "", "q3" if corrected else "s3"),
        (T("q3", "aa", "c"), "a", "b", T("q3", "aa", "c", "b")),
        (T("q3", "aa", "c", "b"), "", "", "q2"),
    ]

    # Endgame

    q2_letter = "c" if corrected else "b"
    q3_letter = "b" if corrected else "c"

    rows += [
        (T("q2", "", ""), "a", q2_letter, T("q2", "", "", q2_letter)),
        (T("q2", "", "", q2_letter), "", "", "q4"),
        (T("q3", "", ""), "a", q3_letter, T("q3", "", "", q3_letter)),
        (T("q3", "", "", q3_letter), "", "", "q4"),
        (T("q4", "", ""), "a", "b", T("q4", "", "", "b")),
        (T("q4", "", "", "b"), "", "", "q4"),
        (T("q4", "", ""), "a", "c", T("q4" if corrected else "q3", "", "", "c")),
        (T("q4", "", "", "c"), "", "", "q4"),
    ]

    return rows


# 2) System

def build_squares_system(variant=SquaresVariant.CORRECTED):

    """
    Build the two-component squares system.

    Args:
        variant (SquaresVariant or str): Table variant, CORRECTED by default.

    Returns:
        PCWKSystem: The system over {a, b, c} with ρ = {(a, b), (a, c)},
        query states K1 -> 1 and K2 -> 2, initial state q0 and final state
        q4 in both components. State sets are derived from the table.
    """

    variant = SquaresVariant(variant)

    relation = ComplementarityRelation(SQUARES_RELATION)

    components = []

    for rows in (get_first_component_rows(), get_second_component_rows(variant)):

        transitions = [WKTransition(source, upper, lower, target)
                       for source, upper, lower, target in rows]

        component = get_automaton(alphabet=SQUARES_ALPHABET,
                                  relation=relation,
                                  initial="q0",
                                  finals=["q4"],
                                  transitions=transitions)

        components.append(component)

    return PCWKSystem(alphabet=SQUARES_ALPHABET,
                      relation=relation,
                      components=tuple(components),
                      query_states=(("K1", 1), ("K2", 2)))


# 3) Witness Strands

def squares_witness(n):

    """
    Get the lower strand that witnesses a^(n²).

    Args:
        n (int): Block length and block count, n >= 2.

    Returns:
        str: n alternating blocks of length n starting with 'b'.

    Example:
    >>> squares_witness(3)
    'bbbcccbbb'
    """

    if n < 2:

        raise ValueError(f"Witness strands exist for n >= 2, got {n}")

    return "".join(("b" if block % 2 == 0 else "c") * n for block in range(n))


def boundary_count(word):

    """
    Count the 'bc' and 'cb' pairs of a word over {b, c}.

    Raises:
        ValueError: If the word contains another symbol.
    """

    unknown_symbols = set(word) - {"b", "c"}

    if unknown_symbols:

        raise ValueError(f"Boundary count needs a word over {{b, c}}, got symbols {sorted(unknown_symbols)}")

    return sum(left != right for left, right in zip(word, word[1:]))
