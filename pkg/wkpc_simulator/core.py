""" Alphabets, words, complementarity relations and double strands. """

from dataclasses import dataclass


# Words are plain strings of one-character symbols; the empty string is λ.

Symbol = str
Word = str

LAMBDA = ""


# 1) Complementarity Relation

@dataclass(frozen=True)
class ComplementarityRelation:

    """
    Finite set of ordered (upper, lower) symbol pairs.

    The relation may be non-injective (one upper symbol with several lower
    complements) and partial (an upper symbol with no complement at all).
    Pairs keep their declaration order, which fixes the order in which the
    engine and the serializer meet them.

    Args:
        pairs (tuple of (str, str)): The relation pairs in declaration order.
    """

    pairs: tuple = ()

    def __post_init__(self):

        pairs = tuple((upper, lower) for upper, lower in self.pairs)

        if len(set(pairs)) != len(pairs):

            raise ValueError("Complementarity relation contains duplicate pairs")

        object.__setattr__(self, "pairs", pairs)

        # Complement Table

        table = {}

        for upper, lower in pairs:

            table.setdefault(upper, []).append(lower)

        object.__setattr__(self, "_table", {upper: tuple(lowers)
                                            for upper, lowers in table.items()})

    def get_complements(self, symbol):

        """ Ordered complements of an upper symbol. """

        return self._table.get(symbol, ())

    def get_symbols(self):

        """ Symbols mentioned by the relation, upper and lower. """

        return {symbol for pair in self.pairs for symbol in pair}


def complements_of(relation, symbol):

    """
    Get the lower-strand complements of an upper symbol.

    Args:
        relation (ComplementarityRelation): The complementarity relation.
        symbol (str): Upper-strand symbol.

    Returns:
        set of str: {x : (symbol, x) in relation}, possibly empty.

    Example:
    >>> relation = ComplementarityRelation((("a", "b"), ("a", "c")))
    >>> sorted(complements_of(relation, "a"))
    ['b', 'c']
    """

    return set(relation.get_complements(symbol))


# 2) Double Strands

def is_valid_double_strand(relation, upper, lower):

    """
    Check membership of an upper/lower pair in the Watson-Crick domain.

    Args:
        relation (ComplementarityRelation): The complementarity relation.
        upper (str): Upper strand.
        lower (str): Lower strand.

    Returns:
        bool: True iff both strands have equal length and every aligned
        pair of symbols belongs to the relation.
    """

    if len(upper) != len(lower):

        return False

    return all(lower_symbol in relation.get_complements(upper_symbol)
               for upper_symbol, lower_symbol in zip(upper, lower))


@dataclass(frozen=True)
class DoubleStrand:

    """
    Pair of equal-length words complementary at every position.

    Use `DoubleStrand.create` to build a validated strand.
    """

    upper: Word
    lower: Word

    @classmethod
    def create(cls, relation, upper, lower):

        if not is_valid_double_strand(relation, upper, lower):

            raise ValueError(f"'{upper}'/'{lower}' is not a valid double strand")

        return cls(upper, lower)

    def __len__(self):

        return len(self.upper)


# 3) Prefixes

def is_prefix(u, v):

    """
    Check whether u is a prefix of v, i.e. v = ux for some word x.

    Args:
        u (str): Candidate prefix.
        v (str): Word.

    Returns:
        bool: True iff u is a prefix of v.
    """

    return v.startswith(u)


def prefix_comparable(u, v):

    """ True iff one of the words is a prefix of the other. """

    return is_prefix(u, v) or is_prefix(v, u)


# 4) Alphabet Checks

def check_alphabet(alphabet):

    """
    Validate a declared alphabet.

    Args:
        alphabet (iterable of str): Symbols in declaration order.

    Returns:
        tuple of str: The alphabet as a tuple.

    Raises:
        ValueError: If a symbol is not a single character, is reserved
        ('-' denotes λ and '#' opens comments) or is declared twice.
    """

    alphabet = tuple(alphabet)

    for symbol in alphabet:

        if len(symbol) != 1 or symbol.isspace() or symbol in "-#":

            raise ValueError(f"Invalid symbol '{symbol}': symbols are single characters "
                             f"other than whitespace, '-' and '#'")

    if len(set(alphabet)) != len(alphabet):

        raise ValueError("Alphabet contains duplicate symbols")

    return alphabet


def check_word(alphabet, word):

    """
    Validate that a word is written over an alphabet.

    Raises:
        ValueError: Naming the first symbol outside the alphabet.
    """

    for symbol in word:

        if symbol not in alphabet:

            raise ValueError(f"Unknown symbol '{symbol}' in word '{word}'")

    return word
