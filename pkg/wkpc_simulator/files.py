"""
Text formats: system definitions, run traces and scan reports.

System files and trace files are line-oriented: whitespace-separated tokens,
'#' starts a comment, '-' stands for λ. Both are parsed with LALR grammars of
the "lark" parser toolkit:

https://lark-parser.readthedocs.io/en/stable/grammar.html

The grammars only recognize the shape of every line; names, symbols and
indices are checked afterwards so that every problem is reported with its
line number as a SystemFileError.
"""

from functools import lru_cache
from typing import NamedTuple

from lark import Lark
from lark import Transformer
from lark.exceptions import LarkError
from lark.exceptions import UnexpectedCharacters
from lark.exceptions import UnexpectedInput
from lark.exceptions import UnexpectedToken

from wkpc_simulator.core import LAMBDA
from wkpc_simulator.core import ComplementarityRelation
from wkpc_simulator.core import check_alphabet
from wkpc_simulator.automaton import WKTransition
from wkpc_simulator.automaton import get_automaton
from wkpc_simulator.engine import PCWKSystem
from wkpc_simulator.engine import Rule1Step
from wkpc_simulator.engine import Rule2Step
from wkpc_simulator.engine import RunTrace
from wkpc_simulator.engine import TraceError
from wkpc_simulator.engine import initial_configuration
from wkpc_simulator.engine import replay_trace


LAMBDA_TOKEN = "-"

SYSTEM_GRAMMAR = r"""
    start: (_statement? _NL)*

    _statement: alphabet
              | relation
              | component
              | states
              | query
              | trans

    !alphabet: "alphabet" TOKEN+
    !relation: "relation" TOKEN TOKEN
    !component: "component" TOKEN "initial" TOKEN ("final" TOKEN+)?
    !states: "states" TOKEN TOKEN+
    !query: "query" TOKEN "->" TOKEN
    !trans: "trans" TOKEN TOKEN TOKEN TOKEN TOKEN

    TOKEN: /[^\s#]+/
    COMMENT: /#[^\n]*/
    _NL: /\n/

    %ignore /[ \t\f\r]+/
    %ignore COMMENT
"""

TRACE_GRAMMAR = r"""
    start: (_statement? _NL)*

    _statement: word
              | rule1
              | move
              | rule2
              | receive
              | accept

    !word: "word" TOKEN
    !rule1: "rule1"
    !move: "move" TOKEN TOKEN TOKEN TOKEN TOKEN
    !rule2: "rule2"
    !receive: "receive" TOKEN TOKEN TOKEN
    !accept: "accept"

    TOKEN: /[^\s#]+/
    COMMENT: /#[^\n]*/
    _NL: /\n/

    %ignore /[ \t\f\r]+/
    %ignore COMMENT
"""


class SystemFileError(ValueError):

    """
    Invalid system or trace file.

    Args:
        line (int or None): 1-based line of the problem, None when the file
            as a whole is at fault.
        message (str): What is wrong.
    """

    def __init__(self, line, message):

        self.line = line
        self.message = message

        if line is None:
            text = message
        else:
            text = f"line {line}: {message}"

        super().__init__(text)


class Statement(NamedTuple):

    keyword: str
    line: int
    tokens: tuple


class StatementTransformer(Transformer):

    """ Turns a parse tree into the list of its statements. """

    def start(self, children):

        return list(children)

    def __default__(self, data, children, meta):

        # The first child is the keyword token, the rest are arguments.

        return Statement(str(data), meta.line, tuple(str(child) for child in children[1:]))


# 1) Parsing

@lru_cache(maxsize=None)
def get_parser(grammar):

    return Lark(grammar, parser="lalr", lexer="contextual", propagate_positions=True)


def get_parse_error_message(error):

    if isinstance(error, UnexpectedCharacters):

        return f"unexpected character {error.char!r}"

    if isinstance(error, UnexpectedToken):

        if error.token.type == "_NL":

            return "malformed line: missing tokens"

        return f"malformed line: unexpected '{error.token}'"

    return "malformed input"


def parse_statements(grammar, text):

    """
    Parse a text into statements.

    Raises:
        SystemFileError: On any lexer or parser failure.
    """

    text = text.replace("\r\n", "\n") + "\n"

    try:
        tree = get_parser(grammar).parse(text)

    except UnexpectedInput as error:

        line = error.line if isinstance(error.line, int) and error.line > 0 else None

        raise SystemFileError(line, get_parse_error_message(error)) from None

    except LarkError as error:

        raise SystemFileError(None, f"malformed input ({error})") from None

    return StatementTransformer().transform(tree)


def get_index(token, line, what="component"):

    """ Parse a positive 1-based index. """

    if not token.isdecimal() or int(token) < 1:

        raise SystemFileError(line, f"invalid {what} index '{token}'")

    return int(token)


def get_symbol(alphabet, token, line):

    if token not in alphabet:

        raise SystemFileError(line, f"unknown symbol '{token}'")

    return token


def get_chunk(alphabet, token, line):

    """ Parse a chunk word, '-' being λ. """

    if token == LAMBDA_TOKEN:

        return LAMBDA

    for symbol in token:

        if symbol not in alphabet:

            raise SystemFileError(line, f"unknown symbol '{symbol}' in '{token}'")

    return token


def get_token(chunk):

    return chunk or LAMBDA_TOKEN


# 2) System Files

class ComponentDeclaration(NamedTuple):

    line: int
    initial: str
    finals: tuple


def parse_system(text):

    """
    Parse a system definition.

    Example:
    >>> system = parse_system('''
    ... alphabet a b
    ... relation a b
    ... component 1 initial q0 final q1
    ... trans 1 q0 a b q1
    ... ''')
    >>> system.degree
    1

    Args:
        text (str): The system file contents.

    Returns:
        PCWKSystem: The system.

    Raises:
        SystemFileError: For unknown symbols, undeclared states, query
        states with a missing target, duplicate declarations and malformed
        lines, naming the line.
    """

    statements = parse_statements(SYSTEM_GRAMMAR, text)

    by_keyword = {}

    for statement in statements:

        by_keyword.setdefault(statement.keyword, []).append(statement)

    # Alphabet and Relation

    alphabet_statements = by_keyword.get("alphabet", [])

    if not alphabet_statements:

        raise SystemFileError(None, "missing 'alphabet' line")

    if len(alphabet_statements) > 1:

        raise SystemFileError(alphabet_statements[1].line, "duplicate 'alphabet' line")

    alphabet_statement = alphabet_statements[0]

    try:
        alphabet = check_alphabet(alphabet_statement.tokens)

    except ValueError as error:

        raise SystemFileError(alphabet_statement.line, str(error)) from None

    pairs = []

    for statement in by_keyword.get("relation", []):

        pair = tuple(get_symbol(alphabet, token, statement.line) for token in statement.tokens)

        if pair in pairs:

            raise SystemFileError(statement.line, f"duplicate relation pair {pair[0]} {pair[1]}")

        pairs.append(pair)

    relation = ComplementarityRelation(pairs)

    # Components

    declarations = {}

    for statement in by_keyword.get("component", []):

        # index 'initial' state ['final' state...]

        index_token, _, initial, *rest = statement.tokens

        index = get_index(index_token, statement.line)

        if index in declarations:

            raise SystemFileError(statement.line, f"component {index} declared twice "
                                                  f"(duplicate initial state)")

        finals = tuple(rest[1:])

        if len(set(finals)) != len(finals):

            raise SystemFileError(statement.line, f"duplicate final state in component {index}")

        declarations[index] = ComponentDeclaration(statement.line, initial, finals)

    if not declarations:

        raise SystemFileError(None, "at least one component required")

    degree = max(declarations)

    for index in range(1, degree + 1):

        if index not in declarations:

            raise SystemFileError(declarations[degree].line, f"component {degree} declared "
                                                             f"but component {index} is missing")

    def get_component(token, line):

        index = get_index(token, line)

        if index not in declarations:

            raise SystemFileError(line, f"undeclared component {index}")

        return index

    # State Declarations

    declared_states = {}

    for statement in by_keyword.get("states", []):

        index = get_component(statement.tokens[0], statement.line)

        if index in declared_states:

            raise SystemFileError(statement.line, f"states of component {index} declared twice")

        names = statement.tokens[1:]

        if len(set(names)) != len(names):

            raise SystemFileError(statement.line, f"duplicate state in component {index}")

        declared_states[index] = names

    def check_declared(index, state, line):

        if index in declared_states and state not in declared_states[index]:

            raise SystemFileError(line, f"undeclared state '{state}' in component {index}")

    # Transitions

    transitions = {index: [] for index in declarations}

    for statement in by_keyword.get("trans", []):

        component_token, source, upper_token, lower_token, target = statement.tokens

        index = get_component(component_token, statement.line)

        for state in (source, target):

            check_declared(index, state, statement.line)

        transition = WKTransition(source=source,
                                  upper_read=get_chunk(alphabet, upper_token, statement.line),
                                  lower_read=get_chunk(alphabet, lower_token, statement.line),
                                  target=target)

        if transition in transitions[index]:

            raise SystemFileError(statement.line, f"duplicate transition {transition}")

        transitions[index].append(transition)

    # Automata

    components = []

    for index in range(1, degree + 1):

        declaration = declarations[index]

        for state in (declaration.initial, *declaration.finals):

            check_declared(index, state, declaration.line)

        try:
            component = get_automaton(alphabet=alphabet,
                                      relation=relation,
                                      initial=declaration.initial,
                                      finals=declaration.finals,
                                      transitions=transitions[index],
                                      states=declared_states.get(index))

        except ValueError as error:

            raise SystemFileError(declaration.line, str(error)) from None

        components.append(component)

    # Query States

    query_states = []

    for statement in by_keyword.get("query", []):

        state, _, target_token = statement.tokens

        target = get_index(target_token, statement.line, "query target")

        if target > degree:

            raise SystemFileError(statement.line, f"query state '{state}' targets "
                                                  f"missing component {target}")

        if state in dict(query_states):

            raise SystemFileError(statement.line, f"query state '{state}' declared twice")

        if not any(state in component.states for component in components):

            raise SystemFileError(statement.line, f"query state '{state}' is not a state "
                                                  f"of any component")

        query_states.append((state, target))

    try:
        return PCWKSystem(alphabet=alphabet,
                          relation=relation,
                          components=tuple(components),
                          query_states=tuple(query_states))

    except ValueError as error:

        raise SystemFileError(None, str(error)) from None


def serialize_system(system):

    """
    Write a system definition in canonical form.

    Components come by index, states in their stored order, transitions in
    declaration order. Every component gets a 'states' line, so parsing
    the text gives back an equal system.

    Args:
        system (PCWKSystem): The system.

    Returns:
        str: The file contents.
    """

    lines = ["alphabet " + " ".join(system.alphabet)]

    lines += [f"relation {upper} {lower}" for upper, lower in system.relation.pairs]

    for index, component in enumerate(system.components, start=1):

        line = f"component {index} initial {component.initial}"

        if component.finals:

            line += " final " + " ".join(component.finals)

        lines.append(line)

    for index, component in enumerate(system.components, start=1):

        lines.append(f"states {index} " + " ".join(component.states))

    lines += [f"query {state} -> {target}" for state, target in system.query_states]

    for index, component in enumerate(system.components, start=1):

        for transition in component.transitions:

            lines.append(f"trans {index} {transition.source} {get_token(transition.upper_read)} "
                         f"{get_token(transition.lower_read)} {transition.target}")

    return "\n".join(lines) + "\n"


# 3) Trace Files

def parse_trace(text, system):

    """
    Parse a trace file against a system.

    The initial configuration is the system's; the final configuration is
    obtained by replaying the steps, and stays None if they cannot be
    replayed (`check_trace` then names the failing step).

    Args:
        text (str): The trace file contents.
        system (PCWKSystem): The system the trace belongs to.

    Returns:
        tuple: (upper word, RunTrace).

    Raises:
        SystemFileError: For malformed lines, misplaced steps, unknown
        symbols or a missing 'word' or 'accept' line.
    """

    statements = parse_statements(TRACE_GRAMMAR, text)

    if not statements or statements[0].keyword != "word":

        raise SystemFileError(statements[0].line if statements else None,
                              "trace must start with a 'word' line")

    word_statement = statements[0]

    upper = get_chunk(system.alphabet, word_statement.tokens[0], word_statement.line)

    steps = []

    block = None

    accepted = False

    for statement in statements[1:]:

        line = statement.line

        if accepted:

            raise SystemFileError(line, f"'{statement.keyword}' after 'accept'")

        if statement.keyword == "word":

            raise SystemFileError(line, "duplicate 'word' line")

        if statement.keyword in ("rule1", "rule2"):

            block = (statement.keyword, line, [])

            steps.append(block)

        elif statement.keyword == "move":

            if block is None or block[0] != "rule1":

                raise SystemFileError(line, "'move' outside a 'rule1' block")

            component_token, source, upper_token, lower_token, target = statement.tokens

            if get_index(component_token, line) != len(block[2]) + 1:

                raise SystemFileError(line, f"expected the move of component {len(block[2]) + 1}")

            block[2].append(WKTransition(source=source,
                                         upper_read=get_chunk(system.alphabet, upper_token, line),
                                         lower_read=get_chunk(system.alphabet, lower_token, line),
                                         target=target))

        elif statement.keyword == "receive":

            if block is None or block[0] != "rule2":

                raise SystemFileError(line, "'receive' outside a 'rule2' block")

            component_token, query, received = statement.tokens

            block[2].append((get_index(component_token, line), query, received))

        else:

            accepted = True

    if not accepted:

        raise SystemFileError(None, "trace does not end with 'accept'")

    for keyword, line, items in steps:

        if not items:

            raise SystemFileError(line, f"empty '{keyword}' block")

    steps = tuple(Rule1Step(tuple(items)) if keyword == "rule1" else Rule2Step(tuple(items))
                  for keyword, _, items in steps)

    # Final Configuration

    initial = initial_configuration(system)

    try:
        final = replay_trace(system, upper, RunTrace(initial, steps, None))[-1]

    except TraceError:

        final = None

    return upper, RunTrace(initial=initial, steps=steps, final=final)


def serialize_trace(upper, trace):

    """
    Write a run trace.

    Args:
        upper (str): The upper word.
        trace (RunTrace): The trace.

    Returns:
        str: The file contents, ending with an 'accept' line.
    """

    lines = [f"word {get_token(upper)}"]

    for step in trace.steps:

        if isinstance(step, Rule1Step):

            lines.append("rule1")

            for index, move in enumerate(step.moves, start=1):

                lines.append(f"move {index} {move.source} {get_token(move.upper_read)} "
                             f"{get_token(move.lower_read)} {move.target}")

        else:

            lines.append("rule2")

            for component, query, received in step.receptions:

                lines.append(f"receive {component} {query} {received}")

    lines.append("accept")

    return "\n".join(lines) + "\n"


# 4) Scan Reports

def format_scan_record(entry):

    """ One structured record: m=<int> verdict=<...> witness=<word|-> configs=<int>. """

    witness = entry.witness if entry.witness is not None else LAMBDA_TOKEN

    return (f"m={entry.length} verdict={entry.verdict.value} "
            f"witness={witness or LAMBDA_TOKEN} configs={entry.explored}")


def format_scan_records(report):

    return "".join(format_scan_record(entry) + "\n" for entry in report.entries)


def parse_scan_record(line):

    """
    Parse a structured scan record.

    Returns:
        dict: Keys 'm', 'verdict', 'witness' (None for '-') and 'configs'.

    Raises:
        ValueError: If the line is not a scan record.
    """

    fields = dict(item.partition("=")[::2] for item in line.split())

    if set(fields) != {"m", "verdict", "witness", "configs"}:

        raise ValueError(f"Not a scan record: '{line}'")

    witness = fields["witness"]

    return {"m": int(fields["m"]),
            "verdict": fields["verdict"],
            "witness": None if witness == LAMBDA_TOKEN else witness,
            "configs": int(fields["configs"])}


def format_scan_report(report, discrepancies=None):

    """
    Human-readable scan report.

    Args:
        report (ScanReport): The scan.
        discrepancies (list of str, optional): Cross-check findings to append.

    Returns:
        str: Header, accepted lengths, one line per length and, if given,
        the cross-check section.
    """

    header = f"scan of {report.symbol}^m for m = 0..{report.max_length}"

    if report.variant is not None:

        header += f" ({report.variant.value} table)"

    accepted = " ".join(str(length) for length in report.accepted_lengths) or "none"

    lines = [header, f"accepted lengths: {accepted}"]

    if report.limited_lengths:

        lines.append("limit reached at: " + " ".join(str(length)
                                                      for length in report.limited_lengths))

    lines.append("")

    for entry in report.entries:

        witness = f"  witness {entry.witness}" if entry.witness is not None else ""

        lines.append(f"m={entry.length:>4}  {entry.verdict.value:<6}  "
                     f"{entry.explored:>8} configurations{witness}")

    if discrepancies is not None:

        lines.append("")

        if discrepancies:

            lines.append(f"cross-check: {len(discrepancies)} discrepancies")
            lines += [f"  {discrepancy}" for discrepancy in discrepancies]

        else:

            lines.append("cross-check: accepted lengths are exactly the squares n² > 1")

    return "\n".join(lines) + "\n"
