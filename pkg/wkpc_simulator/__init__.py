from .core import LAMBDA
from .core import ComplementarityRelation
from .core import DoubleStrand
from .core import complements_of
from .core import is_valid_double_strand
from .core import is_prefix
from .core import prefix_comparable

from .automaton import WKTransition
from .automaton import WKAutomaton
from .automaton import get_automaton
from .automaton import applicable_transitions
from .automaton import wk_accepts

from .engine import PCWKSystem
from .engine import SystemConfiguration
from .engine import Rule1Step
from .engine import Rule2Step
from .engine import RunTrace
from .engine import Verdict
from .engine import SearchLimits
from .engine import MembershipResult
from .engine import TraceError
from .engine import get_search_limits
from .engine import initial_configuration
from .engine import is_accepting
from .engine import get_canonical_key
from .engine import rule1_successors
from .engine import rule2_successor
from .engine import successors
from .engine import search
from .engine import replay_trace
from .engine import check_trace
from .engine import validate_trace
from .engine import get_trace_report

from .bruteforce import brute_force_accepts

from .metrics import search_and_return_metrics

from .constructions import SquaresVariant
from .constructions import build_squares_system
from .constructions import squares_witness
from .constructions import boundary_count

from .verification import ScanReport
from .verification import is_square_gt1
from .verification import witness_form_check
from .verification import scan_unary
from .verification import cross_check
from .verification import get_errata_report

from .functions import get_all_words
from .functions import get_random_automaton
from .functions import get_random_system

from .files import SystemFileError
from .files import parse_system
from .files import serialize_system
from .files import parse_trace
from .files import serialize_trace

from .cli import run_cli
