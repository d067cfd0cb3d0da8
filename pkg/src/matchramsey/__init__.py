"""Exact computation and verification for matching Ramsey numbers, general
Kneser hypergraphs, alternation numbers and Tucker-type labellings."""

from .alternation import SignedVector, alt_of_vector, alt_with_ordering, alternation_number
from .errors import Budget, BudgetExceeded, InputError, PropertyViolation
from .hypergraph import INFINITY, Hypergraph, chromatic_number, complete_uniform, induced, matching_number
from .kneser import kneser_power, theorem1_lower_bound
from .matchcolor import ColorFrequencyMap, EdgeColoring, matching_chromatic_number, theorem3_lower_bound
from .ramsey import RamseyInstance, arrows, formula_value, ramsey_number_exact
from .tucker import LambdaMap, build_lambda_from_coloring, check_hypotheses, search_counterexample

__version__ = "0.1.0"
