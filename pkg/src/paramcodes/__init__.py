"""Parameterized linear codes over toric sets parameterized by graphs."""
from .errors import DEFAULT_BUDGET, BudgetExceeded
from .gfq import GF, FieldElement, FiniteField, field_new, iter_unit_tuples, parse_field
from .graph import (
    ComponentProfile, Graph, complete_bipartite, component_profile, cycle_graph,
    disjoint_union, edge_monomial_exponents, graph_new, parse_graph_spec, path_graph,
)
from .toricset import ToricSet, enumerate_points, expected_length, verify_length
from .evalcode import (
    LinearCode, code_from, evaluation_matrix, hilbert_function, minimum_distance,
    monomials, regularity_index, weight_distribution,
)
from .zeros import Polynomial, max_zeros_search, pullback, z_count, zeros_on_X
from . import formulas

__version__ = "0.1.0"
