"""Border basis schemes from order ideals: generators, gradings, exposure,
separating tuples, and re-embedding searches."""

from .orderideal import (
    OrderIdeal,
    enumerate_planar,
    make_box,
    make_simplicial,
    simplicial_counts,
)
from .bbscheme import BBScheme
from .polyring import (
    BudgetExceeded,
    OrderingMatrix,
    Polynomial,
    SubstitutionMap,
    VarTable,
    coherentize,
    compare_terms,
    degrevlex,
    elimination_ideal,
    groebner_basis,
    ideal_equal,
    leading_term,
    lp_realizable,
    ordering_from_weights,
    substitute,
)

__all__ = [
    "BBScheme",
    "BudgetExceeded",
    "OrderIdeal",
    "OrderingMatrix",
    "Polynomial",
    "SubstitutionMap",
    "VarTable",
    "coherentize",
    "compare_terms",
    "degrevlex",
    "elimination_ideal",
    "enumerate_planar",
    "groebner_basis",
    "ideal_equal",
    "leading_term",
    "lp_realizable",
    "make_box",
    "make_simplicial",
    "ordering_from_weights",
    "simplicial_counts",
    "substitute",
]
