"""Exact radial-subalgebra computations in the group ring of a free group."""

from .algebra import AlgebraElement, add, adjoint, build_X, mul, trace
from .budget import BudgetExceededError
from .engine import (
    CoefficientSequence,
    RadialVector,
    RelationParams,
    coefficient_sequence,
    expand_power,
    expand_xk_Xn,
    moment,
    multiply_by_x,
    paper_expansion,
    paper_trace_closed_form,
    reduce_alternating_word,
)
from .words import Letter, ReducedWord, concat, enumerate_words, inverse

__version__ = "0.1.0"
