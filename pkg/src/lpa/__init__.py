"""Exact arithmetic and simplicity analysis for Leavitt path algebras of
finite directed graphs."""

from .algebra import (
    Element,
    Monomial,
    add,
    edge,
    generator,
    ghost,
    graded_components,
    involution,
    local_unit,
    multiply,
    normalize,
    unit,
    vertex,
)
from .errors import LPAError, MismatchError, ParseError, PreconditionError, SemanticError
from .expr import evaluate, parse_element, parse_expression
from .graph import (
    Graph,
    Path,
    concat,
    condition_L,
    enumerate_csp,
    exitless_cycle,
    factor_closed_path,
    find_exit,
    load_graph,
    simple_cycles,
)
from .reps import laurent_divides, laurent_rep, matrix_rep
from .scalars import QQ, PrimeField, Rationals, Residue, parse_field
from .shrink import shrink_real_once, shrink_to_vertex
from .structure import (
    EdgeMatrix,
    HSubset,
    SimplicityVerdict,
    condition_i,
    edge_matrix,
    enumerate_hs,
    hs_closure,
    is_simple,
    leq,
    psi,
    quotient_graph,
)

__version__ = "0.1.0"
