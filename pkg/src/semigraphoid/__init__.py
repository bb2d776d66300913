"""Compact representations of semi-graphoid independence relations.

Statements ``<A, B | C>`` ("A is independent of B given C") are closed under
the semi-graphoid axioms; stable statements, which keep holding as the
conditioning set grows, are represented by a single s-dominant generator.
"""

from ._kernels import DEFAULT_BACKEND
from .complexity import (
    ComplexityReport,
    ExactComplexity,
    Mode,
    complexity_report,
    complexity_upper_bounds,
    exact_complexity,
)
from .core import (
    Flavor,
    Relation,
    Triplet,
    Universe,
    VarSet,
    enumerate_all_triplets,
    make_triplet,
    relation,
    sym,
    triplet_count,
    varset,
)
from .dominance import (
    DominanceKind,
    diamond,
    expand,
    maximal_elements,
    o_dominates,
    s_dominates,
    star,
)
from .engine import (
    ClosureReport,
    MixedRepresentation,
    expansion,
    hybrid_closure,
    step3a_products,
    step3b_products,
    step4_promote,
    studeny_closure,
)
from .errors import (
    EmptySide,
    NotClosed,
    OverlappingSets,
    ParseError,
    SemigraphoidError,
    UniverseTooLarge,
)
from .oracle import (
    Violation,
    is_ascending,
    is_semigraphoid,
    is_stable_semigraphoid,
    sem_closure_bruteforce,
    stab_closure_bruteforce,
    stable_part,
)

__version__ = "0.1.0"
