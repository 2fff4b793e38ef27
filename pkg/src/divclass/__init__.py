"""Divisor class groups, canonical classes, and torsion numbers of normal
affine semigroup rings, in exact integer arithmetic.

Two front doors:

* :func:`divclass.joinmeet.joinmeet_report`: from a finite poset, through
  the cone of its bounded extension (join-meet / Hibi ring mode);
* :func:`divclass.semigroup.cone_report`: from an explicit list of facet
  support forms (general cone mode).

Both return a :class:`divclass.semigroup.ClassGroupReport` and agree on
every ring reachable by both routes.
"""

__version__ = "0.1.0"

from .abelian import (
    AbelianPresentation,
    ClassElement,
    GroupStructure,
    fitting_number,
    is_zero_class,
    quotient_by,
    structure,
    torsion_number,
)
from .errors import (
    DivclassError,
    InputError,
    InternalInvariantError,
    LimitExceededError,
)
from .exact_linalg import (
    IntMatrix,
    SmithDecomposition,
    minor_gcd,
    rank,
    smith_normal_form,
    solve_integer,
)
from .joinmeet import (
    ClassExpression,
    SpanningTree,
    SupportForm,
    choose_tree,
    class_expressions,
    joinmeet_report,
    relation_matrix,
    support_forms,
    verify_column_relations,
)
from .poset import (
    BoundedPoset,
    ChainPair,
    Poset,
    bound,
    build_poset,
    disjoint_maximal_chain_pair,
    is_pure,
    maximal_chains,
    two_chains_poset,
)
from .semigroup import (
    ClassGroupReport,
    ConeDescription,
    cone_report,
    determinantal_invariants,
    normalize_form,
    segre_veronese_cone,
    veronese_cone,
)
from .sweep import run_sweep

__all__ = [
    "AbelianPresentation",
    "BoundedPoset",
    "ChainPair",
    "ClassElement",
    "ClassExpression",
    "ClassGroupReport",
    "ConeDescription",
    "DivclassError",
    "GroupStructure",
    "InputError",
    "IntMatrix",
    "InternalInvariantError",
    "LimitExceededError",
    "Poset",
    "SmithDecomposition",
    "SpanningTree",
    "SupportForm",
    "bound",
    "build_poset",
    "choose_tree",
    "class_expressions",
    "cone_report",
    "determinantal_invariants",
    "disjoint_maximal_chain_pair",
    "fitting_number",
    "is_pure",
    "is_zero_class",
    "joinmeet_report",
    "maximal_chains",
    "minor_gcd",
    "normalize_form",
    "quotient_by",
    "rank",
    "relation_matrix",
    "run_sweep",
    "segre_veronese_cone",
    "smith_normal_form",
    "solve_integer",
    "structure",
    "support_forms",
    "torsion_number",
    "two_chains_poset",
    "veronese_cone",
    "verify_column_relations",
]
