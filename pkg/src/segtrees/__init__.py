"""Super edge-graceful labelings of diameter-4 trees.

Construct labelings from the closed-form case analysis, verify candidate
labelings against the defining bijections, search exhaustively with sound
symmetry breaking, and certify absence for small trees.
"""

from ._version import __version__
from .constructions import (
    LABELED,
    PROVED_NOT_SEG,
    UNKNOWN,
    ConstructionFault,
    LabelOutcome,
    WrongFamily,
    label_any,
    label_even_caterpillar,
    label_even_lobster,
    label_odd_caterpillar,
    label_odd_lobster,
)
from .labeling import (
    DomainMismatch,
    LabelingFormatError,
    VerificationReport,
    Violation,
    edge_label_target,
    induce,
    negate,
    parse_dot_spec,
    read_labeling,
    to_dot,
    verify,
    vertex_label_target,
    write_labeling,
)
from .search import (
    BUDGET_EXCEEDED,
    COUNT_ALL,
    EXHAUST_ALL,
    EXHAUSTED_NONE,
    FIND_ONE,
    FOUND,
    GUARD_Q,
    BudgetExceeded,
    GuardRefused,
    NotCertifiable,
    SearchConfig,
    SearchResult,
    certify_not_seg,
    count_all,
    make_certificate,
    search,
)
from .trees import (
    CONJECTURED,
    CONSTRUCTIVE,
    NOT_SEG,
    UNCOVERED,
    Classification,
    EmptyRange,
    EmptySpec,
    NotDiameterFour,
    RootedTree,
    SpecSyntaxError,
    TreeSpec,
    build_tree,
    canonicalize,
    classify,
    enumerate_specs,
    parse_spec,
)

__all__ = [
    "__version__",
    # tree model
    "TreeSpec",
    "RootedTree",
    "Classification",
    "parse_spec",
    "canonicalize",
    "build_tree",
    "classify",
    "enumerate_specs",
    "SpecSyntaxError",
    "EmptySpec",
    "NotDiameterFour",
    "EmptyRange",
    "CONSTRUCTIVE",
    "NOT_SEG",
    "CONJECTURED",
    "UNCOVERED",
    # labelings
    "edge_label_target",
    "vertex_label_target",
    "induce",
    "verify",
    "negate",
    "VerificationReport",
    "Violation",
    "DomainMismatch",
    "LabelingFormatError",
    "read_labeling",
    "write_labeling",
    "to_dot",
    "parse_dot_spec",
    # constructions
    "label_any",
    "label_even_caterpillar",
    "label_odd_caterpillar",
    "label_even_lobster",
    "label_odd_lobster",
    "LabelOutcome",
    "LABELED",
    "PROVED_NOT_SEG",
    "UNKNOWN",
    "WrongFamily",
    "ConstructionFault",
    # search
    "search",
    "count_all",
    "certify_not_seg",
    "make_certificate",
    "SearchConfig",
    "SearchResult",
    "FIND_ONE",
    "COUNT_ALL",
    "EXHAUST_ALL",
    "FOUND",
    "EXHAUSTED_NONE",
    "BUDGET_EXCEEDED",
    "GUARD_Q",
    "GuardRefused",
    "NotCertifiable",
    "BudgetExceeded",
]
