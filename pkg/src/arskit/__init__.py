"""Decision procedures and witness-producing algorithms for abstract rewriting systems."""

from .errors import (
    ArsError,
    CapacityExceeded,
    DuplicateName,
    FuelExhausted,
    IndexOutOfRange,
    MalformedLasso,
    PreconditionFailed,
    UnknownName,
)
from .properties import (
    ELEMENT_PROPERTIES,
    GLOBAL_ONLY,
    CofinalityWitness,
    ElementProfile,
    GlobalProfile,
    Join,
    Peak,
    element_profile,
    global_profile,
    join_pair,
)
from .relations import (
    Closure,
    EnumerableArs,
    FiniteArs,
    Lasso,
    PathWitness,
    build_ars,
    closure,
    converse,
    path_between,
)
from .theorems import (
    JoinMethod,
    cofinality_join,
    cr_to_cofinality,
    decide_conversion,
    generalized_newman_join,
    join_with,
    make_peak,
    newman_join,
    normalize_sn,
    theorem_suite,
    wn_un_join,
)
from .wellfounded import WfNotion, bridge_report, wf_check, wf_equivalence_report

__version__ = "0.1.0"
