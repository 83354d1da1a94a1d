from pydfacons.models import *
from pydfacons.exceptions import (
    DfaConsException,
    LibraryError,
    InputError,
    PurityError,
    ClauseSizeError,
    FormatError,
    CapacityError,
    PreconditionError,
    StructuralError,
    VerificationError,
    InternalConsistencyError,
)
from pydfacons.automata import (
    accepts,
    is_consistent,
    mealy_output,
    to_dot,
    from_dot,
    words_up_to,
)
from pydfacons.cnf import (
    parse_dimacs,
    evaluate,
    falsified_clauses,
    satisfying_assignments,
    brute_force_sat,
)
from pydfacons.reduction import (
    gold_reduce,
    witness_dfa,
    canonical_cycle,
    extract_assignment,
    dlh_reduce,
)
from pydfacons.solver import (
    build_prefix_tree,
    find_consistent_dfa,
    min_states,
    enumerate_dfas,
    brute_force_oracle,
)
from pydfacons.counterexamples import (
    fernau_instance,
    dlh_instance,
    fernau_lemma15,
    dlh_thm621,
    dlh_three_state_impossibility,
    mealy_compactness_demo,
    gold_fig1_sanity,
    verify_all,
    REPRODUCTIONS,
)

__version__ = "0.1.0"
