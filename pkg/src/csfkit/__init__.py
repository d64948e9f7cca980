"""csfkit: exact e-expansions of chromatic symmetric functions.

Closed-form composition-indexed expansions for paths, cycles, tadpoles,
cycle-chords, theta graphs and clocks, an edge-subset power-sum oracle to
verify them against, and exhaustive sweeps for the structural facts the
formulas rest on.  All arithmetic is exact.
"""

from .compositions import (
    Composition,
    Partition,
    compositions_of,
    format_parts,
    parse_composition,
    weight_positive_compositions,
)
from .coefficients import (
    Classification,
    PSQTSolution,
    WClass,
    classify,
    coeff_c,
    coeff_c_doubleprime,
    coeff_c_prime,
    coeff_D,
    delta,
    fiber,
    phi,
    psi,
    solve_ps,
    solve_psqt,
    solve_qt,
    split_LR,
)
from .errors import ResourceLimitError
from .graphs import (
    EExpansion,
    Graph,
    PositivityReport,
    build_clock,
    build_cycle,
    build_cycle_chord,
    build_family_graph,
    build_path,
    build_tadpole,
    build_theta,
    closed_form_clock,
    closed_form_cycle,
    closed_form_cycle_chord,
    closed_form_path,
    closed_form_tadpole,
    closed_form_theta,
    csf_pbasis,
    e_positivity_report,
    expansion_closed_form,
    verify_triple_deletion,
)
from .symfunc import (
    Basis,
    BasisVector,
    e_partition_to_p,
    evector_to_p,
    first_difference,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BasisVector",
    "Classification",
    "Composition",
    "EExpansion",
    "Graph",
    "PSQTSolution",
    "Partition",
    "PositivityReport",
    "ResourceLimitError",
    "WClass",
    "build_clock",
    "build_cycle",
    "build_cycle_chord",
    "build_family_graph",
    "build_path",
    "build_tadpole",
    "build_theta",
    "classify",
    "closed_form_clock",
    "closed_form_cycle",
    "closed_form_cycle_chord",
    "closed_form_path",
    "closed_form_tadpole",
    "closed_form_theta",
    "coeff_c",
    "coeff_c_doubleprime",
    "coeff_c_prime",
    "coeff_D",
    "compositions_of",
    "csf_pbasis",
    "delta",
    "e_partition_to_p",
    "e_positivity_report",
    "evector_to_p",
    "expansion_closed_form",
    "fiber",
    "first_difference",
    "format_parts",
    "parse_composition",
    "phi",
    "psi",
    "solve_ps",
    "solve_psqt",
    "solve_qt",
    "split_LR",
    "verify_triple_deletion",
    "weight_positive_compositions",
]
