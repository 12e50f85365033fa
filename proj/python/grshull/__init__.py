"""Exact GRS code construction over GF(q^2) with Hermitian hull counting.

Thin bindings over the C++ core: parameter validation, lattice point
counting, hull dimensions with their Gram-rank oracle, and derived
entanglement-assisted quantum code records.
"""

from ._core import (
    CodeParams,
    Exactness,
    FirstPoint,
    HullComputation,
    HullDimension,
    Lattice,
    MdsStatus,
    QuantumCodeRecord,
    SingletonCheck,
    SingletonResult,
    TableRow,
    admissible_families,
    compute_hull,
    count_F,
    count_below,
    count_below_bruteforce,
    eaqecc_params,
    exactness_condition,
    failure_points_bruteforce,
    first_point,
    hull_dim_formula,
    hull_dimension_oracle,
    make_record,
    propagate,
    rows_to_csv,
    singleton_check,
    table_rows,
    validate_params,
)

__all__ = [
    "CodeParams",
    "Exactness",
    "FirstPoint",
    "HullComputation",
    "HullDimension",
    "Lattice",
    "MdsStatus",
    "QuantumCodeRecord",
    "SingletonCheck",
    "SingletonResult",
    "TableRow",
    "admissible_families",
    "compute_hull",
    "count_F",
    "count_below",
    "count_below_bruteforce",
    "eaqecc_params",
    "exactness_condition",
    "failure_points_bruteforce",
    "first_point",
    "hull_dim_formula",
    "hull_dimension_oracle",
    "make_record",
    "propagate",
    "rows_to_csv",
    "singleton_check",
    "table_rows",
    "validate_params",
]
