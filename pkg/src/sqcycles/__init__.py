"""Distinct-square counting via Lyndon roots, Rauzy graphs and circuit rank."""

from .words import (
    ConjPowerSet,
    LyndonRoot,
    Word,
    conj_power_set,
    factor_set,
    factors,
    fractional_power,
    is_lyndon,
    is_primitive,
    lyndon_factors,
    lyndon_root_of_square,
    lyndon_rotation,
    primitive_root,
    smallest_period,
)
from .squares import (
    RootStats,
    SquareInventory,
    distinct_squares,
    max_square_half_length,
    report_order,
    root_stats,
    squares_by_root,
)
from .rauzy import (
    Circuit,
    CycleVector,
    RauzyGraph,
    RauzyUnion,
    build_rauzy,
    build_union,
    circuit_for,
    cs_set,
    cycle_vector,
    cyclomatic_number,
    independence_rank,
    smallest_cs_arcs,
    to_dot,
)
from .verifier import (
    CheckRecord,
    VerificationReport,
    check_avg_bound,
    check_counting_bound,
    check_sigma_bound,
    check_sqload,
    check_sqs_cs,
    verify_all,
)
from .census import (
    CensusCapError,
    CensusRow,
    CheckpointError,
    canonical_words,
    census_cap,
    census_rows,
    check_conjecture,
    conjecture_ceiling,
    density_table,
    max_distinct_squares,
    write_tsv,
)

__version__ = "0.1.0"

__all__ = [
    "CensusCapError",
    "CensusRow",
    "CheckRecord",
    "CheckpointError",
    "Circuit",
    "ConjPowerSet",
    "CycleVector",
    "LyndonRoot",
    "RauzyGraph",
    "RauzyUnion",
    "RootStats",
    "SquareInventory",
    "VerificationReport",
    "Word",
    "build_rauzy",
    "build_union",
    "canonical_words",
    "census_cap",
    "census_rows",
    "check_avg_bound",
    "check_conjecture",
    "check_counting_bound",
    "check_sigma_bound",
    "check_sqload",
    "check_sqs_cs",
    "circuit_for",
    "conj_power_set",
    "conjecture_ceiling",
    "cs_set",
    "cycle_vector",
    "cyclomatic_number",
    "density_table",
    "distinct_squares",
    "factor_set",
    "factors",
    "fractional_power",
    "independence_rank",
    "is_lyndon",
    "is_primitive",
    "lyndon_factors",
    "lyndon_root_of_square",
    "lyndon_rotation",
    "max_distinct_squares",
    "max_square_half_length",
    "primitive_root",
    "report_order",
    "root_stats",
    "smallest_cs_arcs",
    "smallest_period",
    "squares_by_root",
    "to_dot",
    "verify_all",
    "write_tsv",
]
