"""Partition statistics, t-core bijections and exact q-series verification."""

from ._rpl import (
    ag_crank,
    alpha_from_n,
    bijection1,
    bijection1_inverse,
    bijection2,
    bijection2_inverse,
    check_names,
    classify,
    conjugate,
    core_count,
    dyson_rank,
    five_core_crank,
    five_cores_of,
    freq_token,
    is_t_core,
    joint_odd_counts,
    littlewood_compose,
    littlewood_decompose,
    n_from_alpha,
    odd_parts,
    orbit_op,
    orbit_rows,
    partition_count,
    partitions,
    phi2,
    phi2_inverse,
    quadrupling_map,
    refined_counts,
    residue_counts,
    residue_vector,
    run_check,
    srank,
    stcrank,
    t_core_of,
    theta_map,
    weight,
)

__all__ = [
    "ag_crank",
    "alpha_from_n",
    "bijection1",
    "bijection1_inverse",
    "bijection2",
    "bijection2_inverse",
    "check_names",
    "classify",
    "conjugate",
    "core_count",
    "dyson_rank",
    "five_core_crank",
    "five_cores_of",
    "freq_token",
    "is_t_core",
    "joint_odd_counts",
    "littlewood_compose",
    "littlewood_decompose",
    "n_from_alpha",
    "odd_parts",
    "orbit_op",
    "orbit_rows",
    "partition_count",
    "partitions",
    "phi2",
    "phi2_inverse",
    "quadrupling_map",
    "refined_counts",
    "residue_counts",
    "residue_vector",
    "run_check",
    "srank",
    "stcrank",
    "t_core_of",
    "theta_map",
    "weight",
]
