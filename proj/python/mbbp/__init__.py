# SPDX-License-Identifier: Apache-2.0
"""Exact solvers and bound machinery for the maximum balanced biclique problem."""

from ._mbbp import (  # noqa: F401
    Biclique,
    BipartiteGraph,
    BudgetExceededError,
    Constraint,
    DuplicateEdgeError,
    InvalidSeedError,
    InvalidVertexError,
    IoReadWriteError,
    MipModel,
    OracleResult,
    ParseFormatError,
    SearchStats,
    Sense,
    Side,
    SolveResult,
    SolveStatus,
    UnknownAlgorithmError,
    UpperBounds,
    branch_vertex_min_degree,
    brute_force_max_balanced,
    build_T_set,
    build_original,
    check_inequalities,
    common_neighbor_refine,
    compute_S,
    gen_random,
    h_index,
    initial_bounds,
    lp_relaxation,
    make_balance,
    parse_konect,
    propagate,
    read_native,
    read_native_file,
    run_ubp,
    solve,
    solve_bbclq,
    solve_ext_uni_bbclq,
    swap_sides,
    tightened_inequalities,
    variable_name,
    vertex_bound,
    with_tightening,
    write_lp_file,
    write_native,
    write_native_file,
)

__version__ = "0.1.0"
