"""Shift-and-add adder graphs for multiplication by very large constants.

The flow has three steps: decompose each target into small odd bit
patterns, solve a multiple-constant-multiplication problem over the unique
patterns, and reconstruct the targets from the pattern outputs. Every step
has both an exact (SAT / exhaustive) and a heuristic route.
"""

from .numrep import SignedDigits, to_csd, from_digits, make_odd
from .addergraph import AdderGraph, AdderNode, GraphError
from .satcore import CnfFormula, SatOutcome, solve as sat_solve
from .decompose import (
    Decomposition,
    PlacedPattern,
    chunk_divide_binary,
    chunk_divide_csd,
    solve_pattern_decomposition,
    build_xc_instance,
    enumerate_pattern_sets,
)
from .mcm import McmInstance, McmSolution, solve_mcm_optimal, solve_mcm_heuristic, mcm_oracle
from .pipeline import FlowConfig, FlowResult, run_flow

__all__ = [
    "SignedDigits",
    "to_csd",
    "from_digits",
    "make_odd",
    "AdderGraph",
    "AdderNode",
    "GraphError",
    "CnfFormula",
    "SatOutcome",
    "sat_solve",
    "Decomposition",
    "PlacedPattern",
    "chunk_divide_binary",
    "chunk_divide_csd",
    "solve_pattern_decomposition",
    "build_xc_instance",
    "enumerate_pattern_sets",
    "McmInstance",
    "McmSolution",
    "solve_mcm_optimal",
    "solve_mcm_heuristic",
    "mcm_oracle",
    "FlowConfig",
    "FlowResult",
    "run_flow",
]
