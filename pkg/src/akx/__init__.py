"""Exact tools for weighted t-intersecting families and their Hamming-scheme analogues."""

from .circle import ZmSet, is_cross_s_agreeing, is_interval, is_s_agreeing, verify_katona_cross
from .closed_form import (
    breakpoint,
    compare_frankl,
    curve_rows,
    curve_breakpoints,
    mu_frankl,
    parse_p,
    w_closed,
    window,
    wsup_closed,
)
from .family import (
    ParseError,
    PreconditionError,
    Rat,
    SetFamily,
    Subset,
    canonical_form,
    dumps_setfam,
    frankl,
    is_monotone,
    is_t_intersecting,
    loads_setfam,
    measure,
    minimal_members,
    up_set,
)
from .generating import GeneratingData, generating_data, gs2_transform, gs3_transform
from .hamming import (
    HammingFamily,
    StableSetInstance,
    half_integral_max,
    hamming_oracle,
    hybrid_measure,
    is_equivalent_to_set_family,
    is_t_agreeing_upto_s,
    reduce_coordinate,
    reduce_full,
    sigma_pullback,
)
from .kernels import BACKEND
from .lifting import convergence_probe, level_sum_identity, lifted_measure, uniform_frankl_count
from .oracle import enumerate_optimal, max_uniform_t_intersecting, max_weight_t_intersecting
from .shifting import is_left_compressed, left_compress, shift_AB, shift_ij, stabilize
from .symmetrization import (
    NoAdmissibleIndex,
    SymmetryData,
    sym2_transform,
    sym3_transform,
    sym3plus_improve,
    symmetry_data,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GeneratingData",
    "HammingFamily",
    "NoAdmissibleIndex",
    "ParseError",
    "PreconditionError",
    "Rat",
    "SetFamily",
    "StableSetInstance",
    "Subset",
    "SymmetryData",
    "ZmSet",
    "breakpoint",
    "canonical_form",
    "compare_frankl",
    "convergence_probe",
    "curve_rows",
    "dumps_setfam",
    "enumerate_optimal",
    "curve_breakpoints",
    "frankl",
    "generating_data",
    "gs2_transform",
    "gs3_transform",
    "half_integral_max",
    "hamming_oracle",
    "hybrid_measure",
    "is_cross_s_agreeing",
    "is_equivalent_to_set_family",
    "is_interval",
    "is_left_compressed",
    "is_monotone",
    "is_s_agreeing",
    "is_t_agreeing_upto_s",
    "is_t_intersecting",
    "left_compress",
    "level_sum_identity",
    "lifted_measure",
    "loads_setfam",
    "max_uniform_t_intersecting",
    "max_weight_t_intersecting",
    "measure",
    "minimal_members",
    "mu_frankl",
    "parse_p",
    "reduce_coordinate",
    "reduce_full",
    "shift_AB",
    "shift_ij",
    "sigma_pullback",
    "stabilize",
    "sym2_transform",
    "sym3_transform",
    "sym3plus_improve",
    "symmetry_data",
    "uniform_frankl_count",
    "up_set",
    "verify_katona_cross",
    "w_closed",
    "window",
    "wsup_closed",
]
