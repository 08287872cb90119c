"""Exact arithmetic kernel for R^n: rationals, Levi-Civita hyperreals,
Cauchy-Schwarz certificates, metric axioms, and continuity probes."""

from ._core import (
    CsCertificate,
    DimensionError,
    DomainError,
    EntriesSmallReport,
    Expression,
    ExprParseError,
    Hyper,
    LogicFault,
    MetricAxiomsReport,
    ProbeResult,
    Rat,
    ReplayReport,
    ReplayStep,
    approx_sqrt,
    classify,
    cs1_gap,
    cs2_holds,
    dot,
    dot_fixed_expr,
    entries_small_check,
    eval_expr,
    first_ratio_witness,
    lift,
    max_abs,
    metric_axioms_report,
    metric_sq,
    norm_sq,
    parse_expr,
    probe,
    prod2_expr,
    replay_proof,
    scalar_mul,
    sqrt_leq,
    sqrt_sum_eq,
    sqrt_sum_leq,
    sum_expr,
    triangle_equality,
    triangle_holds,
    vec_add,
    vec_sub,
    vec_sub_direct,
    verify_certificate,
    zvecp,
)

__all__ = [
    "CsCertificate",
    "DimensionError",
    "DomainError",
    "EntriesSmallReport",
    "Expression",
    "ExprParseError",
    "Hyper",
    "LogicFault",
    "MetricAxiomsReport",
    "ProbeResult",
    "Rat",
    "ReplayReport",
    "ReplayStep",
    "approx_sqrt",
    "classify",
    "cs1_gap",
    "cs2_holds",
    "dot",
    "dot_fixed_expr",
    "entries_small_check",
    "eval_expr",
    "first_ratio_witness",
    "lift",
    "max_abs",
    "metric_axioms_report",
    "metric_sq",
    "norm_sq",
    "parse_expr",
    "probe",
    "prod2_expr",
    "replay_proof",
    "scalar_mul",
    "sqrt_leq",
    "sqrt_sum_eq",
    "sqrt_sum_leq",
    "sum_expr",
    "triangle_equality",
    "triangle_holds",
    "vec_add",
    "vec_sub",
    "vec_sub_direct",
    "verify_certificate",
    "zvecp",
]

__version__ = "0.1.0"
