"""Trace p-norms and equality certificates on weighted block algebras."""

from holdercert._core import (
    BlockOperator,
    CauchySchwarzCertificate,
    EqualityCertificate,
    EqualityStatus,
    HolderReport,
    KernelError,
    OperatorKind,
    POneCertificate,
    ProofChainTrace,
    SwapNormalize,
    TraceAlgebra,
    TracePositivityCertificate,
    __version__,
    cauchy_schwarz_certify,
    conjugate_exponent,
    derive_seed,
    dual_norm_search,
    dual_witness,
    equality_certify,
    holder_report,
    inner,
    integer_power_check,
    modulus,
    modulus_reduction_check,
    opnorm,
    p_one_boundary_certify,
    pnorm,
    power,
    proof_replay,
    random_equality_pair,
    random_operator,
    range_projection,
    swap_normalize,
    trace,
    trace_positivity_certify,
)

__all__ = [
    "BlockOperator",
    "CauchySchwarzCertificate",
    "EqualityCertificate",
    "EqualityStatus",
    "HolderReport",
    "KernelError",
    "OperatorKind",
    "POneCertificate",
    "ProofChainTrace",
    "SwapNormalize",
    "TraceAlgebra",
    "TracePositivityCertificate",
    "__version__",
    "cauchy_schwarz_certify",
    "conjugate_exponent",
    "derive_seed",
    "dual_norm_search",
    "dual_witness",
    "equality_certify",
    "holder_report",
    "inner",
    "integer_power_check",
    "modulus",
    "modulus_reduction_check",
    "opnorm",
    "p_one_boundary_certify",
    "pnorm",
    "power",
    "proof_replay",
    "random_equality_pair",
    "random_operator",
    "range_projection",
    "swap_normalize",
    "trace",
    "trace_positivity_certify",
]
