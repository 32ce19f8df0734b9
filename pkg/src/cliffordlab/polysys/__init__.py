"""Exact sparse multivariate polynomial engine and certificate tools."""

from .certificates import (
    DEFAULT_PRIMES,
    CertificateReport,
    verify_decomposition_certificate,
)
from .groebner import (
    Ideal,
    groebner,
    ideal_intersect,
    ideal_member,
    ideal_mod_p,
    normal_form,
)
from .jsonio import dump_ideal, ideal_from_json, ideal_to_json, load_ideal
from .multipoly import MultiPoly, VarTable, exact_divide, leading_term
from .systems import (
    AllPivotsZeroError,
    PolyMatrix,
    bareiss_eliminate,
    build_linear_system,
    build_semiclifford_system,
    build_third_level_system,
    derive_ef,
    eval_batch,
    eval_poly,
    minors,
    third_level_vartable,
)

__all__ = [
    "AllPivotsZeroError",
    "CertificateReport",
    "DEFAULT_PRIMES",
    "Ideal",
    "MultiPoly",
    "PolyMatrix",
    "VarTable",
    "bareiss_eliminate",
    "build_linear_system",
    "build_semiclifford_system",
    "build_third_level_system",
    "derive_ef",
    "dump_ideal",
    "eval_batch",
    "eval_poly",
    "exact_divide",
    "groebner",
    "ideal_from_json",
    "ideal_intersect",
    "ideal_member",
    "ideal_mod_p",
    "ideal_to_json",
    "leading_term",
    "load_ideal",
    "minors",
    "normal_form",
    "third_level_vartable",
    "verify_decomposition_certificate",
]
