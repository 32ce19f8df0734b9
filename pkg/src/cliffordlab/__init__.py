"""cliffordlab: exact verification of third-level qudit gate structure.

Symbolic gate algebra over Z_d, exhaustive solution-set enumeration, a
sparse exact polynomial engine with Groebner-basis certificates, and a
dense-matrix numerical oracle, wired together behind one CLI.
"""

from .modring import BigRational, FpElem, Modulus
from .gatealg import (
    AlmostDiagClifford,
    ConjugateTuple,
    PauliOp,
    SymMat,
    almost_diag_mul,
    conj_pauli_by_quad,
    pauli_mul,
    phi1_reduce,
    tuple_satisfies_polyeqns,
)
from .symplectic import SympVec, sym_product

__version__ = "1.0.0"

__all__ = [
    "AlmostDiagClifford",
    "BigRational",
    "ConjugateTuple",
    "FpElem",
    "Modulus",
    "PauliOp",
    "SymMat",
    "SympVec",
    "almost_diag_mul",
    "conj_pauli_by_quad",
    "pauli_mul",
    "phi1_reduce",
    "sym_product",
    "tuple_satisfies_polyeqns",
    "__version__",
]
