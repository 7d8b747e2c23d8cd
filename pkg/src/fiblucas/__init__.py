"""Exact arithmetic for generalized Fibonacci-Lucas numbers, quaternions and
degree-3 symbol elements, with split/division certificates and order checks."""
from .classification import (
    Classification,
    ConicPoint,
    Verdict,
    classify,
    conic_search,
    family_certificate,
    verify_conic_point,
)
from .numthy import (
    factorize,
    hilbert_symbol,
    legendre_symbol,
    pythagorean_family,
    rep_x2_9y2,
    two_squares,
)
from .orders import (
    Combination,
    GeneratorTerm,
    closure_check,
    eval_combination,
    lattice_membership,
    scalar_product_decompose,
)
from .quaternion import QuatAlgebra, Quaternion, u_quaternion
from .sequences import (
    GLParams,
    PreconditionError,
    QuadExt,
    SeqParams,
    binet_a,
    binet_b,
    identity_check,
    parity_facts,
    seq_a,
    seq_b,
    u_number,
)
from .symbol3 import EPS, CycRat, SymAlgebra, SymbolElem, sym_from_sequence

__version__ = "0.1.0"
