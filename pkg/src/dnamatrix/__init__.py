"""Exact construction and verification of DNA matrices.

A DNA matrix A_n is the order-(n+1) coefficient matrix of the linear
system satisfied by the coefficients of a degree-n binary form invariant
under the hyperbolic rotation (x, y) -> (alpha x + beta y, beta x + alpha y).
"""

from .combinatorics import alt_sum, binom_ext, p_stifel_rhs
from .dna import (
    HyperbolaPoint,
    binomial_null_vector,
    build_dna,
    build_oracle,
    column_sum,
    entry_closed_form,
    entry_fast,
    eval_matrix,
    hyperbola_point,
    is_centrosymmetric,
    symbolic_null_check,
)
from .linalg import KernelBasis, centro_split, det_bareiss, det_centro, kernel, verify_parity
from .matrix import Matrix
from .poly import ALPHA, BETA, BiPoly, HyperbolaReduced, reduce_mod_hyperbola
from .rational import ExactRational, format_rational, parse_rational, rat_arith

__version__ = "0.1.0"
