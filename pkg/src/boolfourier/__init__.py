"""Exact Fourier analysis of functions on the Boolean hypercube, with
experiment harnesses for sparsification, list decoding, sample-based
learning, and Booleanity testing."""

from .fourier import (
    Spectrum,
    TruthTable,
    character,
    dist,
    inverse_wht,
    is_boolean,
    l2_spectrum,
    non_boolean_count,
    parseval_residual,
    sparsity,
    spectral_norm,
    support_size,
    uncertainty_product,
    wht,
)
from .gf2 import AffineSubspace, BitVec, GF2Matrix

__all__ = [
    "AffineSubspace",
    "BitVec",
    "GF2Matrix",
    "Spectrum",
    "TruthTable",
    "character",
    "dist",
    "inverse_wht",
    "is_boolean",
    "l2_spectrum",
    "non_boolean_count",
    "parseval_residual",
    "sparsity",
    "spectral_norm",
    "support_size",
    "uncertainty_product",
    "wht",
]
