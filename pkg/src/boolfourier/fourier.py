"""Exact truth tables and Walsh-Hadamard spectra for functions on F_2^n.

All arithmetic is exact.  Values are Python ints or Fractions; spectra
store 2^n * fhat(S) so that integer-valued tables have integer spectra.
Index i encodes the input x with coordinate x_{j+1} in bit j of i, the
same convention as BitVec.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .gf2 import MAX_DIM, AffineSubspace, BitVec, GF2Matrix, rank

Scalar = Union[int, Fraction]


def _check_len(n: int, values: Sequence[Scalar]) -> None:
    if not 0 <= n <= MAX_DIM:
        raise ValueError(f"dimension {n} out of range [0, {MAX_DIM}]")
    if len(values) != 1 << n:
        raise ValueError(f"expected {1 << n} values, got {len(values)}")


@dataclass(frozen=True)
class TruthTable:
    """Dense evaluation of f: F_2^n -> Q as 2^n exact values."""

    n: int
    values: Tuple[Scalar, ...]

    def __init__(self, n: int, values: Sequence[Scalar]):
        values = tuple(values)
        _check_len(n, values)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)

    def __call__(self, x: BitVec) -> Scalar:
        return self.values[x.word]


@dataclass(frozen=True)
class Spectrum:
    """Fourier coefficients scaled by 2^n: entry S holds 2^n * fhat(S)."""

    n: int
    scaled_coeffs: Tuple[Scalar, ...]

    def __init__(self, n: int, scaled_coeffs: Sequence[Scalar]):
        scaled_coeffs = tuple(scaled_coeffs)
        _check_len(n, scaled_coeffs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "scaled_coeffs", scaled_coeffs)

    def coefficient(self, s: BitVec) -> Fraction:
        return Fraction(self.scaled_coeffs[s.word]) / (1 << self.n)


def character(s: BitVec, x: BitVec) -> int:
    """chi_S(x) = (-1)^popcount(S & x)."""
    if s.n != x.n:
        raise ValueError("dimension mismatch")
    return -1 if bin(s.word & x.word).count("1") & 1 else 1


def _butterfly(values: List[Scalar]) -> List[Scalar]:
    """In-place Walsh-Hadamard butterfly; self-inverse up to a 2^n factor."""
    out = list(values)
    h = 1
    size = len(out)
    while h < size:
        for start in range(0, size, h * 2):
            for i in range(start, start + h):
                a, b = out[i], out[i + h]
                out[i], out[i + h] = a + b, a - b
        h *= 2
    return out


def wht(f: TruthTable) -> Spectrum:
    """scaled_coeffs[S] = sum_x f(x) chi_S(x); fhat(S) is that over 2^n."""
    return Spectrum(f.n, _butterfly(list(f.values)))


def inverse_wht(s: Spectrum) -> TruthTable:
    """Exact inverse: inverse_wht(wht(f)) == f for every f."""
    scale = 1 << s.n
    vals = [Fraction(v, scale) for v in _butterfly(list(s.scaled_coeffs))]
    return TruthTable(s.n, tuple(v if v.denominator != 1 else int(v) for v in vals))


def sparsity(s: Spectrum) -> int:
    """|supp(fhat)|: number of nonzero Fourier coefficients."""
    return sum(1 for v in s.scaled_coeffs if v != 0)


def support_size(f: TruthTable) -> int:
    """|supp(f)|: number of inputs with f(x) != 0."""
    return sum(1 for v in f.values if v != 0)


def spectral_norm(s: Spectrum) -> Fraction:
    """||fhat||_1, the sum of absolute Fourier coefficients."""
    return Fraction(sum(abs(v) for v in s.scaled_coeffs), 1 << s.n)


def l2_spectrum(s: Spectrum) -> Fraction:
    """||fhat||_2^2."""
    return Fraction(sum(v * v for v in s.scaled_coeffs), 1) / (1 << (2 * s.n))


def parseval_residual(f: TruthTable) -> Fraction:
    """E_x[f^2] - ||fhat||_2^2; exactly 0 for every f."""
    mean_sq = Fraction(sum(v * v for v in f.values), 1) / (1 << f.n)
    return mean_sq - l2_spectrum(wht(f))


def dist(f: TruthTable, g: TruthTable) -> int:
    """Number of inputs where f and g disagree."""
    if f.n != g.n:
        raise ValueError("dimension mismatch")
    return sum(1 for a, b in zip(f.values, g.values) if a != b)


def non_boolean_count(f: TruthTable) -> int:
    """Number of inputs with f(x) outside {0, 1}."""
    return sum(1 for v in f.values if v != 0 and v != 1)


def is_boolean(f: TruthTable) -> bool:
    return non_boolean_count(f) == 0


def uncertainty_product(f: TruthTable) -> int:
    """|supp(f)| * |supp(fhat)|; at least 2^n for every nonzero f."""
    d = support_size(f)
    if d == 0:
        raise ValueError("the zero function has no uncertainty product")
    return d * sparsity(wht(f))


def restrict(f: TruthTable, v: AffineSubspace) -> TruthTable:
    """g(y) = f(offset + sum y_i basis_i), a table on dim(v) variables.

    The map runs through v's stored basis order; Fourier-sparsity never
    increases under this composition.
    """
    if v.n != f.n:
        raise ValueError("subspace lives in the wrong ambient dimension")
    r = v.dim
    vals = []
    for y in range(1 << r):
        w = v.offset.word
        for i in range(r):
            if (y >> i) & 1:
                w ^= v.basis[i].word
        vals.append(f.values[w])
    return TruthTable(r, vals)


def compose_affine(f: TruthTable, m: GF2Matrix, shift: BitVec) -> TruthTable:
    """g(x) = f(M x + shift); exact sparsity-preserving relabeling."""
    if m.nrows != f.n or m.ncols != f.n or shift.n != f.n:
        raise ValueError("dimension mismatch")
    if rank(m) != f.n:
        raise ValueError("map is singular")
    vals = [None] * (1 << f.n)
    for x in range(1 << f.n):
        xv = BitVec(f.n, x)
        vals[x] = f.values[m.apply(xv).word ^ shift.word]
    return TruthTable(f.n, vals)


def _format_rational(v: Scalar) -> str:
    fv = Fraction(v)
    return str(fv.numerator) if fv.denominator == 1 else f"{fv.numerator}/{fv.denominator}"


def _parse_rational(s: str) -> Scalar:
    v = Fraction(s)
    return int(v) if v.denominator == 1 else v


def table_to_text(f: TruthTable) -> str:
    """`n=<int>` then 2^n exact rationals in index order, one per line."""
    lines = [f"n={f.n}"]
    lines.extend(_format_rational(v) for v in f.values)
    return "\n".join(lines) + "\n"


def table_from_text(text: str) -> TruthTable:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines[0].startswith("n="):
        raise ValueError("missing n= header")
    n = int(lines[0][2:])
    return TruthTable(n, [_parse_rational(ln) for ln in lines[1 : 1 + (1 << n)]])


def spectrum_to_text(s: Spectrum) -> str:
    """Same shape as the table format, with a `scaled=2^n` header line."""
    lines = [f"n={s.n}", f"scaled=2^{s.n}"]
    lines.extend(_format_rational(v) for v in s.scaled_coeffs)
    return "\n".join(lines) + "\n"


def spectrum_from_text(text: str) -> Spectrum:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines[0].startswith("n="):
        raise ValueError("missing n= header")
    n = int(lines[0][2:])
    if lines[1] != f"scaled=2^{n}":
        raise ValueError("missing or inconsistent scaled= header")
    return Spectrum(n, [_parse_rational(ln) for ln in lines[2 : 2 + (1 << n)]])
