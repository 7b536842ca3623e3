"""Randomized sparse approximation by sampling frequency sets with
probability proportional to |coefficient|, plus error measurement and the
rounding step that turns a good approximant back into a {-1,0,+1} table."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .fourier import Scalar, Spectrum, TruthTable, character
from .gf2 import BitVec


@dataclass(frozen=True)
class SparseApproximant:
    """scale = ||fhat||_1; evaluates to (scale/|terms|) * sum sign*chi_S."""

    n: int
    scale: Fraction
    terms: Tuple[Tuple[BitVec, int], ...]

    def __call__(self, x: BitVec) -> Fraction:
        if not self.terms:
            return Fraction(0)
        acc = sum(sign * character(s, x) for s, sign in self.terms)
        return self.scale * Fraction(acc, len(self.terms))


def coefficient_distribution(s: Spectrum) -> List[Tuple[BitVec, Fraction]]:
    """The distribution D(S) = |fhat(S)| / ||fhat||_1 over the support."""
    weights = [abs(v) for v in s.scaled_coeffs]
    total = sum(weights)
    if total == 0:
        raise ValueError("the zero spectrum has no coefficient distribution")
    return [
        (BitVec(s.n, i), Fraction(w) / total)
        for i, w in enumerate(weights)
        if w != 0
    ]


def sample_approximant(s: Spectrum, size: int, rng: random.Random) -> SparseApproximant:
    """`size` i.i.d. draws from the coefficient distribution, each tagged
    with the sign of its source coefficient.  The zero spectrum yields the
    zero approximant."""
    if size < 1:
        raise ValueError("need size >= 1")
    weights = [abs(v) for v in s.scaled_coeffs]
    total = sum(weights)
    if total == 0:
        return SparseApproximant(s.n, Fraction(0), ())
    # draw exactly: integer weights over a common denominator
    denom = 1
    for w in weights:
        if isinstance(w, Fraction):
            denom = denom * w.denominator // math.gcd(denom, w.denominator)
    int_weights = [int(w * denom) for w in weights]
    support = [(i, iw) for i, iw in enumerate(int_weights) if iw]
    cumulative = []
    acc = 0
    for _, iw in support:
        acc += iw
        cumulative.append(acc)
    scale = Fraction(total, 1 << s.n) if not isinstance(total, Fraction) else total / (1 << s.n)
    terms = []
    for _ in range(size):
        u = rng.randrange(acc)
        lo, hi = 0, len(cumulative) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if u < cumulative[mid]:
                hi = mid
            else:
                lo = mid + 1
        idx = support[lo][0]
        sign = 1 if s.scaled_coeffs[idx] > 0 else -1
        terms.append((BitVec(s.n, idx), sign))
    return SparseApproximant(s.n, Fraction(scale), tuple(terms))


def chernoff_size(a: Fraction, eps: Fraction, delta: Fraction) -> int:
    """ceil(2 a^2 ln(2/delta) / eps^2): a Hoeffding-justified sample count
    for mean estimation of [-a,+a] variables to accuracy eps with failure
    probability delta <= 1/2."""
    if not 0 < delta <= Fraction(1, 2):
        raise ValueError("need 0 < delta <= 1/2")
    if eps <= 0:
        raise ValueError("need eps > 0")
    a, eps, delta = Fraction(a), Fraction(eps), Fraction(delta)
    return math.ceil(2 * a * a * math.log(2 / delta) / (eps * eps))


def measure_bad_fraction(
    f: TruthTable, approx: SparseApproximant, eps: Fraction
) -> Fraction:
    """Exact fraction of x with |f(x) - approx(x)| >= eps."""
    if approx.n != f.n:
        raise ValueError("dimension mismatch")
    bad = 0
    for i, v in enumerate(f.values):
        if abs(v - approx(BitVec(f.n, i))) >= eps:
            bad += 1
    return Fraction(bad, 1 << f.n)


def rounding_defines_function(
    f: TruthTable, approx: SparseApproximant
) -> TruthTable:
    """Round the approximant to the nearest value in {-1, 0, +1}.

    Ties (|value| exactly 1/2) round toward 0.  Requires f's range to be
    contained in {-1, 0, +1}; f itself is only used for the range check and
    the ambient dimension."""
    if any(v not in (-1, 0, 1) for v in f.values):
        raise ValueError("f must have range {-1, 0, +1}")
    if approx.n != f.n:
        raise ValueError("dimension mismatch")
    half = Fraction(1, 2)
    vals = []
    for i in range(1 << f.n):
        a = approx(BitVec(f.n, i))
        if a > half:
            vals.append(1)
        elif a < -half:
            vals.append(-1)
        else:
            vals.append(0)
    return TruthTable(f.n, vals)
