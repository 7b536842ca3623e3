"""Generators for the concrete function families used in the experiments:
affine-subspace indicators, the two-AND function, the adversarial
two-indicator distribution, and random juntas (Boolean and one-point
spoiled)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from .fourier import Scalar, TruthTable
from .gf2 import AffineSubspace, BitVec, enumerate_points, sample_dno_pair


def affine_indicator(v: AffineSubspace) -> TruthTable:
    """The 0/1 indicator of an affine subspace; 2^codim-Fourier-sparse."""
    vals = [0] * (1 << v.n)
    for p in enumerate_points(v):
        vals[p.word] = 1
    return TruthTable(v.n, vals)


def scaled_indicator(v: AffineSubspace, c: Scalar) -> TruthTable:
    """c * indicator(v); non-Boolean on all of v whenever c is not 0 or 1."""
    vals = [0] * (1 << v.n)
    for p in enumerate_points(v):
        vals[p.word] = c
    return TruthTable(v.n, vals)


def double_and(n: int) -> TruthTable:
    """AND of the first n/2 coordinates plus AND of the last n/2.

    Takes the value 2 only at the all-ones input; sparsity is exactly
    2 * 2^(n/2) - 1 (the two empty-set coefficients merge, no cancellation).
    """
    if n % 2 != 0 or n < 2:
        raise ValueError("need even n >= 2")
    h = n // 2
    lo_mask = (1 << h) - 1
    hi_mask = lo_mask << h
    vals = []
    for x in range(1 << n):
        vals.append(int(x & lo_mask == lo_mask) + int(x & hi_mask == hi_mask))
    return TruthTable(n, vals)


def dno_function(
    n: int, rng: random.Random
) -> Tuple[TruthTable, AffineSubspace, AffineSubspace]:
    """Sum of indicators of two random dim-n/2 affine subspaces meeting in
    one point.  Non-Boolean (value 2) exactly at that point; returns the
    witnesses alongside the table."""
    v1, v2 = sample_dno_pair(n, rng)
    f1, f2 = affine_indicator(v1), affine_indicator(v2)
    vals = [a + b for a, b in zip(f1.values, f2.values)]
    return TruthTable(n, vals), v1, v2


def _check_junta_params(n: int, k: int) -> int:
    if k < 1 or k & (k - 1):
        raise ValueError("k must be a power of two")
    logk = k.bit_length() - 1
    if logk > n:
        raise ValueError("log2(k) must be at most n")
    return logk


def gt_yes(n: int, k: int, rng: random.Random) -> TruthTable:
    """Uniform random Boolean function of the first log2(k) coordinates."""
    logk = _check_junta_params(n, k)
    assigned = [rng.randrange(2) for _ in range(k)]
    mask = (1 << logk) - 1
    return TruthTable(n, [assigned[x & mask] for x in range(1 << n)])


def gt_no(n: int, k: int, rng: random.Random) -> TruthTable:
    """As gt_yes, but one uniformly chosen assignment is overridden to 2."""
    logk = _check_junta_params(n, k)
    assigned = [rng.randrange(2) for _ in range(k)]
    assigned[rng.randrange(k)] = 2
    mask = (1 << logk) - 1
    return TruthTable(n, [assigned[x & mask] for x in range(1 << n)])


@dataclass(frozen=True)
class ZooSpec:
    """CLI-facing description of a generator call."""

    family: str
    n: int
    k: Optional[int] = None
    codim: Optional[int] = None
    scale: Optional[Scalar] = None
    seed: Optional[int] = None

    def build(self) -> TruthTable:
        rng = random.Random(self.seed)
        if self.family == "double-and":
            return double_and(self.n)
        if self.family == "dno":
            f, _, _ = dno_function(self.n, rng)
            return f
        if self.family == "gt-yes":
            return gt_yes(self.n, self._require("k"), rng)
        if self.family == "gt-no":
            return gt_no(self.n, self._require("k"), rng)
        if self.family in ("affine-indicator", "scaled-indicator"):
            from .gf2 import random_affine_subspace

            codim = self._require("codim")
            v = random_affine_subspace(self.n, self.n - codim, rng)
            if self.family == "affine-indicator":
                return affine_indicator(v)
            c = self.scale if self.scale is not None else 2
            return scaled_indicator(v, c)
        raise ValueError(f"unknown family {self.family!r}")

    def _require(self, name: str) -> int:
        v = getattr(self, name)
        if v is None:
            raise ValueError(f"family {self.family!r} needs parameter {name!r}")
        return v


FAMILIES = ("double-and", "dno", "gt-yes", "gt-no", "affine-indicator", "scaled-indicator")


def parse_zoo_spec(text: str) -> ZooSpec:
    """Parse e.g. "gt-no:n=8,k=4,seed=1" or "double-and:n=6"."""
    family, _, params = text.partition(":")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    kwargs = {}
    if params:
        for item in params.split(","):
            key, _, value = item.partition("=")
            if key not in ("n", "k", "codim", "scale", "seed"):
                raise ValueError(f"unknown zoo parameter {key!r}")
            kwargs[key] = Fraction(value) if key == "scale" else int(value)
    if "n" not in kwargs:
        raise ValueError("zoo spec needs n=<int>")
    return ZooSpec(family=family, **kwargs)
