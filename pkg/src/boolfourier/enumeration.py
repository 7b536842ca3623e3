"""Exhaustive and parametric enumeration of sparse Boolean functions, and
list-decoding counts (how many class members lie within Hamming distance d
of a center function)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .fourier import TruthTable, dist, is_boolean, sparsity, wht
from .gf2 import AffineSubspace, BitVec, zero_vec
from .zoo import affine_indicator

EXHAUSTIVE_CAP = 4
EXHAUSTIVE_LONG_CAP = 5


def _int_sparsity(values: List[int]) -> int:
    """Nonzero count of the integer Walsh-Hadamard transform, in place."""
    out = list(values)
    h = 1
    size = len(out)
    while h < size:
        for start in range(0, size, h * 2):
            for i in range(start, start + h):
                a, b = out[i], out[i + h]
                out[i], out[i + h] = a + b, a - b
        h *= 2
    return sum(1 for v in out if v)


def iter_sparse_boolean(n: int, k: int, long_run: bool = False) -> Iterator[TruthTable]:
    """All Boolean tables on n variables with sparsity <= k, streamed in
    table-index order."""
    cap = EXHAUSTIVE_LONG_CAP if long_run else EXHAUSTIVE_CAP
    if n > cap:
        raise ValueError(
            f"exhaustive enumeration capped at n = {cap}"
            + ("" if long_run else " (pass long_run for n = 5)")
        )
    size = 1 << n
    for code in range(1 << size):
        vals = [(code >> i) & 1 for i in range(size)]
        if _int_sparsity(vals) <= k:
            yield TruthTable(n, vals)


def enumerate_sparse_boolean(n: int, k: int, long_run: bool = False) -> List[TruthTable]:
    return list(iter_sparse_boolean(n, k, long_run))


def iter_linear_subspaces(n: int, r: int) -> Iterator[AffineSubspace]:
    """All r-dimensional linear subspaces of F_2^n, one canonical RREF
    basis each."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    for pivots in itertools.combinations(range(n), r):
        pivot_set = set(pivots)
        free_cols = [
            [j for j in range(p + 1, n) if j not in pivot_set] for p in pivots
        ]
        total_free = sum(len(cols) for cols in free_cols)
        for bits in range(1 << total_free):
            basis = []
            pos = 0
            for i, p in enumerate(pivots):
                w = 1 << p
                for j in free_cols[i]:
                    if (bits >> pos) & 1:
                        w |= 1 << j
                    pos += 1
                basis.append(BitVec(n, w))
            yield AffineSubspace(zero_vec(n), basis)


def iter_affine_subspaces(n: int, r: int) -> Iterator[AffineSubspace]:
    """All r-dimensional affine subspaces, each exactly once (canonical
    coset representatives have zeros at the pivot coordinates)."""
    for v in iter_linear_subspaces(n, r):
        pivot_mask = 0
        for b in v.basis:
            pivot_mask |= b.word & -b.word
        free_positions = [j for j in range(n) if not (pivot_mask >> j) & 1]
        for bits in range(1 << len(free_positions)):
            off = 0
            for i, j in enumerate(free_positions):
                if (bits >> i) & 1:
                    off |= 1 << j
            yield AffineSubspace(BitVec(n, off), v.basis)


def enumerate_affine_indicators(n: int, codim: int) -> List[TruthTable]:
    """Indicators of every affine subspace of the given codimension."""
    if not 0 <= codim <= n or n > 14:
        raise ValueError("need 0 <= codim <= n <= 14")
    return [affine_indicator(v) for v in iter_affine_subspaces(n, n - codim)]


@dataclass(frozen=True)
class CandidateClass:
    """A family of Boolean tables to decode against or learn from."""

    kind: str  # "exhaustive" | "affine" | "explicit"
    n: int
    k: Optional[int] = None
    codim: Optional[int] = None
    members_list: Optional[Tuple[TruthTable, ...]] = None
    long_run: bool = False

    @classmethod
    def exhaustive(cls, n: int, k: int, long_run: bool = False) -> "CandidateClass":
        return cls(kind="exhaustive", n=n, k=k, long_run=long_run)

    @classmethod
    def affine_indicators(cls, n: int, codim: int) -> "CandidateClass":
        return cls(kind="affine", n=n, codim=codim)

    @classmethod
    def explicit(cls, members: Sequence[TruthTable]) -> "CandidateClass":
        members = tuple(members)
        if not members:
            raise ValueError("explicit class must be nonempty")
        if any(not is_boolean(m) for m in members):
            raise ValueError("class members must be Boolean")
        return cls(kind="explicit", n=members[0].n, members_list=members)

    def members(self) -> Iterator[TruthTable]:
        if self.kind == "exhaustive":
            yield from iter_sparse_boolean(self.n, self.k, self.long_run)
        elif self.kind == "affine":
            yield from enumerate_affine_indicators(self.n, self.codim)
        elif self.kind == "explicit":
            yield from self.members_list
        else:
            raise ValueError(f"unknown class kind {self.kind!r}")


def list_decode_count(
    f: TruthTable, k: int, d: int, cls: CandidateClass
) -> Tuple[int, List[TruthTable]]:
    """Members g of the class with sparsity(g) <= k and dist(f, g) <= d."""
    hits = []
    for g in cls.members():
        if g.n != f.n:
            raise ValueError("class member has the wrong dimension")
        if dist(f, g) <= d and sparsity(wht(g)) <= k:
            hits.append(g)
    return len(hits), hits


def min_distance_report(n: int, k: int, long_run: bool = False) -> int:
    """Minimum pairwise distance over all Boolean tables of sparsity <= k."""
    members = enumerate_sparse_boolean(n, k, long_run)
    best = 1 << n
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            d = dist(members[i], members[j])
            if d < best:
                best = d
    return best


def growth_curve(
    n: int, k: int, f: TruthTable, d_grid: Optional[Sequence[int]] = None
) -> List[Tuple[int, int, float]]:
    """Rows (d, count, log2 count) of the exhaustive list-decoding count
    around f, over a distance grid (default: 0..2^n)."""
    import math

    if d_grid is None:
        d_grid = range(0, (1 << n) + 1)
    # one enumeration pass; counts per d fall out of the distance histogram
    hist = [0] * ((1 << n) + 1)
    for g in iter_sparse_boolean(n, k):
        hist[dist(f, g)] += 1
    cumulative = list(itertools.accumulate(hist))
    rows = []
    for d in d_grid:
        count = cumulative[min(d, 1 << n)]
        rows.append((d, count, math.log2(count) if count else float("-inf")))
    return rows
