"""Exact linear algebra over GF(2): bit-vectors, matrices, affine subspaces.

Vectors are fixed-length bit strings with coordinate x_1 stored in bit 0
(little-endian).  In the text format coordinate x_1 is the leftmost
character.  Affine subspaces are kept in a canonical form (reduced
row-echelon basis, offset reduced against the basis) so that structural
equality coincides with set equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

MAX_DIM = 24


@dataclass(frozen=True)
class BitVec:
    """A vector in F_2^n, packed into an int (coordinate x_1 = bit 0)."""

    n: int
    word: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_DIM:
            raise ValueError(f"dimension {self.n} out of range [0, {MAX_DIM}]")
        if not 0 <= self.word < (1 << self.n):
            raise ValueError("word has bits outside the declared dimension")

    @classmethod
    def from_string(cls, s: str) -> "BitVec":
        """Parse a bitstring with x_1 leftmost."""
        if any(c not in "01" for c in s):
            raise ValueError(f"not a bitstring: {s!r}")
        word = 0
        for i, c in enumerate(s):
            if c == "1":
                word |= 1 << i
        return cls(len(s), word)

    def to_string(self) -> str:
        return "".join("1" if (self.word >> i) & 1 else "0" for i in range(self.n))

    def bit(self, i: int) -> int:
        """Coordinate x_{i+1}."""
        return (self.word >> i) & 1

    def popcount(self) -> int:
        return bin(self.word).count("1")

    def dot(self, other: "BitVec") -> int:
        """Inner product <self, other> over GF(2)."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return bin(self.word & other.word).count("1") & 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return BitVec(self.n, self.word ^ other.word)

    def is_zero(self) -> bool:
        return self.word == 0

    def __str__(self) -> str:
        return self.to_string()


def zero_vec(n: int) -> BitVec:
    return BitVec(n, 0)


def _rref(words: List[int]) -> Tuple[List[int], List[int]]:
    """Reduced row-echelon form of int-packed rows.

    Pivots are taken at the lowest set bit (coordinate x_1 first).  Returns
    (nonzero rows sorted by pivot, pivot bit positions).
    """
    rows: List[int] = []
    pivots: List[int] = []
    for w in words:
        for r, p in zip(rows, pivots):
            if (w >> p) & 1:
                w ^= r
        if w == 0:
            continue
        p = (w & -w).bit_length() - 1
        for i, r in enumerate(rows):
            if (r >> p) & 1:
                rows[i] = r ^ w
        rows.append(w)
        pivots.append(p)
    order = sorted(range(len(rows)), key=lambda i: pivots[i])
    return [rows[i] for i in order], [pivots[i] for i in order]


def _reduce(word: int, rows: List[int], pivots: List[int]) -> int:
    for r, p in zip(rows, pivots):
        if (word >> p) & 1:
            word ^= r
    return word


@dataclass(frozen=True)
class GF2Matrix:
    """A rectangular matrix over GF(2), stored as a list of BitVec rows."""

    rows: Tuple[BitVec, ...]

    def __init__(self, rows):
        rows = tuple(rows)
        if rows and any(r.n != rows[0].n for r in rows):
            raise ValueError("rows have mixed lengths")
        object.__setattr__(self, "rows", rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.rows[0].n if self.rows else 0

    def apply(self, x: BitVec) -> BitVec:
        """Matrix-vector product (each output bit is <row_i, x>)."""
        if x.n != self.ncols:
            raise ValueError("dimension mismatch")
        word = 0
        for i, row in enumerate(self.rows):
            if row.dot(x):
                word |= 1 << i
        return BitVec(self.nrows, word)


def rank(m: GF2Matrix) -> int:
    """Dimension of the row span over GF(2)."""
    rows, _ = _rref([r.word for r in m.rows])
    return len(rows)


def solve(m: GF2Matrix, b: BitVec) -> Optional[BitVec]:
    """Some x with m @ x = b, or None if inconsistent.

    Deterministic: free variables are set to 0.
    """
    if b.n != m.nrows:
        raise ValueError("right-hand side length must equal the row count")
    part, _ = solve_full(m, b)
    return part


def solve_full(m: GF2Matrix, b: BitVec) -> Tuple[Optional[BitVec], List[BitVec]]:
    """Particular solution (free variables zeroed) and a nullspace basis."""
    ncols = m.ncols
    # eliminate on augmented rows [row | b_i] with the RHS in bit `ncols`
    aug = [m.rows[i].word | (b.bit(i) << ncols) for i in range(m.nrows)]
    rows: List[int] = []
    pivots: List[int] = []
    for w in aug:
        for r, p in zip(rows, pivots):
            if (w >> p) & 1:
                w ^= r
        if w == 0:
            continue
        p = (w & -w).bit_length() - 1
        if p == ncols:
            return None, []  # 0 = 1 row: inconsistent
        for i, r in enumerate(rows):
            if (r >> p) & 1:
                rows[i] = r ^ w
        rows.append(w)
        pivots.append(p)
    part = 0
    for r, p in zip(rows, pivots):
        if (r >> ncols) & 1:
            part |= 1 << p
    pivot_set = set(pivots)
    null_basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = 1 << j
        for r, p in zip(rows, pivots):
            if (r >> j) & 1:
                v |= 1 << p
        null_basis.append(BitVec(ncols, v))
    return BitVec(ncols, part), null_basis


@dataclass(frozen=True)
class AffineSubspace:
    """A coset offset + span(basis) in F_2^n, always in canonical form."""

    offset: BitVec
    basis: Tuple[BitVec, ...]

    def __init__(self, offset: BitVec, basis):
        basis = tuple(basis)
        if any(b.n != offset.n for b in basis):
            raise ValueError("basis/offset dimension mismatch")
        rows, pivots = _rref([b.word for b in basis])
        if len(rows) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        off = _reduce(offset.word, rows, pivots)
        object.__setattr__(self, "offset", BitVec(offset.n, off))
        object.__setattr__(self, "basis", tuple(BitVec(offset.n, r) for r in rows))

    @property
    def n(self) -> int:
        return self.offset.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_linear(self) -> bool:
        return self.offset.is_zero()


def full_space(n: int) -> AffineSubspace:
    return AffineSubspace(zero_vec(n), [BitVec(n, 1 << i) for i in range(n)])


def membership(v: AffineSubspace, x: BitVec) -> bool:
    """True iff x - offset lies in span(basis)."""
    if x.n != v.n:
        raise ValueError("dimension mismatch")
    rows = [b.word for b in v.basis]
    pivots = [(w & -w).bit_length() - 1 for w in rows]
    return _reduce(x.word ^ v.offset.word, rows, pivots) == 0


def enumerate_points(v: AffineSubspace) -> List[BitVec]:
    """All 2^dim members: offset + sum c_i basis_i, c a binary counter."""
    if v.dim > MAX_DIM:
        raise ValueError(f"dimension {v.dim} exceeds the enumeration cap {MAX_DIM}")
    pts = []
    for c in range(1 << v.dim):
        w = v.offset.word
        for i in range(v.dim):
            if (c >> i) & 1:
                w ^= v.basis[i].word
        pts.append(BitVec(v.n, w))
    return pts


def affine_span(points: List[BitVec]) -> Optional[AffineSubspace]:
    """Smallest affine subspace containing the points; None for an empty list."""
    if not points:
        return None
    p0 = points[0]
    dirs, _ = _rref([(p.word ^ p0.word) for p in points[1:]])
    return AffineSubspace(p0, [BitVec(p0.n, w) for w in dirs])


def intersect(v1: AffineSubspace, v2: AffineSubspace) -> Optional[AffineSubspace]:
    """The affine subspace of common points, or None if disjoint."""
    if v1.n != v2.n:
        raise ValueError("ambient dimension mismatch")
    n = v1.n
    # Solve B1 s + B2 t = offset1 + offset2 over unknowns (s, t).
    r1, r2 = v1.dim, v2.dim
    cols = r1 + r2
    eq_rows = []
    for j in range(n):
        w = 0
        for i in range(r1):
            if v1.basis[i].bit(j):
                w |= 1 << i
        for i in range(r2):
            if v2.basis[i].bit(j):
                w |= 1 << (r1 + i)
        eq_rows.append(BitVec(cols, w))
    rhs = v1.offset ^ v2.offset
    part, null_basis = solve_full(GF2Matrix(eq_rows), rhs)
    if part is None:
        return None

    def point_from_s(u: BitVec) -> int:
        w = 0
        for i in range(r1):
            if u.bit(i):
                w ^= v1.basis[i].word
        return w

    off = BitVec(n, v1.offset.word ^ point_from_s(part))
    dirs = [BitVec(n, point_from_s(u)) for u in null_basis]
    rows, _ = _rref([d.word for d in dirs])
    return AffineSubspace(off, [BitVec(n, w) for w in rows])


def random_subspace(n: int, r: int, rng: random.Random) -> AffineSubspace:
    """A uniformly random r-dimensional linear subspace of F_2^n.

    Draws r vectors uniformly conditioned on independence (rejection);
    uniform over subspaces since all subspaces have equally many ordered
    bases.
    """
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    basis: List[int] = []
    while len(basis) < r:
        w = rng.randrange(1 << n)
        rows, pivots = _rref(basis)
        if _reduce(w, rows, pivots) == 0:
            continue
        basis.append(w)
    return AffineSubspace(zero_vec(n), [BitVec(n, w) for w in basis])


def random_affine_subspace(n: int, r: int, rng: random.Random) -> AffineSubspace:
    """A uniformly random r-dimensional affine subspace (uniform coset)."""
    v = random_subspace(n, r, rng)
    offset = BitVec(n, rng.randrange(1 << n))
    return AffineSubspace(offset, v.basis)


def random_invertible_map(n: int, rng: random.Random) -> GF2Matrix:
    """A uniformly random invertible n x n matrix over GF(2), by rejection."""
    if n < 1:
        raise ValueError("need n >= 1")
    while True:
        rows = [BitVec(n, rng.randrange(1 << n)) for _ in range(n)]
        m = GF2Matrix(rows)
        if rank(m) == n:
            return m


def sample_dno_pair(n: int, rng: random.Random) -> Tuple[AffineSubspace, AffineSubspace]:
    """A uniform pair of dim-n/2 affine subspaces meeting in exactly one point.

    Rejection sampling from independent uniform affine subspaces.
    """
    if n % 2 != 0 or n < 2:
        raise ValueError("need even n >= 2")
    r = n // 2
    while True:
        v1 = random_affine_subspace(n, r, rng)
        v2 = random_affine_subspace(n, r, rng)
        w = intersect(v1, v2)
        if w is not None and w.dim == 0:
            return v1, v2


def subspace_to_text(v: AffineSubspace) -> str:
    """Serialize: `n=<int> dim=<int>`, `offset=<bits>`, one basis row per line."""
    lines = [f"n={v.n} dim={v.dim}", f"offset={v.offset.to_string()}"]
    lines.extend(b.to_string() for b in v.basis)
    return "\n".join(lines) + "\n"


def subspace_from_text(text: str) -> AffineSubspace:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = dict(kv.split("=") for kv in lines[0].split())
    n, dim = int(header["n"]), int(header["dim"])
    if not lines[1].startswith("offset="):
        raise ValueError("missing offset line")
    offset = BitVec.from_string(lines[1].split("=", 1)[1])
    basis = [BitVec.from_string(ln.strip()) for ln in lines[2 : 2 + dim]]
    if offset.n != n or len(basis) != dim:
        raise ValueError("subspace text is inconsistent with its header")
    return AffineSubspace(offset, basis)
