"""Booleanity testing of Fourier-sparse functions: the quadratic-query
baseline tester, the subspace-restriction tester, the restriction-lemma
experiment, and the adversarial lower-bound machinery (disjoint-span event
estimation and the Boolean certificate construction)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .enumeration import CandidateClass
from .fourier import TruthTable, is_boolean, restrict
from .gf2 import (
    AffineSubspace,
    BitVec,
    GF2Matrix,
    affine_span,
    intersect,
    membership,
    random_subspace,
    sample_dno_pair,
    solve,
    zero_vec,
)
from .learn import Sample, eliminate

EXACT_MODE_MAX_DIM = 4


def density_bound_l(k: int) -> int:
    """L = (k^2 + k + 2) / 2: a non-Boolean k-sparse function is non-Boolean
    on at least a 1/L fraction of inputs."""
    return (k * k + k + 2) // 2


@dataclass(frozen=True)
class TesterVerdict:
    accept: bool
    certificate: Optional[BitVec] = None  # queried point with f(x) outside {0,1}
    queries_used: int = 0


@dataclass(frozen=True)
class TesterConfig:
    k: int
    constant_c: Fraction = Fraction(2)
    consistency_mode: str = "certificate"  # "exact" | "certificate"

    def __post_init__(self):
        if self.constant_c <= 0:
            raise ValueError("constant_c must be positive")
        if self.consistency_mode not in ("exact", "certificate"):
            raise ValueError(f"unknown consistency mode {self.consistency_mode!r}")


def naive_tester(f: TruthTable, k: int, rng: random.Random) -> TesterVerdict:
    """Query ceil(L ln 3) uniform points and reject iff a non-Boolean value
    is seen; one-sided, soundness >= 2/3 on non-Boolean k-sparse inputs."""
    l = density_bound_l(k)
    m = math.ceil(l * math.log(3))
    size = 1 << f.n
    for i in range(m):
        x = rng.randrange(size)
        if f.values[x] not in (0, 1):
            return TesterVerdict(accept=False, certificate=BitVec(f.n, x), queries_used=i + 1)
    return TesterVerdict(accept=True, queries_used=m)


def subspace_tester(f: TruthTable, cfg: TesterConfig, rng: random.Random) -> TesterVerdict:
    """Restrict f to a random subspace of dimension ~ 2 log2 k, sample the
    restriction, and check consistency with some sparse Boolean function.

    exact mode runs the full elimination over all k-sparse Boolean tables
    on r variables (feasible only for r <= 4); certificate mode accepts iff
    every sampled value is Boolean, which keeps one-sided soundness.
    """
    k = cfg.k
    l = density_bound_l(k)
    r = min(f.n, math.ceil(math.log2(100 * l)))
    if cfg.consistency_mode == "exact" and r > EXACT_MODE_MAX_DIM:
        raise ValueError(
            f"exact mode needs restriction dimension <= {EXACT_MODE_MAX_DIM}, got {r}"
        )
    v = random_subspace(f.n, r, rng)
    g = restrict(f, v)
    logk = math.log2(k) if k > 1 else 1.0
    q = math.ceil(cfg.constant_c * r * k * logk)
    samples: List[Sample] = []
    bad: Optional[int] = None
    for _ in range(q):
        y = rng.randrange(1 << r)
        val = g.values[y]
        samples.append(Sample(BitVec(r, y), val))
        if bad is None and val not in (0, 1):
            bad = y
    if bad is not None:
        # lift the witness back to the ambient space
        w = v.offset.word
        for i in range(r):
            if (bad >> i) & 1:
                w ^= v.basis[i].word
        return TesterVerdict(accept=False, certificate=BitVec(f.n, w), queries_used=q)
    if cfg.consistency_mode == "exact":
        outcome = eliminate(samples, CandidateClass.exhaustive(r, k))
        if outcome.status == "inconsistent":
            return TesterVerdict(accept=False, certificate=None, queries_used=q)
    return TesterVerdict(accept=True, queries_used=q)


def restriction_experiment(
    f: TruthTable, k: int, r: int, trials: int, rng: random.Random
) -> float:
    """Empirical probability that restricting f to a uniform random linear
    subspace of dimension r leaves it non-Boolean."""
    if is_boolean(f):
        raise ValueError("restriction experiment needs a non-Boolean input")
    if r > f.n:
        raise ValueError("need r <= n")
    hits = 0
    for _ in range(trials):
        v = random_subspace(f.n, r, rng)
        if not is_boolean(restrict(f, v)):
            hits += 1
    return hits / trials


def event_e_holds(
    v1: AffineSubspace, v2: AffineSubspace, query_points: Sequence[BitVec]
) -> bool:
    """The affine spans of the queried points inside v1 and v2 are disjoint
    (an empty span counts as disjoint)."""
    w1 = affine_span([p for p in query_points if membership(v1, p)])
    w2 = affine_span([p for p in query_points if membership(v2, p)])
    if w1 is None or w2 is None:
        return True
    return intersect(w1, w2) is None


def event_e_estimator(
    n: int, query_points: Sequence[BitVec], trials: int, rng: random.Random
) -> float:
    """Fraction of random one-point-intersecting subspace pairs for which
    the queried points' spans are disjoint."""
    if n % 2 != 0:
        raise ValueError("need even n")
    hits = 0
    for _ in range(trials):
        v1, v2 = sample_dno_pair(n, rng)
        if event_e_holds(v1, v2, query_points):
            hits += 1
    return hits / trials if trials else 1.0


def _coords_in(v: AffineSubspace, x: BitVec) -> BitVec:
    """Coefficients y with x = offset + sum y_i basis_i; error if x not in v."""
    rows = []
    for j in range(v.n):
        w = 0
        for i in range(v.dim):
            if v.basis[i].bit(j):
                w |= 1 << i
        rows.append(BitVec(v.dim, w))
    y = solve(GF2Matrix(rows), x ^ v.offset)
    if y is None:
        raise ValueError("point is not in the subspace")
    return y


def construct_certificate(
    v1: AffineSubspace,
    v2: AffineSubspace,
    w2: Optional[AffineSubspace],
) -> AffineSubspace:
    """An affine hyperplane of v2 containing w2 and avoiding the unique
    point of v1 & v2.

    Its indicator added to v1's yields a Boolean function that agrees with
    1_{v1} + 1_{v2} on every queried point when the disjoint-span event
    holds."""
    meet = intersect(v1, v2)
    if meet is None or meet.dim != 0:
        raise ValueError("v1 and v2 must intersect in exactly one point")
    p = meet.offset
    r = v2.dim
    if r < 1:
        raise ValueError("v2 must have positive dimension")
    y_p = _coords_in(v2, p)
    if w2 is None:
        # any hyperplane of v2 missing p: functional e_1, constant flipped at p
        phi = BitVec(r, 1)
        c = 1 ^ phi.dot(y_p)
    else:
        if membership(w2, p):
            raise ValueError("the intersection point lies in w2 (event violated)")
        y0 = _coords_in(v2, w2.offset)
        dirs = [_coords_in(v2, w2.offset ^ b) ^ y0 for b in w2.basis]
        rows = dirs + [y_p ^ y0]
        rhs = BitVec(len(rows), 1 << (len(rows) - 1))
        phi = solve(GF2Matrix(rows), rhs)
        if phi is None:
            raise ValueError("no separating hyperplane (w2 spans p's direction)")
        c = phi.dot(y0)
    # parameterize the hyperplane {y : <phi, y> = c} and map through v2's basis
    j = (phi.word & -phi.word).bit_length() - 1
    y_star = BitVec(r, c << j)
    null_dirs = []
    for i in range(r):
        if i == j:
            continue
        w = 1 << i
        if phi.bit(i):
            w |= 1 << j
        null_dirs.append(BitVec(r, w))

    def embed(y: BitVec) -> int:
        w = 0
        for i in range(r):
            if y.bit(i):
                w ^= v2.basis[i].word
        return w

    offset = BitVec(v2.n, v2.offset.word ^ embed(y_star))
    basis = [BitVec(v2.n, embed(d)) for d in null_dirs]
    return AffineSubspace(offset, basis)
