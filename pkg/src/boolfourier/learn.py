"""Sample-based exact learning of sparse Boolean functions by elimination,
and the sample-complexity measurements built on it (success-rate curves
and the median-samples-to-identify statistic)."""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .enumeration import CandidateClass
from .fourier import Scalar, TruthTable, dist
from .gf2 import BitVec


@dataclass(frozen=True)
class Sample:
    x: BitVec
    y: Scalar


@dataclass(frozen=True)
class LearnOutcome:
    """unique -> exactly one class member agrees with every sample."""

    status: str  # "unique" | "ambiguous" | "inconsistent"
    function: Optional[TruthTable] = None
    count: int = 0
    examples: Tuple[TruthTable, ...] = ()

    def is_unique(self, f: Optional[TruthTable] = None) -> bool:
        if self.status != "unique":
            return False
        return f is None or self.function.values == f.values


def draw_samples(f: TruthTable, q: int, rng: random.Random) -> List[Sample]:
    """q uniform independent samples (x, f(x)), with replacement."""
    if q < 0:
        raise ValueError("need q >= 0")
    size = 1 << f.n
    out = []
    for _ in range(q):
        i = rng.randrange(size)
        out.append(Sample(BitVec(f.n, i), f.values[i]))
    return out


def eliminate(samples: Sequence[Sample], cls: CandidateClass) -> LearnOutcome:
    """Filter the class down to members agreeing with every sample."""
    survivors = []
    for g in cls.members():
        if all(g.values[s.x.word] == s.y for s in samples):
            survivors.append(g)
            if len(survivors) > 8:
                break  # enough to know the outcome is ambiguous
    if not survivors:
        return LearnOutcome(status="inconsistent")
    if len(survivors) == 1:
        return LearnOutcome(status="unique", function=survivors[0], count=1)
    total = len(survivors)
    if total > 8:
        # resume the count without keeping the tables
        total = sum(
            1
            for g in cls.members()
            if all(g.values[s.x.word] == s.y for s in samples)
        )
    return LearnOutcome(
        status="ambiguous", count=total, examples=tuple(survivors[:4])
    )


def _support_masks(cls: CandidateClass) -> List[int]:
    """Each Boolean member packed as a 2^n-bit support mask."""
    masks = []
    for g in cls.members():
        m = 0
        for i, v in enumerate(g.values):
            if v == 1:
                m |= 1 << i
            elif v != 0:
                raise ValueError("class members must be Boolean")
        masks.append(m)
    return masks


def min_samples_to_identify(
    hidden_mask: int,
    masks: List[int],
    n: int,
    rng: random.Random,
    q_max: int,
) -> Optional[int]:
    """Smallest q at which the hidden member is the unique survivor of the
    first q samples, or None if q_max samples do not suffice.

    Success is monotone in q for a fixed sample sequence (the hidden
    member always survives), so per-trial thresholds determine the whole
    success curve.
    """
    survivors = list(masks)
    size = 1 << n
    for q in range(1, q_max + 1):
        x = rng.randrange(size)
        y = (hidden_mask >> x) & 1
        survivors = [m for m in survivors if ((m >> x) & 1) == y]
        if len(survivors) == 1 and survivors[0] == hidden_mask:
            return q
    return None


def identification_thresholds(
    cls: CandidateClass, trials: int, rng: random.Random, q_max: int
) -> List[Optional[int]]:
    """Per-trial minimal sample counts; hidden function uniform in the class."""
    masks = _support_masks(cls)
    if len(masks) < 2:
        raise ValueError("class must have at least two members")
    out = []
    for _ in range(trials):
        hidden = masks[rng.randrange(len(masks))]
        out.append(min_samples_to_identify(hidden, masks, cls.n, rng, q_max))
    return out


def success_curve_from_thresholds(
    thresholds: Sequence[Optional[int]], q_grid: Sequence[int]
) -> List[Tuple[int, float]]:
    rows = []
    for q in q_grid:
        hits = sum(1 for t in thresholds if t is not None and t <= q)
        rows.append((q, hits / len(thresholds)))
    return rows


def sample_complexity_curve(
    cls: CandidateClass,
    q_grid: Sequence[int],
    trials: int,
    rng: random.Random,
) -> List[Tuple[int, float]]:
    """Rows (q, fraction of trials where elimination identifies the hidden
    function exactly); ambiguity counts as failure."""
    q_max = max(q_grid) if q_grid else 0
    thresholds = identification_thresholds(cls, trials, rng, q_max)
    return success_curve_from_thresholds(thresholds, q_grid)


def q50(
    cls: CandidateClass, trials: int, rng: random.Random, q_max: int = 4096
) -> float:
    """Median samples-to-identify: the q at which half the trials succeed."""
    thresholds = identification_thresholds(cls, trials, rng, q_max)
    capped = [t if t is not None else q_max + 1 for t in thresholds]
    return statistics.median(capped)


def lower_bound_experiment(
    n: int,
    k: int,
    q_grid: Sequence[int],
    trials: int,
    rng: random.Random,
) -> List[Tuple[int, float]]:
    """Success curve over the hard class of affine-subspace indicators of
    co-dimension log2(k)."""
    if k < 2 or k & (k - 1):
        raise ValueError("k must be a power of two, at least 2")
    logk = k.bit_length() - 1
    if logk > n or n > 12:
        raise ValueError("need log2(k) <= n <= 12")
    cls = CandidateClass.affine_indicators(n, logk)
    return sample_complexity_curve(cls, q_grid, trials, rng)


def band_survivor_report(
    f: TruthTable,
    cls: CandidateClass,
    q: int,
    trials: int,
    rng: random.Random,
) -> Dict[int, Tuple[int, float]]:
    """For each distance band [2^(n-l), 2^(n-l+1)), the mean number of
    class members in that band from f that agree with q random samples of
    f.  Reported alongside the (1 - 2^-l)^q per-member survival rate for
    qualitative comparison; no tolerance is asserted."""
    n = f.n
    masks = _support_masks(cls)
    f_mask = 0
    for i, v in enumerate(f.values):
        if v == 1:
            f_mask |= 1 << i
    bands: Dict[int, List[int]] = {}
    for m in masks:
        d = bin(m ^ f_mask).count("1")
        if d == 0:
            continue
        l = n - d.bit_length() + 1  # 2^(n-l) <= d < 2^(n-l+1)
        bands.setdefault(l, []).append(m)
    report = {}
    for l, band in sorted(bands.items()):
        mean_survivors = 0.0
        for _ in range(trials):
            xs = [rng.randrange(1 << n) for _ in range(q)]
            alive = sum(
                1
                for m in band
                if all(((m >> x) & 1) == ((f_mask >> x) & 1) for x in xs)
            )
            mean_survivors += alive / trials
        report[l] = (len(band), mean_survivors)
    return report
