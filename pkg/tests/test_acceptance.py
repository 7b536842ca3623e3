"""Acceptance suite: one test per criterion, each emitting a single
pass/fail line.  Run with `pytest -s tests/test_acceptance.py` to see the
lines; `pytest -v` gives the same verdicts from test outcomes."""

import math
import random
from fractions import Fraction

from boolfourier import booleanity
from boolfourier.booleanity import (
    construct_certificate,
    density_bound_l,
    event_e_estimator,
    event_e_holds,
    naive_tester,
    restriction_experiment,
    subspace_tester,
)
from boolfourier.enumeration import (
    CandidateClass,
    enumerate_sparse_boolean,
    growth_curve,
)
from boolfourier.fourier import (
    TruthTable,
    dist,
    inverse_wht,
    is_boolean,
    non_boolean_count,
    parseval_residual,
    sparsity,
    spectral_norm,
    uncertainty_product,
    wht,
)
from boolfourier.gf2 import (
    BitVec,
    affine_span,
    intersect,
    membership,
    random_affine_subspace,
    sample_dno_pair,
    zero_vec,
)
from boolfourier.learn import q50, sample_complexity_curve
from boolfourier.seeding import trial_rng
from boolfourier.sparsify import chernoff_size, measure_bad_fraction, sample_approximant
from boolfourier.zoo import (
    affine_indicator,
    dno_function,
    double_and,
    gt_no,
    gt_yes,
    scaled_indicator,
)


class _report:
    """Prints `criterion NN <name>: PASS` on clean exit, FAIL otherwise."""

    def __init__(self, number, name):
        self.line = f"criterion {number:02d} {name}"

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        print(f"{self.line}: {'PASS' if exc_type is None else 'FAIL'}")
        return False


def all_boolean_tables(n):
    for word in range(1 << (1 << n)):
        yield TruthTable(n, [(word >> i) & 1 for i in range(1 << n)])


def test_criterion_01_exact_transform_suite():
    with _report(1, "exact transform suite"):
        for f in all_boolean_tables(3):
            s = wht(f)
            assert inverse_wht(s).values == f.values
            assert parseval_residual(f) == 0
        rng = random.Random(1)
        for _ in range(1000):
            n = rng.randrange(1, 9)
            f = TruthTable(n, [rng.randrange(-9, 10) for _ in range(1 << n)])
            s = wht(f)
            assert inverse_wht(s).values == f.values
            assert parseval_residual(f) == 0


def test_criterion_02_uncertainty_principle():
    with _report(2, "uncertainty principle"):
        for f in all_boolean_tables(3):
            if any(f.values):
                assert uncertainty_product(f) >= 8
        rng = random.Random(2)
        done = 0
        while done < 10_000:
            n = rng.randrange(1, 9)
            f = TruthTable(n, [rng.randrange(-3, 4) for _ in range(1 << n)])
            if not any(f.values):
                continue
            assert uncertainty_product(f) >= 1 << n
            done += 1


def test_criterion_03_minimum_distance():
    with _report(3, "minimum distance"):
        grids = [(3, k) for k in range(1, 9)] + [(4, k) for k in range(1, 5)]
        for n, k in grids:
            members = enumerate_sparse_boolean(n, k)
            floor = Fraction(1 << n, 2 * k)
            for i, f in enumerate(members):
                for g in members[i + 1 :]:
                    assert dist(f, g) >= floor


def test_criterion_04_non_boolean_density():
    with _report(4, "non-Boolean density"):
        def check(f):
            k = sparsity(wht(f))
            assert non_boolean_count(f) >= math.ceil(2 * (1 << f.n) / (k * k + k + 2))

        for n in (2, 4, 6, 8):
            f = double_and(n)
            assert sparsity(wht(f)) == 2 * (1 << (n // 2)) - 1
            check(f)
        rng = random.Random(4)
        for n, k in [(4, 2), (6, 4), (8, 4)]:
            check(gt_no(n, k, rng))
        for n in (4, 6):
            check(dno_function(n, rng)[0])
        check(scaled_indicator(random_affine_subspace(8, 6, rng), 2))


def _disjoint_indicator_difference(n=8, seed=7):
    rng = random.Random(seed)
    while True:
        v1 = random_affine_subspace(n, n - 2, rng)
        v2 = random_affine_subspace(n, n - 2, rng)
        if intersect(v1, v2) is None:
            break
    g1, g2 = affine_indicator(v1), affine_indicator(v2)
    return TruthTable(n, [a - b for a, b in zip(g1.values, g2.values)])


def test_criterion_05_sparsifier():
    with _report(5, "sparsifier"):
        eps, delta = Fraction(1, 2), Fraction(1, 10)
        for stream, f in [(1000, double_and(8)), (1500, _disjoint_indicator_difference())]:
            s = wht(f)
            size = chernoff_size(spectral_norm(s), eps, delta)
            total = Fraction(0)
            trials = 100
            for t in range(trials):
                approx = sample_approximant(s, size, trial_rng(stream, t))
                total += measure_bad_fraction(f, approx, eps)
            assert total / trials <= 2 * delta


def test_criterion_06_list_decoding_tightness():
    with _report(6, "list-decoding tightness"):
        zero = TruthTable(4, [0] * 16)
        curve = growth_curve(4, 4, zero)
        counts = {d: c for d, c, _ in curve}
        at_d4 = counts[4]
        assert at_d4 >= 140
        assert at_d4 == 141  # pinned regression fixture
        for d in range(16 // (2 * 4)):
            assert counts[d] <= 1
        seq = [c for _, c, _ in curve]
        assert seq == sorted(seq)


def test_criterion_07_learning_upper_bound():
    with _report(7, "learning upper bound"):
        cls = CandidateClass.exhaustive(3, 2)
        pinned_q = 48
        curve = sample_complexity_curve(cls, [pinned_q], 500, trial_rng(77, 0))
        assert curve[0][1] >= 0.95
        grid = sample_complexity_curve(cls, [0, 4, 8, 16, 32, 64], 300, trial_rng(5, 0))
        rates = [r for _, r in grid]
        for a, b in zip(rates, rates[1:]):
            sigma = (a * (1 - a) / 300) ** 0.5
            assert b >= a - 2 * sigma


# medians of samples-to-identify over 200 trials at seed stream (88, n*100+k)
Q50_FIXTURES = {(4, 4): 13.0, (6, 2): 8.0, (6, 4): 19.0, (8, 4): 23.0}


def test_criterion_08_learning_lower_bound_shape():
    with _report(8, "learning lower-bound shape"):
        measured = {}
        for (n, k), expected in Q50_FIXTURES.items():
            cls = CandidateClass.affine_indicators(n, k.bit_length() - 1)
            measured[(n, k)] = q50(cls, 200, trial_rng(88, n * 100 + k))
            assert measured[(n, k)] == expected
        assert measured[(6, 2)] < measured[(6, 4)]
        assert measured[(4, 4)] < measured[(6, 4)] < measured[(8, 4)]


def test_criterion_09_restriction_lemma():
    with _report(9, "restriction lemma"):
        rng = random.Random(5)
        while True:
            v = random_affine_subspace(10, 8, rng)
            if not membership(v, zero_vec(10)):
                break
        f = scaled_indicator(v, 2)
        trials = 1000
        est = restriction_experiment(f, 4, 7, trials, trial_rng(70, 0))
        p = 1 - 11 / 128
        sigma = (p * (1 - p) / trials) ** 0.5
        assert est >= p - 3 * sigma

        cases = [
            (gt_no(8, 2, trial_rng(71, 0)), 2),
            (gt_no(8, 4, trial_rng(71, 1)), 4),
            (scaled_indicator(random_affine_subspace(8, 6, trial_rng(71, 2)), 2), 4),
        ]
        grid_trials = 300
        for g, k in cases:
            l = density_bound_l(k)
            for delta in (0.25, 0.125):
                r_min = math.ceil(math.log2(l / delta))
                for i, r in enumerate(range(r_min, g.n + 1)):
                    got = restriction_experiment(g, k, r, grid_trials, trial_rng(72, i))
                    bound = 1 - l / (1 << r)
                    s = max((bound * (1 - bound) / grid_trials) ** 0.5, 1 / grid_trials)
                    assert got >= bound - 3 * s


def test_criterion_10_testers():
    with _report(10, "testers"):
        for seed in range(100):
            rng = trial_rng(1, seed)
            booleans = [
                gt_yes(6, 4, rng),
                affine_indicator(random_affine_subspace(6, 3, rng)),
                TruthTable(6, [1] * 64),
                TruthTable(6, [0] * 64),
            ]
            for f in booleans:
                assert naive_tester(f, 8, rng).accept
                assert subspace_tester(f, booleanity.TesterConfig(k=8), rng).accept

        f = double_and(10)
        k = 2 * 2**5
        m = math.ceil(density_bound_l(k) * math.log(3))
        p = 1 - (1 - 2**-10) ** m
        trials = 1000
        rejected = sum(
            0 if naive_tester(f, k, trial_rng(51, t)).accept else 1
            for t in range(trials)
        )
        sigma = (p * (1 - p) / trials) ** 0.5
        assert abs(rejected / trials - p) <= 3 * sigma

        rejected = 0
        for t in range(500):
            rng = trial_rng(60, t)
            g, _, _ = dno_function(6, rng)
            cfg = booleanity.TesterConfig(k=16, constant_c=Fraction(2))
            if not subspace_tester(g, cfg, rng).accept:
                rejected += 1
        assert rejected / 500 >= 0.6


def test_criterion_11_lower_bound_adversary():
    with _report(11, "lower-bound adversary"):
        assert event_e_estimator(10, [], 50, trial_rng(61, 2)) == 1.0
        rng = trial_rng(61, 0)
        pts = [BitVec(10, rng.randrange(1024)) for _ in range(32)]
        assert event_e_estimator(10, pts, 1000, trial_rng(61, 1)) >= 0.9

        n, q = 6, 16
        for t in range(100):
            rng = trial_rng(300, t)
            while True:
                v1, v2 = sample_dno_pair(n, rng)
                queries = [BitVec(n, rng.randrange(1 << n)) for _ in range(q)]
                p = intersect(v1, v2).offset
                w2 = affine_span([x for x in queries if membership(v2, x)])
                if event_e_holds(v1, v2, queries) and (
                    w2 is None or not membership(w2, p)
                ):
                    break
            vp = construct_certificate(v1, v2, w2)
            g1 = affine_indicator(v1)
            g = TruthTable(n, [a + b for a, b in zip(g1.values, affine_indicator(vp).values)])
            assert is_boolean(g)
            assert sparsity(wht(g)) <= 3 * (1 << (n // 2))
            f_vals = [a + b for a, b in zip(g1.values, affine_indicator(v2).values)]
            assert all(g.values[x.word] == f_vals[x.word] for x in queries)
            assert intersect(v1, vp) is None
