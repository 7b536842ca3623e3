import math
import random
from fractions import Fraction

import pytest

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
from boolfourier.fourier import TruthTable, is_boolean, sparsity, wht
from boolfourier.gf2 import (
    BitVec,
    affine_span,
    intersect,
    membership,
    random_affine_subspace,
    sample_dno_pair,
    zero_vec,
)
from boolfourier.seeding import trial_rng
from boolfourier.zoo import (
    affine_indicator,
    dno_function,
    double_and,
    gt_no,
    gt_yes,
    scaled_indicator,
)


def boolean_zoo(rng):
    return [
        gt_yes(6, 4, rng),
        affine_indicator(random_affine_subspace(6, 3, rng)),
        TruthTable(6, [1] * 64),
        TruthTable(6, [0] * 64),
    ]


class TestNaiveTester:
    def test_one_sided_on_boolean(self):
        for seed in range(100):
            rng = trial_rng(1, seed)
            for f in boolean_zoo(rng):
                verdict = naive_tester(f, 8, rng)
                assert verdict.accept and verdict.certificate is None

    def test_certificates_genuine(self):
        for seed in range(100):
            rng = trial_rng(2, seed)
            f = gt_no(6, 4, rng)
            verdict = naive_tester(f, 4, rng)
            if not verdict.accept:
                assert f.values[verdict.certificate.word] not in (0, 1)

    def test_gt_no_rejection_rate(self):
        rejected = 0
        for t in range(1000):
            rng = trial_rng(50, t)
            f = gt_no(8, 4, rng)
            if not naive_tester(f, 4, rng).accept:
                rejected += 1
        assert rejected / 1000 >= 2 / 3

    def test_double_and_matches_closed_form(self):
        # exactly one non-Boolean point, so the rejection probability is
        # 1 - (1 - 2^-10)^m exactly
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


class TestSubspaceTester:
    def test_one_sided_on_boolean(self):
        for seed in range(100):
            rng = trial_rng(3, seed)
            for f in boolean_zoo(rng):
                cfg = booleanity.TesterConfig(k=8)
                assert subspace_tester(f, cfg, rng).accept

    def test_rejects_dno_function(self):
        rejected = 0
        trials = 500
        for t in range(trials):
            rng = trial_rng(60, t)
            f, _, _ = dno_function(6, rng)
            cfg = booleanity.TesterConfig(k=16, constant_c=Fraction(2))
            if not subspace_tester(f, cfg, rng).accept:
                rejected += 1
        assert rejected / trials >= 0.6

    def test_certificate_lifts_to_ambient(self):
        rng = trial_rng(4, 0)
        f, _, _ = dno_function(6, rng)
        for t in range(50):
            verdict = subspace_tester(f, booleanity.TesterConfig(k=16), trial_rng(4, t + 1))
            if not verdict.accept:
                assert f.values[verdict.certificate.word] not in (0, 1)

    def test_exact_mode_dimension_guard(self):
        f = double_and(6)
        cfg = booleanity.TesterConfig(k=16, consistency_mode="exact")
        with pytest.raises(ValueError):
            subspace_tester(f, cfg, trial_rng(5, 0))

    def test_exact_mode_extra_power(self):
        # non-Boolean at one point, Boolean elsewhere with both values 0 and
        # 1 present; under the promise k = 1 only the constants are
        # candidates, so Boolean-looking samples still expose inconsistency
        f = TruthTable(3, [0, 1, 1, 1, 1, 1, 1, Fraction(1, 2)])
        cfg = booleanity.TesterConfig(k=1, constant_c=Fraction(2), consistency_mode="exact")
        verdict = subspace_tester(f, cfg, trial_rng(200, 1))
        assert not verdict.accept and verdict.certificate is None


class TestRestrictionExperiment:
    def test_full_dimension_probability_one(self):
        f = double_and(6)
        assert restriction_experiment(f, 15, 6, 20, trial_rng(70, 2)) == 1.0

    def test_scaled_indicator_bound(self):
        rng = random.Random(5)
        while True:
            v = random_affine_subspace(10, 8, rng)
            if not membership(v, zero_vec(10)):
                break
        f = scaled_indicator(v, 2)
        est = restriction_experiment(f, 4, 7, 1000, trial_rng(70, 0))
        trials = 1000
        p = 1 - 11 / 128
        sigma = (p * (1 - p) / trials) ** 0.5
        assert est >= p - 3 * sigma

    def test_bound_grid_over_zoo(self):
        cases = [
            (gt_no(8, 2, trial_rng(71, 0)), 2),
            (gt_no(8, 4, trial_rng(71, 1)), 4),
            (scaled_indicator(random_affine_subspace(8, 6, trial_rng(71, 2)), 2), 4),
        ]
        trials = 300
        for f, k in cases:
            l = density_bound_l(k)
            for delta in (0.25, 0.125):
                r_min = math.ceil(math.log2(l / delta))
                for i, r in enumerate(range(r_min, f.n + 1)):
                    est = restriction_experiment(f, k, r, trials, trial_rng(72, i))
                    bound = 1 - l / 2**r
                    sigma = max((bound * (1 - bound) / trials) ** 0.5, 1 / trials)
                    assert est >= bound - 3 * sigma

    def test_rejects_boolean_input(self):
        with pytest.raises(ValueError):
            restriction_experiment(TruthTable(4, [0] * 16), 3, 2, 5, trial_rng(0, 0))


class TestEventE:
    def test_no_queries_probability_one(self):
        assert event_e_estimator(10, [], 50, trial_rng(61, 2)) == 1.0

    def test_n10_q32_above_090(self):
        rng = trial_rng(61, 0)
        pts = [BitVec(10, rng.randrange(1024)) for _ in range(32)]
        est = event_e_estimator(10, pts, 1000, trial_rng(61, 1))
        assert est >= 0.9

    def test_event_definition(self):
        rng = trial_rng(62, 0)
        v1, v2 = sample_dno_pair(6, rng)
        # querying the shared point defeats the event
        p = intersect(v1, v2).offset
        assert not event_e_holds(v1, v2, [p])
        # a single point in neither subspace leaves both spans empty
        outside = next(
            BitVec(6, w)
            for w in range(64)
            if not membership(v1, BitVec(6, w)) and not membership(v2, BitVec(6, w))
        )
        assert event_e_holds(v1, v2, [outside])


class TestConstructCertificate:
    def sample_instance(self, rng, n=6, q=16):
        while True:
            v1, v2 = sample_dno_pair(n, rng)
            pts = [BitVec(n, rng.randrange(1 << n)) for _ in range(q)]
            p = intersect(v1, v2).offset
            w2 = affine_span([x for x in pts if membership(v2, x)])
            if event_e_holds(v1, v2, pts) and (w2 is None or not membership(w2, p)):
                return v1, v2, pts, p, w2

    def test_hundred_seeded_instances(self):
        for t in range(100):
            rng = trial_rng(300, t)
            v1, v2, pts, p, w2 = self.sample_instance(rng)
            vp = construct_certificate(v1, v2, w2)
            assert vp.dim == v2.dim - 1
            assert not membership(vp, p)
            assert intersect(v1, vp) is None
            g1, g2 = affine_indicator(v1), affine_indicator(vp)
            g = TruthTable(6, [a + b for a, b in zip(g1.values, g2.values)])
            assert is_boolean(g)
            assert sparsity(wht(g)) <= 3 * 2**3
            f2 = affine_indicator(v2)
            f_vals = [a + b for a, b in zip(g1.values, f2.values)]
            assert all(g.values[x.word] == f_vals[x.word] for x in pts)
            if w2 is not None:
                for b in [zero_vec(6)] + list(w2.basis):
                    assert membership(vp, w2.offset ^ b)

    def test_w2_absent(self):
        rng = trial_rng(301, 0)
        v1, v2 = sample_dno_pair(6, rng)
        p = intersect(v1, v2).offset
        vp = construct_certificate(v1, v2, None)
        assert vp.dim == v2.dim - 1
        assert not membership(vp, p)
        assert intersect(v1, vp) is None

    def test_rejects_p_in_w2(self):
        rng = trial_rng(302, 0)
        v1, v2 = sample_dno_pair(6, rng)
        p = intersect(v1, v2).offset
        w2 = affine_span([p])
        with pytest.raises(ValueError):
            construct_certificate(v1, v2, w2)
