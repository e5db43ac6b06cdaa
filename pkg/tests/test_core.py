import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from thermocone import (
    Dist,
    EnergySpectrum,
    QuasiDist,
    Relation,
    beta_order,
    compare,
    curve_eval,
    gibbs_vector,
    tensor,
    thermo_majorizes,
    tm_curve,
)
from thermocone.embedding import classical_majorizes

from conftest import random_dist, random_spectrum

SPEC3 = EnergySpectrum((0.0, 1.0, 2.0), 0.2)
FIG3_STATE = (0.43, 0.37, 0.18, 0.02)


def dirichlets(d):
    return (
        st.lists(st.floats(0.01, 10.0), min_size=d, max_size=d)
        .map(lambda w: np.asarray(w) / np.sum(w))
    )


class TestTypes:
    def test_dist_clamps_tiny_negatives(self):
        p = Dist([1.0 + 5e-13, -5e-13, 0.0])
        assert p.probs.min() == 0.0

    def test_dist_rejects_real_negatives(self):
        with pytest.raises(ValueError):
            Dist([1.1, -0.1, 0.0])

    def test_dist_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            Dist([0.5, 0.4])

    def test_quasidist_allows_negatives(self):
        t = QuasiDist([1.3, -0.3])
        assert t.entries[1] == -0.3

    def test_spectrum_rejects_negative_beta(self):
        with pytest.raises(ValueError):
            EnergySpectrum((0.0, 1.0), -0.5)

    def test_spectrum_rejects_nonfinite_energy(self):
        with pytest.raises(ValueError):
            EnergySpectrum((0.0, math.inf), 1.0)


class TestGibbs:
    def test_beta_zero_is_uniform(self):
        g = gibbs_vector(EnergySpectrum((0.0, 1.0, 2.0), 0.0))
        np.testing.assert_allclose(g.probs, [1 / 3, 1 / 3, 1 / 3])

    def test_infinite_beta_is_sharp_ground_state(self):
        g = gibbs_vector(EnergySpectrum((0.0, 1.0, 2.0), math.inf))
        np.testing.assert_allclose(g.probs, [1.0, 0.0, 0.0])

    def test_direct_evaluation(self):
        # independent arithmetic: w_i = exp(-0.2 E_i), normalised
        w = np.exp(-0.2 * np.arange(3.0))
        np.testing.assert_allclose(gibbs_vector(SPEC3).probs, w / w.sum(), atol=1e-15)
        np.testing.assert_allclose(gibbs_vector(SPEC3).probs, [0.4018, 0.3290, 0.2693], atol=1e-4)

    def test_energy_shift_invariance(self):
        a = gibbs_vector(EnergySpectrum((0.0, 1.0, 2.0), 0.7)).probs
        b = gibbs_vector(EnergySpectrum((100.0, 101.0, 102.0), 0.7)).probs
        np.testing.assert_allclose(a, b, atol=1e-14)

    def test_underflow_guard(self):
        with pytest.raises(ValueError):
            EnergySpectrum((0.0, 1.0), 1e6)


class TestBetaOrder:
    def test_gibbs_has_unit_slopes_identity_order(self):
        sv = beta_order(gibbs_vector(SPEC3), SPEC3)
        np.testing.assert_allclose(sv.slopes, 1.0, atol=1e-12)
        assert sv.order.tolist() == [0, 1, 2]

    def test_worked_three_level_example(self):
        sv = beta_order((0.42, 0.51, 0.07), SPEC3)
        assert sv.order.tolist() == [1, 0, 2]
        np.testing.assert_allclose(sv.slopes, [1.550, 1.045, 0.260], atol=5e-4)

    def test_beta_zero_descending_state_keeps_identity(self):
        sv = beta_order(FIG3_STATE, EnergySpectrum((0.0, 1.0, 2.0, 3.0), 0.0))
        assert sv.order.tolist() == [0, 1, 2, 3]

    def test_tie_break_ascending_index(self):
        spec = EnergySpectrum((0.0, 0.0, 1.0), 0.0)
        sv = beta_order((0.4, 0.4, 0.2), spec)
        assert sv.order.tolist() == [0, 1, 2]


class TestCurve:
    def test_gibbs_curve_is_diagonal(self):
        c = tm_curve(gibbs_vector(SPEC3), SPEC3)
        np.testing.assert_allclose(c.ys, c.xs, atol=1e-12)

    def test_sharp_state_saturates_immediately(self):
        c = tm_curve((1.0, 0.0, 0.0), SPEC3)
        g = SPEC3.gibbs
        np.testing.assert_allclose(c.xs, [0.0, g[0], g[0] + g[1], 1.0], atol=1e-12)
        np.testing.assert_allclose(c.ys, [0.0, 1.0, 1.0, 1.0], atol=1e-12)

    def test_worked_first_elbow(self):
        c = tm_curve((0.42, 0.51, 0.07), SPEC3)
        assert c.xs[1] == pytest.approx(0.3290, abs=1e-4)
        assert c.ys[1] == pytest.approx(0.51, abs=1e-12)

    def test_explicit_order_for_quasidist(self):
        t = QuasiDist([0.6, 0.6, -0.2])
        c = tm_curve(t, SPEC3, order=(0, 1, 2))
        assert c.ys[2] == pytest.approx(1.2, abs=1e-12)
        with pytest.raises(TypeError):
            tm_curve(t, SPEC3)

    def test_concavity_of_proper_curves(self, rng):
        for d in (2, 3, 4, 5):
            for _ in range(50):
                spec = random_spectrum(rng, d)
                c = tm_curve(random_dist(rng, d), spec)
                slopes = np.diff(c.ys) / np.diff(c.xs)
                assert np.all(np.diff(slopes) <= 1e-10)
                assert c.xs[0] == 0.0 and c.xs[-1] == 1.0
                assert c.ys[0] == 0.0 and c.ys[-1] == 1.0

    def test_tie_break_invariance_of_curve(self):
        # two levels with exactly tied slopes: either order gives the same function
        spec = EnergySpectrum((0.0, 1.0, 2.0), 0.3)
        g = spec.gibbs
        c = 0.7 / (g[0] + g[1])
        p = np.array([c * g[0], c * g[1], 0.3])
        a = tm_curve(p, spec, order=(0, 1, 2))
        b = tm_curve(p, spec, order=(1, 0, 2))
        xs = np.union1d(a.xs, b.xs)
        np.testing.assert_allclose(
            np.interp(xs, a.xs, a.ys), np.interp(xs, b.xs, b.ys), atol=1e-12
        )


class TestCurveEval:
    def test_diagonal(self):
        c = tm_curve(gibbs_vector(SPEC3), SPEC3)
        assert curve_eval(c, 0.37) == pytest.approx(0.37, abs=1e-12)

    def test_linear_segment_of_sharp_state(self):
        c = tm_curve((1.0, 0.0, 0.0), SPEC3)
        assert curve_eval(c, SPEC3.gibbs[0] / 2) == pytest.approx(0.5, abs=1e-12)

    def test_first_elbow_of_flat_spectrum_state(self):
        c = tm_curve(FIG3_STATE, EnergySpectrum((0.0, 1.0, 2.0, 3.0), 0.0))
        assert curve_eval(c, 0.25) == pytest.approx(0.43, abs=1e-12)

    def test_domain_error(self):
        c = tm_curve(gibbs_vector(SPEC3), SPEC3)
        with pytest.raises(ValueError):
            curve_eval(c, 1.2)


class TestMajorisation:
    def test_everything_majorizes_gibbs(self, rng):
        for d in (2, 3, 4, 5):
            spec = random_spectrum(rng, d)
            for _ in range(40):
                assert thermo_majorizes(random_dist(rng, d), spec.gibbs, spec)

    def test_reflexive(self, rng):
        for _ in range(50):
            p = random_dist(rng, 4)
            spec = random_spectrum(rng, 4)
            assert thermo_majorizes(p, p, spec)
            assert compare(p, p, spec) is Relation.EQUIVALENT

    def test_worked_incomparable_pair(self):
        p, q = (0.42, 0.51, 0.07), (0.52, 0.43, 0.05)
        assert not thermo_majorizes(p, q, SPEC3)
        assert not thermo_majorizes(q, p, SPEC3)
        assert compare(p, q, SPEC3) is Relation.INCOMPARABLE

    def test_gibbs_is_majorized_by_everything(self, rng):
        p = random_dist(rng, 3)
        assert compare(gibbs_vector(SPEC3), p, SPEC3) in (
            Relation.MAJORIZED_BY,
            Relation.EQUIVALENT,
        )

    def test_transitive_on_constructed_chains(self, rng):
        from thermocone import future_cone_vertices

        for _ in range(60):
            d = int(rng.integers(3, 6))
            spec = random_spectrum(rng, d)
            p = random_dist(rng, d)
            verts = [v.probs for _, v in future_cone_vertices(p, spec)]
            w = rng.dirichlet(np.ones(len(verts)))
            q = np.einsum("i,ij->j", w, np.asarray(verts))
            verts_q = [v.probs for _, v in future_cone_vertices(q, spec)]
            w2 = rng.dirichlet(np.ones(len(verts_q)))
            r = np.einsum("i,ij->j", w2, np.asarray(verts_q))
            assert thermo_majorizes(p, q, spec)
            assert thermo_majorizes(q, r, spec)
            assert thermo_majorizes(p, r, spec)

    @given(p=dirichlets(4), q=dirichlets(4))
    def test_beta_zero_reduces_to_plain_majorisation(self, p, q):
        spec = EnergySpectrum((0.0, 1.0, 2.0, 3.0), 0.0)
        assert thermo_majorizes(p, q, spec) == classical_majorizes(p, q)

    @given(p=dirichlets(3), q=dirichlets(3), r=dirichlets(2))
    def test_tensor_monotonicity(self, p, q, r):
        spec = SPEC3
        spec_r = EnergySpectrum((0.0, 0.7), 0.2)
        if thermo_majorizes(p, q, spec):
            joint_p, joint_spec = tensor(p, spec, r, spec_r)
            joint_q, _ = tensor(q, spec, r, spec_r)
            assert thermo_majorizes(joint_p, joint_q, joint_spec)


class TestTensor:
    def test_one_level_catalyst_is_neutral(self):
        trivial = EnergySpectrum((0.0,), 0.2)
        joint, spec = tensor((0.42, 0.51, 0.07), SPEC3, (1.0,), trivial)
        np.testing.assert_allclose(joint.probs, [0.42, 0.51, 0.07], atol=1e-15)
        assert spec.energies == SPEC3.energies

    def test_uniform_times_uniform_at_beta_zero(self):
        s2 = EnergySpectrum((0.0, 1.0), 0.0)
        s3 = EnergySpectrum((0.0, 1.0, 2.0), 0.0)
        joint, _ = tensor([0.5, 0.5], s2, [1 / 3] * 3, s3)
        np.testing.assert_allclose(joint.probs, 1 / 6, atol=1e-15)

    def test_outer_product_layout(self):
        spec_r = EnergySpectrum((0.0, 0.0), 0.2)
        joint, spec = tensor((0.42, 0.51, 0.07), SPEC3, (0.55, 0.45), spec_r)
        np.testing.assert_allclose(
            joint.probs, [0.231, 0.189, 0.2805, 0.2295, 0.0385, 0.0315], atol=1e-15
        )
        assert spec.energies == (0.0, 0.0, 1.0, 1.0, 2.0, 2.0)

    def test_beta_mismatch_rejected(self):
        with pytest.raises(ValueError):
            tensor([1.0], EnergySpectrum((0.0,), 0.1), [1.0], EnergySpectrum((0.0,), 0.2))
