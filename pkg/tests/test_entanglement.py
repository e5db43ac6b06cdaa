import numpy as np
import pytest

from thermocone import (
    TwoQubitConfig,
    compare,
    future_cone_vertices,
    in_CN,
    in_TN,
    p_star,
    p_star_star,
    thermo_majorizes,
    unitary_entanglable,
    vertex_for_order,
    volume_ratio_CN_TN,
)
from thermocone.core import Relation

from conftest import random_dist

CFG = TwoQubitConfig(0.5)


class TestUnitaryEntanglable:
    def test_gibbs_is_not(self):
        assert not unitary_entanglable(CFG.spectrum().gibbs)

    def test_sharp_middle_level_is(self):
        assert unitary_entanglable((0.0, 1.0, 0.0, 0.0))

    def test_worked_arithmetic(self):
        # 4*0.25*0.2 - 0.45^2 = -0.0025 < 0
        assert unitary_entanglable((0.25, 0.5, 0.05, 0.2))

    def test_dimension_guard(self):
        with pytest.raises(ValueError):
            unitary_entanglable((0.5, 0.5))


class TestThermallyNonEntanglable:
    def test_gibbs_stays_safe(self):
        assert in_TN(CFG.spectrum().gibbs, CFG)

    def test_entanglable_state_is_out(self):
        assert not in_TN((0.0, 1.0, 0.0, 0.0), CFG)

    def test_distinguished_state_and_its_future(self):
        ps = p_star(CFG.beta)
        assert in_TN(ps, CFG)
        for _, v in future_cone_vertices(ps, CFG.spectrum()):
            assert not unitary_entanglable(v)
            assert in_TN(v, CFG)

    def test_middle_level_swap_invariance(self, rng):
        for _ in range(40):
            p = random_dist(rng, 4)
            swapped = p[[0, 2, 1, 3]]
            assert in_TN(p, CFG) == in_TN(swapped, CFG)


class TestCatalyticallyNonEntanglable:
    def test_entanglable_state_is_out(self):
        assert not in_CN((0.0, 1.0, 0.0, 0.0), CFG, samples=0)

    def test_gibbs_is_in(self):
        assert in_CN(CFG.spectrum().gibbs, CFG, samples=4000, seed=1)

    def test_contained_in_thermal_set(self, rng):
        for _ in range(60):
            p = random_dist(rng, 4)
            if in_CN(p, CFG, samples=0):
                assert in_TN(p, CFG)

    def test_states_just_outside_the_distinguished_future(self, rng):
        ps = np.asarray(p_star(CFG.beta))
        spec = CFG.spectrum()
        found = 0
        while found < 5:
            step = rng.normal(size=4) * 0.01
            step -= step.mean()
            q = ps + step
            if q.min() < 0:
                continue
            q /= q.sum()
            if compare(ps, q, spec) is Relation.MAJORIZES:
                continue
            assert not in_CN(q, CFG, samples=2000, seed=2)
            found += 1

    def test_middle_level_swap_invariance(self, rng):
        for _ in range(20):
            p = random_dist(rng, 4)
            swapped = p[[0, 2, 1, 3]]
            assert in_CN(p, CFG, samples=0) == in_CN(swapped, CFG, samples=0)


class TestClosedFormStates:
    def test_values_at_beta_zero(self):
        np.testing.assert_allclose(p_star(0.0).probs, np.array([1, 1, 1, 3]) / 6, atol=1e-15)
        np.testing.assert_allclose(p_star_star(0.0).probs, np.array([1, 3, 1, 1]) / 6, atol=1e-15)

    @pytest.mark.parametrize("beta", [0.0, 0.25, 0.5, 1.0, 2.0])
    def test_tight_majorisation_chain(self, beta):
        spec = TwoQubitConfig(beta).spectrum()
        assert thermo_majorizes(p_star(beta), p_star_star(beta), spec)

    @pytest.mark.parametrize("beta", [0.0, 0.25, 0.5, 1.0, 2.0])
    def test_decisive_vertex_is_the_second_state(self, beta):
        spec = TwoQubitConfig(beta).spectrum()
        v = vertex_for_order(p_star(beta), spec, (1, 0, 2, 3))
        np.testing.assert_allclose(v.probs, p_star_star(beta).probs, atol=1e-12)

    @pytest.mark.parametrize("beta", [0.0, 0.25, 0.5, 1.0, 2.0])
    def test_boundary_tangency_equation(self, beta):
        spec = TwoQubitConfig(beta).spectrum()
        v = np.asarray(vertex_for_order(p_star(beta), spec, (1, 0, 2, 3)))
        assert abs(4 * v[0] * v[3] - (v[1] - v[2]) ** 2) < 1e-9


class TestBatchClassifiers:
    def test_batch_masks_match_scalar_operations(self, rng):
        # the Monte-Carlo kernels must agree with the one-state code paths
        from thermocone.entanglement import _cn_mask, _tn_mask
        from thermocone.volume import sample_simplex

        gamma = CFG.spectrum().gibbs
        draws = sample_simplex(4, 300, rng)
        tn = _tn_mask(draws, np.asarray(gamma))
        cn = _cn_mask(draws, np.asarray(gamma))
        for row, t, c in zip(draws, tn, cn):
            assert t == in_TN(row, CFG)
            assert c == in_CN(row, CFG, samples=0)


class TestVolumes:
    def test_catalytic_set_within_thermal_set_and_ratio(self):
        v_tn, v_cn, ratio = volume_ratio_CN_TN(0.5, samples=30_000, seed=3)
        assert v_cn.value <= v_tn.value
        assert 0.0 < ratio < 1.0

    def test_sample_floor(self):
        with pytest.raises(ValueError):
            volume_ratio_CN_TN(0.5, samples=100)

    def test_reproducible(self):
        a = volume_ratio_CN_TN(0.25, samples=20_000, seed=4)
        b = volume_ratio_CN_TN(0.25, samples=20_000, seed=4)
        assert a[0].value == b[0].value and a[1].value == b[1].value

    def test_both_volumes_fade_at_low_temperature(self):
        warm_tn, warm_cn, _ = volume_ratio_CN_TN(0.5, samples=20_000, seed=5)
        cold_tn, cold_cn, _ = volume_ratio_CN_TN(4.0, samples=20_000, seed=5)
        assert cold_tn.value < warm_tn.value
        assert cold_cn.value < warm_cn.value
        assert cold_tn.value < 0.02
