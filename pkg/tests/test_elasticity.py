import math

import numpy as np
import pytest

from nanoshell.elasticity import (
    ElasticModuli,
    active_stress,
    build_orthotropic,
    conjugate,
    kirchhoff_love_basis,
    plane_coefficients,
    rotation,
    split_stress,
    strain_energy_density,
    traction,
)
from nanoshell.errors import ConfigError, ModuliError
from nanoshell.geometry import ChiralIndices, rotation_angle_psi

PSI_SAMPLES = [0.0, 0.3, math.pi / 4, 1.1, rotation_angle_psi(ChiralIndices(6, 3)), math.pi / 2]


def printed_plane_coefficients(mod: ElasticModuli, psi: float) -> dict:
    """
    Тригонометричні формули коефіцієнтів, як їх записано в теорії
    (E2·ν12 замінено на η, а sin³ψ·sinψ прочитано як sin³ψ·cosψ).
    """
    D, eta, G = mod.Delta, mod.eta, mod.G
    c, s = math.cos(psi), math.sin(psi)
    s2, c2 = math.sin(2 * psi), math.cos(2 * psi)
    k1 = (mod.E1 - eta) / D
    k2 = (mod.E2 - eta) / D
    return {
        "a11": mod.E1 / D * c**4 + mod.E2 / D * s**4 + 2 * eta / D * s**2 * c**2 + G * s2**2,
        "b11": eta / D * (c**4 + s**4) + (mod.E1 + mod.E2) / D * s**2 * c**2 - G * s2**2,
        "a22": eta / D * (c**4 + s**4) + (mod.E1 + mod.E2) / D * s**2 * c**2 - G * s2**2,
        "b22": mod.E1 / D * s**4 + mod.E2 / D * c**4 + 2 * eta / D * s**2 * c**2 + G * s2**2,
        "c12": 2 * G * c2**2 + 0.5 * (k1 + k2) * s2**2,
        "c11": 2 * G * s2 * c2 - (k1 * c**2 - k2 * s**2) * s2,
        "a12": 0.5 * G * math.sin(4 * psi) - k1 * c**3 * s + k2 * s**3 * c,
        "b12": -0.5 * G * math.sin(4 * psi) + k2 * c**3 * s - k1 * s**3 * c,
    }


class TestModuli:
    def test_derived(self, moduli):
        assert math.isclose(moduli.eta, 784.0 * 0.260)
        assert math.isclose(moduli.Delta, 1 - 0.242 * 0.260)
        assert 0 < moduli.interdependence_mismatch < 0.02

    def test_mismatch_rejected(self):
        with pytest.raises(ModuliError):
            ElasticModuli(E1=784.0, E2=832.0, G=424.0, nu12=0.30, nu21=0.260)

    def test_non_positive(self):
        with pytest.raises(ConfigError):
            ElasticModuli(E1=0.0, E2=832.0, G=424.0, nu12=0.242, nu21=0.260)

    def test_isotropic(self):
        iso = ElasticModuli.isotropic(1000.0, 0.2)
        assert math.isclose(iso.G, 1000.0 / 2.4)
        assert iso.interdependence_mismatch == 0.0


class TestTensor:
    def test_orthotropic_components(self, moduli):
        C = build_orthotropic(moduli)
        D = moduli.Delta
        assert math.isclose(C.component(1, 1, 1, 1), 784.0 / D)
        assert math.isclose(C.component(2, 2, 2, 2), 832.0 / D)
        assert math.isclose(C.component(1, 1, 2, 2), moduli.eta / D)
        for idx in [(1, 2, 1, 2), (1, 2, 2, 1), (2, 1, 1, 2), (2, 1, 2, 1)]:
            assert C.component(*idx) == 424.0
        assert C.symmetry_defect() == 0.0

    def test_rotation_matrix(self):
        Q = rotation(math.pi / 2)
        np.testing.assert_allclose(Q, [[0, -1, 0], [1, 0, 0], [0, 0, 1]], atol=1e-16)

    @pytest.mark.parametrize("psi", np.linspace(-math.pi, math.pi, 13))
    def test_rotation_contract(self, psi):
        Q = rotation(psi)
        np.testing.assert_allclose(Q @ Q.T, np.eye(3), atol=1e-15)
        assert np.linalg.det(Q) == pytest.approx(1.0, rel=1e-14)
        np.testing.assert_array_equal(Q @ [0.0, 0.0, 1.0], [0.0, 0.0, 1.0])
        np.testing.assert_allclose(Q @ rotation(-psi), np.eye(3), atol=1e-15)

    @pytest.mark.parametrize("psi", PSI_SAMPLES)
    def test_isotropic_is_frame_free(self, psi):
        C = build_orthotropic(ElasticModuli.isotropic(800.0, 0.25))
        scale = np.abs(C.components).max()
        np.testing.assert_allclose(conjugate(C, psi).components, C.components, rtol=0, atol=1e-12 * scale)

    @pytest.mark.parametrize("psi", PSI_SAMPLES)
    def test_conjugation_invariants(self, moduli, psi):
        C = build_orthotropic(moduli)
        Ct = conjugate(C, psi)
        assert Ct.symmetry_defect() <= 1e-12 * np.abs(C.components).max()
        np.testing.assert_allclose(
            np.linalg.eigvalsh(Ct.mandel()), np.linalg.eigvalsh(C.mandel()), rtol=1e-12, atol=1e-9
        )
        back = conjugate(Ct, -psi)
        np.testing.assert_allclose(back.components, C.components, atol=1e-12 * 1000)

    def test_independent_components(self, moduli):
        comps = conjugate(build_orthotropic(moduli), 0.7).independent_components()
        assert len(comps) == 21
        assert comps["c3333"] == 0.0


class TestPlaneCoefficients:
    @pytest.mark.parametrize("psi", PSI_SAMPLES)
    def test_against_printed_formulas(self, moduli, psi):
        pc = plane_coefficients(conjugate(build_orthotropic(moduli), psi))
        printed = printed_plane_coefficients(moduli, psi)
        for name, value in printed.items():
            assert getattr(pc, name) == pytest.approx(value, rel=1e-12, abs=1e-9), name
        # c22 = 2·C̃2212 = 2·b12
        assert pc.c22 == pytest.approx(2 * pc.b12, rel=1e-12, abs=1e-9)

    @pytest.mark.parametrize("psi", [0.0, math.pi / 2])
    def test_achiral_decoupling_exact(self, moduli, psi):
        pc = plane_coefficients(conjugate(build_orthotropic(moduli), psi))
        assert pc.a12 == pc.b12 == pc.c11 == pc.c22 == 0.0

    @pytest.mark.parametrize("psi", PSI_SAMPLES)
    def test_isotropic_decoupling(self, psi):
        pc = plane_coefficients(conjugate(build_orthotropic(ElasticModuli.isotropic(800.0, 0.25)), psi))
        assert pc.a12 == pc.b12 == pc.c11 == pc.c22 == 0.0

    def test_stress_matches_tensor(self, moduli):
        Ct = conjugate(build_orthotropic(moduli), 1.2)
        pc = plane_coefficients(Ct)
        E11, E22, E12 = 1e-3, -4e-4, 2.5e-4
        S = active_stress(Ct, [[E11, E12], [E12, E22]])
        np.testing.assert_allclose(pc.stress(E11, E22, E12), (S[0, 0], S[1, 1], S[0, 1]), rtol=1e-13)


class TestEnergy:
    def test_uniaxial(self, moduli):
        C = build_orthotropic(moduli)
        d = 1e-3
        assert strain_energy_density(C, [[d, 0], [0, 0]]) == pytest.approx(0.5 * moduli.E1 / moduli.Delta * d**2)

    def test_pure_shear(self, moduli):
        C = build_orthotropic(moduli)
        W3 = kirchhoff_love_basis()["W3"]
        assert strain_energy_density(C, W3) == pytest.approx(moduli.G, rel=1e-14)

    def test_positive_definite(self, moduli):
        rng = np.random.default_rng(21)
        for psi in PSI_SAMPLES:
            Ct = conjugate(build_orthotropic(moduli), psi)
            for _ in range(50):
                E = rng.normal(size=(2, 2)) * 1e-3
                E = 0.5 * (E + E.T)
                assert strain_energy_density(Ct, E) > 0.0

    @pytest.mark.parametrize("psi", PSI_SAMPLES)
    def test_energy_is_frame_indifferent(self, moduli, psi):
        C = build_orthotropic(moduli)
        Q = rotation(psi)
        rng = np.random.default_rng(13)
        E = np.zeros((3, 3))
        E[:2, :2] = rng.normal(size=(2, 2)) * 1e-3
        E = 0.5 * (E + E.T)
        rotated = Q.T @ E @ Q
        assert strain_energy_density(conjugate(C, psi), rotated) == pytest.approx(
            strain_energy_density(C, E), rel=1e-12
        )

    def test_rejects_transverse_strain(self, moduli):
        E = np.zeros((3, 3))
        E[0, 2] = E[2, 0] = 1e-3
        with pytest.raises(ValueError):
            strain_energy_density(build_orthotropic(moduli), E)


class TestStress:
    def test_traction_rotates_with_frame(self, moduli):
        C = build_orthotropic(moduli)
        psi = 0.9
        Q = rotation(psi)
        rng = np.random.default_rng(7)
        E = np.zeros((3, 3))
        E[:2, :2] = rng.normal(size=(2, 2)) * 1e-3
        E = 0.5 * (E + E.T)
        n = np.array([0.6, 0.8, 0.0])
        lhs = traction(active_stress(conjugate(C, psi), Q.T @ E @ Q), Q.T @ n)
        rhs = Q.T @ traction(active_stress(C, E), n)
        np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-15)

    def test_split_stress(self):
        rng = np.random.default_rng(3)
        S = rng.normal(size=(3, 3))
        S = S + S.T
        reactive, active = split_stress(S)
        np.testing.assert_allclose(reactive + active, S, atol=1e-14)
        assert np.allclose(active[:, 2], 0.0)
        assert np.allclose(reactive[:2, :2], 0.0)
