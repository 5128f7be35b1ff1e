import math

import numpy as np
import pytest

from nanoshell.errors import ChiralityError, GeometryError
from nanoshell.geometry import (
    ChiralIndices,
    LatticeGeometry,
    ShellGeometry,
    axial_vector,
    chiral_angle,
    chiral_vector,
    effective_geometry,
    lattice_point,
    nominal_radius,
    rotation_angle_psi,
)


class TestChiralIndices:
    @pytest.mark.parametrize("n,m", [(0, 0), (3, 4), (5, -1), (2.0, 1), (True, 0)])
    def test_invalid_rejected(self, n, m):
        with pytest.raises(ChiralityError):
            ChiralIndices(n, m)

    def test_kind(self):
        assert ChiralIndices(6, 0).kind == "zigzag"
        assert ChiralIndices(6, 6).kind == "armchair"
        assert ChiralIndices(6, 3).kind == "chiral"


class TestAngles:
    def test_zigzag_and_armchair(self):
        assert rotation_angle_psi(ChiralIndices(6, 0)) == 0.0
        assert math.isclose(rotation_angle_psi(ChiralIndices(6, 6)), math.pi / 2, rel_tol=1e-15)

    def test_six_three(self):
        c = ChiralIndices(6, 3)
        assert math.isclose(chiral_angle(c), math.atan(math.sqrt(3) / 5), rel_tol=1e-15)
        assert math.isclose(rotation_angle_psi(c), 1.3807, abs_tol=1e-4)

    @pytest.mark.parametrize("n", [1, 2, 5, 7, 10, 13])
    def test_closed_form_and_range(self, n):
        for m in range(1, n + 1):
            psi = rotation_angle_psi(ChiralIndices(n, m))
            assert math.pi / 3 < psi <= math.pi / 2 + 1e-15
            if m < n:
                expected = math.atan(math.sqrt(3) * (n + m) / (n - m))
                assert math.isclose(psi, expected, rel_tol=1e-12)

    @pytest.mark.parametrize("n", [1, 4, 6, 9, 20])
    def test_chiral_angle_range(self, n):
        angles = [chiral_angle(ChiralIndices(n, m)) for m in range(n + 1)]
        assert angles[0] == 0.0
        assert angles[-1] == math.pi / 6
        assert all(0.0 <= a <= math.pi / 6 for a in angles)
        assert np.all(np.diff(angles) > 0)


class TestLattice:
    @pytest.mark.parametrize("n,m", [(6, 0), (6, 3), (6, 6), (10, 7), (17, 4)])
    def test_axial_vector_orthogonal(self, n, m, lattice):
        c = ChiralIndices(n, m)
        t1, t2 = axial_vector(c)
        # |a|²(n t1 + (n t2 + m t1)/2 + m t2) = 0 без округлення
        assert 2 * (n * t1 + m * t2) + n * t2 + m * t1 == 0
        assert math.gcd(t1, t2) == 1
        chi = chiral_vector(c, lattice)
        tau = lattice_point(t1, t2, lattice)
        assert abs(chi @ tau) <= 1e-12 * np.linalg.norm(chi) * np.linalg.norm(tau)

    def test_circumference_matches_radius(self, lattice):
        for n, m in [(6, 0), (6, 3), (10, 10)]:
            c = ChiralIndices(n, m)
            circ = np.linalg.norm(chiral_vector(c, lattice))
            assert math.isclose(circ, 2 * math.pi * nominal_radius(c, lattice), rel_tol=1e-13)

    def test_axial_vector_exhaustive(self):
        for n in range(1, 31):
            for m in range(n + 1):
                t1, t2 = axial_vector(ChiralIndices(n, m))
                assert 2 * (n * t1 + m * t2) + n * t2 + m * t1 == 0

    def test_two_one_axial_vector(self):
        assert axial_vector(ChiralIndices(2, 1)) == (4, -5)

    def test_sixty_degree_basis(self, lattice):
        a1, a2 = lattice.a1, lattice.a2
        assert math.isclose(a1 @ a2, 0.5 * (a1 @ a1), rel_tol=1e-15)
        assert math.isclose(a2 @ a2, a1 @ a1, rel_tol=1e-14)


class TestRadius:
    def test_known_values(self, lattice):
        assert math.isclose(nominal_radius(ChiralIndices(10, 10), lattice), 0.6780, abs_tol=1e-4)
        assert math.isclose(nominal_radius(ChiralIndices(6, 3), lattice), 0.3107, abs_tol=1e-4)
        assert math.isclose(nominal_radius(ChiralIndices(6, 0), lattice), 0.2349, abs_tol=1e-4)

    def test_scales_with_bond_length(self):
        c = ChiralIndices(8, 5)
        assert math.isclose(
            nominal_radius(c, LatticeGeometry(0.284)), 2 * nominal_radius(c, LatticeGeometry(0.142)), rel_tol=1e-15
        )

    @pytest.mark.parametrize("n", [1, 3, 6, 11, 25])
    def test_grows_with_m(self, n, lattice):
        radii = np.array([nominal_radius(ChiralIndices(n, m), lattice) for m in range(n + 1)])
        assert np.all(np.diff(radii) > 0)
        ratio = radii / radii[0]
        assert ratio[0] == 1.0
        assert np.all(ratio <= math.sqrt(3.0) * (1 + 1e-14))
        assert math.isclose(ratio[-1], math.sqrt(3.0), rel_tol=1e-14)


class TestShellGeometry:
    def test_thick_shell_rejected(self, lattice):
        with pytest.raises(GeometryError):
            effective_geometry(ChiralIndices(2, 0), lattice, 0.194, slenderness=0.25)

    def test_half_length_from_slenderness(self, lattice):
        g = effective_geometry(ChiralIndices(6, 3), lattice, 0.194, slenderness=0.25)
        assert math.isclose(g.l, 4 * g.rho0, rel_tol=1e-15)
        assert math.isclose(g.slenderness, 0.25, rel_tol=1e-15)

    def test_log_factor(self):
        g = ShellGeometry(rho0=1.0, eps=0.5, l=2.0)
        assert math.isclose(g.log_factor, math.log(3.0), rel_tol=1e-14)
        thin = ShellGeometry(rho0=1.0, eps=1e-6, l=2.0)
        assert abs(thin.log_factor - 1.0) < 1e-11
