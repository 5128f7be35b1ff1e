import math

import numpy as np
import pytest

from nanoshell.errors import ConfigError
from nanoshell.oracle import (
    Grid,
    deviation,
    fd_solve,
    fd_solve_problem,
    moment_form,
    observed_order,
    one_sided_weights,
    refine,
    richardson,
)
from nanoshell.torsion import derive_coefficients, end_moment_coefficients, solve


class TestStencils:
    def test_forward_weights(self):
        np.testing.assert_allclose(
            one_sided_weights(2, 6), [15 / 4, -77 / 6, 107 / 6, -13, 61 / 12, -5 / 6], rtol=1e-10
        )
        np.testing.assert_allclose(
            one_sided_weights(3, 7), [-49 / 8, 29, -461 / 8, 62, -307 / 8, 13, -15 / 8], rtol=1e-10
        )
        np.testing.assert_allclose(one_sided_weights(1, 5), [-25 / 12, 4, -3, 4 / 3, -1 / 4], rtol=1e-10)

    def test_grid_validation(self):
        with pytest.raises(ConfigError):
            Grid(200, 1.0)
        with pytest.raises(ConfigError):
            Grid(101, 1.0)
        g = refine(Grid(201, 1.0))
        assert g.N == 401 and g.h == pytest.approx(0.005)


class TestMomentForm:
    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_matches_end_moment_coefficients(self, make_problem, m):
        p = make_problem(6, m)
        oc, bc = derive_coefficients(p)
        pc = p.plane()
        P, R, S = end_moment_coefficients(pc, p.geometry, bc)
        k = -2 / 3 * p.geometry.eps**3 / p.geometry.rho0
        np.testing.assert_allclose(moment_form(pc, p.geometry, bc), k * np.array([P, -R, -S]), rtol=1e-10)


class TestAgainstClosedForm:
    @pytest.mark.parametrize("m", range(7))
    def test_richardson_agreement(self, make_problem, m):
        p = make_problem(6, m)
        sol = solve(p)
        coarse = Grid(1001, p.geometry.l)
        runs = [fd_solve_problem(p, g) for g in (coarse, refine(coarse))]
        dev = deviation(sol, richardson(*runs))
        assert dev["max"] <= 1e-6
        assert deviation(sol, runs[1])["max"] <= 1e-4

    def test_second_order_convergence(self, make_problem):
        p = make_problem(6, 3)
        sol = solve(p)
        errors = [deviation(sol, fd_solve_problem(p, Grid(N, p.geometry.l)))["w"] for N in (201, 401, 801)]
        order = observed_order(errors)
        assert np.all((order >= 1.8) & (order <= 2.2))

    def test_fields_anchored_at_centre(self, make_problem):
        p = make_problem(6, 2)
        orc = fd_solve_problem(p, Grid(401, p.geometry.l))
        assert orc.a1[200] == 0.0 and orc.a2[200] == 0.0
        assert orc.condition > 1.0


class TestManufacturedSolution:
    def test_recovers_cosine(self, make_problem):
        p = make_problem(6, 3)
        oc, bc = derive_coefficients(p)
        pc = p.plane()
        l, t = p.geometry.l, p.t
        k = math.pi / (2 * l)
        mf = moment_form(pc, p.geometry, bc)

        def w_star(x, order=0):
            # cos(kx) і його похідні
            phase = [np.cos, lambda y: -np.sin(y), lambda y: -np.cos(y), np.sin, np.cos][order]
            return k**order * phase(k * x)

        def forcing(x):
            return oc.c1 * w_star(x, 4) + oc.c2 * w_star(x, 2) + oc.c3 * w_star(x, 0) + oc.c4 * t

        def moment(x):
            return mf[0] * w_star(x, 2) + mf[1] * w_star(x, 0) + mf[2] * t

        def moment_slope(x):
            return mf[0] * w_star(x, 3) + mf[1] * w_star(x, 1)

        rims = (moment(-l), moment_slope(-l), moment_slope(l), moment(l))
        errors = []
        for N in (201, 401):
            orc = fd_solve(oc, bc, pc, p.geometry, t, Grid(N, l), forcing=forcing, rim_forcing=rims)
            errors.append(np.abs(orc.w - w_star(orc.x)).max())
        assert errors[1] < 1e-3
        assert 1.8 <= observed_order(errors)[0] <= 2.2
