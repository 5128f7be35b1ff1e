"""
Незалежні перевірки аналітичного розвʼязку:
скінченно-різницевий розвʼязок крайової задачі для w та квадратура
Гаусса–Лежандра результуючих по товщині з повним тензором C̃.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import sparse
from scipy.integrate import cumulative_trapezoid
from scipy.sparse.linalg import LinearOperator, onenormest, splu

from nanoshell.elasticity import PlaneCoefficients, StiffnessTensor
from nanoshell.errors import ConfigError, SolverError
from nanoshell.geometry import ShellGeometry
from nanoshell.resultants import AxisymmetricField, ResultantState, resultant_rows, strain_components
from nanoshell.torsion import BcCoefficients, OdeCoefficients, TorsionProblem, TorsionSolution, derive_coefficients

MIN_POINTS = 201
COND_WARN = 1e12
COND_MAX = 1e15
QUADRATURE_ORDER = 64


@dataclass(frozen=True)
class Grid:
    N: int
    l: float

    def __post_init__(self) -> None:
        if self.N < MIN_POINTS or self.N % 2 == 0:
            raise ConfigError(200, field="oracle_points", value=self.N)
        if not self.l > 0:
            raise ConfigError(200, field="l", value=self.l)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(-self.l, self.l, self.N)

    @property
    def h(self) -> float:
        return 2.0 * self.l / (self.N - 1)


def refine(grid: Grid) -> Grid:
    return Grid(2 * grid.N - 1, grid.l)


@dataclass(frozen=True)
class OracleSolution:
    x: np.ndarray
    w: np.ndarray
    a1: np.ndarray
    a2: np.ndarray
    condition: float


def one_sided_weights(derivative: int, points: int) -> np.ndarray:
    """Ваги f^(d)(x0)·h^d ≈ Σ w_k f(x0 + k·h), k = 0..points−1."""
    k = np.arange(points, dtype=float)
    V = np.vander(k, points, increasing=True).T
    rhs = np.zeros(points)
    rhs[derivative] = math.factorial(derivative)
    return np.linalg.solve(V, rhs)


# четвертий порядок на торцях
_D1 = one_sided_weights(1, 5)
_D2 = one_sided_weights(2, 6)
_D3 = one_sided_weights(3, 7)


def moment_form(pc: PlaneCoefficients, sg: ShellGeometry, bc: BcCoefficients) -> np.ndarray:
    """M11 як форма над (w″, w, t) після підстановки a_α′ = Aα w″ + Bα w + Cα t."""
    m = resultant_rows(pc, sg)["M11"]
    return (
        m[0] * np.array([bc.A1, bc.B1, bc.C1])
        + m[1] * np.array([bc.A2, bc.B2, bc.C2])
        + np.array([m[3], m[2], 0.0])
    )


def _second_derivative(w: np.ndarray, h: float) -> np.ndarray:
    out = np.empty_like(w)
    out[1:-1] = (w[:-2] - 2.0 * w[1:-1] + w[2:]) / h**2
    out[0] = _D2 @ w[:6] / h**2
    out[-1] = _D2 @ w[::-1][:6] / h**2
    return out


def _integrate_from_centre(slope: np.ndarray, x: np.ndarray) -> np.ndarray:
    values = cumulative_trapezoid(slope, x, initial=0.0)
    return values - values[len(x) // 2]


def fd_solve(
    oc: OdeCoefficients,
    bc: BcCoefficients,
    pc: PlaneCoefficients,
    sg: ShellGeometry,
    t: float,
    grid: Grid,
    forcing: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    rim_forcing: Sequence[float] = (0.0, 0.0, 0.0, 0.0),
) -> OracleSolution:
    """
    c1 w″″ + c2 w″ + c3 w + c4 t = forcing(x) на вузлах 2..N−3 (центральні
    шаблони), плюс M11 і M11′ на кожному торці (однобічні шаблони 4-го порядку).
    rim_forcing — цільові значення (M11(−l), M11′(−l), M11′(l), M11(l)).
    """
    N, h = grid.N, grid.h
    x = grid.nodes
    mf = moment_form(pc, sg, bc)
    m_scale = abs(mf[0])

    A = sparse.lil_matrix((N, N))
    b = np.zeros(N)

    # внутрішні вузли, рядки масштабовано на h⁴/|c1|
    interior = np.arange(2, N - 2)
    rhs = -oc.c4 * t * np.ones(N)
    if forcing is not None:
        rhs = rhs + forcing(x)
    stencil4 = np.array([1.0, -4.0, 6.0, -4.0, 1.0])
    stencil2 = np.array([0.0, 1.0, -2.0, 1.0, 0.0])
    centre = np.array([0.0, 0.0, 1.0, 0.0, 0.0])
    row = (oc.c1 * stencil4 + oc.c2 * h**2 * stencil2 + oc.c3 * h**4 * centre) / abs(oc.c1)
    for i in interior:
        A[i, i - 2 : i + 3] = row
    b[interior] = rhs[interior] * h**4 / abs(oc.c1)

    # торці: M11 = g (масштаб h²), M11′ = g′ (масштаб h³)
    g_left, dg_left, dg_right, g_right = rim_forcing
    for end, (g, dg) in ((-1, (g_left, dg_left)), (1, (g_right, dg_right))):
        sign = 1.0 if end == -1 else -1.0
        idx0 = 0 if end == -1 else N - 1
        cols2 = idx0 - end * np.arange(6) if end == 1 else np.arange(6)
        cols3 = idx0 - end * np.arange(7) if end == 1 else np.arange(7)
        cols1 = idx0 - end * np.arange(5) if end == 1 else np.arange(5)

        moment_row = np.zeros(N)
        moment_row[cols2] += mf[0] * _D2
        moment_row[idx0] += mf[1] * h**2
        # похідна непарного порядку змінює знак для шаблону назад
        shear_row = np.zeros(N)
        shear_row[cols3] += mf[0] * sign * _D3
        shear_row[cols1] += mf[1] * h**2 * sign * _D1

        r_moment, r_shear = (0, 1) if end == -1 else (N - 1, N - 2)
        for r, values in ((r_moment, moment_row), (r_shear, shear_row)):
            nz = np.flatnonzero(values)
            A[r, nz] = values[nz] / m_scale
        b[r_moment] = (g - mf[2] * t) * h**2 / m_scale
        b[r_shear] = dg * h**3 / m_scale

    A = A.tocsc()
    try:
        lu = splu(A)
    except RuntimeError as exc:
        raise SolverError(308, cond=math.inf) from exc
    w = lu.solve(b)

    inverse = LinearOperator(A.shape, matvec=lu.solve, rmatvec=lambda v: lu.solve(v, trans="T"), dtype=float)
    cond = float(onenormest(A) * onenormest(inverse))
    if not np.all(np.isfinite(w)) or not math.isfinite(cond) or cond > COND_MAX:
        raise SolverError(308, cond=cond)
    if cond > COND_WARN:
        logging.warning("Finite-difference system is ill-conditioned: cond ~ %.3g", cond)
    logging.debug("Oracle N=%d solved, cond ~ %.3g", N, cond)

    w2 = _second_derivative(w, h)
    a1 = _integrate_from_centre(bc.A1 * w2 + bc.B1 * w + bc.C1 * t, x)
    a2 = _integrate_from_centre(bc.A2 * w2 + bc.B2 * w + bc.C2 * t, x)
    return OracleSolution(x=x, w=w, a1=a1, a2=a2, condition=cond)


def fd_solve_problem(p: TorsionProblem, grid: Grid) -> OracleSolution:
    oc, bc = derive_coefficients(p)
    return fd_solve(oc, bc, p.plane(), p.geometry, p.t, grid)


def richardson(coarse: OracleSolution, fine: OracleSolution) -> OracleSolution:
    """(4·fine − coarse)/3 на вузлах грубої сітки (сітки вкладені)."""
    if fine.x[::2].shape != coarse.x.shape:
        raise ValueError("grids are not nested (fine must have 2N-1 nodes)")

    def extrapolate(c: np.ndarray, f: np.ndarray) -> np.ndarray:
        return (4.0 * f[::2] - c) / 3.0

    return OracleSolution(
        x=coarse.x,
        w=extrapolate(coarse.w, fine.w),
        a1=extrapolate(coarse.a1, fine.a1),
        a2=extrapolate(coarse.a2, fine.a2),
        condition=max(coarse.condition, fine.condition),
    )


def deviation(sol: TorsionSolution, orc: OracleSolution) -> Dict[str, float]:
    """Відносні L∞ відхилення w, a1, a2 (абсолютні, якщо поле тотожно нуль)."""
    out: Dict[str, float] = {}
    for name in ("w", "a1", "a2"):
        closed = getattr(sol, name)(orc.x)
        diff = float(np.abs(closed - getattr(orc, name)).max())
        scale = float(np.abs(closed).max())
        out[name] = diff / scale if scale > 0 else diff
    out["max"] = max(out.values())
    return out


def observed_order(errors: Sequence[float], ratio: float = 2.0) -> np.ndarray:
    e = np.asarray(errors, dtype=float)
    return np.log(e[:-1] / e[1:]) / math.log(ratio)


def _stress_through_thickness(
    f: AxisymmetricField, Ct: StiffnessTensor, sg: ShellGeometry, x1, order: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    nodes, weights = leggauss(order)
    zeta = sg.eps * nodes[:, None]
    wq = sg.eps * weights[:, None]
    x = np.atleast_1d(np.asarray(x1, dtype=float))[None, :]
    E11, E22, E12 = strain_components(f, sg, x, zeta)
    C = Ct.components
    # S_ij = C_ij11 E11 + C_ij22 E22 + (C_ij12 + C_ij21) E12
    S = (
        C[:2, :2, 0, 0, None, None] * E11
        + C[:2, :2, 1, 1, None, None] * E22
        + (C[:2, :2, 0, 1] + C[:2, :2, 1, 0])[:, :, None, None] * E12
    )
    alpha = 1.0 + zeta / sg.rho0
    return S, zeta, wq, alpha


def quadrature_resultants(
    f: AxisymmetricField,
    Ct: StiffnessTensor,
    sg: ShellGeometry,
    x1,
    order: int = QUADRATURE_ORDER,
) -> ResultantState:
    """
    F_i1 = ∫α S_i1, F_i2 = ∫S_i2, M_i1 = ∫αζ S_i1, M_i2 = ∫ζ S_i2 по ζ ∈ [−ε, ε].
    """
    S, zeta, wq, alpha = _stress_through_thickness(f, Ct, sg, x1, order)

    def integrate(values: np.ndarray) -> np.ndarray:
        return np.sum(wq * values, axis=0)

    return ResultantState(
        F11=integrate(alpha * S[0, 0]),
        F21=integrate(alpha * S[1, 0]),
        F12=integrate(S[0, 1]),
        F22=integrate(S[1, 1]),
        M11=integrate(alpha * zeta * S[0, 0]),
        M21=integrate(alpha * zeta * S[1, 0]),
        M12=integrate(zeta * S[0, 1]),
        M22=integrate(zeta * S[1, 1]),
    )


def torque_from_stress(
    f: AxisymmetricField, Ct: StiffnessTensor, sg: ShellGeometry, x1, order: int = QUADRATURE_ORDER
) -> np.ndarray:
    """T = 2π ρo² ∫ α² S21 dζ."""
    S, _, wq, alpha = _stress_through_thickness(f, Ct, sg, x1, order)
    return 2.0 * math.pi * sg.rho0**2 * np.sum(wq * alpha**2 * S[1, 0], axis=0)
