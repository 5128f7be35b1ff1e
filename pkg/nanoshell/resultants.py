"""
Осесиметричні поля, деформації та результуючі зусилля/моменти оболонки.

Поле задається трьома профілями w(x), a1(x), a2(x); кожен профіль — callable
`profile(x, order)`, що повертає похідну порядку `order` у точках x.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from nanoshell.elasticity import PlaneCoefficients
from nanoshell.geometry import ShellGeometry

Profile = Callable[[np.ndarray, int], np.ndarray]

RESULTANT_NAMES = ("F11", "F22", "F12", "F21", "M11", "M12", "M21", "M22")

# крок різницевих похідних відносно півдовжини l
FD_STEP = 1e-4


def _zero_profile(x, order: int = 0) -> np.ndarray:
    return np.zeros_like(np.asarray(x, dtype=float))


def polynomial_profile(coeffs: Sequence[float]) -> Profile:
    """Профіль-поліном з коефіцієнтами за зростанням степеня."""
    poly = Polynomial(coeffs)

    def profile(x, order: int = 0) -> np.ndarray:
        return poly.deriv(order)(np.asarray(x, dtype=float)) if order else poly(np.asarray(x, dtype=float))

    return profile


@dataclass(frozen=True)
class AxisymmetricField:
    w: Profile
    a1: Profile
    a2: Profile

    @classmethod
    def zero(cls) -> "AxisymmetricField":
        return cls(_zero_profile, _zero_profile, _zero_profile)

    @classmethod
    def from_polynomials(cls, w, a1, a2) -> "AxisymmetricField":
        return cls(polynomial_profile(w), polynomial_profile(a1), polynomial_profile(a2))


@dataclass(frozen=True)
class DistanceLoads:
    qo1: float = 0.0
    qo2: float = 0.0
    qo3: float = 0.0
    ro1: float = 0.0
    ro2: float = 0.0


@dataclass(frozen=True)
class ResultantState:
    F11: np.ndarray
    F22: np.ndarray
    F12: np.ndarray
    F21: np.ndarray
    M11: np.ndarray
    M12: np.ndarray
    M21: np.ndarray
    M22: np.ndarray

    def as_dict(self) -> Dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in RESULTANT_NAMES}

    def twist(self, rho0: float) -> np.ndarray:
        """F21 + M21/ρo — осьова частина крутного зусилля на торці."""
        return self.F21 + self.M21 / rho0


def strain_components(f: AxisymmetricField, sg: ShellGeometry, x1, zeta):
    """(E11, E22, E12) у точці (x1, ζ), |ζ| ≤ ε."""
    zeta = np.asarray(zeta, dtype=float)
    if np.any(np.abs(zeta) > sg.eps * (1 + 1e-12)):
        raise ValueError(f"|zeta| must not exceed eps={sg.eps}")
    alpha = 1.0 + zeta / sg.rho0
    E11 = f.a1(x1, 1) - zeta * f.w(x1, 2)
    E12 = 0.5 * alpha * f.a2(x1, 1)
    E22 = f.w(x1, 0) / (sg.rho0 * alpha)
    return E11, E22, E12


def resultant_rows(pc: PlaneCoefficients, sg: ShellGeometry) -> Dict[str, np.ndarray]:
    """
    Результуючі як лінійні форми над (a1′, a2′, w, w″), проінтегровані по
    товщині аналітично.
    """
    eps, rho, lam = sg.eps, sg.rho0, sg.log_factor
    e = (eps / rho) ** 2
    k3 = 2.0 / 3.0 * eps**3
    return {
        "F11": np.array([2 * eps * pc.a11, eps * (1 + e / 3) * pc.c11, 2 * eps / rho * pc.b11, -k3 / rho * pc.a11]),
        "F22": np.array([2 * eps * pc.a22, eps * pc.c22, 2 * eps / rho * lam * pc.b22, 0.0]),
        "F12": np.array([2 * eps * pc.a12, eps * pc.c12, 2 * eps / rho * lam * pc.b12, 0.0]),
        "F21": np.array([2 * eps * pc.a12, eps * (1 + e / 3) * pc.c12, 2 * eps / rho * pc.b12, -k3 / rho * pc.a12]),
        "M11": np.array([k3 / rho * pc.a11, k3 / rho * pc.c11, 0.0, -k3 * pc.a11]),
        "M12": np.array([0.0, eps**3 / (3 * rho) * pc.c12, 2 * eps * (1 - lam) * pc.b12, -k3 * pc.a12]),
        "M21": np.array([k3 / rho * pc.a12, k3 / rho * pc.c12, 0.0, -k3 * pc.a12]),
        "M22": np.array([0.0, eps**3 / (3 * rho) * pc.c22, 2 * eps * (1 - lam) * pc.b22, -k3 * pc.a22]),
    }


class ResultantField:
    """Результуючі поля f як функції x1: `rf(x) -> ResultantState`."""

    def __init__(self, f: AxisymmetricField, pc: PlaneCoefficients, sg: ShellGeometry) -> None:
        self.field = f
        self.plane = pc
        self.geometry = sg
        self._rows = resultant_rows(pc, sg)

    def __call__(self, x1) -> ResultantState:
        x = np.asarray(x1, dtype=float)
        f = self.field
        inputs = np.stack([f.a1(x, 1), f.a2(x, 1), f.w(x, 0), f.w(x, 2)])
        values = {name: np.tensordot(row, inputs, axes=1) for name, row in self._rows.items()}
        return ResultantState(**values)


def resultants(f: AxisymmetricField, pc: PlaneCoefficients, sg: ShellGeometry) -> ResultantField:
    return ResultantField(f, pc, sg)


def _central(fn: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float, order: int) -> np.ndarray:
    pts = [fn(x + k * h) for k in (-2, -1, 1, 2)]
    if order == 1:
        return (pts[0] - 8 * pts[1] + 8 * pts[2] - pts[3]) / (12 * h)
    mid = fn(x)
    return (-pts[0] + 16 * pts[1] - 30 * mid + 16 * pts[2] - pts[3]) / (12 * h * h)


def equilibrium_residual(
    rf: ResultantField,
    x1,
    loads: Optional[DistanceLoads] = None,
    h: Optional[float] = None,
) -> np.ndarray:
    """
    Невʼязки трьох рівнянь рівноваги, shape (3, len(x1)):
    F11′ + qo1, (F21 + M21/ρo)′ + qo2 + ro2/ρo, M11″ − F22/ρo + qo3.
    """
    loads = loads or DistanceLoads()
    rho = rf.geometry.rho0
    h = h or FD_STEP * rf.geometry.l
    x = np.atleast_1d(np.asarray(x1, dtype=float))

    eq1 = _central(lambda s: rf(s).F11, x, h, 1) + loads.qo1
    eq2 = _central(lambda s: rf(s).twist(rho), x, h, 1) + loads.qo2 + loads.ro2 / rho
    eq3 = _central(lambda s: rf(s).M11, x, h, 2) - rf(x).F22 / rho + loads.qo3
    return np.stack([eq1, eq2, eq3])


def boundary_residual(rf: ResultantField, t: float, end: int = 1, h: Optional[float] = None) -> np.ndarray:
    """(F11, M11, M11′, F21 + M21/ρo − t) на торці x1 = end·l."""
    sg = rf.geometry
    h = h or FD_STEP * sg.l
    xb = end * sg.l
    state = rf(np.array([xb]))
    # однобічний 5-точковий шаблон всередину оболонки
    weights = np.array([25.0, -48.0, 36.0, -16.0, 3.0]) / (12 * h)
    samples = rf(xb - end * h * np.arange(5)).M11
    dM11 = end * float(weights @ samples)
    return np.array([
        float(state.F11[0]),
        float(state.M11[0]),
        dM11,
        float(state.twist(sg.rho0)[0]) - t,
    ])
