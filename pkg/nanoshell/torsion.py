"""
Аналітичний розвʼязок задачі кручення хіральної нанотрубки.

Торці x1 = ±l навантажені рівномірним крутним зусиллям t; бічна поверхня
вільна. Після виключення a1′, a2′ прогин w задовольняє
    c1·w″″ + c2·w″ + c3·w + c4·t = 0,
а a1, a2 відновлюються з лінійних форм a_α′ = Aα·w″ + Bα·w + Cα·t.
"""
from __future__ import annotations

import cmath
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from nanoshell.elasticity import (
    ElasticModuli,
    PlaneCoefficients,
    build_orthotropic,
    conjugate,
    plane_coefficients,
)
from nanoshell.errors import NanoshellError, SolverError
from nanoshell.geometry import (
    ChiralIndices,
    LatticeGeometry,
    ShellGeometry,
    effective_geometry,
    rotation_angle_psi,
)
from nanoshell.resultants import (
    AxisymmetricField,
    boundary_residual,
    equilibrium_residual,
    resultant_rows,
    resultants,
)

PIVOT_TOL = 1e-12
RIM_COND_MAX = 1e12
IMAG_TOL = 1e-10
# навантаження t має бути O(ε); більше — лише попередження
LOAD_ADVISORY = 10.0


@dataclass(frozen=True)
class OdeCoefficients:
    c1: float
    c2: float
    c3: float
    c4: float


@dataclass(frozen=True)
class BcCoefficients:
    A1: float
    B1: float
    C1: float
    A2: float
    B2: float
    C2: float


@dataclass(frozen=True)
class TorsionProblem:
    chirality: ChiralIndices
    moduli: ElasticModuli
    geometry: ShellGeometry
    t: float
    lattice: LatticeGeometry = field(default_factory=LatticeGeometry)

    def __post_init__(self) -> None:
        if abs(self.t) > LOAD_ADVISORY * self.geometry.eps:
            logging.warning(
                "Load t=%.4g is large compared with eps=%.4g; linear theory assumes t = O(eps)",
                self.t,
                self.geometry.eps,
            )

    @classmethod
    def build(
        cls,
        c: ChiralIndices,
        moduli: ElasticModuli,
        lattice: LatticeGeometry,
        eps: float,
        slenderness: float,
        t: float,
    ) -> "TorsionProblem":
        geom = effective_geometry(c, lattice, eps, slenderness=slenderness)
        return cls(chirality=c, moduli=moduli, geometry=geom, t=t, lattice=lattice)

    @property
    def psi(self) -> float:
        return rotation_angle_psi(self.chirality)

    def plane(self) -> PlaneCoefficients:
        return plane_coefficients(conjugate(build_orthotropic(self.moduli), self.psi))

    def with_load(self, t: float) -> "TorsionProblem":
        return TorsionProblem(self.chirality, self.moduli, self.geometry, t, self.lattice)


def applied_torque(t: float, rho0: float) -> float:
    return 2.0 * math.pi * rho0**2 * t


def _eliminate(pc: PlaneCoefficients, sg: ShellGeometry) -> Tuple[np.ndarray, np.ndarray]:
    """
    Форми a1′ і a2′ над базисом (w″, w, t):
    (i) торцева умова F21 + M21/ρo = t дає a2′ через a1′;
    (ii) підстановка у F11 = 0 дає a1′; (iii) зворотна підстановка.
    """
    rows = resultant_rows(pc, sg)
    f = rows["F11"]
    g = rows["F21"] + rows["M21"] / sg.rho0

    if g[1] == 0.0:
        raise SolverError(302)
    # a2′ = s0·a1′ + s·(w″, w, t)
    s0 = -g[0] / g[1]
    s = np.array([-g[3], -g[2], 1.0]) / g[1]

    pivot = f[0] + f[1] * s0
    if abs(pivot) <= PIVOT_TOL * abs(f[0]):
        raise SolverError(301)
    a1_form = -(f[1] * s + np.array([f[3], f[2], 0.0])) / pivot
    a2_form = s0 * a1_form + s
    return a1_form, a2_form


def derive_coefficients(p: TorsionProblem) -> Tuple[OdeCoefficients, BcCoefficients]:
    pc = p.plane()
    sg = p.geometry
    a1_form, a2_form = _eliminate(pc, sg)
    rows = resultant_rows(pc, sg)

    def over_inputs(row: np.ndarray) -> np.ndarray:
        # рядок над (a1′, a2′, w, w″) -> форма над (w″, w, t)
        return row[0] * a1_form + row[1] * a2_form + np.array([row[3], row[2], 0.0])

    m11 = over_inputs(rows["M11"])
    f22 = over_inputs(rows["F22"])

    def functional(w4: float, w2: float, w0: float, t: float) -> float:
        # M11″ − F22/ρo = 0; t-доданок M11 сталий і зникає при диференціюванні
        return m11[0] * w4 + m11[1] * w2 - (f22 @ np.array([w2, w0, t])) / sg.rho0

    oc = OdeCoefficients(
        c1=functional(1, 0, 0, 0),
        c2=functional(0, 1, 0, 0),
        c3=functional(0, 0, 1, 0),
        c4=functional(0, 0, 0, 1),
    )
    bc = BcCoefficients(*a1_form, *a2_form)
    logging.debug("ODE coefficients %s: %s; %s", p.chirality, oc, bc)
    return oc, bc


def characteristic_roots(oc: OdeCoefficients) -> Tuple[complex, complex]:
    """αi = √zi, де zi — корені c1·z² + c2·z + c3 = 0; обрано Re α ≥ 0."""
    if oc.c1 == 0.0:
        raise SolverError(304)
    disc = oc.c2**2 - 4.0 * oc.c1 * oc.c3
    if disc >= 0.0:
        q = -0.5 * (oc.c2 + math.copysign(math.sqrt(disc), oc.c2))
        if q == 0.0:
            # c2 = c3 = 0: подвійний нульовий корінь
            raise SolverError(306)
        z1, z2 = complex(q / oc.c1), complex(oc.c3 / q)
        branch = "real"
    else:
        root = cmath.sqrt(disc)
        z1 = (-oc.c2 - root) / (2.0 * oc.c1)
        z2 = (-oc.c2 + root) / (2.0 * oc.c1)
        branch = "complex"
    alphas = tuple(cmath.sqrt(z) for z in (z1, z2))
    logging.debug("Characteristic roots (%s branch): %s", branch, alphas)
    return alphas  # type: ignore[return-value]


def end_moment_coefficients(
    pc: PlaneCoefficients, sg: ShellGeometry, bc: BcCoefficients
) -> Tuple[float, float, float]:
    """
    a11(ρo·w″ − a1′) − c11·a2′ = P·w″ − R·w − S·t, тож
    M11 = −(2/3)(ε³/ρo)(P·w″ − R·w − S·t).
    """
    P = pc.a11 * (sg.rho0 - bc.A1) - pc.c11 * bc.A2
    R = pc.a11 * bc.B1 + pc.c11 * bc.B2
    S = pc.a11 * bc.C1 + pc.c11 * bc.C2
    return P, R, S


# Стійкі відношення cosh(αx)/cosh(αl) і sinh(αx)/cosh(αl) для Re α ≥ 0
def _cosh_ratio(alpha: complex, x: np.ndarray, l: float) -> np.ndarray:
    return (np.exp(alpha * (x - l)) + np.exp(-alpha * (x + l))) / (1.0 + np.exp(-2.0 * alpha * l))


def _sinh_ratio(alpha: complex, x: np.ndarray, l: float) -> np.ndarray:
    return (np.exp(alpha * (x - l)) - np.exp(-alpha * (x + l))) / (1.0 + np.exp(-2.0 * alpha * l))


def _tanh(z: complex) -> complex:
    q = cmath.exp(-2.0 * z)
    return (1.0 - q) / (1.0 + q)


@dataclass(frozen=True)
class TorsionSolution:
    """
    w(x) = wp + Σ k̂i·cosh(αi x)/cosh(αi l); k̂i = 2·ki·cosh(αi l), де ki —
    сталі інтегрування при 2cosh(αi x).
    """

    problem: TorsionProblem
    ode: OdeCoefficients
    bc: BcCoefficients
    plane: PlaneCoefficients
    alpha1: complex
    alpha2: complex
    k1: complex
    k2: complex
    wp: float
    rim_condition: float

    @property
    def t(self) -> float:
        return self.problem.t

    @property
    def rho0(self) -> float:
        return self.problem.geometry.rho0

    def _terms(self, x, kind: str, power: int) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        l = self.problem.geometry.l
        ratio = _cosh_ratio if kind == "cosh" else _sinh_ratio
        total = sum(k * a**power * ratio(a, x, l) for a, k in ((self.alpha1, self.k1), (self.alpha2, self.k2)))
        return np.real(total)

    def w(self, x, order: int = 0) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        kind = "cosh" if order % 2 == 0 else "sinh"
        values = self._terms(x, kind, order)
        return values + self.wp if order == 0 else values

    def w_integral(self, x) -> np.ndarray:
        """∫₀ˣ w dx."""
        x = np.asarray(x, dtype=float)
        return self.wp * x + self._terms(x, "sinh", -1)

    def _slope_field(self, A: float, B: float, C: float, x, order: int) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if order == 0:
            return A * self.w(x, 1) + B * self.w_integral(x) + C * self.t * x
        if order == 1:
            return A * self.w(x, 2) + B * self.w(x, 0) + C * self.t
        return A * self.w(x, order + 1) + B * self.w(x, order - 1)

    def a1(self, x, order: int = 0) -> np.ndarray:
        return self._slope_field(self.bc.A1, self.bc.B1, self.bc.C1, x, order)

    def a2(self, x, order: int = 0) -> np.ndarray:
        return self._slope_field(self.bc.A2, self.bc.B2, self.bc.C2, x, order)

    def field(self) -> AxisymmetricField:
        return AxisymmetricField(w=self.w, a1=self.a1, a2=self.a2)

    @property
    def torque(self) -> float:
        return applied_torque(self.t, self.rho0)

    @property
    def torsion_angle(self) -> float:
        """aT = t·C2/ρo, рад/нм."""
        return self.t * self.bc.C2 / self.rho0

    @property
    def torsion_stiffness(self) -> float:
        """sT = 2π·ρo³/C2, нН·нм²."""
        return 2.0 * math.pi * self.rho0**3 / self.bc.C2

    @property
    def axial_strain(self) -> float:
        return self.t * self.bc.C1

    @property
    def far_field_axial_strain(self) -> float:
        return self.t * self.bc.C1 + self.bc.B1 * self.wp

    @property
    def far_field_shear(self) -> float:
        return self.t * self.bc.C2 + self.bc.B2 * self.wp

    @property
    def amplitudes(self) -> Tuple[complex, complex]:
        """Ненормовані ki при 2cosh(αi x) (можуть переповнитись для великих αl)."""
        l = self.problem.geometry.l
        with np.errstate(over="ignore"):
            return tuple(k / (2.0 * np.cosh(a * l)) for a, k in ((self.alpha1, self.k1), (self.alpha2, self.k2)))  # type: ignore[return-value]


def solve(p: TorsionProblem) -> TorsionSolution:
    oc, bc = derive_coefficients(p)
    if oc.c3 == 0.0:
        raise SolverError(303)
    alpha1, alpha2 = characteristic_roots(oc)
    if abs(alpha1 - alpha2) <= 1e-12 * max(abs(alpha1), abs(alpha2)):
        raise SolverError(306)

    pc = p.plane()
    sg = p.geometry
    t = p.t
    wp = -(oc.c4 / oc.c3) * t
    P, R, S = end_moment_coefficients(pc, sg, bc)

    # M11(±l) = 0 і M11′(±l) = 0; парність w залишає два рівняння
    moment = [P * a**2 - R for a in (alpha1, alpha2)]
    M = np.array([
        moment,
        [a * _tanh(a * sg.l) * mo for a, mo in zip((alpha1, alpha2), moment)],
    ])
    rhs = np.array([S * t + R * wp, 0.0], dtype=complex)
    cond = float(np.linalg.cond(M))
    if not math.isfinite(cond) or cond > RIM_COND_MAX:
        raise SolverError(305, cond=cond)
    k1, k2 = np.linalg.solve(M, rhs)

    sol = TorsionSolution(
        problem=p, ode=oc, bc=bc, plane=pc,
        alpha1=alpha1, alpha2=alpha2, k1=complex(k1), k2=complex(k2),
        wp=float(wp), rim_condition=cond,
    )
    _check_real(sol)
    logging.info(
        "Torsion %s: psi=%.6f rad, rho0=%.6g nm, aT=%.6g rad/nm, sT=%.6g nN nm^2, axial=%.6g",
        p.chirality, p.psi, sg.rho0, sol.torsion_angle, sol.torsion_stiffness, sol.axial_strain,
    )
    return sol


def _check_real(sol: TorsionSolution) -> None:
    l = sol.problem.geometry.l
    x = np.linspace(-l, l, 101)
    total = sum(
        k * _cosh_ratio(a, x, l) for a, k in ((sol.alpha1, sol.k1), (sol.alpha2, sol.k2))
    )
    scale = max(np.abs(np.real(total)).max(), abs(sol.wp), np.finfo(float).tiny)
    residue = float(np.abs(np.imag(total)).max())
    if residue > IMAG_TOL * scale:
        raise SolverError(307, value=residue)


def residual_report(sol: TorsionSolution, points: int = 101) -> Dict[str, float]:
    """
    Масштабовані максимуми невʼязок: рівновага на |t|/l, зусилля на |t|,
    моменти на |t|·l (при t = 0 — абсолютні значення).
    """
    sg = sol.problem.geometry
    scale = abs(sol.t) or 1.0
    rf = resultants(sol.field(), sol.plane, sg)
    x = np.linspace(-sg.l, sg.l, points)
    eq = np.abs(equilibrium_residual(rf, x)).max() / (scale / sg.l)
    rims = []
    for end in (1, -1):
        r = np.abs(boundary_residual(rf, sol.t, end=end))
        rims.append(max(r[0] / scale, r[1] / (scale * sg.l), r[2] / scale, r[3] / scale))
    return {"equilibrium_max": float(eq), "boundary_max": float(max(rims))}


@dataclass
class SweepRecord:
    n: int
    m: int
    psi: float = math.nan
    rho0: float = math.nan
    torsion_angle: float = math.nan
    torsion_stiffness: float = math.nan
    axial_strain: float = math.nan
    C1: float = math.nan
    C2: float = math.nan
    error: Optional[str] = None


def _sweep_row(n: int, m: int, template: TorsionProblem, slenderness: float) -> SweepRecord:
    record = SweepRecord(n=n, m=m)
    try:
        p = TorsionProblem.build(
            ChiralIndices(n, m), template.moduli, template.lattice, template.geometry.eps, slenderness, template.t
        )
        sol = solve(p)
    except NanoshellError as exc:
        logging.error("Sweep row (%s,%s) failed: %s", n, m, exc)
        record.error = str(exc)
        return record
    record.psi = p.psi
    record.rho0 = p.geometry.rho0
    record.torsion_angle = sol.torsion_angle
    record.torsion_stiffness = sol.torsion_stiffness
    record.axial_strain = sol.axial_strain
    record.C1 = sol.bc.C1
    record.C2 = sol.bc.C2
    return record


def sweep(n: int, m_list: Sequence[int], template: TorsionProblem, workers: int = 1) -> List[SweepRecord]:
    """
    Розвʼязує задачу для кожної (n, m), зберігаючи модулі, ε, t і ρo/l шаблону.
    Порядок рядків — порядок m_list; помилки рядків не зупиняють прохід.
    """
    slenderness = template.geometry.slenderness
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda m: _sweep_row(n, m, template, slenderness), m_list))
    return [_sweep_row(n, m, template, slenderness) for m in m_list]
