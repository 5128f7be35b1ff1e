"""
Ортотропний закон пружності графену та його поворот до осі трубки.

Тензор зберігається в декартових компонентах (3, 3, 3, 3) у базисі ґратки;
поворот на ψ — тензорне спряження C̃ = Qᵀ∘C∘Q.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from nanoshell.errors import ConfigError, ModuliError

INTERDEPENDENCE_TOL = 0.02
# компоненти, що відрізняються від нуля лише похибкою округлення, обнуляються
CHOP_ULPS = 64

_VOIGT_PAIRS = ((0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1))


@dataclass(frozen=True)
class ElasticModuli:
    """E1, E2, G у ГПа; ν12, ν21 безрозмірні. Інваріант: E1·ν21 ≈ E2·ν12."""

    E1: float
    E2: float
    G: float
    nu12: float
    nu21: float

    def __post_init__(self) -> None:
        for name in ("E1", "E2", "G"):
            value = getattr(self, name)
            if not value > 0:
                raise ConfigError(200, field=name.lower(), value=value)
        if not self.Delta > 0:
            raise ModuliError(203, field="1 - nu12*nu21")
        if not self.E1 * self.E2 - self.eta**2 > 0:
            raise ModuliError(203, field="E1*E2 - eta^2")
        mismatch = self.interdependence_mismatch
        if mismatch > INTERDEPENDENCE_TOL:
            raise ModuliError(204, mismatch=f"{mismatch:.2%}")
        if mismatch > 0:
            logging.info("Moduli interdependence mismatch %.3f%% (accepted)", 100 * mismatch)

    @property
    def eta(self) -> float:
        return self.E1 * self.nu21

    @property
    def Delta(self) -> float:
        return 1.0 - self.nu12 * self.nu21

    @property
    def interdependence_mismatch(self) -> float:
        diff = abs(self.E1 * self.nu21 - self.E2 * self.nu12)
        if diff == 0.0:
            return 0.0
        return diff / abs(self.eta) if self.eta else math.inf

    @classmethod
    def isotropic(cls, E: float, nu: float) -> "ElasticModuli":
        return cls(E1=E, E2=E, G=E / (2.0 * (1.0 + nu)), nu12=nu, nu21=nu)

    def scaled(self, factor: float) -> "ElasticModuli":
        return ElasticModuli(
            E1=self.E1 * factor,
            E2=self.E2 * factor,
            G=self.G * factor,
            nu12=self.nu12,
            nu21=self.nu21,
        )


@dataclass(frozen=True)
class StiffnessTensor:
    components: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.array(self.components, dtype=float)
        if arr.shape != (3, 3, 3, 3):
            raise ValueError(f"stiffness must have shape (3, 3, 3, 3), got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    def component(self, i: int, j: int, h: int, k: int) -> float:
        """Компонента C_ijhk з індексами від 1."""
        return float(self.components[i - 1, j - 1, h - 1, k - 1])

    def symmetry_defect(self) -> float:
        C = self.components
        return float(
            max(
                np.abs(C - C.transpose(1, 0, 2, 3)).max(),
                np.abs(C - C.transpose(0, 1, 3, 2)).max(),
                np.abs(C - C.transpose(2, 3, 0, 1)).max(),
            )
        )

    def mandel(self) -> np.ndarray:
        """6×6 матриця в ортонормованому базисі симетричних тензорів."""
        weights = np.array([1.0, 1.0, 1.0, math.sqrt(2.0), math.sqrt(2.0), math.sqrt(2.0)])
        M = np.empty((6, 6))
        for I, (i, j) in enumerate(_VOIGT_PAIRS):
            for J, (h, k) in enumerate(_VOIGT_PAIRS):
                M[I, J] = weights[I] * weights[J] * self.components[i, j, h, k]
        return M

    def independent_components(self) -> Dict[str, float]:
        out: Dict[str, float] = {}
        for I, (i, j) in enumerate(_VOIGT_PAIRS):
            for J in range(I, 6):
                h, k = _VOIGT_PAIRS[J]
                out[f"c{i + 1}{j + 1}{h + 1}{k + 1}"] = float(self.components[i, j, h, k])
        return out


@dataclass(frozen=True)
class PlaneCoefficients:
    """a_ij = C̃_ij11, b_ij = C̃_ij22, c_ij = 2·C̃_ij12 для (ij) ∈ {11, 22, 12}."""

    a11: float
    a22: float
    a12: float
    b11: float
    b22: float
    b12: float
    c11: float
    c22: float
    c12: float

    def triple(self, ij: str) -> Tuple[float, float, float]:
        key = "12" if ij == "21" else ij
        return getattr(self, "a" + key), getattr(self, "b" + key), getattr(self, "c" + key)

    def stress(self, E11, E22, E12):
        """(S11, S22, S12) для плоскої деформації з E13 = E23 = E33 = 0."""
        return tuple(a * E11 + b * E22 + c * E12 for a, b, c in map(self.triple, ("11", "22", "12")))

    def as_dict(self) -> Dict[str, float]:
        return {f"{name}_coeff": float(getattr(self, name)) for name in self.__dataclass_fields__}


def build_orthotropic(moduli: ElasticModuli) -> StiffnessTensor:
    C = np.zeros((3, 3, 3, 3))
    C[0, 0, 0, 0] = moduli.E1 / moduli.Delta
    C[1, 1, 1, 1] = moduli.E2 / moduli.Delta
    C[0, 0, 1, 1] = C[1, 1, 0, 0] = moduli.eta / moduli.Delta
    C[0, 1, 0, 1] = C[0, 1, 1, 0] = C[1, 0, 0, 1] = C[1, 0, 1, 0] = moduli.G
    return StiffnessTensor(C)


def rotation(psi: float) -> np.ndarray:
    """Q = cosψ(e1⊗e1 + e2⊗e2) − sinψ(e1⊗e2 − e2⊗e1) + e3⊗e3."""
    c, s = math.cos(psi), math.sin(psi)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def conjugate(C: StiffnessTensor, psi: float) -> StiffnessTensor:
    """C̃_ijhk = Q_li Q_mj Q_nh Q_pk C_lmnp — компоненти C у повернутому базисі."""
    Q = rotation(psi)
    Ct = np.einsum("li,mj,nh,pk,lmnp->ijhk", Q, Q, Q, Q, C.components)
    scale = np.abs(Ct).max()
    Ct[np.abs(Ct) <= CHOP_ULPS * np.finfo(float).eps * scale] = 0.0
    return StiffnessTensor(Ct)


def plane_coefficients(Ct: StiffnessTensor) -> PlaneCoefficients:
    C = Ct.components
    pairs = {"11": (0, 0), "22": (1, 1), "12": (0, 1)}
    values: Dict[str, float] = {}
    for key, (i, j) in pairs.items():
        values["a" + key] = float(C[i, j, 0, 0])
        values["b" + key] = float(C[i, j, 1, 1])
        values["c" + key] = float(2.0 * C[i, j, 0, 1])
    return PlaneCoefficients(**values)


def _as_strain3(E) -> np.ndarray:
    E = np.asarray(E, dtype=float)
    if E.shape == (2, 2):
        out = np.zeros((3, 3))
        out[:2, :2] = E
        return out
    if E.shape != (3, 3):
        raise ValueError(f"strain must be 2x2 or 3x3, got {E.shape}")
    if np.abs(E[:, 2]).max() > 1e-14 * max(1.0, np.abs(E).max()):
        raise ValueError("strain violates the Kirchhoff-Love constraint E e3 = 0")
    return E


def active_stress(C: StiffnessTensor, E) -> np.ndarray:
    return np.einsum("ijhk,hk->ij", C.components, _as_strain3(E))


def strain_energy_density(C: StiffnessTensor, E) -> float:
    E3 = _as_strain3(E)
    return 0.5 * float(np.einsum("ij,ij->", E3, active_stress(C, E3)))


def traction(S, n) -> np.ndarray:
    return np.asarray(S, dtype=float) @ np.asarray(n, dtype=float)


def kirchhoff_love_basis() -> Dict[str, np.ndarray]:
    """
    Ортонормований базис симетричних тензорів: V1..V3 охоплюють реактивні
    напрямки (E e3 ≠ 0), W1..W3 — допустимі плоскі деформації.
    """
    e = np.eye(3)

    def sym(a, b):
        return (np.outer(e[a], e[b]) + np.outer(e[b], e[a])) / math.sqrt(2.0)

    return {
        "V1": sym(0, 2),
        "V2": sym(1, 2),
        "V3": np.outer(e[2], e[2]),
        "W1": np.outer(e[0], e[0]),
        "W2": np.outer(e[1], e[1]),
        "W3": sym(0, 1),
    }


def split_stress(S) -> Tuple[np.ndarray, np.ndarray]:
    """Розклад S = S^R + S^A за базисом V/W (S симетричний)."""
    S = np.asarray(S, dtype=float)
    reactive = np.zeros((3, 3))
    active = np.zeros((3, 3))
    for name, B in kirchhoff_love_basis().items():
        part = np.einsum("ij,ij->", S, B) * B
        if name.startswith("V"):
            reactive += part
        else:
            active += part
    return reactive, active
