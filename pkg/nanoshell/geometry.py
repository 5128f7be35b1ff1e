"""
Геометрія гексагональної ґратки та ефективної оболонки.

Ґратка: a1 = √3·s·(1, 0), a2 = √3·s·(½, √3/2), s — довжина звʼязку C–C.
Нанотрубка (n, m) згортається вздовж хірального вектора χ = n·a1 + m·a2.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from nanoshell.errors import ChiralityError, ConfigError, GeometryError

BOND_LENGTH_NM = 0.142


@dataclass(frozen=True)
class ChiralIndices:
    n: int
    m: int

    def __post_init__(self) -> None:
        for v in (self.n, self.m):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise ChiralityError(201, n=self.n, m=self.m)
        if self.n < 1 or not 0 <= self.m <= self.n:
            raise ChiralityError(201, n=self.n, m=self.m)

    @property
    def kind(self) -> str:
        if self.m == 0:
            return "zigzag"
        if self.m == self.n:
            return "armchair"
        return "chiral"

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


@dataclass(frozen=True)
class LatticeGeometry:
    s: float = BOND_LENGTH_NM

    def __post_init__(self) -> None:
        if not self.s > 0:
            raise ConfigError(200, field="bond_length", value=self.s)

    @property
    def lattice_constant(self) -> float:
        return math.sqrt(3.0) * self.s

    @property
    def a1(self) -> np.ndarray:
        return self.lattice_constant * np.array([1.0, 0.0])

    @property
    def a2(self) -> np.ndarray:
        return self.lattice_constant * np.array([0.5, math.sqrt(3.0) / 2.0])


@dataclass(frozen=True)
class ShellGeometry:
    rho0: float
    eps: float
    l: float

    def __post_init__(self) -> None:
        if not self.eps > 0:
            raise ConfigError(200, field="eps", value=self.eps)
        if not self.l > 0:
            raise ConfigError(200, field="l", value=self.l)
        if not self.eps < self.rho0:
            raise GeometryError(202, eps=self.eps, rho0=self.rho0)

    @property
    def thickness_ratio(self) -> float:
        return self.eps / self.rho0

    @property
    def slenderness(self) -> float:
        return self.rho0 / self.l

    @property
    def log_factor(self) -> float:
        # Λ = (ρ/2ε)·ln((1+ε/ρ)/(1−ε/ρ)) = artanh(x)/x
        x = self.thickness_ratio
        return math.atanh(x) / x


def chiral_angle(c: ChiralIndices) -> float:
    if c.m == 0:
        return 0.0
    if c.m == c.n:
        return math.pi / 6.0
    return math.atan(math.sqrt(3.0) * c.m / (2 * c.n + c.m))


def rotation_angle_psi(c: ChiralIndices) -> float:
    """Кут між віссю ґратки e1 та віссю трубки; 0 для зигзагу, π/2 для крісла."""
    if c.m == 0:
        return 0.0
    return math.pi / 3.0 + chiral_angle(c)


def axial_vector(c: ChiralIndices) -> Tuple[int, int]:
    d_r = math.gcd(2 * c.n + c.m, c.n + 2 * c.m)
    return (c.n + 2 * c.m) // d_r, -(2 * c.n + c.m) // d_r


def lattice_point(t1: int, t2: int, g: LatticeGeometry) -> np.ndarray:
    return t1 * g.a1 + t2 * g.a2


def chiral_vector(c: ChiralIndices, g: LatticeGeometry) -> np.ndarray:
    return lattice_point(c.n, c.m, g)


def nominal_radius(c: ChiralIndices, g: LatticeGeometry) -> float:
    ratio = c.m / c.n
    return math.sqrt(3.0) / (2.0 * math.pi) * c.n * math.sqrt(1.0 + ratio + ratio**2) * g.s


def half_length(rho0: float, slenderness: float) -> float:
    if not slenderness > 0:
        raise ConfigError(200, field="slenderness", value=slenderness)
    return rho0 / slenderness


def effective_geometry(
    c: ChiralIndices,
    g: LatticeGeometry,
    eps: float,
    l: Optional[float] = None,
    *,
    slenderness: Optional[float] = None,
) -> ShellGeometry:
    """Оболонка радіуса ρo(c), товщини 2ε і довжини 2l (або l = ρo / slenderness)."""
    rho0 = nominal_radius(c, g)
    if l is None:
        if slenderness is None:
            raise ConfigError(200, field="l", value=None)
        l = half_length(rho0, slenderness)
    geom = ShellGeometry(rho0=rho0, eps=eps, l=l)
    logging.debug("Geometry %s: rho0=%.6g nm, eps=%.6g nm, l=%.6g nm", c, rho0, eps, l)
    return geom
