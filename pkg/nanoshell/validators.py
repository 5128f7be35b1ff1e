from __future__ import annotations

import re
from typing import Any, Dict, List, Literal, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from nanoshell.elasticity import ElasticModuli
from nanoshell.errors import ConfigError
from nanoshell.geometry import LatticeGeometry

TPA_TO_GPA = 1000.0

_RANGE_RE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_m_range(value: Any) -> List[int]:
    """'3' -> [3], '0..6' -> [0, 1, ..., 6]."""
    text = str(value).strip()
    if text.isdigit():
        return [int(text)]
    match = _RANGE_RE.match(text)
    if not match:
        raise ConfigError(205, value=text)
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise ConfigError(205, value=text)
    return list(range(lo, hi + 1))


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    e1: float = Field(784.0, gt=0)
    e2: float = Field(832.0, gt=0)
    g: float = Field(424.0, gt=0)
    nu12: float = Field(0.242, ge=0, lt=1)
    nu21: float = Field(0.260, ge=0, lt=1)
    units: Literal["gpa", "tpa"] = "gpa"

    bond_length: float = Field(0.142, gt=0)
    eps: float = Field(0.194, gt=0)
    slenderness: float = Field(0.25, gt=0)
    load: float = Field(0.1, gt=0)

    n: int = Field(6, ge=1)
    m: str = "3"
    isotropic: bool = False

    verify: bool = False
    out: Optional[str] = None
    svg: Optional[str] = None
    field_csv: Optional[str] = None
    field_points: int = Field(101, ge=2)
    oracle_points: int = Field(2001, ge=201)
    residual_points: int = Field(101, ge=5)
    residual_tol: float = Field(1e-8, gt=0)
    oracle_tol: float = Field(1e-6, gt=0)
    workers: int = Field(1, ge=1)

    @field_validator("m", mode="before")
    @classmethod
    def _m_as_text(cls, v: Any) -> str:
        return str(v).strip()

    @field_validator("units", mode="before")
    @classmethod
    def _units_lower(cls, v: Any) -> Any:
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("oracle_points")
    @classmethod
    def _odd_points(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("oracle_points must be odd")
        return v

    @model_validator(mode="after")
    def _m_within_n(self) -> "RunConfig":
        for m in parse_m_range(self.m):
            if m > self.n:
                raise ConfigError(206, m=m, n=self.n)
        return self

    @property
    def m_values(self) -> List[int]:
        return parse_m_range(self.m)

    def moduli(self) -> ElasticModuli:
        """Модулі в ГПа; при units=tpa перераховуються через ElasticModuli.scaled."""
        if self.isotropic:
            base = ElasticModuli.isotropic(self.e1, self.nu12)
        else:
            base = ElasticModuli(E1=self.e1, E2=self.e2, G=self.g, nu12=self.nu12, nu21=self.nu21)
        return base.scaled(TPA_TO_GPA) if self.units == "tpa" else base

    def lattice(self) -> LatticeGeometry:
        return LatticeGeometry(self.bond_length)

    def dump_values(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


MODULI_KEYS = ("e1", "e2", "g")
_UNIT_FACTOR = {"gpa": 1.0, "tpa": TPA_TO_GPA}


def _moduli_in_units(layer: Dict[str, Any], units: str) -> Dict[str, Any]:
    """
    Шар, що сам задає units, несе модулі у своїх одиницях (дефолти в ГПа);
    шар без units — у підсумкових. Модулі перераховуються в підсумкові одиниці.
    """
    own = str(layer.get("units", units)).strip().lower()
    if own == units or own not in _UNIT_FACTOR or units not in _UNIT_FACTOR:
        return layer
    out = dict(layer)
    for key in MODULI_KEYS:
        if key in out:
            try:
                out[key] = float(out[key]) * _UNIT_FACTOR[own] / _UNIT_FACTOR[units]
            except (TypeError, ValueError):
                pass  # pydantic назве поле
    return out


def build_run_config(*layers: Mapping[str, Any]) -> RunConfig:
    """Зливає шари (дефолти ← файл ← CLI) і валідує; None у шарі ігнорується."""
    cleaned = [{k: v for k, v in layer.items() if v is not None} for layer in layers]
    units = "gpa"
    for layer in cleaned:
        units = str(layer.get("units", units)).strip().lower()
    merged: Dict[str, Any] = {}
    for layer in cleaned:
        merged.update(_moduli_in_units(layer, units))
    try:
        return RunConfig(**merged)
    except ValidationError as exc:
        first = exc.errors()[0]
        # власні ConfigError з валідаторів pydantic загортає у ctx
        original = (first.get("ctx") or {}).get("error")
        if isinstance(original, ConfigError):
            raise original from exc
        loc = ".".join(str(p) for p in first.get("loc", ())) or "config"
        raise ConfigError(200, field=loc, value=first.get("input")) from exc
