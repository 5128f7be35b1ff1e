from __future__ import annotations

from typing import Any, Dict

from nanoshell.elasticity import build_orthotropic, conjugate, plane_coefficients
from nanoshell.geometry import ChiralIndices, chiral_angle, nominal_radius, rotation_angle_psi
from nanoshell.render.tables import emit, to_json
from nanoshell.validators import RunConfig


def tensor_document(cfg: RunConfig, m: int) -> Dict[str, Any]:
    c = ChiralIndices(cfg.n, m)
    lattice = cfg.lattice()
    psi = rotation_angle_psi(c)
    Ct = conjugate(build_orthotropic(cfg.moduli()), psi)
    return {
        "chirality": {"n": c.n, "m": c.m},
        "kind": c.kind,
        "psi_rad": psi,
        "chiral_angle_rad": chiral_angle(c),
        "rho0_nm": nominal_radius(c, lattice),
        "bond_length_nm": lattice.s,
        "stiffness_gpa": Ct.independent_components(),
        "plane_coefficients_gpa": plane_coefficients(Ct).as_dict(),
    }


def cmd_tensor(cfg: RunConfig) -> int:
    docs = [tensor_document(cfg, m) for m in cfg.m_values]
    emit(to_json(docs[0] if len(docs) == 1 else docs), cfg.out)
    return 0
