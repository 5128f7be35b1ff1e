from __future__ import annotations

import logging
from typing import Any, Dict, List

import numpy as np

from nanoshell.errors import VerificationError
from nanoshell.geometry import ChiralIndices
from nanoshell.oracle import Grid, deviation, fd_solve, refine, richardson
from nanoshell.render.tables import emit, field_csv, to_json, write_text
from nanoshell.torsion import TorsionProblem, TorsionSolution, residual_report, solve
from nanoshell.validators import RunConfig


def build_problem(cfg: RunConfig, m: int) -> TorsionProblem:
    return TorsionProblem.build(
        ChiralIndices(cfg.n, m), cfg.moduli(), cfg.lattice(), cfg.eps, cfg.slenderness, cfg.load
    )


def verify_solution(sol: TorsionSolution, cfg: RunConfig) -> Dict[str, Any]:
    """Невʼязки рівноваги + відхилення від екстрапольованого за Річардсоном FD-розвʼязку."""
    p = sol.problem
    residuals = residual_report(sol, cfg.residual_points)

    coarse_grid = Grid((cfg.oracle_points + 1) // 2, p.geometry.l)
    runs = [
        fd_solve(sol.ode, sol.bc, sol.plane, p.geometry, p.t, grid)
        for grid in (coarse_grid, refine(coarse_grid))
    ]
    raw = deviation(sol, runs[1])
    extrapolated = deviation(sol, richardson(*runs))

    residual_ok = max(residuals.values()) <= cfg.residual_tol
    oracle_ok = extrapolated["max"] <= cfg.oracle_tol
    return {
        "residuals": residuals,
        "oracle_points": runs[1].x.size,
        "oracle_condition": runs[1].condition,
        "deviation_raw": raw,
        "deviation_extrapolated": extrapolated,
        "residual_tol": cfg.residual_tol,
        "oracle_tol": cfg.oracle_tol,
        "passed": bool(residual_ok and oracle_ok),
    }


def _pair(z: complex) -> List[float]:
    return [float(np.real(z)), float(np.imag(z))]


def torsion_document(sol: TorsionSolution) -> Dict[str, Any]:
    p = sol.problem
    return {
        "chirality": {"n": p.chirality.n, "m": p.chirality.m},
        "kind": p.chirality.kind,
        "psi_rad": p.psi,
        "rho0_nm": p.geometry.rho0,
        "eps_nm": p.geometry.eps,
        "half_length_nm": p.geometry.l,
        "load_nN_per_nm": p.t,
        "torque_nN_nm": sol.torque,
        "torsion_angle_rad_per_nm": sol.torsion_angle,
        "torsion_stiffness_nN_nm2": sol.torsion_stiffness,
        "axial_strain": sol.axial_strain,
        "far_field_axial_strain": sol.far_field_axial_strain,
        "far_field_shear": sol.far_field_shear,
        "ode_coefficients": {k: float(v) for k, v in vars(sol.ode).items()},
        "bc_coefficients": {k: float(v) for k, v in vars(sol.bc).items()},
        "roots": {"alpha1": _pair(sol.alpha1), "alpha2": _pair(sol.alpha2)},
        "amplitudes": {"k1": _pair(sol.k1), "k2": _pair(sol.k2)},
        "particular_solution_nm": sol.wp,
        "rim_condition": sol.rim_condition,
    }


def cmd_torsion(cfg: RunConfig) -> int:
    docs = []
    failed = []
    for m in cfg.m_values:
        sol = solve(build_problem(cfg, m))
        doc = torsion_document(sol)
        if cfg.verify:
            doc["verification"] = verify_solution(sol, cfg)
            if not doc["verification"]["passed"]:
                failed.append((cfg.n, m, doc["verification"]))
        if cfg.field_csv:
            x = np.linspace(-sol.problem.geometry.l, sol.problem.geometry.l, cfg.field_points)
            path = cfg.field_csv if len(cfg.m_values) == 1 else cfg.field_csv.replace(".csv", f"_{cfg.n}_{m}.csv")
            write_text(path, field_csv(x, sol.w(x), sol.a1(x), sol.a2(x)))
            logging.info("Field CSV written: %s", path)
        docs.append(doc)

    emit(to_json(docs[0] if len(docs) == 1 else docs), cfg.out)
    if failed:
        n, m, report = failed[0]
        if max(report["residuals"].values()) > cfg.residual_tol:
            raise VerificationError(400, value=max(report["residuals"].values()), tol=cfg.residual_tol)
        raise VerificationError(401, deviation=report["deviation_extrapolated"]["max"], tol=cfg.oracle_tol)
    return 0
