from __future__ import annotations

import logging

from nanoshell.errors import SolverError, VerificationError
from nanoshell.handlers.torsion import build_problem, verify_solution
from nanoshell.render.charts import write_sweep_svg
from nanoshell.render.tables import emit, sweep_csv
from nanoshell.torsion import solve, sweep
from nanoshell.validators import RunConfig


def cmd_sweep(cfg: RunConfig) -> int:
    # шаблон з найбільшим радіусом у проході: якщо він невалідний, то й решта
    template = build_problem(cfg, max(cfg.m_values))
    records = sweep(cfg.n, cfg.m_values, template, workers=cfg.workers)

    emit(sweep_csv(records), cfg.out)
    if cfg.svg:
        write_sweep_svg(records, cfg.svg)
        logging.info("Sweep chart written: %s", cfg.svg)

    failed = [r for r in records if r.error]
    if failed:
        raise SolverError(309, value=f"({failed[0].n},{failed[0].m})")

    if cfg.verify:
        for rec in records:
            report = verify_solution(solve(build_problem(cfg, rec.m)), cfg)
            logging.info("Verification (%s,%s): %s", rec.n, rec.m, report["passed"])
            if not report["passed"]:
                raise VerificationError(401, deviation=report["deviation_extrapolated"]["max"], tol=cfg.oracle_tol)
    return 0
