import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from nanoshell import config
from nanoshell.errors import NanoshellError, humanize_error
from nanoshell.handlers.sweep import cmd_sweep
from nanoshell.handlers.tensor import cmd_tensor
from nanoshell.handlers.torsion import cmd_torsion
from nanoshell.validators import RunConfig, build_run_config

COMMANDS = {
    "tensor": cmd_tensor,
    "torsion": cmd_torsion,
    "sweep": cmd_sweep,
}


# ---------------------------
# Settings / CLI
# ---------------------------

@dataclass
class RunSettings:
    command: str  # "tensor" | "torsion" | "sweep"
    config_path: Optional[str] = None
    dump_config: Optional[str] = None
    overrides: Dict[str, Any] = field(default_factory=dict)


# прапорець CLI -> поле RunConfig
_OVERRIDE_FLAGS = (
    "n", "m", "out", "svg", "units", "e1", "e2", "g", "nu12", "nu21",
    "bond_length", "eps", "slenderness", "load", "field_csv", "field_points",
    "oracle_points", "residual_tol", "oracle_tol", "workers",
)


def parse_args(argv: Optional[List[str]] = None) -> RunSettings:
    parser = argparse.ArgumentParser(
        prog="nanoshell",
        description="Anisotropic shell model of chiral carbon nanotubes under torsion",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="What to compute")
    parser.add_argument("--config", default=None, help="key = value config file")
    parser.add_argument("--dump-config", default=None, help="Write the effective config to this path")

    parser.add_argument("--n", type=int, default=None, help="Chiral index n")
    parser.add_argument("--m", default=None, help="Chiral index m or range a..b")
    parser.add_argument("--out", default=None, help="Output path (stdout if omitted)")
    parser.add_argument("--svg", default=None, help="Sweep chart path")
    parser.add_argument("--verify", action="store_true", default=None, help="Check against the FD oracle")
    parser.add_argument("--isotropic", action="store_true", default=None, help="Use isotropic moduli E=E1, nu=nu12")
    parser.add_argument("--units", choices=("gpa", "tpa"), default=None, help="Units of the moduli")

    moduli = parser.add_argument_group("moduli / geometry")
    for name in ("e1", "e2", "g", "nu12", "nu21"):
        moduli.add_argument(f"--{name}", type=float, default=None)
    moduli.add_argument("--bond-length", type=float, default=None, help="C-C bond length, nm")
    moduli.add_argument("--eps", type=float, default=None, help="Shell half-thickness, nm")
    moduli.add_argument("--slenderness", type=float, default=None, help="rho0 / l")
    moduli.add_argument("--load", "--t", type=float, default=None, help="Twisting load t, nN/nm")

    numerics = parser.add_argument_group("numerics")
    numerics.add_argument("--field-csv", default=None, help="Write (x1, w, a1, a2) CSV")
    numerics.add_argument("--field-points", type=int, default=None)
    numerics.add_argument("--oracle-points", type=int, default=None, help="Odd node count of the FD grid")
    numerics.add_argument("--residual-tol", type=float, default=None)
    numerics.add_argument("--oracle-tol", type=float, default=None)
    numerics.add_argument("--workers", type=int, default=None, help="Threads for sweep rows")

    args = parser.parse_args(argv)

    overrides = {name: getattr(args, name) for name in _OVERRIDE_FLAGS}
    overrides["verify"] = args.verify
    overrides["isotropic"] = args.isotropic

    return RunSettings(
        command=args.command,
        config_path=args.config,
        dump_config=args.dump_config,
        overrides=overrides,
    )


def build_config(settings: RunSettings) -> RunConfig:
    file_values = config.load_config_file(settings.config_path) if settings.config_path else {}
    return build_run_config(config.DEFAULTS, file_values, settings.overrides)


# ---------------------------
# Logging
# ---------------------------

def setup_logging() -> None:
    os.makedirs(config.LOG_DIR, exist_ok=True)
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        handlers=[
            logging.FileHandler(config.LOG_FILE, encoding="utf-8"),
            logging.StreamHandler(sys.stderr),
        ],
    )


# ---------------------------
# Main
# ---------------------------

def main(argv: Optional[List[str]] = None) -> int:
    setup_logging()
    settings = parse_args(argv)

    try:
        cfg = build_config(settings)
        if settings.dump_config:
            config.dump_config(cfg.dump_values(), settings.dump_config)
            logging.info("Config written: %s", settings.dump_config)
        return COMMANDS[settings.command](cfg)
    except NanoshellError as exc:
        logging.error("%s failed [%s]: %s", settings.command, exc.code, humanize_error(exc.code, exc.details))
        return exc.exit_code
    except KeyboardInterrupt:
        logging.info("Interrupted")
        return 130
