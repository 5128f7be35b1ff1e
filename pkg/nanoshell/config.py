import os

from dotenv import dotenv_values, load_dotenv

from nanoshell.errors import ConfigError

load_dotenv()

BASE_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
LOG_DIR = os.getenv("NANOSHELL_LOG_DIR", os.path.join(BASE_DIR, "logs"))
LOG_FILE = os.path.join(LOG_DIR, "nanoshell.log")
LOG_LEVEL = os.getenv("NANOSHELL_LOG_LEVEL", "INFO").upper()
WORKERS_DEFAULT = int(os.getenv("NANOSHELL_WORKERS", "1"))

# Константи з вихідної моделі: модулі в ГПа, довжини в нм, навантаження в нН/нм
DEFAULTS = {
    "e1": 784.0,
    "e2": 832.0,
    "g": 424.0,
    "nu12": 0.242,
    "nu21": 0.260,
    "units": "gpa",
    "bond_length": 0.142,
    "eps": 0.194,
    "slenderness": 0.25,
    "load": 0.1,
    "n": 6,
    "m": "3",
    "workers": WORKERS_DEFAULT,
}

DATA_DIR = os.path.join(BASE_DIR, "data")
DEFAULT_CONFIG_FILE = os.path.join(DATA_DIR, "paper.conf")


def load_config_file(path: str) -> dict[str, str]:
    """
    Читає плаский файл `key = value` (коментарі через #).
    Порожні ключі (`key=`) відкидаються, щоб не перекривати дефолти.
    """
    if not os.path.isfile(path):
        raise ConfigError(200, field="config", value=path)
    raw = dotenv_values(path)
    return {k.strip().lower(): v for k, v in raw.items() if v not in (None, "")}


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def dump_config(values: dict, path: str) -> None:
    lines = ["# nanoshell run configuration"]
    for key, value in values.items():
        if value is None:
            continue
        lines.append(f"{key} = {_fmt_value(value)}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
