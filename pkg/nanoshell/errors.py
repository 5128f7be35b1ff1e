# nanoshell/errors.py
from __future__ import annotations
from typing import Any, Mapping

# Коди помилок -> UA пояснення (англ. у дужках)
# плейсхолдери: {field} {value} {n} {m} {rho0} {eps} {cond} {mismatch} {deviation} {tol}
ERROR_TIPS: dict[int, str] = {
    # 2xx: конфігурація / вхідні дані
    200: "Поле {field} має некоректне значення {value} (Invalid config field).",
    201: "Некоректна хіральність ({n},{m}): потрібно n ≥ 1 і 0 ≤ m ≤ n (Invalid chirality).",
    202: "Товщина ε={eps} нм не менша за радіус ρo={rho0} нм (Shell thicker than radius).",
    203: "Модулі пружності не додатно визначені: {field} (Moduli not positive definite).",
    204: "Розбіжність E1·ν21 та E2·ν12 {mismatch} перевищує 2% (Interdependence mismatch).",
    205: "Діапазон m '{value}' має формат a..b або ціле число (Bad m range).",
    206: "m={m} поза межами [0, {n}] (m outside [0, n]).",

    # 3xx: розвʼязувач
    300: "Помилка розвʼязувача (Solver failure).",
    301: "Вироджений ведучий елемент при виключенні a1′ (Degenerate elimination pivot).",
    302: "Коефіцієнт c12 дорівнює нулю, a2′ не виражається (c12 vanishes).",
    303: "Коефіцієнт c3 дорівнює нулю, частинний розвʼязок невизначений (c3 vanishes).",
    304: "Коефіцієнт c1 дорівнює нулю, рівняння не четвертого порядку (c1 vanishes).",
    305: "Система крайових умов вироджена, число обумовленості {cond} (Singular rim system).",
    306: "Кратні характеристичні корені (Repeated characteristic roots).",
    307: "Поле має уявну частину {value} (Non-real field).",
    308: "Скінченно-різницева система вироджена, оцінка обумовленості {cond} (Oracle system singular).",
    309: "Рядки проходу не розвʼязано, перший: {value} (Sweep rows failed).",

    # 4xx: перевірка
    400: "Невʼязка рівноваги {value} перевищує допуск {tol} (Residual check failed).",
    401: "Відхилення від скінченно-різницевого розвʼязку {deviation} перевищує {tol} (Oracle deviation).",
}

_DEFAULT_MSG = "Невідома помилка обчислень. Перевірте параметри запуску."


def humanize_error(code: int, payload: Any = None) -> str:
    """
    Повертає людське повідомлення по коду.
    payload (dict) підставляється у плейсхолдери; відсутні лишаються як є.
    """
    msg_tpl = ERROR_TIPS.get(int(code or 0), _DEFAULT_MSG)
    if not isinstance(payload, Mapping):
        return msg_tpl

    # Підстановка плейсхолдерів без падіння
    try:
        return msg_tpl.format_map(_Missing(payload))
    except Exception:
        return msg_tpl


class _Missing(dict):
    def __init__(self, data: Mapping[str, Any]) -> None:
        super().__init__({k: _short(v) for k, v in data.items()})

    def __missing__(self, key: str) -> str:
        return "{" + key + "}"


def _short(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.4g}"
    return str(value)


class NanoshellError(Exception):
    exit_code = 1

    def __init__(self, code: int = 300, **details: Any) -> None:
        self.code = code
        self.details = details
        super().__init__(humanize_error(code, details))


class ConfigError(NanoshellError, ValueError):
    exit_code = 2


class ChiralityError(ConfigError):
    pass


class GeometryError(ConfigError):
    pass


class ModuliError(ConfigError):
    pass


class SolverError(NanoshellError, ArithmeticError):
    exit_code = 3


class VerificationError(NanoshellError):
    exit_code = 4
