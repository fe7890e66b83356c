"""Enumeration budgets shared by the brute-force oracles."""
from __future__ import annotations

import os

DEFAULT_STATE_BUDGET = 10**8
DEFAULT_STAIR_BUDGET = 10**6
ENV_VAR = "HK_ENUM_BUDGET"


class BudgetExceeded(RuntimeError):
    """An exhaustive computation was refused because it is too large."""


def budget(default: int) -> int:
    """Budget from HK_ENUM_BUDGET if set, else ``default``."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 0:
        raise ValueError(f"{ENV_VAR} must be nonnegative, got {value}")
    return value
