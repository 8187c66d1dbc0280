"""Budgets shared by the heavier computations; CW_BUDGET overrides them."""
from __future__ import annotations

import os

DEFAULT_POINT_BUDGET = 4 ** 8
DEFAULT_NODE_BUDGET = 10 ** 7


def _env_budget() -> int | None:
    raw = os.environ.get("CW_BUDGET")
    if not raw:
        return None
    try:
        return int(float(raw))
    except ValueError:
        return None


def point_budget() -> int:
    return _env_budget() or DEFAULT_POINT_BUDGET


def node_budget() -> int:
    return _env_budget() or DEFAULT_NODE_BUDGET
