"""The ψ_k sequence of a hypercube permutation and its stability rank."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import ResourceExceeded
from .hyper import HyperPerm


@dataclass(frozen=True)
class RankResult:
    stabilized: bool
    k: int | None
    k_max: int
    witness_level: int
    window_checked: int

    @property
    def status(self) -> str:
        return f"Rank({self.k})" if self.stabilized else f"NotStabilizedWithin({self.k_max})"

    def is_rank(self, k: int) -> bool:
        return self.stabilized and self.k == k

    def as_dict(self) -> dict:
        return {"status": self.status, "k": self.k, "checked_h": self.window_checked,
                "witness_level": self.witness_level}


def _lift(table: np.ndarray, n: int, left: int, right: int) -> np.ndarray:
    """Image table of 1^left ⊗ u ⊗ 1^right as a flat array."""
    size_u = table.size
    lo = n ** right
    hi = np.arange(n ** left, dtype=np.int64)[:, None, None] * (size_u * lo)
    mid = table.astype(np.int64)[None, :, None] * lo
    low = np.arange(lo, dtype=np.int64)[None, None, :]
    return (hi + mid + low).reshape(-1)


class _Psi:
    """Memoized ψ_k tables for one permutation."""

    def __init__(self, u: HyperPerm):
        self.n = u.n
        self.t = u.t
        self.u = np.asarray(u.images, dtype=np.int64)
        self.uinv = np.argsort(self.u)
        self.cache: dict[int, np.ndarray] = {0: self.uinv}

    def __call__(self, k: int) -> np.ndarray:
        if k not in self.cache:
            n = self.n
            factors = [_lift(self.uinv, n, k - i, i) for i in range(k + 1)]
            factors += [_lift(self.u, n, i, k - i) for i in range(1, k + 1)]
            # leftmost factor is applied last
            out = factors[-1]
            for f in reversed(factors[:-1]):
                out = f[out]
            self.cache[k] = out
        return self.cache[k]


def _check_budget(n: int, level: int, budget: int | None):
    budget = config.point_budget() if budget is None else budget
    if n ** level > budget:
        raise ResourceExceeded(f"level {level} needs {n ** level} points, budget is {budget}")


def psi(u: HyperPerm, k: int, budget: int | None = None) -> HyperPerm:
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_budget(u.n, u.t + k, budget)
    table = _Psi(u)(k)
    return HyperPerm.from_images(table.tolist(), u.n, u.t + k, check=False)


def stability_rank(u: HyperPerm, k_max: int = 4, h_window: int = 2,
                   budget: int | None = None) -> RankResult:
    """Least k <= k_max with ψ_{k+h}(u) = ψ_{k-1}(u) ⊗ 1^{h+1} for h in 0..h_window.

    Only a finite window of h is inspected, so Rank(k) is evidence rather
    than proof, and NotStabilizedWithin never certifies instability.
    """
    if k_max < 1 or h_window < 0:
        raise ValueError("need k_max >= 1 and h_window >= 0")
    _check_budget(u.n, u.t + k_max + h_window, budget)
    ps = _Psi(u)
    n = u.n
    level = u.t
    for k in range(1, k_max + 1):
        base = ps(k - 1)
        ok = True
        for h in range(h_window + 1):
            level = u.t + k + h
            if not np.array_equal(ps(k + h), _lift(base, n, 0, h + 1)):
                ok = False
                break
        if ok:
            return RankResult(True, k, k_max, level, h_window)
    return RankResult(False, None, k_max, level, h_window)


def is_rank_one(u: HyperPerm) -> bool:
    """Fast path: rank one at level 2 is self-compatibility."""
    from .compat import compatible
    return compatible(u, u)
