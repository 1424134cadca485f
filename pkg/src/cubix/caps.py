"""Work caps for brute-force routines, overridable through CUBIX_CAP."""

from __future__ import annotations

import os

DEFAULT_CAP = 5_000_000


class CapExceeded(ValueError):
    pass


def work_cap() -> int:
    raw = os.environ.get("CUBIX_CAP")
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CUBIX_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("CUBIX_CAP must be positive")
    return cap


def check_work(amount: int, what: str) -> None:
    cap = work_cap()
    if amount > cap:
        raise CapExceeded(f"{what}: estimated work {amount} exceeds cap {cap} (set CUBIX_CAP to raise it)")
