"""Run-time limits and the verification switch."""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace


class LimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Limits:
    max_dim: int = 8
    max_rows: int = 64
    max_assignments: int = 10_000


@dataclass(frozen=True)
class Settings:
    limits: Limits = Limits()
    # re-check LP duality certificates and cached H/V agreement
    verify: bool = os.environ.get("EXACTEF_VERIFY", "") not in ("", "0")


_settings = Settings()


def settings() -> Settings:
    return _settings


def configure(**changes) -> Settings:
    global _settings
    _settings = replace(_settings, **changes)
    return _settings


@contextmanager
def override(**changes):
    global _settings
    saved = _settings
    _settings = replace(_settings, **changes)
    try:
        yield _settings
    finally:
        _settings = saved


def check_size(dim: int, rows: int, what: str) -> None:
    lim = _settings.limits
    if dim > lim.max_dim:
        raise LimitExceeded(f"{what}: ambient dimension {dim} exceeds limit {lim.max_dim}")
    if rows > lim.max_rows:
        raise LimitExceeded(f"{what}: {rows} rows exceed limit {lim.max_rows}")
