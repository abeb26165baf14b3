"""Size guards.

Each guard can be overridden through an environment variable, e.g.
``EDGERING_MAX_VERTICES=18``. Exceeding a guard raises
:class:`~edgering.errors.GuardExceeded`; nothing is silently truncated.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import GuardExceeded


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Guards:
    max_vertices: int = 16  # independent sets and every cone operation
    max_search_edges: int = 16  # ear-decomposition search, hamiltonicity
    max_dilate: int = 15  # largest dilate / semigroup degree enumerated

    @classmethod
    def from_env(cls) -> "Guards":
        return cls(
            max_vertices=_env_int("EDGERING_MAX_VERTICES", cls.max_vertices),
            max_search_edges=_env_int("EDGERING_MAX_SEARCH_EDGES", cls.max_search_edges),
            max_dilate=_env_int("EDGERING_MAX_DILATE", cls.max_dilate),
        )


_current = Guards.from_env()


def guards() -> Guards:
    return _current


def set_guards(new: Guards) -> Guards:
    """Install ``new`` as the active guards and return the previous ones."""
    global _current
    old, _current = _current, new
    return old


def check_vertices(d: int, what: str) -> None:
    if d > _current.max_vertices:
        raise GuardExceeded(
            f"{what}: {d} vertices exceeds guard max_vertices={_current.max_vertices}"
        )


def check_search_edges(m: int, what: str) -> None:
    if m > _current.max_search_edges:
        raise GuardExceeded(
            f"{what}: {m} edges exceeds guard max_search_edges={_current.max_search_edges}"
        )


def check_dilate(k: int, what: str) -> None:
    if k > _current.max_dilate:
        raise GuardExceeded(f"{what}: degree {k} exceeds guard max_dilate={_current.max_dilate}")
