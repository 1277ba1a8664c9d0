"""Vertex-count caps for operations that enumerate or materialize a graph."""

import os

from aoglab.errors import InvalidInputError, SizeGuardError

DEFAULT_MAX_VERTICES = 2**20
CHROMATIC_ORACLE_MAX = 64
DOMINATION_ORACLE_MAX = 32

ENV_VAR = "AOGLAB_MAX_VERTICES"


def max_vertices() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInputError(f"{ENV_VAR} must be positive, got {value}")
    return value


def check_size(count: int, cap: int | None = None, what: str = "graph") -> None:
    """Raise SizeGuardError if ``count`` exceeds ``cap``.

    ``cap=None`` means the process-wide default (env override honoured);
    a negative cap disables the guard entirely.
    """
    if cap is None:
        cap = max_vertices()
    if cap >= 0 and count > cap:
        raise SizeGuardError(f"{what} has {count} vertices, above the cap of {cap}")
