"""Global resource limits.

The degree cap bounds every Buchberger run: computations never silently
truncate, they raise DegreeCapExceededError instead.  The variable cap
bounds ring sizes (joins double the variable count, so it is easy to
blow up by iterating joins).
"""

from __future__ import annotations

import os

DEFAULT_DEGREE_CAP = 48
DEFAULT_VAR_CAP = 16


def degree_cap(override: int | None = None) -> int:
    """Effective degree cap: explicit override, else env, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get("GINT_DEGREE_CAP")
    if env:
        return int(env)
    return DEFAULT_DEGREE_CAP


def var_cap(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("GINT_VAR_CAP")
    if env:
        return int(env)
    return DEFAULT_VAR_CAP
