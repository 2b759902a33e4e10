"""Degree caps and other tunables.

The factorization and splitting caps can be overridden with the
SALEMFORGE_DEGREE_CAP environment variable (a single integer applied to
both).  Internal Trager-style norm factorizations are allowed to exceed the
user-facing cap, since a splitting field within the splitting cap routinely
produces norms of degree splitting_cap * deg(P).
"""

import os

DEFAULT_FACTOR_CAP = 64
DEFAULT_SPLITTING_CAP = 24
DEFAULT_ALGEBRAIC_DEGREE_CAP = 256


def _env_cap() -> int | None:
    raw = os.environ.get("SALEMFORGE_DEGREE_CAP")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def factor_cap() -> int:
    return _env_cap() or DEFAULT_FACTOR_CAP


def splitting_cap() -> int:
    return _env_cap() or DEFAULT_SPLITTING_CAP


def algebraic_degree_cap() -> int:
    return max(_env_cap() or 0, DEFAULT_ALGEBRAIC_DEGREE_CAP)


def internal_factor_cap() -> int:
    # Norm polynomials inside splitting-field construction.
    return max(factor_cap(), splitting_cap() * splitting_cap())
