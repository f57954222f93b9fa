"""Named catalog of the bundled finite quantum group examples.

Seven examples: four commutative function algebras (cyclic groups and S3),
two cocommutative group algebras, and the 8-dimensional example that is
neither. Construction is cached per process; every entry re-verifies its
axioms when first built.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .core import (
    FiniteQuantumGroup,
    build_function_algebra,
    build_group_algebra,
    build_kac_paljutkin,
    cyclic_table,
    symmetric_table_s3,
)
from .errors import UnknownExample

__all__ = ["EXAMPLE_NAMES", "get_example", "list_examples", "example_summary"]


EXAMPLE_NAMES = (
    "z2-function",
    "z3-function",
    "z4-function",
    "s3-function",
    "z2-group",
    "s3-group",
    "kac-paljutkin",
)


@lru_cache(maxsize=None)
def get_example(name: str) -> FiniteQuantumGroup:
    """Build (once per process) the named example quantum group."""
    if name == "z2-function":
        return build_function_algebra(cyclic_table(2), name=name)
    if name == "z3-function":
        return build_function_algebra(cyclic_table(3), name=name)
    if name == "z4-function":
        return build_function_algebra(cyclic_table(4), name=name)
    if name == "s3-function":
        return build_function_algebra(symmetric_table_s3(), name=name)
    if name == "z2-group":
        return build_group_algebra(cyclic_table(2), name=name)
    if name == "s3-group":
        return build_group_algebra(symmetric_table_s3(), name=name)
    if name == "kac-paljutkin":
        return build_kac_paljutkin()
    raise UnknownExample(f"no example named {name!r}; known: {', '.join(EXAMPLE_NAMES)}")


def is_commutative(g: FiniteQuantumGroup, tol: float = 1e-12) -> bool:
    return float(np.max(np.abs(g.mult - g.mult.transpose(1, 0, 2)))) <= tol


def is_cocommutative(g: FiniteQuantumGroup, tol: float = 1e-12) -> bool:
    c3 = g.comult3
    return float(np.max(np.abs(c3 - c3.transpose(1, 0, 2)))) <= tol


def example_summary(name: str) -> dict:
    g = get_example(name)
    return {
        "name": name,
        "dim": g.dim,
        "commutative": is_commutative(g),
        "cocommutative": is_cocommutative(g),
    }


def list_examples() -> list:
    """Summaries for every catalog entry, in catalog order."""
    return [example_summary(name) for name in EXAMPLE_NAMES]
