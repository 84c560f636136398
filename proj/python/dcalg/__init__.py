"""Exact structure coefficients for double-class algebras and group-algebra
centers of classical group towers (symmetric, hyperoctahedral, their
two-sided pair families, and small invertible-matrix groups).

All values are exact: integers arrive as ``int`` and coefficients as
``fractions.Fraction``.
"""

from ._dcalg import (  # noqa: F401
    bn_type,
    coefficient,
    coset_type,
    cycle_type,
    decompose_product,
    labels,
    pad_to,
    partition_union,
    polyfit,
    selftest_quick,
    strip_ones,
    theorem_coefficient,
    verify_hypotheses,
)

from . import _dcalg as _impl


def z(partition: str) -> int:
    """Centralizer-order factor of a partition given as comma-separated parts."""
    return int(_impl.z(partition))


def group_order(family: str, n: int, q: int = 0) -> int:
    return int(_impl.group_order(family, n, q))


def class_size(family: str, n: int, label: str, q: int = 0) -> int:
    return int(_impl.class_size(family, n, label, q))


__all__ = [
    "bn_type",
    "class_size",
    "coefficient",
    "coset_type",
    "cycle_type",
    "decompose_product",
    "group_order",
    "labels",
    "pad_to",
    "partition_union",
    "polyfit",
    "selftest_quick",
    "strip_ones",
    "theorem_coefficient",
    "verify_hypotheses",
    "z",
]
