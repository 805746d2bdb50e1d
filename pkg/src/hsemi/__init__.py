"""Finite semigroups modulo Green's relation H.

Green's relations, group inverses, inverses modulo H and inverses along an
element; membership tests for inverse, completely inverse, H-orthodox,
H-inverse-closed and related classes; idempotent-separating congruences;
exhaustive enumeration of small semigroups; and an executable registry of the
structural claims relating these notions.
"""
from .classes import ClassificationReport, classify
from .core import ElementSet, FiniteSemigroup, adjoin_identity, from_table, idempotents, opposite
from .green import GreenData, compute_green
from .verify import TheoremReport, verify, verify_all

__all__ = [
    "ClassificationReport",
    "ElementSet",
    "FiniteSemigroup",
    "GreenData",
    "TheoremReport",
    "adjoin_identity",
    "classify",
    "compute_green",
    "from_table",
    "idempotents",
    "opposite",
    "verify",
    "verify_all",
]
