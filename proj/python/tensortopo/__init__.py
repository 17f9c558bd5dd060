"""Sheaf representation checks for finite strict monoidal categories."""

import json

from ._tensortopo import (
    Category,
    TensorTopoError,
    boolean,
    chain,
    load,
    loads,
    monoid,
    quantale,
    run,
    semilattice,
    topology,
)
from . import _tensortopo

__all__ = [
    "Category",
    "TensorTopoError",
    "boolean",
    "chain",
    "complete",
    "load",
    "loads",
    "monoid",
    "quantale",
    "represent",
    "run",
    "semilattice",
    "topology",
    "zi",
]


def zi(category, budget=1_000_000):
    """Central idempotent classes with their order and meet tables."""
    return json.loads(_tensortopo._zi(category, budget))


def represent(category, jobs=1):
    """Full sheaf representation report, as the CLI's JSON."""
    return json.loads(_tensortopo._represent(category, jobs))


def complete(category, budget=10_000):
    """Summary of the free completion D[C]."""
    return json.loads(_tensortopo._complete(category, budget))
