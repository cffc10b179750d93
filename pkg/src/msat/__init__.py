"""Exact algorithms, kernelization and instance generators for multistage 2-SAT."""

from msat.errors import CapacityError, FormatError, UsageError
from msat.formula import (
    Literal, MultistageInstance, canonicalize, evaluate, hamming, is_solution, make_clause,
    make_formula, neg, pos, simplify, verify_witness,
)

__version__ = "0.1.0"
