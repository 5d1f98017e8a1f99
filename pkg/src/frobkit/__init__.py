"""frobkit: Frobenius numbers, knapsack/3DM deciders and the reductions between them."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    BoundsReport,
    IntSet,
    ResidueTable,
    bounds,
    frobenius,
    frobenius_binary_search,
    frobenius_bruteforce,
    frobenius_closed_form_2,
    frobenius_nijenhuis,
    gcd_set,
    is_representable,
    residue_table,
)
from .errors import ContractError, DomainError, FrobkitError, RadixOverflowError, ResourceError  # noqa: E402

__all__ = [
    "BoundsReport",
    "ContractError",
    "DomainError",
    "FrobkitError",
    "IntSet",
    "RadixOverflowError",
    "ResidueTable",
    "ResourceError",
    "bounds",
    "frobenius",
    "frobenius_binary_search",
    "frobenius_bruteforce",
    "frobenius_closed_form_2",
    "frobenius_nijenhuis",
    "gcd_set",
    "is_representable",
    "residue_table",
]
