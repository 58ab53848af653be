"""Exact symbolic computation of distinguished elements of U(gl(n)).

Everything is computed over the rationals in PBW normal form and
cross-checked against the polynomial-differential-operator model of the
gl(n) action on C[M_{n,d}].
"""

from .elements import (
    capelli_bitableau,
    capelli_determinant,
    capelli_immanant,
    column_capelli,
    double_young_capelli,
    koszul_inverse,
    koszul_map,
    quantum_immanant,
    schur_element,
    schur_element_dyc,
    standard_capelli_expansion,
    young_capelli,
    young_capelli_basis,
)
from .enveloping import UglElement
from .polynomials import MPoly, StdExpansion, bitableau, right_symmetrized, straighten
from .tableaux import Tableau

__all__ = [
    "MPoly",
    "StdExpansion",
    "Tableau",
    "UglElement",
    "bitableau",
    "capelli_bitableau",
    "capelli_determinant",
    "capelli_immanant",
    "column_capelli",
    "double_young_capelli",
    "koszul_inverse",
    "koszul_map",
    "quantum_immanant",
    "right_symmetrized",
    "schur_element",
    "schur_element_dyc",
    "standard_capelli_expansion",
    "straighten",
    "young_capelli",
    "young_capelli_basis",
]

__version__ = "0.1.0"
