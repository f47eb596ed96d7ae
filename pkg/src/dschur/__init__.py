"""Exact computations with double (factorial) supersymmetric Schur functions
and their realisation through deformed currents on fermionic Fock space."""

from .expand import (
    HWord,
    SchurExpansion,
    classical_schur_expansion,
    hsymbol_evaluate,
    mn_derivative,
    mn_multiply,
    pieri_e_coeff,
    pieri_e_expansion,
    pieri_h_coeff,
    pieri_h_expansion,
    powersum_schur_expansion,
    raising_expansion,
    skew_pieri_coeff,
    skew_pieri_expansion,
)
from .fock import FockVector, KetKey, apply_current, current_entry, ket, psi_apply, psi_star_apply
from .laurent import LaurentSeries, PrecisionError, from_shifted_basis, residue, shifted_power, to_shifted_basis
from .partitions import Partition
from .polyring import Kind, Poly, Var, alpha, hvar, specialize, xvar, yvar
from .symfunc import (
    GENERIC,
    SkewShape,
    SuperContext,
    bialternant,
    classical_super,
    double_e,
    double_h,
    factorial_h,
    powersum_super,
    schur_double_jt,
    schur_double_tableaux,
)

__all__ = [
    "GENERIC",
    "FockVector",
    "HWord",
    "KetKey",
    "Kind",
    "LaurentSeries",
    "Partition",
    "Poly",
    "PrecisionError",
    "SchurExpansion",
    "SkewShape",
    "SuperContext",
    "Var",
    "alpha",
    "apply_current",
    "bialternant",
    "classical_schur_expansion",
    "classical_super",
    "current_entry",
    "double_e",
    "double_h",
    "factorial_h",
    "from_shifted_basis",
    "hsymbol_evaluate",
    "hvar",
    "ket",
    "mn_derivative",
    "mn_multiply",
    "pieri_e_coeff",
    "pieri_e_expansion",
    "pieri_h_coeff",
    "pieri_h_expansion",
    "powersum_schur_expansion",
    "powersum_super",
    "psi_apply",
    "psi_star_apply",
    "raising_expansion",
    "residue",
    "schur_double_jt",
    "schur_double_tableaux",
    "shifted_power",
    "skew_pieri_coeff",
    "skew_pieri_expansion",
    "specialize",
    "to_shifted_basis",
    "xvar",
    "yvar",
]
