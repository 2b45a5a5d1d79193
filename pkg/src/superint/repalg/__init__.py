"""Algebraic spectrum machinery: cubic algebras, unirreps, degeneracies and reports."""
from .cubic import CASIMIR_TERMS, CubicAlgebra, casimir_coefficients, casimir_defect, jacobi_defect
from .degeneracy import (
    KSTEP_UNIT,
    Q18_UNIT,
    Multiplet,
    MultipletRow,
    algebraic_spectrum,
    degeneracy_bruteforce,
    degeneracy_formula,
    encode_level,
    formula_report,
    kstep_to_q18,
    ladder_degeneracy,
    ladder_spectrum,
    multiplet_table,
    multiplets_at,
    numerical_report,
    q18_level,
    q_ko,
)
from .reports import DiffReport, SpectrumReport, SpectrumRow, compare_reports, reindex, restrict
from .unirreps import LinearForm, StructureFunctionFamily, UnirrepRow, enumerate_unirreps, q18_families

__all__ = [
    "CASIMIR_TERMS",
    "CubicAlgebra",
    "DiffReport",
    "KSTEP_UNIT",
    "LinearForm",
    "Multiplet",
    "MultipletRow",
    "Q18_UNIT",
    "SpectrumReport",
    "SpectrumRow",
    "StructureFunctionFamily",
    "UnirrepRow",
    "algebraic_spectrum",
    "casimir_coefficients",
    "casimir_defect",
    "compare_reports",
    "degeneracy_bruteforce",
    "degeneracy_formula",
    "encode_level",
    "enumerate_unirreps",
    "formula_report",
    "jacobi_defect",
    "kstep_to_q18",
    "ladder_degeneracy",
    "ladder_spectrum",
    "multiplet_table",
    "multiplets_at",
    "numerical_report",
    "q18_families",
    "q18_level",
    "q_ko",
    "reindex",
    "restrict",
]
