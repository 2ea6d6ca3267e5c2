"""Tameness, the Bourbaki ideal, free / nearly free recognition and theorem checks."""

from .bourbaki import BourbakiData, BourbakiNotDivisible, bourbaki_h, bourbaki_ideal, euler_vector
from .freeness import (
    FREE,
    NEARLY_FREE,
    NEITHER,
    Classification,
    InternalInconsistency,
    classify,
    is_free,
    is_nearly_free,
    second_syzygies,
)
from .report import AnalysisConfig, SurfaceReport, classify_surface
from .tameness import (
    KERNEL_EQUALS_IMAGE,
    MINORS_GCD_UNIT,
    NOT_TAME,
    NOT_TAME_TESTED,
    TAME,
    UNDETERMINED,
    Relation,
    TamenessVerdict,
    dependence_relation,
    kernel_vs_image,
    minors_gcd_test,
    tameness,
)
from .theorems import CheckResult, TheoremInputs, verify_theorems

__all__ = [
    "BourbakiData", "BourbakiNotDivisible", "bourbaki_h", "bourbaki_ideal", "euler_vector",
    "FREE", "NEARLY_FREE", "NEITHER", "Classification", "InternalInconsistency", "classify",
    "is_free", "is_nearly_free", "second_syzygies", "AnalysisConfig", "SurfaceReport",
    "classify_surface", "KERNEL_EQUALS_IMAGE", "MINORS_GCD_UNIT", "NOT_TAME", "NOT_TAME_TESTED",
    "TAME", "UNDETERMINED", "Relation", "TamenessVerdict", "dependence_relation",
    "kernel_vs_image", "minors_gcd_test", "tameness", "CheckResult", "TheoremInputs",
    "verify_theorems",
]
