"""Groebner bases of graded ideals and submodules of S^r, syzygies and saturation."""

from .engine import GBEngine, groebner_packed
from .modules import (
    GradedIdeal,
    GradedSubmodule,
    SyzVector,
    groebner,
    module_membership,
    normal_form,
    syzygy_generators,
)
from .orders import TermOrder, grevlex
from .minimal import minimal_generators
from .saturation import (
    colon_var_elim,
    colon_var_grevlex,
    ideals_equal,
    intersect,
    saturate_max_ideal,
    saturate_wrt_variable,
)

__all__ = [
    "GBEngine", "groebner_packed", "GradedIdeal", "GradedSubmodule", "SyzVector",
    "groebner", "module_membership", "normal_form", "syzygy_generators", "TermOrder",
    "grevlex", "minimal_generators", "colon_var_elim", "colon_var_grevlex", "ideals_equal",
    "intersect", "saturate_max_ideal", "saturate_wrt_variable",
]
