from .Quiver import Arrow, Path, Quiver
from .Algebra import Algebra, Relation
from .build import (
    build_algebra,
    opposite_algebra,
    quotient_algebra,
    identity_quotient,
    QuotientMap,
    projective_modules,
    injective_modules,
    regular_module,
)
from .json_conversion import algebra_from_dict, algebra_to_dict, load_algebra, relations_from_list
