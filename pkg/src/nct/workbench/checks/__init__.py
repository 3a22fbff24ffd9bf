from .Universe import Universe, Completeness
from .cluster_tilting import (
    is_n_cluster_tilting,
    is_nZ,
    is_nz_homological_pair,
    nz_long_exact_check,
)
from .cotorsion import (
    THEOREM,
    RELATIVE,
    is_in_X_exact_n,
    left_perp_of_family,
    n_special_precover,
    is_n_cotorsion,
    basic_properties_audit,
    thm_ext_vanishing_path,
    complete_cotorsion_corollary,
    is_projective_object,
    is_injective_object,
)
from .wakamatsu import is_left_closed_under_n_extensions, wakamatsu_check
from .wide import is_wide, wide_implies_cotorsion_experiment
from .scalars import (
    restrict_scalars,
    restrict_map,
    restrict_subcat,
    inflation_map,
    ext_compare,
    restriction_experiment,
)
