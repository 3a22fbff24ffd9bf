from .Module import Module
from .ModuleMap import ModuleMap, identity_map, zero_map, map_from_vector
from .hom import (
    hom_basis,
    hom_dim,
    hom_coordinates,
    combine,
    hom_functor_matrix,
    factor_through,
    factor_before,
    solve_factorization,
)
from .constructions import (
    Factorization,
    DirectSum,
    Square,
    map_factorization,
    kernel,
    cokernel,
    submodule,
    direct_sum,
    block_map,
    column_map,
    row_map,
    pushout,
    pullback,
    splitting_projections,
    radical_bases,
    socle_bases,
)
from .decomposition import (
    Summand,
    decompose,
    is_indecomposable,
    is_isomorphic,
    in_add,
    local_endomorphism_certificate,
)
from .Subcat import Subcat
from .duality import dual_module, dual_map
from .json_conversion import module_from_dict, module_to_dict, load_module, matrix_from_list
