from .Resolution import Resolution
from .ExtLadder import ExtLadder
from .ExtGroup import ExtGroup
from .resolutions import (
    projective_sum,
    injective_sum,
    projective_labels,
    generator_position,
    map_from_projective,
    map_to_injective,
    top_generators,
    projective_cover,
    injective_envelope,
    min_projective_resolution,
    min_injective_coresolution,
    syzygy,
    cosyzygy,
)
from .ext import (
    cochain_differential,
    ext_dim,
    ext_group,
    ext_induced_map,
    ext_dim_by_coresolution,
    ext_ladder,
    is_ext_orthogonal,
)
