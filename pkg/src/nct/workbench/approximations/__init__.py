from .NSequence import NSequence, Tail, direct_sum_sequences
from .ApproxResult import ApproxResult
from .approx import (
    right_approx,
    left_approx,
    right_minimalize,
    left_minimalize,
    minimal_right_approx,
    minimal_left_approx,
    contains_projectives,
)
from .n_exact import (
    PushoutDiagram,
    n_kernel_in,
    n_cokernel_in,
    is_n_exact,
    is_n_kernel,
    is_n_cokernel,
    is_contractible,
    complete_pushout,
    n_pushout,
)
from .yoneda import (
    lift_generators,
    class_of_sequence,
    class_coordinates,
    ext_class_representative,
    is_in_radical,
    radical_witness,
    almost_minimalize,
    is_almost_minimal,
)
from .json_conversion import (
    map_from_dict,
    map_to_dict,
    nsequence_from_dict,
    nsequence_to_dict,
    load_nsequence,
)
