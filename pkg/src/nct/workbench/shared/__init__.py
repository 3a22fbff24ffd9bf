from .errors import (
    WorkbenchError,
    NotAdmissibleError,
    RelationViolatedError,
    DecompositionInconclusiveError,
    IsoInconclusiveError,
    MinimalityInconclusiveError,
    ApproxNotSurjectiveError,
    NKernelEscapesMError,
    NCokernelEscapesMError,
    RepresentativeEscapesMError,
    EnumerationTooLargeError,
    UniverseTooLargeError,
    NotCoveringError,
    InputError,
)
from .shared import (
    CACHE_SIZE,
    DEFAULT_ENUMERATION_CAP,
    ENUMERATION_CAP_VARIABLE,
    enumeration_size,
    enumerate_vectors,
    projective_points,
    seeded_rng,
    require,
    require_integer,
    read_json,
)
from .CheckReport import CheckReport, Verdict, combine_verdicts
