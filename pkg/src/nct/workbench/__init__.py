from .linalg import PrimeField, Mat
from .algebra import Quiver, Relation, Algebra, build_algebra, quotient_algebra, projective_modules, injective_modules
from .modules import Module, ModuleMap, Subcat, decompose, is_isomorphic, in_add
from .homology import ext_dim, ext_group, min_projective_resolution, syzygy, cosyzygy
from .approximations import (
    NSequence,
    right_approx,
    left_approx,
    minimal_right_approx,
    minimal_left_approx,
    n_kernel_in,
    n_cokernel_in,
    is_n_exact,
)
from .checks import (
    Universe,
    Completeness,
    is_n_cluster_tilting,
    is_nZ,
    is_n_cotorsion,
    n_special_precover,
    wakamatsu_check,
    is_wide,
)
from .catalog import NakayamaSpec, nakayama_universe, semisimple_universe, cyclic_nakayama_universe
from .shared import CheckReport, Verdict, WorkbenchError

__version__ = "0.1.0.dev0"
