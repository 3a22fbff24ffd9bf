from .PrimeField import PrimeField
from .Mat import Mat, hstack, vstack, block_diag, mulmod
from .elimination import (
    rref,
    rank,
    kernel_basis,
    solve,
    solve_matrix,
    image_basis,
    complement_basis,
    left_inverse,
    right_inverse,
    is_invertible,
    inverse,
    coordinates,
    in_column_space,
    flatten,
)
from .polynomials import charpoly, factor_mod_p, evaluate, poly_power
