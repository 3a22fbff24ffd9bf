from __future__ import annotations

from sympy import Poly, symbols
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from .Mat import Mat

_x = symbols("x")


def charpoly(A: Mat) -> list[int]:
    """Characteristic polynomial of a square matrix, highest degree first

    Args:
      A: Mat: A square matrix

    Returns:
      list[int]: The monic coefficients reduced mod p
    """
    if not A.is_square():
        raise ValueError(f"characteristic polynomial needs a square matrix, got {A.shape}")
    n = A.rows
    if n == 0:
        return [1]
    domain = GF(A.p)
    dm = DomainMatrix([[domain(int(v)) for v in row] for row in A.array], (n, n), domain)
    return [int(domain.to_sympy(c)) % A.p for c in dm.charpoly()]


def factor_mod_p(coefficients: list[int], p: int) -> list[tuple[list[int], int]]:
    """Factor a monic polynomial over GF(p) into irreducible factors

    Args:
      coefficients: list[int]: Coefficients, highest degree first
      p: int: The prime

    Returns:
      list[tuple[list[int], int]]: The monic irreducible factors with multiplicities,
        sorted by degree then coefficients
    """
    if len(coefficients) <= 1:
        return []
    poly = Poly(coefficients, _x, modulus=p)
    _, factors = poly.factor_list()
    result = []
    for factor, multiplicity in factors:
        coeffs = [int(c) % p for c in factor.all_coeffs()]
        lead_inv = pow(coeffs[0], -1, p)
        result.append(([(c * lead_inv) % p for c in coeffs], int(multiplicity)))
    result.sort(key=lambda item: (len(item[0]), item[0]))
    return result


def evaluate(coefficients: list[int], A: Mat) -> Mat:
    """Evaluate a polynomial at a square matrix by Horner's rule"""
    result = Mat.zeros(A.field, A.rows, A.cols)
    eye = Mat.identity(A.field, A.rows)
    for c in coefficients:
        result = result @ A + eye * c
    return result


def poly_power(coefficients: list[int], k: int, p: int) -> list[int]:
    """coefficients raised to the k-th power over GF(p)"""
    poly = Poly(coefficients, _x, modulus=p) ** k
    return [int(c) % p for c in poly.all_coeffs()]
