from __future__ import annotations

import numpy as np

from .Mat import Mat, hstack


def _rref_array(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row reduce a copy of a over GF(p), pivoting on the first nonzero entry"""
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        column = a[:, c].copy()
        column[r] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            a[targets] = (a[targets] - np.outer(column[targets], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(A: Mat) -> tuple[Mat, int, tuple[int, ...]]:
    """Reduced row echelon form of A

    Args:
      A: Mat: The matrix

    Returns:
      tuple[Mat, int, tuple[int, ...]]: The reduced matrix, the rank and the pivot columns
    """
    reduced, pivots = _rref_array(A.array, A.p)
    return Mat(A.field, reduced), len(pivots), tuple(pivots)


def rank(A: Mat) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    return len(_rref_array(A.array, A.p)[1])


def kernel_basis(A: Mat) -> Mat:
    """A basis of the right null space of A, one basis vector per column

    The basis vector for a free column f has a 1 in position f, zeros in the
    other free positions, and is ordered by f.

    Args:
      A: Mat: The matrix

    Returns:
      Mat: A matrix K with A @ K = 0 and A.cols - rank(A) columns
    """
    p = A.p
    reduced, pivots = _rref_array(A.array, p)
    pivot_set = set(pivots)
    free = [c for c in range(A.cols) if c not in pivot_set]
    basis = np.zeros((A.cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, c in enumerate(pivots):
            basis[c, j] = (-reduced[i, f]) % p
    return Mat(A.field, basis)


def solve_matrix(A: Mat, B: Mat) -> Mat | None:
    """Solve A @ X = B, setting every free variable to 0

    Args:
      A: Mat: The coefficient matrix
      B: Mat: The right hand sides, one per column

    Returns:
      Mat | None: The solution X, or None if some column is inconsistent

    Raises:
      ValueError: If A and B have different row counts
    """
    if A.rows != B.rows:
        raise ValueError(f"cannot solve {A.shape} system against {B.shape} right hand side")
    n = A.cols
    augmented = np.hstack([A.array, B.array])
    reduced, pivots = _rref_array(augmented, A.p)
    if pivots and pivots[-1] >= n:
        return None
    solution = np.zeros((n, B.cols), dtype=np.int64)
    for i, c in enumerate(pivots):
        solution[c] = reduced[i, n:]
    return Mat(A.field, solution)


def solve(A: Mat, b: Mat) -> Mat | None:
    """Solve A @ x = b for a single column b

    Returns:
      Mat | None: The column x with free variables 0, or None if inconsistent
    """
    if b.cols != 1:
        raise ValueError(f"right hand side must be a column, got shape {b.shape}")
    return solve_matrix(A, b)


def image_basis(A: Mat) -> Mat:
    """The pivot columns of A, a basis of its column space made of columns of A"""
    if A.rows == 0 or A.cols == 0:
        return Mat.zeros(A.field, A.rows, 0)
    _, pivots = _rref_array(A.array, A.p)
    return A.take_columns(pivots)


def complement_basis(S: Mat) -> Mat:
    """Standard basis vectors completing the columns of S to a basis of the ambient space"""
    ambient = S.rows
    _, pivots = _rref_array(np.hstack([S.array, np.eye(ambient, dtype=np.int64)]), S.p)
    extra = [c - S.cols for c in pivots if c >= S.cols]
    return Mat.identity(S.field, ambient).take_columns(extra)


def left_inverse(A: Mat) -> Mat:
    """Some L with L @ A = 1; A must have independent columns"""
    solution = solve_matrix(A.T, Mat.identity(A.field, A.cols))
    if solution is None:
        raise ValueError(f"matrix of shape {A.shape} has no left inverse")
    return solution.T


def right_inverse(A: Mat) -> Mat:
    """Some R with A @ R = 1; A must have full row rank"""
    solution = solve_matrix(A, Mat.identity(A.field, A.rows))
    if solution is None:
        raise ValueError(f"matrix of shape {A.shape} has no right inverse")
    return solution


def is_invertible(A: Mat) -> bool:
    return A.is_square() and rank(A) == A.rows


def inverse(A: Mat) -> Mat:
    if not A.is_square():
        raise ValueError(f"only square matrices are invertible, got {A.shape}")
    solution = solve_matrix(A, Mat.identity(A.field, A.rows))
    if solution is None:
        raise ValueError("matrix is singular")
    return solution


def coordinates(basis: Mat, vectors: Mat) -> Mat | None:
    """Coordinates of the columns of vectors in the (independent) columns of basis"""
    return solve_matrix(basis, vectors)


def in_column_space(A: Mat, vectors: Mat) -> bool:
    if vectors.cols == 0:
        return True
    return rank(hstack(A.field, [A, vectors], A.rows)) == rank(A)


def flatten(mats: list[Mat]) -> np.ndarray:
    """Concatenate the row-major entries of several matrices into one vector"""
    if not mats:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate([m.array.ravel() for m in mats])
