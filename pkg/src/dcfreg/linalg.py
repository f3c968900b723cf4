"""Small dense kernel for the (optionally ridge-augmented) normal equations.

Matrices and vectors are plain float64 numpy arrays. Only what the
regression code needs lives here: Gram products and a Cholesky solve.
"""

from __future__ import annotations

import numpy as np

from .errors import AsymmetricMatrixError, DimensionError, SingularSystemError

#: Pivots below ``PIVOT_RTOL * max|diag(A)|`` are treated as singular.
PIVOT_RTOL = 1e-12


def as_matrix(a) -> np.ndarray:
    m = np.array(a, dtype=float)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    return m


def as_vector(v) -> np.ndarray:
    x = np.array(v, dtype=float)
    if x.ndim != 1 or x.size < 1:
        raise DimensionError(f"expected a non-empty 1-D vector, got shape {x.shape}")
    return x


def gram_products(X, y) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(X.T @ X, X.T @ y)``.

    Only the upper triangle of the Gram matrix is computed; the lower
    triangle is a copy, so the result is bitwise symmetric.
    """
    X = as_matrix(X)
    y = as_vector(y)
    if X.shape[0] != y.size:
        raise DimensionError(f"X has {X.shape[0]} rows but y has length {y.size}")
    cols = X.shape[1]
    G = np.empty((cols, cols))
    for i in range(cols):
        for j in range(i, cols):
            G[i, j] = G[j, i] = float(np.dot(X[:, i], X[:, j]))
    return G, X.T @ y


def cholesky(A) -> np.ndarray:
    """Lower-triangular ``L`` with ``L @ L.T == A`` for SPD ``A``.

    Raises
    ------
    DimensionError
        If ``A`` is not square.
    AsymmetricMatrixError
        If ``A`` is not symmetric.
    SingularSystemError
        If a pivot falls below the relative tolerance (singular or indefinite system).
    """
    A = as_matrix(A)
    n, m = A.shape
    if n != m:
        raise DimensionError(f"matrix must be square, got {n}x{m}")
    if not np.array_equal(A, A.T):
        scale = max(float(np.max(np.abs(A))), 1.0)
        if np.max(np.abs(A - A.T)) > 1e-12 * scale:
            raise AsymmetricMatrixError("matrix is not symmetric")
    floor = PIVOT_RTOL * float(np.max(np.abs(np.diag(A))))
    L = np.zeros_like(A)
    for j in range(n):
        pivot = A[j, j] - float(np.dot(L[j, :j], L[j, :j]))
        if not pivot > floor:
            raise SingularSystemError(
                f"non-positive pivot {pivot:.3g} at index {j}: system is singular or indefinite"
            )
        L[j, j] = np.sqrt(pivot)
        for i in range(j + 1, n):
            L[i, j] = (A[i, j] - float(np.dot(L[i, :j], L[j, :j]))) / L[j, j]
    return L


def solve_spd(A, b) -> np.ndarray:
    """Solve ``A x = b`` for symmetric positive definite ``A``."""
    L = cholesky(A)
    b = as_vector(b)
    n = L.shape[0]
    if b.size != n:
        raise DimensionError(f"A is {n}x{n} but b has length {b.size}")
    z = np.empty(n)
    for i in range(n):
        z[i] = (b[i] - float(np.dot(L[i, :i], z[:i]))) / L[i, i]
    x = np.empty(n)
    for i in range(n - 1, -1, -1):
        x[i] = (z[i] - float(np.dot(L[i + 1 :, i], x[i + 1 :]))) / L[i, i]
    return x
