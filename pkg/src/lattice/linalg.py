"""
Exact integer linear algebra on numpy object arrays.
Diagonal normal form with unimodular transforms, lattice kernels, integral solves.
"""

from typing import Optional, Sequence, Tuple

import numpy as np


def as_int_matrix(rows: Sequence[Sequence[int]]) -> np.ndarray:
    """Integer matrix with arbitrary-precision entries."""
    return np.array([[int(x) for x in row] for row in rows], dtype=object).reshape(len(rows), -1)


def exgcd(a: int, b: int) -> np.ndarray:
    """
    Extended GCD as a row operation.

    Args:
        a: an integer.
        b: an integer.

    Returns:
        A 2x2 integer matrix M of determinant 1 so that M @ [a, b] = [gcd(a, b), 0].
        If a divides b, M[0, 1] is guaranteed to be 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign

    # Euclid on the column [a, b], tracking row operations by augmenting with I.
    M = np.array([[a, 1, 0],
                  [b, 0, 1]], dtype=object)
    M = M[::-1]
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]

    g = M[0, 0]
    M = M[:, 1:]
    M *= [a_sign, b_sign]

    # Fix the determinant using M[0, 0] * a + M[0, 1] * b = g.
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]

    return M


def inv_2x2_det1(M: np.ndarray) -> np.ndarray:
    """Inverse of a 2x2 matrix with determinant 1."""
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=object)


def normal_form(A: np.ndarray) -> Tuple[np.ndarray, ...]:
    """
    Diagonal form of an integer matrix by unimodular row and column operations.

    Not a Smith normal form (no divisibility chain), which kernels and
    integral solves do not need.

    Args:
        A: an integer matrix.

    Returns:
        (S, D, T, Sinv, Tinv) with A == S @ D @ T, D diagonal of A's shape,
        S and T of determinant 1 with the given exact inverses.
    """
    D = np.array(A, dtype=object).copy()
    rows, cols = D.shape
    S, T = np.eye(rows, dtype=object), np.eye(cols, dtype=object)
    Sinv, Tinv = S.copy(), T.copy()

    def clear_row(i: int) -> bool:
        if all(D[i, j] == 0 for j in range(i + 1, cols)):
            return False
        for j in range(i + 1, cols):
            M = exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]].dot(M)
            T[[i, j]] = inv_2x2_det1(M).dot(T[[i, j]])
            Tinv[:, [i, j]] = Tinv[:, [i, j]].dot(M)
        return True

    def clear_col(i: int) -> bool:
        if all(D[j, i] == 0 for j in range(i + 1, rows)):
            return False
        for j in range(i + 1, rows):
            M = exgcd(D[i, i], D[j, i])
            D[[i, j]] = M.dot(D[[i, j]])
            S[:, [i, j]] = S[:, [i, j]].dot(inv_2x2_det1(M))
            Sinv[[i, j]] = M.dot(Sinv[[i, j]])
        return True

    for i in range(min(rows, cols)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass

    return S, D, T, Sinv, Tinv


def _diagonal(D: np.ndarray, length: int) -> list:
    diag = [D[i, i] for i in range(min(D.shape))]
    return diag + [0] * max(0, length - len(diag))


def kernel(A: np.ndarray) -> np.ndarray:
    """
    Integral basis of {x : A @ x = 0}, one basis vector per column.

    Args:
        A: an integer matrix

    Returns:
        Matrix whose columns are a lattice basis of the kernel
    """
    A = np.array(A, dtype=object)
    _, D, _, _, Tinv = normal_form(A)
    diag = _diagonal(D, A.shape[1])
    return Tinv[:, [i for i, d in enumerate(diag) if d == 0]]


def rank(A: np.ndarray) -> int:
    """Rank of an integer matrix."""
    A = np.array(A, dtype=object)
    if A.size == 0:
        return 0
    _, D, _, _, _ = normal_form(A)
    return sum(1 for d in _diagonal(D, 0) if d != 0)


def solve_integer(A: np.ndarray, b: Sequence[int]) -> Optional[np.ndarray]:
    """
    An integer solution of A @ x = b.

    Args:
        A: an integer matrix
        b: right-hand side

    Returns:
        Integer vector x (unique when A has full column rank) or None when
        no integral solution exists
    """
    A = np.array(A, dtype=object)
    b = np.array([int(v) for v in b], dtype=object)
    _, D, _, Sinv, Tinv = normal_form(A)
    y = Sinv.dot(b)
    x = np.zeros(A.shape[1], dtype=object)
    for i in range(A.shape[0]):
        d = D[i, i] if i < min(A.shape) else 0
        if d == 0:
            if y[i] != 0:
                return None
            continue
        if y[i] % d != 0:
            return None
        x[i] = y[i] // d
    return Tinv.dot(x)


def complete_to_basis(row: Sequence[int]) -> np.ndarray:
    """
    Unimodular 3x3 matrix with determinant +1 whose first row is a primitive vector.

    Args:
        row: primitive integer vector

    Returns:
        Integer matrix M with M[0] == row and det(M) == 1

    Raises:
        ValueError: If the vector is not primitive
    """
    A = as_int_matrix([row])
    S, D, T, _, _ = normal_form(A)
    unit = S[0, 0] * D[0, 0]
    if unit not in (1, -1):
        raise ValueError(f"vector {tuple(row)} is not primitive")
    M = T.copy()
    M[0] = M[0] * unit
    if det3(M) < 0:
        M[2] = -M[2]
    return M


def det3(M) -> int:
    """Exact determinant of a 3x3 integer matrix."""
    (a, b, c), (d, e, f), (g, h, i) = [[int(x) for x in row] for row in M]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def inverse_unimodular3(M) -> np.ndarray:
    """
    Exact inverse of a 3x3 integer matrix of determinant ±1.

    Raises:
        ValueError: If the matrix is not unimodular
    """
    d = det3(M)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    m = [[int(x) for x in row] for row in M]
    adj = [[0] * 3 for _ in range(3)]
    for r in range(3):
        for c in range(3):
            minor = [[m[i][j] for j in range(3) if j != c] for i in range(3) if i != r]
            cof = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
            adj[c][r] = cof * (-1) ** (r + c)
    return np.array([[x * d for x in row] for row in adj], dtype=object)


def cross(u: Sequence[int], v: Sequence[int]) -> Tuple[int, int, int]:
    """Cross product of two integer 3-vectors."""
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    """Integer dot product."""
    return sum(a * b for a, b in zip(u, v))


def hermite_rows(rows: Sequence[Sequence[int]]) -> np.ndarray:
    """
    Row-style Hermite normal form of a full-row-rank integer matrix.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot). The result spans the same row lattice and is canonical for it.
    """
    H = np.array([[int(x) for x in row] for row in rows], dtype=object).reshape(len(rows), -1)
    m, n = H.shape
    r = 0
    for col in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i, col] != 0:
                M = exgcd(H[r, col], H[i, col])
                H[[r, i]] = M.dot(H[[r, i]])
        if H[r, col] == 0:
            continue
        if H[r, col] < 0:
            H[r] = -H[r]
        for i in range(r):
            H[i] = H[i] - (H[i, col] // H[r, col]) * H[r]
        r += 1
    return H
