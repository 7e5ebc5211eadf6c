"""Dense linear algebra over F_p for small primes p (entries fit in int64)."""

from __future__ import annotations

import numpy as np


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : A x = 0} over F_p, one vector per row."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        factors = A[:, c].copy()
        factors[r] = 0
        A = (A - np.outer(factors, A[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-A[i, f]) % p
    return basis


def hessenberg(A: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper Hessenberg H and V with H = V^-1 A V over F_p."""
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    V = np.eye(n, dtype=np.int64)
    for k in range(n - 2):
        nz = np.nonzero(H[k + 1 :, k])[0]
        if len(nz) == 0:
            continue
        i = k + 1 + nz[0]
        if i != k + 1:
            H[[k + 1, i]] = H[[i, k + 1]]
            H[:, [k + 1, i]] = H[:, [i, k + 1]]
            V[:, [k + 1, i]] = V[:, [i, k + 1]]
        piv_inv = pow(int(H[k + 1, k]), -1, p)
        u = H[k + 2 :, k] * piv_inv % p
        if not u.any():
            continue
        H[k + 2 :] = (H[k + 2 :] - np.outer(u, H[k + 1])) % p
        H[:, k + 1] = (H[:, k + 1] + H[:, k + 2 :] @ u) % p
        V[:, k + 1] = (V[:, k + 1] + V[:, k + 2 :] @ u) % p
    return H, V


def hessenberg_charpoly(H: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (constant term first) of det(xI - H) for upper Hessenberg H."""
    n = H.shape[0]
    polys = [np.array([1], dtype=np.int64)]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = np.zeros(k + 1, dtype=np.int64)
        cur[1:] += prev
        cur[:-1] -= H[k - 1, k - 1] * prev
        prod = 1
        for i in range(1, k):
            prod = prod * int(H[k - i, k - i - 1]) % p
            if prod == 0:
                break
            coef = prod * int(H[k - i - 1, k - 1]) % p
            if coef:
                sub = polys[k - i - 1]
                cur[: len(sub)] -= coef * sub
        polys.append(cur % p)
    return polys[n]


def charpoly(A: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (constant term first) of det(xI - A) over F_p."""
    return hessenberg_charpoly(hessenberg(A, p)[0], p)


def hessenberg_eigenvector(H: np.ndarray, lam: int, p: int) -> np.ndarray | None:
    """Eigenvector of an unreduced upper Hessenberg H by back-substitution.

    Returns None when a subdiagonal entry vanishes.
    """
    n = H.shape[0]
    sub = np.diagonal(H, -1)
    if n > 1 and not sub.all():
        return None
    B = H.copy()
    B[np.arange(n), np.arange(n)] -= lam
    B %= p
    x = np.zeros(n, dtype=np.int64)
    x[n - 1] = 1
    for k in range(n - 1, 0, -1):
        s = int(B[k, k:] @ x[k:]) % p
        x[k - 1] = (-s) * pow(int(B[k, k - 1]), -1, p) % p
    if int(B[0] @ x) % p:
        return None
    return x


def roots(poly: np.ndarray, p: int) -> list[int]:
    """All roots in F_p, found by evaluating at every residue."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in poly[::-1]:
        acc = (acc * xs + int(c)) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def primitive_root_of_unity(order: int, p: int) -> int:
    from sympy import primitive_root

    g = primitive_root(p)
    return pow(g, (p - 1) // order, p)
