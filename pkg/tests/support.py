"""Shared oracles and builders for the test suite.

Everything here is deliberately independent of the library's own kernels:
the four-real multiplication table, power iteration on the Gram matrix,
and the normal-equations route to minimum-norm solutions are the reference
paths that the idempotent/SVD implementations are checked against.
"""

from __future__ import annotations

import numpy as np

from hyplab import BCMatrix, BCVector, Bicomplex


def mul4(a, b):
    """Multiply two four-real tuples with the unit table.

    Units: i^2 = j^2 = -1, k^2 = 1, ij = k, ik = -j, jk = -i, all
    products commuting.
    """
    a1, b1, c1, d1 = a
    a2, b2, c2, d2 = b
    return (
        a1 * a2 - b1 * b2 - c1 * c2 + d1 * d2,
        a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
        a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
        a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
    )


def close4(a, b, tol):
    scale = max(1.0, *(abs(v) for v in a), *(abs(v) for v in b))
    return all(abs(x - y) <= tol * scale for x, y in zip(a, b))


def rel_err_c(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def pi_sigma_max(A: np.ndarray, iters: int = 4000) -> float:
    """Power iteration on the Gram matrix; start vector fixed and dense."""
    A = np.asarray(A, dtype=complex)
    G = A.conj().T @ A if A.shape[0] >= A.shape[1] else A @ A.conj().T
    n = G.shape[0]
    v = np.ones(n, dtype=complex) + 1j * np.linspace(0.25, 1.0, n)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = G @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        lam = nw
    return float(np.sqrt(lam))


def pi_sigma_min(A: np.ndarray, iters: int = 4000) -> float:
    """Smallest singular value via inverse-free shifted power iteration."""
    A = np.asarray(A, dtype=complex)
    G = A.conj().T @ A if A.shape[0] >= A.shape[1] else A @ A.conj().T
    smax2 = pi_sigma_max(A, iters) ** 2
    c = smax2 * 1.0000001 + 1e-30
    B = c * np.eye(G.shape[0]) - G
    mu = pi_sigma_max_psd(B, iters)
    return float(np.sqrt(max(c - mu, 0.0)))


def pi_sigma_max_psd(G: np.ndarray, iters: int = 4000) -> float:
    """Top eigenvalue of a Hermitian PSD matrix (helper for the shift trick)."""
    n = G.shape[0]
    v = np.ones(n, dtype=complex) + 1j * np.linspace(0.5, 1.5, n)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(iters):
        w = G @ v
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        lam = nw
    return float(lam)


def normal_eq_min_norm(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minimum-norm solution of a full-row-rank system via A^H (A A^H)^-1 b."""
    A = np.asarray(A, dtype=complex)
    u = np.linalg.solve(A @ A.conj().T, b)
    return A.conj().T @ u


def random_bc(rng, scale: float = 1.0) -> Bicomplex:
    z = rng.standard_normal(4) * scale
    return Bicomplex(complex(z[0], z[1]), complex(z[2], z[3]))


def random_vec(rng, n: int) -> BCVector:
    return BCVector(
        rng.standard_normal(n) + 1j * rng.standard_normal(n),
        rng.standard_normal(n) + 1j * rng.standard_normal(n),
    )


def random_mat(rng, rows: int, cols: int) -> BCMatrix:
    return BCMatrix(
        rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols)),
        rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols)),
    )


def surjective_mat(rng, rows: int, cols: int, min_sigma: float = 0.3) -> BCMatrix:
    """Random wide matrix regenerated until both components are well away
    from rank deficiency."""
    while True:
        T = random_mat(rng, rows, cols)
        s1 = np.linalg.svd(T.m1, compute_uv=False)
        s2 = np.linalg.svd(T.m2, compute_uv=False)
        if s1[-1] > min_sigma and s2[-1] > min_sigma:
            return T


def bc_to4(z: Bicomplex):
    return z.to_reals()


def bc_from4(t) -> Bicomplex:
    return Bicomplex.from_reals(*t)
