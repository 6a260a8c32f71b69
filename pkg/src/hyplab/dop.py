"""Bicomplex linear operators as componentwise complex matrices.

An operator T on BC^n is the pair (m1, m2) acting as m1 on the e1 part and
m2 on the e2 part.  Because the hyperbolic norm and the equation Tx = y
both decouple over the idempotents, every quantity here reduces to two
ordinary complex matrix computations:

  * operator norm      ->  largest singular value per component
  * open-mapping bound ->  reciprocal smallest singular value per component
  * quotient value q(y) -> norm of the per-component minimum-norm solution

The singular-value kernel defaults to a full LAPACK decomposition; a
power-iteration kernel is available for callers that prefer an iterative
route.  The contract is the tolerance, not the method.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dmodule import BCVector, DNormConfig, vec_dnorm
from .errors import (
    DimensionMismatch,
    InvalidInput,
    NoConvergence,
    NotInRange,
    NotSurjective,
    UnsupportedNorm,
)
from .hyperscalar import DPlus

#: Singular values above RANK_TOL * sigma_max count as nonzero.
RANK_TOL = 1e-10

FULL_DECOMPOSITION = "full-decomposition"
POWER_ITERATION = "power-iteration"

_POWER_SEED = 0xC0FFEE
_POWER_MAX_ITER = 20000


def _as_matrix_component(values, *, what: str) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != 2:
        raise InvalidInput(f"{what} must be two-dimensional, got shape {arr.shape}")
    if arr.size < 1 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InvalidInput(f"{what} must be nonempty")
    if not np.isfinite(arr).all():
        raise InvalidInput(f"{what} contains non-finite entries")
    return arr


class BCMatrix:
    """BC-linear operator held as a pair of complex matrices of equal shape."""

    __slots__ = ("m1", "m2")

    def __init__(self, m1, m2):
        m1 = _as_matrix_component(m1, what="e1 component")
        m2 = _as_matrix_component(m2, what="e2 component")
        if m1.shape != m2.shape:
            raise DimensionMismatch(f"component shapes differ: {m1.shape} vs {m2.shape}")
        m1.setflags(write=False)
        m2.setflags(write=False)
        object.__setattr__(self, "m1", m1)
        object.__setattr__(self, "m2", m2)

    @property
    def rows(self) -> int:
        return self.m1.shape[0]

    @property
    def cols(self) -> int:
        return self.m1.shape[1]

    @classmethod
    def identity(cls, n: int) -> "BCMatrix":
        eye = np.eye(n, dtype=complex)
        return cls(eye, eye)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BCMatrix":
        return cls(np.zeros((rows, cols), complex), np.zeros((rows, cols), complex))

    def __repr__(self) -> str:
        return f"BCMatrix(rows={self.rows}, cols={self.cols})"


def mat_apply(T: BCMatrix, x: BCVector) -> BCVector:
    """Apply the operator: components (m1 @ v1, m2 @ v2)."""
    if T.cols != x.dim:
        raise DimensionMismatch(f"operator has {T.cols} columns, vector has dim {x.dim}")
    return BCVector(T.m1 @ x.v1, T.m2 @ x.v2)


def _power_rng() -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=_POWER_SEED))


def _power_top_eig(G: np.ndarray, tol_abs: float, max_iter: int, rng) -> tuple[float, int]:
    """Largest eigenvalue of a Hermitian PSD matrix by power iteration.

    Stops when successive estimates differ by <= tol_abs.
    """
    n = G.shape[0]
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    lam = 0.0
    for it in range(1, max_iter + 1):
        w = G @ v
        nw = float(np.linalg.norm(w))
        if nw == 0.0:
            return 0.0, it
        v = w / nw
        if abs(nw - lam) <= tol_abs:
            return nw, it
        lam = nw
    raise NoConvergence(f"power iteration did not settle in {max_iter} iterations", max_iter)


def _power_extremes(A: np.ndarray, tol: float, max_iter: int) -> tuple[float, float, int]:
    """(sigma_max, sigma_min, iterations) via plain and shifted power iteration.

    Near-singular smallest values are only sqrt(tol)-accurate on this route;
    the direct kernel is the one to use for rank decisions.
    """
    rng = _power_rng()
    if A.shape[0] <= A.shape[1]:
        G = A @ A.conj().T
    else:
        G = A.conj().T @ A
    scale = float(np.linalg.norm(G, ord="fro"))
    if scale == 0.0:
        return 0.0, 0.0, 1
    tol_abs = max(2.0 * tol * scale, 1e-30)
    lam_max, it1 = _power_top_eig(G, tol_abs, max_iter, rng)
    # shift so the smallest eigenvalue of G becomes the largest of c*I - G
    c = lam_max * (1.0 + 16.0 * tol) + tol_abs
    mu_max, it2 = _power_top_eig(c * np.eye(G.shape[0]) - G, tol_abs, max_iter, rng)
    sigma_max = float(np.sqrt(max(lam_max, 0.0)))
    sigma_min = float(np.sqrt(max(c - mu_max, 0.0)))
    return sigma_max, min(sigma_min, sigma_max), it1 + it2


def _sigma_extremes_impl(
    A: np.ndarray, tol: float, method: str, max_iter: int
) -> tuple[float, float, int]:
    if tol <= 0:
        raise InvalidInput(f"tol must be positive, got {tol}")
    A = _as_matrix_component(A, what="matrix")
    if method == FULL_DECOMPOSITION:
        try:
            s = np.linalg.svd(A, compute_uv=False)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(f"SVD kernel failed: {exc}", 0) from exc
        return float(s[0]), float(s[-1]), 0
    if method == POWER_ITERATION:
        return _power_extremes(A, tol, max_iter)
    raise InvalidInput(f"unknown kernel method {method!r}")


def sigma_extremes(
    A,
    tol: float = 1e-10,
    method: str = FULL_DECOMPOSITION,
    max_iter: int = _POWER_MAX_ITER,
) -> tuple[float, float]:
    """Largest and smallest singular values of a complex matrix.

    The smallest is taken over the full rectangular spectrum of
    min(rows, cols) values, so it is 0 exactly when the matrix is
    rank-deficient in that sense.
    """
    smax, smin, _ = _sigma_extremes_impl(np.asarray(A, dtype=complex), tol, method, max_iter)
    return smax, smin


@dataclass
class OperatorNormReport:
    """Operator D-norm together with how it was computed."""

    M: DPlus
    sigma_max: tuple[float, float]
    method: str
    iterations: int
    tol: float

    def to_json_dict(self) -> dict:
        return {
            "M": [self.M.a1, self.M.a2],
            "sigma_max": [self.sigma_max[0], self.sigma_max[1]],
            "method": self.method,
            "iterations": self.iterations,
            "tol": self.tol,
        }


def op_dnorm(
    T: BCMatrix,
    tol: float = 1e-10,
    method: str = FULL_DECOMPOSITION,
    cfg: DNormConfig = DNormConfig(),
) -> OperatorNormReport:
    """Least M with ||Tx||_D <= M ||x||_D componentwise: top singular values.

    Only the l2 component norm is supported; each component of M is
    attained by embedding that component's top right singular vector.
    """
    if cfg.component_norm != "l2":
        raise UnsupportedNorm(f"operator norm requires the l2 component norm, got {cfg.component_norm}")
    s1, _, it1 = _sigma_extremes_impl(T.m1, tol, method, _POWER_MAX_ITER)
    s2, _, it2 = _sigma_extremes_impl(T.m2, tol, method, _POWER_MAX_ITER)
    return OperatorNormReport(
        M=DPlus(s1, s2),
        sigma_max=(s1, s2),
        method=method,
        iterations=it1 + it2,
        tol=tol,
    )


@dataclass
class SolveReport:
    """Minimum-norm solve of Tx = y.

    ``qy`` is ||x||_D of the returned solution, which realizes the quotient
    value inf{ ||x||_D : Tx = y } componentwise.
    """

    x: BCVector
    qy: DPlus
    residual: DPlus

    def to_json_dict(self) -> dict:
        return {
            "x": {
                "dim": self.x.dim,
                "e1": [[z.real, z.imag] for z in self.x.v1],
                "e2": [[z.real, z.imag] for z in self.x.v2],
            },
            "qy": [self.qy.a1, self.qy.a2],
            "residual": [self.residual.a1, self.residual.a2],
        }


def min_norm_solve(T: BCMatrix, y: BCVector, tol: float = 1e-10) -> SolveReport:
    """Per-component minimum-norm least-squares solution of Tx = y.

    The equation and the norm both decouple over the idempotents, so the
    bicomplex minimum-norm solution is the pair of complex ones.  Raises
    ``NotInRange`` when the least-squares residual exceeds ``tol`` in
    either component.
    """
    if T.rows != y.dim:
        raise DimensionMismatch(f"operator has {T.rows} rows, vector has dim {y.dim}")
    x1 = np.linalg.lstsq(T.m1, y.v1, rcond=None)[0]
    x2 = np.linalg.lstsq(T.m2, y.v2, rcond=None)[0]
    x = BCVector(x1, x2)
    residual = vec_dnorm(mat_apply(T, x) - y)
    if residual.a1 > tol or residual.a2 > tol:
        raise NotInRange(
            f"right-hand side outside operator range: residual ({residual.a1}, {residual.a2}) > {tol}"
        )
    return SolveReport(x=x, qy=vec_dnorm(x), residual=residual)


@dataclass
class SurjectivityReport:
    """Numerical row-rank check per component."""

    surjective: bool
    rank_e1: int
    rank_e2: int
    rows: int
    cols: int

    def to_json_dict(self) -> dict:
        return {
            "surjective": self.surjective,
            "rank_e1": self.rank_e1,
            "rank_e2": self.rank_e2,
            "rows": self.rows,
            "cols": self.cols,
        }


def _numerical_rank(A: np.ndarray, tol: float) -> int:
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def surjectivity_check(T: BCMatrix, tol: float = RANK_TOL) -> SurjectivityReport:
    """Surjective iff both components have numerical row rank equal to rows."""
    r1 = _numerical_rank(T.m1, tol)
    r2 = _numerical_rank(T.m2, tol)
    return SurjectivityReport(
        surjective=(r1 == T.rows and r2 == T.rows),
        rank_e1=r1,
        rank_e2=r2,
        rows=T.rows,
        cols=T.cols,
    )


def open_mapping_delta(T: BCMatrix, tol: float = RANK_TOL) -> DPlus:
    """Least delta with: every y has a preimage x, ||x||_D <= delta ||y||_D.

    Componentwise the reciprocal smallest singular value; requires both
    components to be surjective.  The bound is attained on the bottom left
    singular vectors.
    """
    rep = surjectivity_check(T, tol)
    if not rep.surjective:
        raise NotSurjective(
            f"row ranks ({rep.rank_e1}, {rep.rank_e2}) below {rep.rows}; no open-mapping constant"
        )
    _, s1min, _ = _sigma_extremes_impl(T.m1, tol, FULL_DECOMPOSITION, _POWER_MAX_ITER)
    _, s2min, _ = _sigma_extremes_impl(T.m2, tol, FULL_DECOMPOSITION, _POWER_MAX_ITER)
    return DPlus(1.0 / s1min, 1.0 / s2min)
