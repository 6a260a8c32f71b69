"""Finite bicomplex modules: vectors, hyperbolic-valued norms, seminorms, series.

The module is BC^n held as a pair of complex component vectors (v1, v2).
Norms split componentwise: ||x||_D = e1*N(v1) + e2*N(v2) for a configurable
complex vector norm N (l2 by default).  Series summation is capped and every
"converged" verdict means converged at the given cap with the given
tolerance, never a claim about the infinite limit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import islice
from typing import TYPE_CHECKING, Iterable, Iterator, Literal

import numpy as np

from .errors import DimensionMismatch, InvalidInput, NotConverged, NotStrictlyPositive
from .hyperscalar import Bicomplex, DPlus, Hyperbolic, hyp_leq

if TYPE_CHECKING:
    from .dop import BCMatrix


def _as_component(values, *, what: str) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != 1:
        raise InvalidInput(f"{what} must be one-dimensional, got shape {arr.shape}")
    if arr.size < 1:
        raise InvalidInput(f"{what} must have at least one entry")
    if not np.isfinite(arr).all():
        raise InvalidInput(f"{what} contains non-finite entries")
    return arr


class BCVector:
    """Element of BC^n stored as the pair of complex component vectors.

    Instances are immutable: the arrays are private copies locked against
    writes.
    """

    __slots__ = ("v1", "v2")

    def __init__(self, v1, v2):
        v1 = _as_component(v1, what="e1 component")
        v2 = _as_component(v2, what="e2 component")
        if v1.shape != v2.shape:
            raise DimensionMismatch(
                f"component lengths differ: {v1.size} vs {v2.size}"
            )
        v1.setflags(write=False)
        v2.setflags(write=False)
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @property
    def dim(self) -> int:
        return self.v1.size

    @classmethod
    def zeros(cls, n: int) -> "BCVector":
        return cls(np.zeros(n, dtype=complex), np.zeros(n, dtype=complex))

    def scale(self, mu) -> "BCVector":
        """Scale by a bicomplex, complex, or real scalar."""
        if isinstance(mu, Bicomplex):
            return BCVector(mu.z1 * self.v1, mu.z2 * self.v2)
        return BCVector(mu * self.v1, mu * self.v2)

    def __add__(self, other):
        if isinstance(other, BCVector):
            if self.dim != other.dim:
                raise DimensionMismatch(f"dims {self.dim} vs {other.dim}")
            return BCVector(self.v1 + other.v1, self.v2 + other.v2)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, BCVector):
            if self.dim != other.dim:
                raise DimensionMismatch(f"dims {self.dim} vs {other.dim}")
            return BCVector(self.v1 - other.v1, self.v2 - other.v2)
        return NotImplemented

    def __neg__(self):
        return BCVector(-self.v1, -self.v2)

    def __repr__(self) -> str:
        return f"BCVector(dim={self.dim})"


@dataclass(frozen=True)
class DNormConfig:
    """Choice of the complex norm applied to each idempotent component.

    l2 is canonical; operator-norm machinery accepts only l2 because its
    singular-value kernel is exact for that norm alone.
    """

    component_norm: Literal["l2", "l1", "linf"] = "l2"

    def __post_init__(self):
        if self.component_norm not in ("l2", "l1", "linf"):
            raise InvalidInput(f"unknown component norm {self.component_norm!r}")

    def component_value(self, v: np.ndarray) -> float:
        if self.component_norm == "l2":
            return float(np.linalg.norm(v))
        if self.component_norm == "l1":
            return float(np.abs(v).sum())
        return float(np.abs(v).max())


_L2 = DNormConfig()


def vec_dnorm(v: BCVector, cfg: DNormConfig = _L2) -> DPlus:
    """Hyperbolic-valued norm e1*N(v1) + e2*N(v2)."""
    return DPlus(cfg.component_value(v.v1), cfg.component_value(v.v2))


@dataclass(frozen=True)
class DSeminorm:
    """Seminorm x -> ||T x||_D represented by its defining operator.

    Degenerate operators give honest seminorms (zero on the kernel); the
    identity gives the norm itself.
    """

    T: "BCMatrix"
    codomain: DNormConfig = _L2

    def __call__(self, x: BCVector) -> DPlus:
        return seminorm_eval(self, x)


def seminorm_eval(p: DSeminorm, x: BCVector) -> DPlus:
    """Evaluate p(x) = ||Tx||_D with the codomain's component norm."""
    T = p.T
    if T.cols != x.dim:
        raise DimensionMismatch(f"operator has {T.cols} columns, vector has dim {x.dim}")
    return DPlus(
        p.codomain.component_value(T.m1 @ x.v1),
        p.codomain.component_value(T.m2 @ x.v2),
    )


def v_alpha_member(p: DSeminorm, x: BCVector, alpha: DPlus) -> bool:
    """Membership in the sublevel set { x : p(x) <= alpha }, exact order."""
    return hyp_leq(seminorm_eval(p, x), alpha)


def v_alpha_member_closed(
    p: DSeminorm, x: BCVector, alpha: DPlus, tol: float = 1e-9
) -> bool:
    """Tolerance-closure membership: p(x) <= alpha + tol*(1,1).

    Stands in for topological closure of the sublevel set at desk scale.
    """
    return hyp_leq(seminorm_eval(p, x), DPlus(alpha.a1 + tol, alpha.a2 + tol))


@dataclass
class SeriesReport:
    """Outcome of a capped series summation.

    All facts are "at this cap, with this tolerance".  ``partial_norms``
    holds ||s_n||_D per step, ``abs_sums`` the running sum of ||x_k||_D,
    and ``cauchy_margin`` the largest trailing-window tail estimate seen.
    The chain fields are populated by ``abs_summability_check`` only.
    """

    n_terms: int
    converged: bool
    limit: BCVector | None
    partial_norms: list[DPlus]
    abs_sums: list[DPlus]
    cauchy_margin: DPlus
    tol: DPlus
    window: int
    abs_converged: bool | None = None
    cauchy_chain_ok: bool | None = None
    chain_margin: Hyperbolic | None = None

    def to_json_dict(self) -> dict:
        d = {
            "n_terms": self.n_terms,
            "converged": self.converged,
            "limit": None,
            "partial_norms": [[p.a1, p.a2] for p in self.partial_norms],
            "abs_sums": [[a.a1, a.a2] for a in self.abs_sums],
            "cauchy_margin": [self.cauchy_margin.a1, self.cauchy_margin.a2],
            "tol": [self.tol.a1, self.tol.a2],
            "window": self.window,
        }
        if self.limit is not None:
            d["limit"] = {
                "dim": self.limit.dim,
                "e1": [[z.real, z.imag] for z in self.limit.v1],
                "e2": [[z.real, z.imag] for z in self.limit.v2],
            }
        if self.abs_converged is not None:
            d["abs_converged"] = self.abs_converged
        if self.cauchy_chain_ok is not None:
            d["cauchy_chain_ok"] = self.cauchy_chain_ok
            d["chain_margin"] = [self.chain_margin.a1, self.chain_margin.a2]
        return d


def _as_tol(tol) -> DPlus:
    if isinstance(tol, (int, float)):
        tol = DPlus(tol, tol)
    if not isinstance(tol, DPlus):
        raise InvalidInput(f"tolerance must be DPlus or a number, got {type(tol).__name__}")
    if not tol.is_strictly_positive():
        raise NotStrictlyPositive("series tolerance must be strictly positive")
    return tol


def series_sum(
    terms: Iterable[BCVector],
    tol,
    max_n: int,
    window: int = 3,
) -> SeriesReport:
    """Accumulate partial sums of a vector series up to ``max_n`` terms.

    Converged means the trailing-window tail estimate (the sum of the last
    ``window`` term norms, which dominates ||s_n - s_m||_D over that window)
    dropped below ``tol`` componentwise, or the term sequence was exhausted,
    in which case the finite sum is exact.  Hitting the cap first raises
    ``NotConverged`` carrying the report.
    """
    tol = _as_tol(tol)
    if max_n < 1:
        raise InvalidInput(f"max_n must be >= 1, got {max_n}")
    if window < 1:
        raise InvalidInput(f"window must be >= 1, got {window}")

    it = iter(terms)
    s: BCVector | None = None
    running = DPlus(0.0, 0.0)
    cauchy_margin = DPlus(0.0, 0.0)
    partial_norms: list[DPlus] = []
    abs_sums: list[DPlus] = []
    recent: deque[DPlus] = deque(maxlen=window)
    converged = False
    n = 0

    while n < max_n:
        x = next(it, None)
        if x is None:
            # finite series: the accumulated sum is the exact total
            converged = s is not None
            break
        if s is None:
            s = x
        else:
            if x.dim != s.dim:
                raise DimensionMismatch(f"term {n} has dim {x.dim}, expected {s.dim}")
            s = s + x
        n += 1
        t_norm = vec_dnorm(x)
        running = DPlus(running.a1 + t_norm.a1, running.a2 + t_norm.a2)
        recent.append(t_norm)
        partial_norms.append(vec_dnorm(s))
        abs_sums.append(running)
        tail = DPlus(sum(t.a1 for t in recent), sum(t.a2 for t in recent))
        cauchy_margin = DPlus(max(cauchy_margin.a1, tail.a1), max(cauchy_margin.a2, tail.a2))
        if len(recent) == window and hyp_leq(tail, tol):
            converged = True
            break

    if s is None:
        raise InvalidInput("empty series")
    if not converged and n == max_n and next(it, None) is None:
        converged = True  # sequence ended exactly at the cap: finite sum is exact

    report = SeriesReport(
        n_terms=n,
        converged=converged,
        limit=s if converged else None,
        partial_norms=partial_norms,
        abs_sums=abs_sums,
        cauchy_margin=cauchy_margin,
        tol=tol,
        window=window,
    )
    if not converged:
        raise NotConverged(f"series not converged after {n} terms", report)
    return report


def abs_summability_check(
    terms: Iterable[BCVector],
    max_n: int,
    tol=None,
    window: int = 3,
) -> SeriesReport:
    """Check absolute summability and the Cauchy tail chain of partial sums.

    First decides whether the real series sum ||x_k||_D settles below
    ``tol`` (trailing window, componentwise) within the cap, recording the
    verdict in ``abs_converged`` rather than raising: divergence at a
    finite cap is always just "not yet converged".  Then verifies, for a
    deterministic schedule of index pairs m < n, that
    ||s_n - s_m||_D <= sum_{k=m+1..n} ||x_k||_D componentwise.
    """
    tol = _as_tol(tol if tol is not None else 1e-12)
    if max_n < 1:
        raise InvalidInput(f"max_n must be >= 1, got {max_n}")

    it = iter(terms)
    xs = list(islice(it, max_n))
    exhausted = len(xs) < max_n or next(it, None) is None
    if not xs:
        raise InvalidInput("empty series")
    dim = xs[0].dim
    partials: list[BCVector] = []
    s = BCVector.zeros(dim)
    running = DPlus(0.0, 0.0)
    abs_sums: list[DPlus] = []
    partial_norms: list[DPlus] = []
    term_norms: list[DPlus] = []
    for k, x in enumerate(xs):
        if x.dim != dim:
            raise DimensionMismatch(f"term {k} has dim {x.dim}, expected {dim}")
        s = s + x
        partials.append(s)
        t_norm = vec_dnorm(x)
        term_norms.append(t_norm)
        running = DPlus(running.a1 + t_norm.a1, running.a2 + t_norm.a2)
        abs_sums.append(running)
        partial_norms.append(vec_dnorm(s))

    n_terms = len(xs)
    cauchy_margin = DPlus(0.0, 0.0)
    final_tail: DPlus | None = None
    for i in range(n_terms):
        lo = max(0, i - window + 1)
        tail = DPlus(
            sum(t.a1 for t in term_norms[lo : i + 1]),
            sum(t.a2 for t in term_norms[lo : i + 1]),
        )
        cauchy_margin = DPlus(max(cauchy_margin.a1, tail.a1), max(cauchy_margin.a2, tail.a2))
        if i - lo + 1 == window:
            final_tail = tail
    # verdict at the cap: exhausted sequences are finite sums, otherwise the
    # trailing window must have settled below tol
    abs_converged = exhausted or (final_tail is not None and hyp_leq(final_tail, tol))

    # pairs (m, n): consecutive plus power-of-two strides, deterministic
    pairs: list[tuple[int, int]] = []
    for n in range(1, n_terms):
        pairs.append((n - 1, n))
        stride = 2
        while n - stride >= 0:
            pairs.append((n - stride, n))
            stride *= 2
    chain_ok = True
    w1 = w2 = float("-inf")
    for m, n in pairs:
        diff = vec_dnorm(partials[n] - partials[m])
        b1 = abs_sums[n].a1 - abs_sums[m].a1
        b2 = abs_sums[n].a2 - abs_sums[m].a2
        m1 = diff.a1 - b1
        m2 = diff.a2 - b2
        w1 = max(w1, m1)
        w2 = max(w2, m2)
        if m1 > 1e-12 * max(1.0, abs_sums[n].a1) or m2 > 1e-12 * max(1.0, abs_sums[n].a2):
            chain_ok = False
    worst = Hyperbolic(w1, w2) if pairs else Hyperbolic(0.0, 0.0)

    return SeriesReport(
        n_terms=n_terms,
        converged=abs_converged,
        limit=partials[-1] if abs_converged else None,
        partial_norms=partial_norms,
        abs_sums=abs_sums,
        cauchy_margin=cauchy_margin,
        tol=tol,
        window=window,
        abs_converged=abs_converged,
        cauchy_chain_ok=chain_ok,
        chain_margin=worst,
    )


def geometric_terms(ratio: Bicomplex, seed_vector: BCVector) -> Iterator[BCVector]:
    """Yield seed, ratio*seed, ratio^2*seed, ... (infinite generator)."""
    term = seed_vector
    while True:
        yield term
        term = term.scale(ratio)
