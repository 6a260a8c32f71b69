"""Hyperbolic and bicomplex scalar arithmetic in idempotent coordinates.

A bicomplex number Z = w1 + j*w2 (w1, w2 complex in i) splits over the
idempotents e1 = (1+k)/2, e2 = (1-k)/2 as Z = e1*z1 + e2*z2 with
z1 = w1 - i*w2 and z2 = w1 + i*w2.  In that basis multiplication, norms,
and inversion all act componentwise, so the pair (z1, z2) is the canonical
internal representation throughout the library; cartesian forms are views.

Hyperbolic numbers are the real subalgebra generated by k and are stored
the same way, as the pair of real idempotent coefficients.  Norm values
live in the nonnegative cone ``DPlus``, which carries the partial order
``alpha <= beta  iff  beta - alpha`` has both components nonnegative.

All types here are immutable values; every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import EmptySet, InvalidInput, NotStrictlyPositive, ZeroDivisor

#: Absolute floor below which an idempotent component counts as zero for
#: invertibility.  The zero-divisor dichotomy is exact in the algebra;
#: floating point needs a subnormal guard.
ZERO_DIVISOR_TOL = 1e-300


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise InvalidInput(f"non-finite component {v!r} rejected")


@dataclass(frozen=True)
class Hyperbolic:
    """Hyperbolic scalar a1*e1 + a2*e2 stored by its idempotent coefficients.

    The cartesian view b1 + k*b2 is derived: b1 = (a1+a2)/2, b2 = (a1-a2)/2.
    """

    a1: float
    a2: float

    def __post_init__(self):
        object.__setattr__(self, "a1", float(self.a1))
        object.__setattr__(self, "a2", float(self.a2))
        _require_finite(self.a1, self.a2)

    @classmethod
    def from_cartesian(cls, b1: float, b2: float) -> "Hyperbolic":
        """Build b1 + k*b2 from cartesian coefficients."""
        return cls(b1 + b2, b1 - b2)

    @property
    def b1(self) -> float:
        return 0.5 * (self.a1 + self.a2)

    @property
    def b2(self) -> float:
        return 0.5 * (self.a1 - self.a2)

    def components(self) -> tuple[float, float]:
        return (self.a1, self.a2)

    def in_cone(self) -> bool:
        """True when the value lies in the nonnegative cone."""
        return self.a1 >= 0.0 and self.a2 >= 0.0

    def is_strictly_positive(self) -> bool:
        """Strict variant of cone membership (both components > 0, exact)."""
        return self.a1 > 0.0 and self.a2 > 0.0

    def _binary(self, other, op):
        if isinstance(other, Hyperbolic):
            cls = DPlus if isinstance(self, DPlus) and isinstance(other, DPlus) else Hyperbolic
            try:
                return cls(op(self.a1, other.a1), op(self.a2, other.a2))
            except InvalidInput:
                # cone-violating result of DPlus arithmetic degrades to Hyperbolic
                return Hyperbolic(op(self.a1, other.a1), op(self.a2, other.a2))
        if isinstance(other, (int, float)):
            cls = DPlus if isinstance(self, DPlus) and other >= 0 else Hyperbolic
            try:
                return cls(op(self.a1, other), op(self.a2, other))
            except InvalidInput:
                return Hyperbolic(op(self.a1, other), op(self.a2, other))
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        if isinstance(other, Hyperbolic):
            return Hyperbolic(self.a1 - other.a1, self.a2 - other.a2)
        if isinstance(other, (int, float)):
            return Hyperbolic(self.a1 - other, self.a2 - other)
        return NotImplemented

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self) -> "Hyperbolic":
        return Hyperbolic(-self.a1, -self.a2)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.a1!r}, {self.a2!r})"


@dataclass(frozen=True, eq=False)
class DPlus(Hyperbolic):
    """Hyperbolic scalar confined to the nonnegative cone.

    Every norm in the library takes values here.  Construction rejects
    negative components.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.a1 < 0.0 or self.a2 < 0.0:
            raise InvalidInput(
                f"cone violation: DPlus components must be nonnegative, got ({self.a1}, {self.a2})"
            )

    def __eq__(self, other):
        # value equality across Hyperbolic and DPlus (same algebra element)
        if isinstance(other, Hyperbolic):
            return self.a1 == other.a1 and self.a2 == other.a2
        return NotImplemented

    def __hash__(self):
        return hash((self.a1, self.a2))


class OrderRel(Enum):
    """Outcome of comparing two hyperbolic numbers under the cone order."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def hyp_compare(alpha: Hyperbolic, beta: Hyperbolic) -> OrderRel:
    """Compare under the partial order induced by the nonnegative cone.

    LESS means beta - alpha lies in the cone and alpha != beta; GREATER is
    symmetric; INCOMPARABLE when neither difference is in the cone.
    Comparisons are exact (no tolerance).
    """
    d1 = beta.a1 - alpha.a1
    d2 = beta.a2 - alpha.a2
    if d1 == 0.0 and d2 == 0.0:
        return OrderRel.EQUAL
    if d1 >= 0.0 and d2 >= 0.0:
        return OrderRel.LESS
    if d1 <= 0.0 and d2 <= 0.0:
        return OrderRel.GREATER
    return OrderRel.INCOMPARABLE


def hyp_leq(alpha: Hyperbolic, beta: Hyperbolic) -> bool:
    """True when alpha <= beta in the cone order."""
    return hyp_compare(alpha, beta) in (OrderRel.LESS, OrderRel.EQUAL)


def hyp_abs(alpha: Hyperbolic) -> DPlus:
    """Componentwise absolute value |alpha|_k; fixes the cone pointwise."""
    return DPlus(abs(alpha.a1), abs(alpha.a2))


def dplus_inverse(alpha: DPlus) -> DPlus:
    """Componentwise reciprocal of a strictly positive cone element."""
    if not alpha.is_strictly_positive():
        raise NotStrictlyPositive(
            f"inverse requires strictly positive components, got ({alpha.a1}, {alpha.a2})"
        )
    return DPlus(1.0 / alpha.a1, 1.0 / alpha.a2)


def _extremum(values: Iterable[Hyperbolic], pick) -> Hyperbolic:
    items = list(values)
    if not items:
        raise EmptySet("supremum/infimum of an empty set")
    a1 = items[0].a1
    a2 = items[0].a2
    all_cone = isinstance(items[0], DPlus)
    for v in items[1:]:
        a1 = pick(a1, v.a1)
        a2 = pick(a2, v.a2)
        all_cone = all_cone and isinstance(v, DPlus)
    return DPlus(a1, a2) if all_cone else Hyperbolic(a1, a2)


def hyp_sup(values: Iterable[Hyperbolic]) -> Hyperbolic:
    """Componentwise maximum: the least upper bound in the cone order."""
    return _extremum(values, max)


def hyp_inf(values: Iterable[Hyperbolic]) -> Hyperbolic:
    """Componentwise minimum: the greatest lower bound in the cone order."""
    return _extremum(values, min)


@dataclass(frozen=True)
class Bicomplex:
    """Bicomplex scalar stored as its two complex idempotent components."""

    z1: complex
    z2: complex

    def __post_init__(self):
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))
        _require_finite(self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    @classmethod
    def from_cartesian(cls, w1: complex, w2: complex) -> "Bicomplex":
        """Build w1 + j*w2; components are z1 = w1 - i*w2, z2 = w1 + i*w2."""
        w1 = complex(w1)
        w2 = complex(w2)
        return cls(w1 - 1j * w2, w1 + 1j * w2)

    @classmethod
    def from_reals(cls, a: float, b: float, c: float, d: float) -> "Bicomplex":
        """Build a + b*i + c*j + d*k from the four real coefficients."""
        return cls.from_cartesian(complex(a, b), complex(c, d))

    @classmethod
    def from_hyperbolic(cls, alpha: Hyperbolic) -> "Bicomplex":
        return cls(complex(alpha.a1), complex(alpha.a2))

    def to_cartesian(self) -> tuple[complex, complex]:
        """Inverse of ``from_cartesian``: (w1, w2) with w1=(z1+z2)/2, w2=i(z1-z2)/2."""
        w1 = 0.5 * (self.z1 + self.z2)
        w2 = 0.5j * (self.z1 - self.z2)
        return (w1, w2)

    def to_reals(self) -> tuple[float, float, float, float]:
        """The four real coefficients of 1, i, j, k."""
        w1, w2 = self.to_cartesian()
        return (w1.real, w1.imag, w2.real, w2.imag)

    def __add__(self, other):
        if isinstance(other, Bicomplex):
            return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Bicomplex):
            return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            return Bicomplex(self.z1 * other.z1, self.z2 * other.z2)
        if isinstance(other, (int, float, complex)):
            return Bicomplex(other * self.z1, other * self.z2)
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1, -self.z2)

    def __repr__(self) -> str:
        return f"Bicomplex({self.z1!r}, {self.z2!r})"


ZERO = Bicomplex(0.0, 0.0)
ONE = Bicomplex(1.0, 1.0)
E1 = Bicomplex(1.0, 0.0)
E2 = Bicomplex(0.0, 1.0)
UNIT_I = Bicomplex(1j, 1j)
UNIT_J = Bicomplex(-1j, 1j)
UNIT_K = Bicomplex(1.0, -1.0)


def bc_add(z: Bicomplex, w: Bicomplex) -> Bicomplex:
    return z + w


def bc_sub(z: Bicomplex, w: Bicomplex) -> Bicomplex:
    return z - w


def bc_mul(z: Bicomplex, w: Bicomplex) -> Bicomplex:
    """Product: componentwise in idempotent coordinates."""
    return z * w


def bc_scale(z: Bicomplex, c: complex) -> Bicomplex:
    """Scale by a real or complex-in-i scalar (embeds diagonally)."""
    return Bicomplex(c * z.z1, c * z.z2)


def bc_from_cartesian(w1: complex, w2: complex) -> Bicomplex:
    return Bicomplex.from_cartesian(w1, w2)


def bc_to_cartesian(z: Bicomplex) -> tuple[complex, complex]:
    return z.to_cartesian()


def bc_inverse(z: Bicomplex) -> Bicomplex:
    """Componentwise reciprocal; fails on zero divisors and zero.

    A component below ``ZERO_DIVISOR_TOL`` in modulus counts as zero.
    """
    if abs(z.z1) <= ZERO_DIVISOR_TOL or abs(z.z2) <= ZERO_DIVISOR_TOL:
        raise ZeroDivisor(
            f"not invertible: idempotent component moduli ({abs(z.z1)}, {abs(z.z2)})"
        )
    return Bicomplex(1.0 / z.z1, 1.0 / z.z2)


def knorm(z: Bicomplex) -> DPlus:
    """Hyperbolic-valued norm e1*|z1| + e2*|z2|; zero iff z is zero."""
    return DPlus(abs(z.z1), abs(z.z2))


def euclid_norm(z: Bicomplex) -> float:
    """Euclidean modulus of the four-real view, sqrt((|z1|^2+|z2|^2)/2).

    Each component of ``knorm(z)`` is bounded by sqrt(2) times this value.
    """
    return math.sqrt(0.5 * (abs(z.z1) ** 2 + abs(z.z2) ** 2))
