"""Domain types and validation shared by every other module.

Points live on the product of the complex plane (coordinate ``z``) and the
open unit disk (coordinate ``w``).  All formulas downstream have a pole at
|w| = 1, so disk membership is guarded with a small safety margin
``EPS_BOUND``: points with |w| >= 1 - EPS_BOUND are rejected at
construction time, which keeps every denominator of the form 1 - w*conj(w)
bounded away from zero.

Everything here is an immutable value; instances are safe to share freely.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

EPS_BOUND = 1e-9


class NonFinite(ValueError):
    """A coordinate or parameter is NaN or infinite."""


class BoundaryViolation(ValueError):
    """A disk coordinate lies on or outside the guarded unit disk."""


class InvalidK(ValueError):
    """Basis operations need 2*(k - 1/4) to be a positive integer."""


class BoundaryProximity(ValueError):
    """A finite-difference stencil would leave the guarded disk."""


class BoundaryEscape(RuntimeError):
    """Numerical integration drove w out of the guarded disk."""

    def __init__(self, t: float, message: str | None = None):
        self.t = t
        super().__init__(message or f"trajectory left the disk at t={t:.6g}")


class ZeroDirection(ValueError):
    """A closed-form solution requires a nonzero disk velocity."""


class DimensionMismatch(ValueError):
    """Operands have incompatible component counts."""


class EndpointMismatch(ValueError):
    """A path does not connect the requested endpoints."""


def require_finite(value: complex, name: str = "value") -> complex:
    """Return ``value`` unchanged, raising NonFinite on NaN/Inf components."""
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFinite(f"{name} must be finite, got {value!r}")
    return value


def check_disk(w: complex, eps_bound: float = EPS_BOUND) -> complex:
    """Validate a disk coordinate: finite and |w| < 1 - eps_bound."""
    require_finite(w, "w")
    if abs(w) >= 1.0 - eps_bound:
        raise BoundaryViolation(f"|w|={abs(w):.12g} is not inside the open disk")
    return w


@dataclass(frozen=True)
class JacobiPoint:
    """A point (z, w) with z in C and w in the guarded open unit disk.

    The strictly positive real ``p = 1 - w*conj(w)`` is cached because most
    coefficient formulas share it.
    """

    z: complex
    w: complex
    p: float = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        require_finite(self.z, "z")
        check_disk(self.w)
        object.__setattr__(self, "p", 1.0 - (self.w * self.w.conjugate()).real)


def make_jacobi_point(z: complex, w: complex, eps_bound: float = EPS_BOUND) -> JacobiPoint:
    """Validated constructor for a point of the Siegel-Jacobi disk."""
    require_finite(complex(z), "z")
    check_disk(complex(w), eps_bound)
    return JacobiPoint(complex(z), complex(w))


@dataclass(frozen=True)
class ModelParams:
    """Representation parameters: disk weight ``k`` and Heisenberg scale ``mu``.

    ``k`` may not fall below 3/4; the boundary value itself is admitted
    because the smallest basis family sits exactly there, but measure
    operations (whose normalization (4k - 3)/(2 pi^2) degenerates at the
    boundary) insist on k > 3/4.  ``mu`` is strictly positive for every
    kernel and measure; ``mu = 0`` is additionally admitted because the
    geodesic system has a well-defined flat limit that the closed-form
    solutions are checked against.
    """

    k: float
    mu: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and math.isfinite(self.mu)):
            raise NonFinite("model parameters must be finite")
        if self.k < 0.75:
            raise ValueError(f"k must be at least 3/4, got {self.k}")
        if self.mu < 0.0:
            raise ValueError(f"mu must be nonnegative, got {self.mu}")


@dataclass(frozen=True)
class TangentVector:
    """Holomorphic tangent components (dz, dw) at a point."""

    dz: complex
    dw: complex

    def __post_init__(self):
        require_finite(self.dz, "dz")
        require_finite(self.dw, "dw")


@dataclass(frozen=True)
class HermitianMetric2:
    """Coefficients of a positive definite 2x2 Hermitian form.

    ``h_zz`` and ``h_ww`` are the real diagonal entries, ``h_zw`` the
    off-diagonal one; positive definiteness is enforced on construction.
    """

    h_zz: float
    h_zw: complex
    h_ww: float

    def __post_init__(self):
        require_finite(complex(self.h_zz), "h_zz")
        require_finite(self.h_zw, "h_zw")
        require_finite(complex(self.h_ww), "h_ww")
        det = self.h_zz * self.h_ww - abs(self.h_zw) ** 2
        if self.h_zz <= 0.0 or self.h_ww <= 0.0 or det <= 0.0:
            raise ValueError(
                f"metric coefficients are not positive definite "
                f"(h_zz={self.h_zz!r}, h_ww={self.h_ww!r}, det={det!r})"
            )

    def det(self) -> float:
        return self.h_zz * self.h_ww - abs(self.h_zw) ** 2


def eta_of(zeta: JacobiPoint) -> complex:
    """Displacement coordinate eta = (z + conj(z) w) / (1 - w conj(w)).

    This is the coordinate in which the metric splits into a flat block
    and a pure disk block; see the group module for the companion change
    of variables z = eta - w conj(eta).
    """
    return (zeta.z + zeta.z.conjugate() * zeta.w) / zeta.p


def principal_power_log(base: complex, exponent: float) -> complex:
    """log of base**exponent through the principal branch of log(base)."""
    return exponent * cmath.log(base)
