"""First-order differential operators realizing the five Lie generators.

The generators act on polynomials in (z, w) as monomial rewrite rules:

    a      = (1/sqrt(mu)) d/dz
    a+     = sqrt(mu) z + (w/sqrt(mu)) d/dz
    K-     = d/dw
    K0     = k + (z/2) d/dz + w d/dw
    K+     = (mu/2) z^2 + 2k w + z w d/dz + w^2 d/dw

Polynomials are closed under all five, so commutators can be evaluated
exactly and compared coefficient-wise against the structure constants of
the algebra (a Heisenberg pair extended by the su(1,1) triple).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

from .core import ModelParams


class Generator(enum.Enum):
    A = "a"
    ADAG = "adag"
    K_MINUS = "k-"
    K_ZERO = "k0"
    K_PLUS = "k+"


class BiPolynomial:
    """Finite complex polynomial in (z, w), stored as {(deg_z, deg_w): coeff}.

    Zero coefficients are dropped eagerly so the representation is canonical
    up to floating rounding.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], complex] | None = None):
        self.coeffs: dict[tuple[int, int], complex] = {}
        if coeffs:
            for key, c in coeffs.items():
                if c != 0:
                    self.coeffs[key] = complex(c)

    @classmethod
    def zero(cls) -> "BiPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BiPolynomial":
        return cls({(0, 0): 1.0})

    @classmethod
    def monomial(cls, deg_z: int, deg_w: int, coeff: complex = 1.0) -> "BiPolynomial":
        if deg_z < 0 or deg_w < 0:
            raise ValueError("monomial degrees must be nonnegative")
        return cls({(deg_z, deg_w): coeff})

    def add_term(self, deg_z: int, deg_w: int, coeff: complex) -> None:
        if coeff == 0:
            return
        key = (deg_z, deg_w)
        new = self.coeffs.get(key, 0.0) + coeff
        if new == 0:
            self.coeffs.pop(key, None)
        else:
            self.coeffs[key] = new

    def __add__(self, other: "BiPolynomial") -> "BiPolynomial":
        out = BiPolynomial(dict(self.coeffs))
        for (i, j), c in other.coeffs.items():
            out.add_term(i, j, c)
        return out

    def __sub__(self, other: "BiPolynomial") -> "BiPolynomial":
        out = BiPolynomial(dict(self.coeffs))
        for (i, j), c in other.coeffs.items():
            out.add_term(i, j, -c)
        return out

    def scaled(self, factor: complex) -> "BiPolynomial":
        return BiPolynomial({k: factor * c for k, c in self.coeffs.items()})

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    def __call__(self, z: complex, w: complex) -> complex:
        return sum(c * z**i * w**j for (i, j), c in self.coeffs.items())

    def __repr__(self):
        terms = sorted(self.coeffs.items())
        return "BiPolynomial({%s})" % ", ".join(f"{k}: {c}" for k, c in terms)


def max_coeff_deviation(p: BiPolynomial, q: BiPolynomial) -> float:
    """Largest absolute difference over the union of monomials of p and q."""
    keys = set(p.coeffs) | set(q.coeffs)
    return max((abs(p.coeffs.get(k, 0.0) - q.coeffs.get(k, 0.0)) for k in keys), default=0.0)


def _apply_monomial(g: Generator, i: int, j: int, params: ModelParams,
                    kplus_weight: float) -> list[tuple[int, int, complex]]:
    """Image of z^i w^j under one generator, as (deg_z, deg_w, coeff) terms."""
    k, mu = params.k, params.mu
    rmu = math.sqrt(mu)
    if g is Generator.A:
        return [(i - 1, j, i / rmu)] if i > 0 else []
    if g is Generator.ADAG:
        out = [(i + 1, j, rmu)]
        if i > 0:
            out.append((i - 1, j + 1, i / rmu))
        return out
    if g is Generator.K_MINUS:
        return [(i, j - 1, complex(j))] if j > 0 else []
    if g is Generator.K_ZERO:
        return [(i, j, k + 0.5 * i + j)]
    if g is Generator.K_PLUS:
        return [(i + 2, j, 0.5 * mu), (i, j + 1, kplus_weight + i + j)]
    raise ValueError(f"unknown generator {g!r}")


def apply_generator(g: Generator, p: BiPolynomial, params: ModelParams) -> BiPolynomial:
    """Exact polynomial image of p under one generator."""
    return _apply(g, p, params, 2.0 * params.k)


def _apply(g: Generator, p: BiPolynomial, params: ModelParams,
           kplus_weight: float) -> BiPolynomial:
    if params.mu <= 0.0:
        raise ValueError("the operator realization needs mu > 0")
    out = BiPolynomial()
    for (i, j), c in p.coeffs.items():
        for di, dj, factor in _apply_monomial(g, i, j, params, kplus_weight):
            out.add_term(di, dj, c * factor)
    return out


def commutator(g1: Generator, g2: Generator, p: BiPolynomial,
               params: ModelParams) -> BiPolynomial:
    """(g1 g2 - g2 g1) applied to p, exactly."""
    return _commutator(g1, g2, p, params, 2.0 * params.k)


def _commutator(g1, g2, p, params, kplus_weight) -> BiPolynomial:
    forward = _apply(g1, _apply(g2, p, params, kplus_weight), params, kplus_weight)
    backward = _apply(g2, _apply(g1, p, params, kplus_weight), params, kplus_weight)
    return forward - backward


# The ten structure relations: name, (g1, g2), and the claimed right-hand
# side as a map p -> polynomial.
_RELATIONS: list[tuple[str, Generator, Generator, "callable"]] = [
    ("[a,a+]=1", Generator.A, Generator.ADAG,
     lambda p, pr: p),
    ("[K0,K+]=K+", Generator.K_ZERO, Generator.K_PLUS,
     lambda p, pr: apply_generator(Generator.K_PLUS, p, pr)),
    ("[K0,K-]=-K-", Generator.K_ZERO, Generator.K_MINUS,
     lambda p, pr: apply_generator(Generator.K_MINUS, p, pr).scaled(-1.0)),
    ("[K-,K+]=2K0", Generator.K_MINUS, Generator.K_PLUS,
     lambda p, pr: apply_generator(Generator.K_ZERO, p, pr).scaled(2.0)),
    ("[a,K+]=a+", Generator.A, Generator.K_PLUS,
     lambda p, pr: apply_generator(Generator.ADAG, p, pr)),
    ("[K-,a+]=a", Generator.K_MINUS, Generator.ADAG,
     lambda p, pr: apply_generator(Generator.A, p, pr)),
    ("[K+,a+]=0", Generator.K_PLUS, Generator.ADAG,
     lambda p, pr: BiPolynomial.zero()),
    ("[K-,a]=0", Generator.K_MINUS, Generator.A,
     lambda p, pr: BiPolynomial.zero()),
    ("[K0,a+]=a+/2", Generator.K_ZERO, Generator.ADAG,
     lambda p, pr: apply_generator(Generator.ADAG, p, pr).scaled(0.5)),
    ("[K0,a]=-a/2", Generator.K_ZERO, Generator.A,
     lambda p, pr: apply_generator(Generator.A, p, pr).scaled(-0.5)),
]


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    monomial: str
    deviation: float
    passed: bool


@dataclass
class RelationReport:
    """Per-relation, per-monomial commutator verification results."""

    max_degree: int
    k: float
    mu: float
    tolerance: float
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_deviation(self) -> float:
        return max((c.deviation for c in self.checks), default=0.0)

    def to_json(self) -> str:
        return json.dumps({
            "max_degree": self.max_degree,
            "k": self.k,
            "mu": self.mu,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "checks": [
                {"relation": c.relation, "monomial": c.monomial,
                 "deviation": c.deviation, "pass": c.passed}
                for c in self.checks
            ],
        }, indent=2)


def check_relations(max_degree: int, params: ModelParams,
                    tolerance: float = 1e-12,
                    kplus_perturbation: float = 0.0) -> RelationReport:
    """Verify every structure relation on all monomials z^i w^j, i+j <= max_degree.

    Deviations are compared coefficient-wise against ``tolerance`` scaled by
    the larger coefficient magnitude in play (the rules carry factors mu/2
    and k, not just integers).  ``kplus_perturbation`` shifts the 2k weight
    inside the raising operator and exists so negative controls can confirm
    the checker actually fails on a wrong operator.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    kplus_weight = 2.0 * params.k + kplus_perturbation
    report = RelationReport(max_degree=max_degree, k=params.k, mu=params.mu,
                            tolerance=tolerance)
    for name, g1, g2, rhs_of in _RELATIONS:
        for i in range(max_degree + 1):
            for j in range(max_degree + 1 - i):
                p = BiPolynomial.monomial(i, j)
                lhs = _commutator(g1, g2, p, params, kplus_weight)
                rhs = rhs_of(p, params)
                dev = max_coeff_deviation(lhs, rhs)
                scale = max(1.0, lhs.max_abs(), rhs.max_abs())
                report.checks.append(RelationCheck(
                    relation=name,
                    monomial=f"z^{i} w^{j}",
                    deviation=dev,
                    passed=dev <= tolerance * scale,
                ))
    return report
