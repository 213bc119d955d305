"""Nikiforov--Uvarov reduction pipeline.

Starting from  psi'' + (tauTilde/sigma) psi' + (sigmaTilde/sigma^2) psi = 0
the substitution psi = phi * y reduces the equation to hypergeometric type
once a linear pi(r) and a constant k are chosen so that the radicand

    u(r; k) = ((sigma' - tauTilde)/2)^2 - sigmaTilde + k*sigma

is the square of a polynomial.  The module enumerates all rational (k, pi)
candidates, forms the reduced tau = tauTilde + 2*pi, the eigenparameter
lambdaBar = k + pi', and the factor phi with phi'/phi = pi/sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, RatFunc, WeightExpr, integrate_log_derivative
from .errors import (
    AmbiguousBranch,
    NoRationalReduction,
    NotHypergeometricType,
    UnsupportedDenominator,
)
from .hypergeometric import gamma_n
from .rationals import rational_sqrt

__all__ = [
    "NuProblem",
    "NuReduction",
    "nu_find_k",
    "nu_lambda_n",
    "build_phi",
    "nu_solve",
]


@dataclass(frozen=True)
class NuProblem:
    tau_tilde: Poly
    sigma: Poly
    sigma_tilde: Poly

    def __post_init__(self):
        if self.tau_tilde.degree > 1:
            raise NotHypergeometricType("deg(tauTilde) > 1")
        if self.sigma.degree > 2 or self.sigma.is_zero:
            raise NotHypergeometricType("sigma must be nonzero with degree <= 2")
        if self.sigma_tilde.degree > 2:
            raise NotHypergeometricType("deg(sigmaTilde) > 2")


@dataclass(frozen=True)
class NuReduction:
    """One admissible (k, pi) choice and everything derived from it."""

    k: Fraction
    pi: Poly
    lambda_bar: Fraction
    tau: Poly
    phi: WeightExpr | None

    @property
    def tau_slope(self) -> Fraction:
        return self.tau.coeff(1)


def _square_root_of_quadratic(u: Poly) -> Poly | None:
    """Exact polynomial square root of a degree <= 2 polynomial, or None."""
    if u.is_zero:
        return Poly()
    a, b, c = u.coeff(2), u.coeff(1), u.coeff(0)
    if a != 0:
        s = rational_sqrt(a)
        if s is None:
            return None
        w = Poly((b / (2 * s), s))
        return w if w * w == u else None
    if b != 0:
        return None
    t = rational_sqrt(c)
    return Poly.const(t) if t is not None else None


def _rational_quadratic_roots(d2: Fraction, d1: Fraction, d0: Fraction) -> list[Fraction]:
    """Rational roots of d2 x^2 + d1 x + d0 (not all coefficients zero)."""
    if d2 == 0:
        if d1 == 0:
            return []
        return [-d0 / d1]
    disc = d1 * d1 - 4 * d2 * d0
    if disc < 0:
        return []
    s = rational_sqrt(disc)
    if s is None:
        return []
    roots = {(-d1 + s) / (2 * d2), (-d1 - s) / (2 * d2)}
    return sorted(roots)


def nu_find_k(problem: NuProblem) -> list[NuReduction]:
    """All rational (k, pi) pairs making the radicand a perfect square.

    Solves discriminant(u(r; k)) = 0 for k, keeps the rational roots whose
    radicand admits a rational polynomial square root, and emits both sign
    branches of pi.  Raises NoRationalReduction when no candidate exists.
    """
    half = (problem.sigma.derivative() - problem.tau_tilde) * Fraction(1, 2)
    u0 = half * half - problem.sigma_tilde
    sigma = problem.sigma

    if u0.is_zero and sigma.is_zero:  # unreachable given validation; kept for clarity
        raise NoRationalReduction("radicand undefined")

    # u(r; k) coefficients, affine in k
    a0, a1 = u0.coeff(2), sigma.coeff(2)
    b0, b1 = u0.coeff(1), sigma.coeff(1)
    c0, c1 = u0.coeff(0), sigma.coeff(0)
    d2 = b1 * b1 - 4 * a1 * c1
    d1 = 2 * b0 * b1 - 4 * (a0 * c1 + c0 * a1)
    d0 = b0 * b0 - 4 * a0 * c0

    if d2 == 0 and d1 == 0 and d0 == 0:
        if u0.is_zero:
            # radicand vanishes identically at k = 0
            return [_make_reduction(problem, Fraction(0), half)]
        raise NoRationalReduction(
            "one-parameter family of perfect squares; no discrete rational k"
        )

    candidates: list[NuReduction] = []
    for k in _rational_quadratic_roots(d2, d1, d0):
        u = u0 + sigma * k
        w = _square_root_of_quadratic(u)
        if w is None:
            continue
        seen: set[Poly] = set()
        for signed in (w, -w):
            pi = half + signed
            if pi in seen:
                continue
            seen.add(pi)
            candidates.append(_make_reduction(problem, k, pi))
    if not candidates:
        raise NoRationalReduction("no rational k gives a perfect-square radicand")
    return candidates


def _make_reduction(problem: NuProblem, k: Fraction, pi: Poly) -> NuReduction:
    lambda_bar = k + pi.coeff(1)
    tau = problem.tau_tilde + 2 * pi
    try:
        phi = build_phi(pi, problem.sigma)
    except UnsupportedDenominator:
        phi = None
    return NuReduction(k=k, pi=pi, lambda_bar=lambda_bar, tau=tau, phi=phi)


def nu_lambda_n(tau: Poly, sigma: Poly, n: int) -> Fraction:
    """Eigenparameter -n tau' - n(n-1)/2 sigma'' for the reduced equation.

    Identical to the closed-form quantization constant of the iteration
    route; the identity is exercised by the verification suite.
    """
    if tau.degree > 1 or sigma.degree > 2:
        raise NotHypergeometricType("degree bounds violated")
    return gamma_n(tau, sigma, n)


def build_phi(pi: Poly, sigma: Poly) -> WeightExpr:
    """Integrate phi'/phi = pi/sigma into a weight expression."""
    return integrate_log_derivative(RatFunc(pi, sigma))


def nu_solve(
    problem: NuProblem, n: int, branch_selector=None
) -> tuple[Fraction, NuReduction]:
    """Pick a reduction branch and return (lambdaBar_n, reduction).

    The default selector takes the unique candidate with tau' < 0 (the
    conventional bound-state choice).  When no candidate or more than one
    qualifies, AmbiguousBranch is raised with the full candidate list so
    the caller can select explicitly; candidates are never discarded
    silently.  The reduction's own ``lambda_bar`` is returned alongside the
    mode value; equality of the two is the bound-state condition, judged by
    the caller.
    """
    candidates = nu_find_k(problem)
    if branch_selector is not None:
        chosen = branch_selector(candidates)
    else:
        negative = [c for c in candidates if c.tau_slope < 0]
        if len(negative) != 1:
            raise AmbiguousBranch(
                f"{len(negative)} candidates with tau' < 0; pass a branch_selector "
                f"(candidates: {candidates})"
            )
        chosen = negative[0]
    return nu_lambda_n(chosen.tau, problem.sigma, n), chosen
