"""Original asymptotic-iteration machinery.

Implements the (lambda_k, s_k) recursion

    lambda_k = lambda_{k-1}' + s_{k-1} + lambda_0 lambda_{k-1}
    s_k      = s_{k-1}' + s_0 lambda_{k-1}

the quantization determinant delta_k = lambda_k s_{k-1} - lambda_{k-1} s_k,
the alpha-ratio termination diagnostic, and a numeric eigenvalue solver
that scans an energy bracket and refines sign changes of delta_k by
exact-sign bisection on rational midpoints.

The trial energy is substituted as an exact rational before the recursion
runs; the variable r stays symbolic because the recursion differentiates
in r.  Every probe is exact, so root locations are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Poly, RatFunc, poly_gcd
from .errors import EvaluationPole, NoRootInBracket

__all__ = [
    "ParamRatFunc",
    "AimProblem",
    "AimSequence",
    "EigenvalueEstimate",
    "aim_step",
    "iterate",
    "delta_k",
    "alpha_ratio",
    "solve_iterative",
]


@dataclass(frozen=True)
class ParamRatFunc:
    """Rational function whose numerator is affine in the trial parameter."""

    num_const: Poly
    num_slope: Poly
    den: Poly

    def substitute(self, value: Fraction) -> RatFunc:
        return RatFunc(self.num_const + self.num_slope * value, self.den)


@dataclass(frozen=True)
class AimProblem:
    """y'' = lambda0 y' + s0 y with one affine trial parameter."""

    lambda0: ParamRatFunc
    s0: ParamRatFunc
    domain: tuple[Fraction | None, Fraction | None] = (None, None)
    eval_point: Fraction | None = None


@dataclass(frozen=True)
class AimSequence:
    """Two consecutive recursion rows, parameter already numeric."""

    k: int
    lambda_k: RatFunc
    s_k: RatFunc
    lambda_km1: RatFunc
    s_km1: RatFunc


def aim_step(
    lambda_prev: RatFunc, s_prev: RatFunc, lambda0: RatFunc, s0: RatFunc
) -> tuple[RatFunc, RatFunc]:
    """One exact recursion step producing (lambda_k, s_k)."""
    lam = lambda_prev.derivative() + s_prev + lambda0 * lambda_prev
    s = s_prev.derivative() + s0 * lambda_prev
    return lam, s


def iterate(lambda0: RatFunc, s0: RatFunc, k: int) -> AimSequence:
    """Run the recursion up to level k >= 1 and return the last two rows."""
    if k < 1:
        raise ValueError("k must be >= 1")
    lam_prev, s_prev = lambda0, s0
    lam, s = aim_step(lam_prev, s_prev, lambda0, s0)
    for _ in range(1, k):
        lam_prev, s_prev = lam, s
        lam, s = aim_step(lam_prev, s_prev, lambda0, s0)
    return AimSequence(k, lam, s, lam_prev, s_prev)


def delta_k(seq: AimSequence) -> RatFunc:
    """Quantization determinant lambda_k s_{k-1} - lambda_{k-1} s_k."""
    return seq.lambda_k * seq.s_km1 - seq.lambda_km1 * seq.s_k


def alpha_ratio(seq: AimSequence, r0: Fraction) -> tuple[Fraction, Fraction]:
    """(s_k/lambda_k, s_{k-1}/lambda_{k-1}) at r0; equal pair means termination."""
    lam_k = seq.lambda_k.evaluate(r0)
    lam_km1 = seq.lambda_km1.evaluate(r0)
    if lam_k == 0 or lam_km1 == 0:
        raise EvaluationPole(f"lambda vanishes at r0 = {r0}; move the evaluation point")
    return seq.s_k.evaluate(r0) / lam_k, seq.s_km1.evaluate(r0) / lam_km1


@dataclass
class EigenvalueEstimate:
    """One tracked root of delta_k = 0 refined across iteration levels."""

    n: int
    value: Fraction
    k_used: int
    converged: bool
    history: list[tuple[int, Fraction]] = field(default_factory=list)


class _DeltaEvaluator:
    """Caches per-energy recursion rows; returns a sign-exact delta_k(r0, E).

    With lambda0 = a/S and s0 = b/S over a common denominator S, the
    iterates are lambda_k = p_k / S^{k+1}, s_k = q_k / S^{k+1} where

        p_k = p_{k-1}' S - k p_{k-1} S' + q_{k-1} S + a p_{k-1}
        q_k = q_{k-1}' S - k q_{k-1} S' + b p_{k-1}

    is a pure polynomial recursion (no gcd normalization needed), and

        delta_k(r0) = (p_k q_{k-1} - p_{k-1} q_k)(r0) / S(r0)^{2k+1}.

    Within one level k the S-power is a fixed nonzero constant, so the
    returned numerator value has the zeros of delta_k and, up to one fixed
    sign per level, its sign -- exactly what bisection needs.
    """

    def __init__(self, problem: AimProblem, r0: Fraction):
        self.problem = problem
        self.r0 = r0
        lam_den = problem.lambda0.den
        s_den = problem.s0.den
        g = poly_gcd(lam_den, s_den)
        self._den = lam_den * (s_den // g)
        self._den_prime = self._den.derivative()
        self._lam_scale = s_den // g
        self._s_scale = lam_den // g
        if self._den.evaluate(r0) == 0:
            raise EvaluationPole(f"denominator pole at r0 = {r0}")
        self._rows: dict[Fraction, list[tuple[Poly, Poly]]] = {}

    def delta(self, energy: Fraction, k: int) -> Fraction:
        rows = self._rows.get(energy)
        if rows is None:
            lam0 = self.problem.lambda0
            s0 = self.problem.s0
            p0 = (lam0.num_const + lam0.num_slope * energy) * self._lam_scale
            q0 = (s0.num_const + s0.num_slope * energy) * self._s_scale
            rows = [(p0, q0)]
            self._rows[energy] = rows
        while len(rows) <= k:
            i = len(rows)
            p_prev, q_prev = rows[-1]
            p = (
                p_prev.derivative() * self._den
                - i * (p_prev * self._den_prime)
                + q_prev * self._den
                + rows[0][0] * p_prev
            )
            q = (
                q_prev.derivative() * self._den
                - i * (q_prev * self._den_prime)
                + rows[0][1] * p_prev
            )
            rows.append((p, q))
        p_k, q_k = rows[k]
        p_km1, q_km1 = rows[k - 1]
        return p_k.evaluate(self.r0) * q_km1.evaluate(self.r0) - p_km1.evaluate(
            self.r0
        ) * q_k.evaluate(self.r0)


def _find_roots(
    f, lo: Fraction, hi: Fraction, scan_points: int, tol: Fraction
) -> list[Fraction]:
    """Sign-change scan on an open-interval grid plus exact bisection."""
    grid = [lo + (hi - lo) * Fraction(i, scan_points + 1) for i in range(1, scan_points + 1)]
    values = [f(x) for x in grid]
    roots: list[Fraction] = []
    for x, v in zip(grid, values):
        if v == 0:
            roots.append(x)
    for (a, fa), (b, fb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if fa == 0 or fb == 0 or (fa > 0) == (fb > 0):
            continue
        while b - a >= tol:
            mid = (a + b) / 2
            fm = f(mid)
            if fm == 0:
                a = b = mid
                break
            if (fm > 0) == (fa > 0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append((a + b) / 2)
    roots.sort()
    return roots


class _Tracker:
    __slots__ = ("value", "history", "converged", "missed")

    def __init__(self, k: int, value: Fraction):
        self.value = value
        self.history = [(k, value)]
        self.converged = False
        self.missed = 0


def solve_iterative(
    problem: AimProblem,
    r0: Fraction | None = None,
    bracket: tuple[Fraction, Fraction] = (Fraction(0), Fraction(1)),
    k_max: int = 40,
    tol: Fraction = Fraction(1, 10**8),
    scan_points: int = 64,
) -> list[EigenvalueEstimate]:
    """Locate eigenvalues as stabilized roots of delta_k inside the bracket.

    For each level k the bracket is scanned on an open grid of
    ``scan_points`` interior nodes, sign changes are refined by bisection to
    width < tol, and roots are matched to the roots of the previous level
    by proximity (ties toward the smaller root).  A root whose value agrees
    with its previous-level match to within tol is marked converged.
    The returned estimates are ordered by ascending value; ``n`` is the
    index in that ordering (bracket-relative, not the physical mode index).

    Raises NoRootInBracket when no sign change is ever found up to k_max.
    """
    if r0 is None:
        r0 = problem.eval_point
    if r0 is None:
        raise ValueError("no evaluation point given")
    lo, hi = bracket
    if not lo < hi:
        raise ValueError("empty bracket")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if scan_points < 2:
        raise ValueError("scan_points must be >= 2")

    evaluator = _DeltaEvaluator(problem, r0)
    trackers: list[_Tracker] = []
    found_any = False
    last_k = 0
    for k in range(1, k_max + 1):
        last_k = k
        roots = _find_roots(lambda E: evaluator.delta(E, k), lo, hi, scan_points, tol)
        if roots:
            found_any = True
        # greedy proximity matching, ties toward the smaller root
        pairs = sorted(
            (abs(root - t.value), root, ti)
            for root in roots
            for ti, t in enumerate(trackers)
        )
        used_roots: set[Fraction] = set()
        used_trackers: set[int] = set()
        new_tracker = False
        for _, root, ti in pairs:
            if root in used_roots or ti in used_trackers:
                continue
            used_roots.add(root)
            used_trackers.add(ti)
            t = trackers[ti]
            if abs(root - t.value) < tol:
                t.converged = True
            t.value = root
            t.history.append((k, root))
            t.missed = 0
        for root in roots:
            if root not in used_roots:
                trackers.append(_Tracker(k, root))
                new_tracker = True
        stale = []
        for ti, t in enumerate(trackers):
            if ti not in used_trackers and t.history[-1][0] != k:
                t.missed += 1
                if t.missed >= 2 and not t.converged:
                    stale.append(ti)
        for ti in reversed(stale):
            del trackers[ti]
        if trackers and not new_tracker and all(t.converged for t in trackers) and k >= 2:
            break

    if not found_any:
        raise NoRootInBracket(f"no sign change of delta_k in {bracket} by k = {k_max}")

    trackers.sort(key=lambda t: t.value)
    return [
        EigenvalueEstimate(
            n=i,
            value=t.value,
            k_used=t.history[-1][0],
            converged=t.converged,
            history=t.history,
        )
        for i, t in enumerate(trackers)
    ]
