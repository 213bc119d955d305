"""Self-verification suites.

Every suite re-derives its expected values through an independent route
(printed spectrum formulas, explicit low-order polynomials, Rodrigues
generation, exact residuals of the original equations) and compares with
the solver output by exact rational equality, except where an iterative
bisection tolerance is part of the contract.  All random draws are seeded,
so repeated runs are reproducible bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import aim, catalog, eigenfunctions, hypergeometric, nu
from .algebra import Poly, RatFunc
from .errors import NoRationalReduction

__all__ = ["CheckResult", "SUITES", "run_suites"]

F = Fraction
TOL = F(1, 10**8)


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _result(suite: str, name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, bool(ok), detail)


def _proportional(a: Poly, b: Poly) -> bool:
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return a * b.leading == b * a.leading


def _random_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        v = F(rng.randint(-9, 9), rng.randint(1, 4))
        if v != 0 or not nonzero:
            return v


# ----------------------------------------------------------------------


def suite_table1() -> list[CheckResult]:
    """Every classical catalog entry reproduces its spectrum exactly, n = 0..20."""
    out = []
    for entry in catalog.catalog_list():
        problem = catalog.catalog_get(entry.name)
        ok = all(
            hypergeometric.eigenvalue(problem, n)
            == catalog.expected_eigenvalue(entry.name, None, n)
            for n in range(21)
        )
        out.append(_result("table1", entry.name, ok))
    return out


def suite_gamma_sequence() -> list[CheckResult]:
    """gamma_n reproduces the first four closed forms for 100 random (tau, sigma)."""
    rng = random.Random(20240101)
    bad = 0
    for _ in range(100):
        tau = Poly([_random_fraction(rng), _random_fraction(rng)])
        sigma = Poly([_random_fraction(rng), _random_fraction(rng), _random_fraction(rng)])
        if sigma.is_zero:
            sigma = Poly.const(1)
        tp = tau.coeff(1)
        spp = 2 * sigma.coeff(2)
        expected = [F(0), -tp, -2 * tp - spp, -3 * tp - 3 * spp]
        for n in range(4):
            if hypergeometric.gamma_n(tau, sigma, n) != expected[n]:
                bad += 1
    return [_result("gamma", "low-order closed forms, 100 random cases", bad == 0, f"{bad} mismatches")]


def _morse_cases() -> list[tuple[Fraction, Fraction]]:
    rng = random.Random(20240102)
    cases = []
    while len(cases) < 5:
        alpha = F(rng.randint(1, 6), rng.randint(1, 3))
        beta = F(rng.randint(3, 12), rng.randint(1, 2))
        if (alpha, beta) not in cases:
            cases.append((alpha, beta))
    return cases


def suite_morse() -> list[CheckResult]:
    out = []
    ok = True
    for alpha, beta in _morse_cases():
        params = {"alpha": alpha, "beta": beta}
        problem = catalog.catalog_get("morse", params)
        for n in range(6):
            if hypergeometric.eigenvalue(problem, n) != beta - (F(n) + F(1, 2)) * alpha:
                ok = False
    out.append(_result("morse", "closed-form spectrum, 5 random (alpha, beta), n <= 5", ok))

    ok = True
    detail = ""
    for alpha, beta in _morse_cases():
        params = {"alpha": alpha, "beta": beta}
        problem = hypergeometric.to_aim_form(catalog.catalog_get("morse", params))
        estimates = aim.solve_iterative(
            problem, F(1), (beta - 2 * alpha, beta), k_max=40, tol=TOL
        )
        for n in range(2):
            expected = beta - (F(n) + F(1, 2)) * alpha
            if not any(
                e.converged and abs(e.value - expected) < TOL for e in estimates
            ):
                ok = False
                detail = f"missing root {expected} for alpha={alpha}, beta={beta}"
    out.append(_result("morse", "iterative roots within 1e-8, n = 0, 1", ok, detail))
    return out


def _hulthen_y_printed(n: int, q: Fraction, e: Fraction) -> Poly:
    """Printed low-order closed forms of the deformed Hulthen eigenfunctions."""
    if n == 0:
        return Poly.const(1)
    if n == 1:
        return Poly([-(2 * e + 1), (2 * e + 3) * q])
    return Poly(
        [
            2 * (2 * e * e + 3 * e) + 2,
            -8 * (e + 1) * (e + 2) * q,
            2 * (e + 2) * (2 * e + 5) * q * q,
        ]
    )


def suite_hulthen() -> list[CheckResult]:
    out = []
    ok = True
    rng = random.Random(20240103)
    for _ in range(5):
        q = F(rng.randint(1, 4), rng.randint(1, 3))
        beta2 = F(rng.randint(1, 30), rng.randint(1, 2))
        problem = catalog.catalog_get("hulthen", {"q": q, "beta2": beta2})
        for n in range(6):
            expected = (beta2 - q * (n + 1) ** 2) / (2 * q * (n + 1))
            if hypergeometric.eigenvalue(problem, n) != expected:
                ok = False
    out.append(_result("hulthen", "closed-form spectrum, 5 random (q, beta2)", ok))

    ok = True
    for q in (F(1), F(1, 2), F(3)):
        for e in (F(1, 3), F(2), F(-1, 5)):
            for n in range(3):
                if eigenfunctions.hulthen_eigenfunction(n, q, e) != _hulthen_y_printed(n, q, e):
                    ok = False
    out.append(_result("hulthen", "terminating-series forms match printed y0..y2", ok))

    ok = True
    q, beta2 = F(1), F(25)
    problem = catalog.catalog_get("hulthen", {"q": q, "beta2": beta2})
    sigma = problem.sigma
    for n in range(4):
        eps = hypergeometric.eigenvalue(problem, n)
        tau = problem.tau.substitute(eps)
        series = eigenfunctions.hulthen_eigenfunction(n, q, eps)
        solved = eigenfunctions.polynomial_solution(tau, sigma, n).poly
        if not _proportional(series, solved):
            ok = False
    out.append(_result("hulthen", "series route agrees with coefficient recursion, n <= 3", ok))
    return out


def suite_kratzer() -> list[CheckResult]:
    out = []
    rng = random.Random(20240104)
    ok_spec = True
    ok_res = True
    for _ in range(5):
        A = F(rng.randint(1, 9), rng.randint(1, 3))
        lam = F(rng.randint(0, 5), rng.randint(1, 2))
        params = {"A": A, "Lambda": lam}
        problem = catalog.catalog_get("kratzer", params)
        for n in range(6):
            eps = hypergeometric.eigenvalue(problem, n)
            if eps != A / (2 * (n + lam + 1)):
                ok_spec = False
            # residual of the original transformed equation, not of gamma_n
            tau = problem.tau.substitute(eps)
            gamma = A - 2 * (lam + 1) * eps
            y = eigenfunctions.polynomial_solution(tau, problem.sigma, n).poly
            if not eigenfunctions.ode_residual(tau, problem.sigma, gamma, y).is_zero:
                ok_res = False
    out.append(_result("kratzer", "derived spectrum A/(2(n+Lambda+1))", ok_spec))
    out.append(_result("kratzer", "exact residual of the transformed equation", ok_res))
    return out


_THREE_WAY_ENTRIES = (
    "hermite",
    "laguerre",
    "legendre",
    "chebyshev_a",
    "chebyshev_b",
    "gegenbauer",
    "hyperspherical",
    "bessel",
    "generalized_bessel",
)


def suite_eigenfunctions() -> list[CheckResult]:
    out = []
    for name in _THREE_WAY_ENTRIES:
        problem = catalog.catalog_get(name)
        tau = problem.tau.const  # parameter-free for all these entries
        sigma = problem.sigma
        ok = True
        detail = ""
        weight = eigenfunctions.pearson_weight(tau, sigma).weight
        pearson = RatFunc(tau - sigma.derivative(), sigma)
        if weight.log_derivative() != pearson:
            ok = False
            detail = "Pearson residual nonzero"
        for n in range(9):
            solved = eigenfunctions.polynomial_solution(tau, sigma, n).poly
            rod = eigenfunctions.rodrigues(tau, sigma, n)
            if not _proportional(solved, rod):
                ok = False
                detail = f"recursion vs Rodrigues differ at n={n}"
            if n <= 3:
                explicit = eigenfunctions.y_low_order(tau, sigma, n)
                if not _proportional(solved, explicit):
                    ok = False
                    detail = f"recursion vs explicit differ at n={n}"
        out.append(_result("eigenfunctions", f"three-way agreement: {name}", ok, detail))
    return out


def suite_nu() -> list[CheckResult]:
    out = []
    rng = random.Random(20240105)
    ok = True
    for _ in range(100):
        tau = Poly([_random_fraction(rng), _random_fraction(rng)])
        sigma = Poly([_random_fraction(rng), _random_fraction(rng), _random_fraction(rng)])
        if sigma.is_zero:
            sigma = Poly.const(1)
        for n in range(21):
            if nu.nu_lambda_n(tau, sigma, n) != hypergeometric.gamma_n(tau, sigma, n):
                ok = False
    out.append(_result("nu", "eigenparameter identity vs gamma_n, 100 random, n <= 20", ok))

    ok = True
    recovered = 0
    attempts = 0
    while recovered < 50 and attempts < 500:
        attempts += 1
        tau = Poly([_random_fraction(rng), _random_fraction(rng)])
        sigma = Poly([_random_fraction(rng), _random_fraction(rng), _random_fraction(rng)])
        pi = Poly([_random_fraction(rng), _random_fraction(rng)])
        k0 = _random_fraction(rng)
        if sigma.degree < 1 or (tau - sigma.derivative()).is_zero:
            continue
        tau_tilde = tau - 2 * pi
        half = (sigma.derivative() - tau_tilde) * F(1, 2)
        sigma_tilde = half * half + k0 * sigma - (pi - half) * (pi - half)
        try:
            candidates = nu.nu_find_k(nu.NuProblem(tau_tilde, sigma, sigma_tilde))
        except NoRationalReduction:
            continue  # degenerate draw (e.g. sigma a perfect square family)
        if any(c.k == k0 and c.pi == pi for c in candidates):
            recovered += 1
        else:
            ok = False
    out.append(
        _result("nu", "round-trip recovery of (k, pi), 50 random constructions", ok and recovered == 50)
    )

    ok = True
    for n in range(6):
        def lambda_gap(E: Fraction, n: int = n) -> Fraction:
            problem = nu.NuProblem(Poly(), Poly.const(1), Poly([2 * E, 0, -1]))
            lam_n, reduction = nu.nu_solve(problem, n)
            return reduction.lambda_bar - lam_n

        g0, g1 = lambda_gap(F(0)), lambda_gap(F(1))
        energy = -g0 / (g1 - g0)  # gap is affine in E
        if energy != F(n) + F(1, 2) or lambda_gap(energy) != 0:
            ok = False
    out.append(_result("nu", "oscillator pipeline yields E = n + 1/2, n <= 5", ok))
    return out


def suite_delta() -> list[CheckResult]:
    out = []
    problem = hypergeometric.to_aim_form(catalog.catalog_get("hermite"))
    # delta_1 is a quadratic polynomial in the trial constant; checking it
    # against 4k(k-1) at seven points proves the identity
    ok = True
    for kappa in (F(-2), F(-1), F(0), F(1, 2), F(1), F(3), F(7, 3)):
        seq = aim.iterate(problem.lambda0.substitute(kappa), problem.s0.substitute(kappa), 1)
        delta = aim.delta_k(seq)
        if delta != RatFunc(Poly.const(4 * kappa * (kappa - 1))):
            ok = False
    out.append(_result("delta", "delta_1 = 4k(k-1) for the Hermite form", ok))

    ok = True
    for n in range(5):
        lam0 = problem.lambda0.substitute(F(n))
        s0 = problem.s0.substitute(F(n))
        for k in range(n + 1, 9):
            seq = aim.iterate(lam0, s0, k)
            if aim.delta_k(seq).evaluate(F(1)) != 0:
                ok = False
    out.append(_result("delta", "delta_k vanishes at integer modes for k >= n+1", ok))
    return out


def suite_aim_consistency() -> list[CheckResult]:
    cases = {
        "morse": (F(1), (F(0), F(4))),
        "hulthen": (F(1, 2), (F(0), F(3))),
        "kratzer": (F(1), (F(1, 5), F(1))),
        "hermite": (F(1), (F(-1, 2), F(3, 2))),
    }
    out = []
    for name, (r0, bracket) in cases.items():
        problem = catalog.catalog_get(name)
        estimates = aim.solve_iterative(
            hypergeometric.to_aim_form(problem), r0, bracket, k_max=40, tol=TOL
        )
        closed = {hypergeometric.eigenvalue(problem, n) for n in range(6)}
        targets = [v for v in closed if bracket[0] < v < bracket[1]]
        ok = all(
            any(e.converged and abs(e.value - v) < 10 * TOL for e in estimates)
            for v in targets
        )
        out.append(_result("aim", f"iterative agrees with closed form: {name}", ok))
    return out


SUITES = {
    "table1": suite_table1,
    "gamma": suite_gamma_sequence,
    "morse": suite_morse,
    "hulthen": suite_hulthen,
    "kratzer": suite_kratzer,
    "eigenfunctions": suite_eigenfunctions,
    "nu": suite_nu,
    "delta": suite_delta,
    "aim": suite_aim_consistency,
}


def run_suites(substring: str | None = None) -> list[CheckResult]:
    """Run all suites whose key contains ``substring`` (all when None)."""
    results: list[CheckResult] = []
    for key, fn in SUITES.items():
        if substring is None or substring in key:
            results.extend(fn())
    return results
