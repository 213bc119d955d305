from fractions import Fraction as F

import pytest

from aimnu.algebra import Poly, RatFunc
from aimnu.errors import AmbiguousBranch, NoRationalReduction, NotHypergeometricType
from aimnu.hypergeometric import gamma_n
from aimnu.nu import NuProblem, NuReduction, build_phi, nu_find_k, nu_lambda_n, nu_solve

R = Poly.variable()


class TestValidation:
    def test_degree_bounds(self):
        with pytest.raises(NotHypergeometricType):
            NuProblem(R * R, Poly.const(1), Poly())
        with pytest.raises(NotHypergeometricType):
            NuProblem(Poly(), Poly.const(1), R**3)
        with pytest.raises(NotHypergeometricType):
            NuProblem(Poly(), Poly(), Poly())


class TestFindK:
    def test_oscillator_candidates(self):
        # tauTilde = 0, sigma = 1, sigmaTilde = 2E - r^2 at E = 5/2
        problem = NuProblem(Poly(), Poly.const(1), Poly([F(5), 0, -1]))
        candidates = nu_find_k(problem)
        assert {c.k for c in candidates} == {F(5)}
        assert {c.pi for c in candidates} == {R, -R}
        by_pi = {c.pi: c for c in candidates}
        assert by_pi[R].lambda_bar == 6 and by_pi[R].tau == 2 * R
        assert by_pi[-R].lambda_bar == 4 and by_pi[-R].tau == -2 * R

    def test_identically_vanishing_radicand(self):
        # sigmaTilde = ((sigma')/2)^2 forces k = 0 with pi = sigma'/2
        problem = NuProblem(Poly(), R * R, R * R)
        candidates = nu_find_k(problem)
        assert len(candidates) == 1
        assert candidates[0].k == 0
        assert candidates[0].pi == R
        assert candidates[0].lambda_bar == 1

    def test_one_parameter_family_rejected(self):
        # every k gives a perfect square but no discrete choice exists
        problem = NuProblem(Poly(), R * R, 5 * R * R)
        with pytest.raises(NoRationalReduction):
            nu_find_k(problem)

    def test_irrational_square_root_rejected(self):
        # k = 0 is the only discriminant root but sqrt(2) r^2 is irrational
        problem = NuProblem(Poly(), Poly.const(1), -2 * R * R)
        with pytest.raises(NoRationalReduction):
            nu_find_k(problem)

    def test_round_trip_construction(self):
        sigma = Poly([0, 1, -1])
        pi = Poly([1, -2])
        k0 = F(3)
        tau = Poly([2, -5])
        tau_tilde = tau - 2 * pi
        half = (sigma.derivative() - tau_tilde) * F(1, 2)
        sigma_tilde = half * half + k0 * sigma - (pi - half) * (pi - half)
        candidates = nu_find_k(NuProblem(tau_tilde, sigma, sigma_tilde))
        assert any(c.k == k0 and c.pi == pi for c in candidates)


class TestLambdaN:
    def test_matches_gamma_n(self):
        cases = [
            (Poly([0, -2]), Poly.const(1)),
            (Poly([1, -1]), R),
            (Poly([0, -3]), Poly([1, 0, -1])),
        ]
        for tau, sigma in cases:
            for n in range(8):
                assert nu_lambda_n(tau, sigma, n) == gamma_n(tau, sigma, n)

    def test_degree_check(self):
        with pytest.raises(NotHypergeometricType):
            nu_lambda_n(R * R, Poly.const(1), 1)


class TestBuildPhi:
    def test_gaussian_factor(self):
        phi = build_phi(-R, Poly.const(1))
        assert phi.log_derivative() == RatFunc(-R)
        # exp(-r^2/2)
        assert phi.exp_arg == RatFunc(R * R * F(-1, 2))

    def test_power_factor(self):
        phi = build_phi(Poly.const(2), R)  # phi = r^2
        assert phi.log_derivative() == RatFunc(Poly.const(2), R)

    def test_identity_general(self):
        pi, sigma = Poly([1, -2]), Poly([0, 1, -1])
        phi = build_phi(pi, sigma)
        assert phi.log_derivative() == RatFunc(pi, sigma)


class TestSolve:
    def test_oscillator_spectrum(self):
        # the bound-state condition lambdaBar = lambdaBar_n singles out E = n + 1/2
        for n in range(4):
            def gap(E, n=n):
                problem = NuProblem(Poly(), Poly.const(1), Poly([2 * E, 0, -1]))
                lam_n, reduction = nu_solve(problem, n)
                assert reduction.tau_slope < 0
                return reduction.lambda_bar - lam_n

            g0, g1 = gap(F(0)), gap(F(1))
            assert -g0 / (g1 - g0) == F(n) + F(1, 2)

    def test_inconsistent_mode(self):
        # sigmaTilde = -r^2: reduction exists but lambdaBar_n never matches at n = 0
        problem = NuProblem(Poly(), Poly.const(1), -R * R)
        lam0, reduction = nu_solve(problem, 0)
        assert reduction.k == 0 and reduction.pi == -R
        assert reduction.lambda_bar == -1
        assert lam0 == 0
        assert reduction.lambda_bar != lam0

    def test_ambiguous_branch(self):
        problem = NuProblem(Poly(), R * R, R * R)  # single branch with tau' = 2 > 0
        with pytest.raises(AmbiguousBranch):
            nu_solve(problem, 1)

    def test_explicit_selector(self):
        problem = NuProblem(Poly(), R * R, R * R)
        lam1, chosen = nu_solve(problem, 1, branch_selector=lambda cs: cs[0])
        assert isinstance(chosen, NuReduction)
        assert chosen.k == 0
        assert lam1 == gamma_n(chosen.tau, problem.sigma, 1)
