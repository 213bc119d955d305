from fractions import Fraction as F

import pytest

from aimnu.aim import (
    AimProblem,
    AimSequence,
    ParamRatFunc,
    aim_step,
    alpha_ratio,
    delta_k,
    iterate,
    solve_iterative,
)
from aimnu.algebra import Poly, RatFunc
from aimnu.catalog import catalog_get
from aimnu.errors import EvaluationPole, NoRootInBracket
from aimnu.hypergeometric import eigenvalue, to_aim_form

R = Poly.variable()
TOL = F(1, 10**8)


def _hermite_rows(kappa):
    lam0 = RatFunc(Poly([0, 2]))
    s0 = RatFunc(Poly.const(-2 * kappa))
    return lam0, s0


class TestRecursion:
    def test_first_step_hermite(self):
        lam0, s0 = _hermite_rows(F(3))
        lam1, s1 = aim_step(lam0, s0, lam0, s0)
        assert lam1 == RatFunc(Poly([-4, 0, 4]))  # 4r^2 - 2k + 2 at k = 3
        assert s1 == RatFunc(Poly([0, -12]))  # -4kr

    def test_iterate_returns_last_two_rows(self):
        lam0, s0 = _hermite_rows(F(1))
        seq = iterate(lam0, s0, 2)
        assert seq.k == 2
        lam1, s1 = aim_step(lam0, s0, lam0, s0)
        assert (seq.lambda_km1, seq.s_km1) == (lam1, s1)
        assert (seq.lambda_k, seq.s_k) == aim_step(lam1, s1, lam0, s0)

    def test_iterate_rejects_k_zero(self):
        lam0, s0 = _hermite_rows(F(1))
        with pytest.raises(ValueError):
            iterate(lam0, s0, 0)


class TestDelta:
    def test_delta1_hermite_closed_form(self):
        for kappa in (F(-1), F(0), F(1, 2), F(1), F(5, 3)):
            seq = iterate(*_hermite_rows(kappa), 1)
            assert delta_k(seq) == RatFunc(Poly.const(4 * kappa * (kappa - 1)))

    def test_delta_vanishes_at_integer_modes(self):
        for n in range(4):
            for k in range(n + 1, 7):
                seq = iterate(*_hermite_rows(F(n)), k)
                assert delta_k(seq).evaluate(F(1)) == 0

    def test_delta_nonzero_off_spectrum(self):
        seq = iterate(*_hermite_rows(F(1, 2)), 3)
        assert delta_k(seq).evaluate(F(1)) != 0

    def test_antisymmetry_under_row_swap(self):
        seq = iterate(*_hermite_rows(F(1, 3)), 2)
        swapped = AimSequence(seq.k, seq.lambda_km1, seq.s_km1, seq.lambda_k, seq.s_k)
        assert delta_k(swapped) == -delta_k(seq)


class TestAlphaRatio:
    def test_equal_pair_on_spectrum(self):
        seq = iterate(*_hermite_rows(F(1)), 1)
        a, b = alpha_ratio(seq, F(1))
        assert a == b == F(-1)

    def test_unequal_pair_off_spectrum(self):
        seq = iterate(*_hermite_rows(F(1, 2)), 1)
        a, b = alpha_ratio(seq, F(1))
        assert a == F(-2, 5) and b == F(-1, 2)
        assert a != b

    def test_vanishing_lambda_raises(self):
        seq = iterate(*_hermite_rows(F(1)), 1)
        with pytest.raises(EvaluationPole):
            alpha_ratio(seq, F(0))  # lambda_0 = 2r vanishes at 0


class TestSolveIterative:
    def test_hermite_bracket(self):
        problem = to_aim_form(catalog_get("hermite"))
        estimates = solve_iterative(problem, F(1), (F(-1, 2), F(3, 2)), tol=TOL)
        assert len(estimates) >= 2
        assert all(e.converged for e in estimates)
        for target in (F(0), F(1)):
            assert any(abs(e.value - target) < 10 * TOL for e in estimates)
        values = [e.value for e in estimates]
        assert values == sorted(values)
        assert [e.n for e in estimates] == list(range(len(estimates)))

    def test_morse_single_root(self):
        problem = catalog_get("morse")  # alpha=1, beta=5/2; eigenvalues 2, 1, 0, ...
        estimates = solve_iterative(to_aim_form(problem), F(1), (F(3, 2), F(5, 2)), tol=TOL)
        assert any(e.converged and abs(e.value - 2) < 10 * TOL for e in estimates)

    def test_no_root_in_bracket(self):
        problem = to_aim_form(catalog_get("morse"))
        with pytest.raises(NoRootInBracket):
            solve_iterative(problem, F(1), (F(10), F(11)), k_max=6, scan_points=16)

    def test_pole_at_evaluation_point(self):
        problem = to_aim_form(catalog_get("morse"))  # sigma = r vanishes at 0
        with pytest.raises(EvaluationPole):
            solve_iterative(problem, F(0), (F(0), F(4)))

    def test_representation_invariance(self):
        # scaling numerator and denominator polynomials together must not
        # move any root of the quantization determinant
        problem = to_aim_form(catalog_get("morse"))
        scaled = AimProblem(
            ParamRatFunc(
                problem.lambda0.num_const * 3,
                problem.lambda0.num_slope * 3,
                problem.lambda0.den * 3,
            ),
            ParamRatFunc(
                problem.s0.num_const * 3,
                problem.s0.num_slope * 3,
                problem.s0.den * 3,
            ),
            problem.domain,
            problem.eval_point,
        )
        a = solve_iterative(problem, F(1), (F(0), F(4)), tol=TOL)
        b = solve_iterative(scaled, F(1), (F(0), F(4)), tol=TOL)
        assert [e.value for e in a] == [e.value for e in b]

    def test_input_validation(self):
        problem = to_aim_form(catalog_get("hermite"))
        with pytest.raises(ValueError):
            solve_iterative(problem, F(1), (F(1), F(0)))
        with pytest.raises(ValueError):
            solve_iterative(problem, F(1), (F(0), F(1)), tol=F(0))
        with pytest.raises(ValueError):
            solve_iterative(problem, F(1), (F(0), F(1)), scan_points=1)
        with pytest.raises(ValueError):
            solve_iterative(AimProblem(problem.lambda0, problem.s0), None, (F(0), F(1)))

    def test_agrees_with_closed_form(self):
        problem = catalog_get("kratzer")
        estimates = solve_iterative(
            to_aim_form(problem), F(1), (F(1, 5), F(1)), tol=TOL
        )
        closed = {eigenvalue(problem, n) for n in range(4)}
        targets = [v for v in closed if F(1, 5) < v < F(1)]
        assert targets
        for v in targets:
            assert any(e.converged and abs(e.value - v) < 10 * TOL for e in estimates)
