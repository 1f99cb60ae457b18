"""
Acceptance: Initial Value Problems
==================================
Closed-form problems at t = 1, containment along the trajectory and the
order of plain Euler
"""
import mpmath
import pytest

from conftest import to_mpf
from exactreal.models.dyadic import ONE
from exactreal.services.ode import euler_fixed, fixtures, relaxation, solve_ivp, solve_ivp_trace

mpmath.mp.prec = 200


def closed_form(name: str, t):
    if name == "constant_slope":
        return t
    if name == "decay":
        return mpmath.mpf(0)
    return 1 - mpmath.exp(-t / 2)


class TestClosedForms:
    """Each fixture within 2^-n at t = 1"""

    @pytest.mark.parametrize("n", [2, 6, 10])
    def test_fixtures(self, n):
        """n up to 10 in the default run"""
        for problem in fixtures():
            value = solve_ivp(problem, ONE, n)
            assert abs(to_mpf(value) - closed_form(problem.name, mpmath.mpf(1))) <= mpmath.mpf(2) ** -n

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [14, 20])
    def test_fixtures_high_precision(self, n):
        """n up to 20, exponential in n"""
        for problem in fixtures():
            value = solve_ivp(problem, ONE, n)
            assert abs(to_mpf(value) - closed_form(problem.name, mpmath.mpf(1))) <= mpmath.mpf(2) ** -n


class TestContainment:
    """The enclosure at every Euler node contains the solution"""

    @pytest.mark.parametrize("n", [4, 8])
    def test_every_node(self, n):
        """All three fixtures, all nodes"""
        for problem in fixtures():
            for node in solve_ivp_trace(problem, n):
                exact = closed_form(problem.name, to_mpf(node.t))
                assert abs(to_mpf(node.value.center) - exact) <= to_mpf(node.value.radius)


class TestConvergenceOrder:
    """Plain Euler is first order"""

    def test_ratio(self):
        """Error ratios between successive step doublings lie in [1.5, 3]"""
        exact = closed_form("relaxation", mpmath.mpf(1))
        errors = [abs(to_mpf(euler_fixed(relaxation(), ONE, steps, 64)) - exact) for steps in (32, 64, 128, 256)]
        for coarse, fine in zip(errors, errors[1:]):
            assert 1.5 <= coarse / fine <= 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
