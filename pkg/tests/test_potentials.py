from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from oracles import X2, Y2, extension_expr, rf_expr, same, third_order_commutator, x
from superint.exactmath import Polynomial, RationalFunction, X, pseudo_hermite, wronskian
from superint.potentials import (
    P4_RATIONAL_EXAMPLE,
    Convention,
    DivisionByZeroSolution,
    ExtensionSpec,
    NotAP4Solution,
    Potential1D,
    Q18Params,
    SingularExtensionError,
    deleting_equivalent,
    extend_oscillator,
    extend_oscillator_via_seeds,
    is_regular,
    is_solution,
    n3_determining_residuals,
    oscillator,
    painleve_residual,
    q18_potential,
    to_full_d2,
    vd_potential,
)

REGULAR_SMALL = [ms for ms in [(0,), (2,), (4,), (0, 1), (0, 3), (0, 5), (2, 3), (2, 5), (4, 5)]]


# -- extension specs -----------------------------------------------------------

@pytest.mark.parametrize("ms, expected", [((2,), True), ((2, 3), True), ((1,), False),
                                          ((), True), ((2, 4), False), ((0, 1, 2), True)])
def test_regularity_rule(ms, expected):
    assert is_regular(ExtensionSpec(ms)) is expected


def test_spec_validation():
    with pytest.raises(ValueError):
        ExtensionSpec((3, 2))
    with pytest.raises(ValueError):
        ExtensionSpec((-1,))


def test_deleted_indices():
    assert ExtensionSpec((2,)).deleted_indices() == [1, 2]
    assert ExtensionSpec((2, 3)).deleted_indices() == [2, 3]


# -- rational extensions -------------------------------------------------------

def test_extend_one_step_closed_form():
    v = extend_oscillator((2,))
    assert v.quadratic == 1 and v.constant == -2
    assert v.rational_part == 8 * (2 * X**2 - 1) / (2 * X**2 + 1) ** 2
    assert v.convention == Convention.FULL_D2


def test_extend_empty_spec_is_oscillator():
    v = extend_oscillator(())
    assert v.as_rational() == RationalFunction(X**2)


def test_extend_two_step_wronskian():
    w = wronskian([pseudo_hermite(2), pseudo_hermite(3)]).base.as_polynomial()
    # direct 2x2 expansion: H2 * 6 H2 - H2' * H3
    assert w == Polynomial([24, 0, 0, 0, 32])
    v = extend_oscillator((2, 3))
    assert v.constant == -4
    assert v.rational_part == RationalFunction(w.derivative(), w).derivative() * -2


@pytest.mark.parametrize("ms", [(2,), (4,), (2, 3), (0, 3)])
def test_extend_matches_symbolic_oracle(ms):
    assert same(rf_expr(extend_oscillator(ms).as_rational()), extension_expr(ms))


def test_extend_numeric_second_difference():
    """-2 (log W)'' by a central difference of log W at sample points."""
    v = extend_oscillator((2,))
    h = 1e-3
    for t in [-1.7, -0.4, 0.0, 0.9, 2.3]:
        logw = [np.log(4 * s * s + 2) + s * s / 2 for s in (t - h, t, t + h)]
        second = (logw[0] - 2 * logw[1] + logw[2]) / h**2
        assert abs(v(t) - (t * t - 2 * second)) < 1e-5


@pytest.mark.parametrize("ms", [(1,), (2, 4), (1, 2)])
def test_extend_irregular_spec(ms):
    with pytest.raises(SingularExtensionError, match="singular extension"):
        extend_oscillator(ms)


@pytest.mark.parametrize("ms", REGULAR_SMALL)
def test_regular_extensions_have_no_real_poles(ms):
    v = extend_oscillator(ms)
    assert v.real_pole_count() == 0 and v.is_regular()
    assert extend_oscillator_via_seeds(ExtensionSpec(ms)).as_rational() == v.as_rational()


@pytest.mark.parametrize("m", [0, 2, 4, 6])
def test_one_step_denominator_profile(m):
    v = extend_oscillator((m,))
    if m == 0:
        assert v.rational_part.is_zero()
        return
    assert v.rational_part.den.monic() == (pseudo_hermite(m) ** 2).monic()
    assert v.rational_part.num.degree == v.rational_part.den.degree - 2


@pytest.mark.parametrize("ms", [ms for ms in REGULAR_SMALL if ms[-1] >= len(ms)])
def test_state_deleting_shift_identity(ms):
    spec = ExtensionSpec(ms)
    diff = deleting_equivalent(spec).minus(extend_oscillator(spec))
    assert diff.is_constant() and diff.constant_value() == 2 * spec.mk + 2


def test_deleting_precondition():
    with pytest.raises(ValueError, match="m_k >= k"):
        deleting_equivalent((0, 1))


def test_potential_json_round_trip():
    v = extend_oscillator((2, 3))
    assert Potential1D.from_json(v.to_json()) == v


def test_minus_rejects_mixed_conventions():
    with pytest.raises(ValueError):
        oscillator().minus(oscillator(Convention.HALF_P2))


# -- Painleve residuals --------------------------------------------------------

def _p4_rhs_sympy(f, alpha, beta, z):
    fp = sp.diff(f, z)
    return fp**2 / (2 * f) + sp.Rational(3, 2) * f**3 + 4 * z * f**2 + 2 * (z**2 - alpha) * f + beta / f


def test_p4_rational_solution_is_exact():
    res = painleve_residual(4, P4_RATIONAL_EXAMPLE, (5, -8))
    assert res.is_zero()
    assert is_solution(4, P4_RATIONAL_EXAMPLE, (5, -8))
    assert not is_solution(4, P4_RATIONAL_EXAMPLE, (5, -7))


def test_p4_residual_matches_sympy_for_wrong_parameters():
    f = rf_expr(P4_RATIONAL_EXAMPLE)
    ref = sp.diff(f, x, 2) - _p4_rhs_sympy(f, 3, -8, x)
    assert same(rf_expr(painleve_residual(4, P4_RATIONAL_EXAMPLE, (3, -8))), ref)


def test_trivial_residuals():
    assert painleve_residual(1, RationalFunction(0)) == -X
    assert painleve_residual(2, RationalFunction(0), (0,)).is_zero()


@pytest.mark.parametrize("which, params", [(3, (1, 1, 1, 1)), (4, (1, 1)), (5, (1, 1, 1, 1)), (6, (1, 1, 1, 1))])
def test_division_by_zero_solution(which, params):
    with pytest.raises(DivisionByZeroSolution, match="division by zero solution"):
        painleve_residual(which, RationalFunction(0), params)


def test_param_arity_is_checked():
    with pytest.raises(ValueError):
        painleve_residual(4, X, (1,))


def test_known_rational_solutions_of_other_equations():
    # P2 with alpha = 1 has f = -1/z; P4 with (alpha, beta) = (1, -2/9)... use the simple -2z at (0, -2)
    assert painleve_residual(2, -1 / X, (1,)).is_zero()
    assert painleve_residual(4, -2 * X, (0, -2)).is_zero()


def test_numeric_residual_of_rational_solution():
    f = P4_RATIONAL_EXAMPLE
    res = painleve_residual(4, lambda z: f(z), (5, -8))
    zs = np.linspace(0.3, 3, 12)
    assert np.max(np.abs(res(zs))) < 1e-6


@pytest.mark.parametrize("which, params", [(1, ()), (2, (Fraction(1, 2),))])
def test_residual_linear_in_second_derivative(which, params):
    """Exact residual of f + eps*g minus that of f equals eps*g'' plus terms without g''."""
    f, g, eps = X**2 + 1, X**3, Fraction(1, 1000)
    base = painleve_residual(which, f, params)
    pert = painleve_residual(which, f + g * eps, params)
    delta = pert - base - g.derivative(2) * eps
    # what remains comes from the right-hand side only, evaluated on f + eps*g
    if which == 1:
        expected = -6 * ((f + g * eps) ** 2 - f**2)
    else:
        expected = -2 * ((f + g * eps) ** 3 - f**3) - X * g * eps
    assert delta == expected


# -- Q18 and the Painleve-dressed potentials -----------------------------------

def test_q18_unit_instance():
    xp, yp = q18_potential()
    assert xp.convention == Convention.HALF_P2
    assert xp.as_rational() == X**2 / 2 + 4 * (2 * X**2 - 1) / (2 * X**2 + 1) ** 2 + Fraction(2, 3)
    assert yp.as_rational() == X**2 / 2


@pytest.mark.parametrize("hbar, omega", [(1, 1), (2, 3), (Fraction(1, 2), 5), (3, Fraction(2, 7))])
def test_q18_matches_closed_form_instance(hbar, omega):
    h, w = Fraction(hbar), Fraction(omega)
    xp, _ = q18_potential(Q18Params(h, w))
    d = 2 * w * X**2 + h
    expected = w**2 / 2 * X**2 - 8 * h**3 * w / d**2 + 4 * h**2 * w / d + 2 * h * w / 3
    assert xp.as_rational() == expected


def test_q18_bridge_to_extension():
    xp, _ = q18_potential()
    half = extend_oscillator((2,)).as_rational() * Fraction(1, 2)
    diff = xp.as_rational() - half
    assert diff.is_constant() and diff.constant_value() == Fraction(5, 3)


@pytest.mark.parametrize("omega", [2, 4, Fraction(9, 4)])
def test_q18_omega_covariance(omega):
    w = Fraction(omega)
    base, _ = q18_potential()
    scaled, _ = q18_potential(Q18Params(1, w))
    for t in [Fraction(1, 3), Fraction(-2), Fraction(5, 7)]:
        # V_w(t) = w * V_1(sqrt(w) t): compare squares only through even functions
        rhs = w * base.as_rational().substitute_square(w)(t)
        assert scaled.as_rational()(t) == rhs


def test_q18_rejects_non_solution():
    with pytest.raises(NotAP4Solution, match="not a P4 solution"):
        q18_potential(Q18Params(p4_solution=RationalFunction(X), alpha=5, beta=-8))


def test_q18_offset_override():
    xp, _ = q18_potential(Q18Params(offset=Fraction(0)))
    ref, _ = q18_potential()
    assert (ref.as_rational() - xp.as_rational()) == RationalFunction(Fraction(-4, 3))


def test_full_d2_map_of_q18_x_part():
    xp, _ = q18_potential()
    full = to_full_d2(xp)
    diff = full.as_rational() - extend_oscillator((2,)).as_rational()
    assert diff == RationalFunction(Fraction(10, 3))


def test_vd_examples():
    assert vd_potential("d1", alpha1=1, hbar=1).as_rational() == X**2 / 2
    d2 = vd_potential("d2", alpha1=2, hbar=1, beta=0)
    assert d2.half_line and d2.as_rational() == X**2 / 2
    flagged = vd_potential("d2", alpha1=2, hbar=1, beta=Fraction(-1, 4))
    assert flagged.notes
    assert not vd_potential("d2", alpha1=2, hbar=1, beta=1).notes


def test_vd3_differs_from_q18_by_constant():
    d3 = vd_potential("d3", alpha1=1, hbar=1, p4_solution=P4_RATIONAL_EXAMPLE, epsilon=1,
                      p4_params=(5, -8))
    xp, _ = q18_potential()
    diff = d3.as_rational() - xp.as_rational()
    assert diff.is_constant()


# -- third-order determining equations -----------------------------------------

OSC = (X2**2 + Y2**2) / 2
OSC_INTEGRALS = [
    ({"120": sp.Rational(1, 2)}, -X2**2 * Y2 / 2, X2**3 / 2),
    ({"300": 1}, sp.Integer(0), sp.Integer(0)),
    ({"102": sp.Rational(1, 2)}, -Y2**3 / 2, X2 * Y2**2 / 2),
]


def test_determining_residuals_trivial():
    r = n3_determining_residuals(sp.Integer(0), {}, 0, 0)
    assert r.max() == 0


@pytest.mark.parametrize("A, g1, g2", OSC_INTEGRALS)
def test_oscillator_integrals_commute_directly(A, g1, g2):
    assert third_order_commutator(OSC, A, g1, g2) == 0


@pytest.mark.parametrize("A, g1, g2", OSC_INTEGRALS)
def test_oscillator_integrals_solve_determining_equations(A, g1, g2):
    assert n3_determining_residuals(OSC, A, g1, g2).max() < 1e-10


def test_wrong_integral_fails_both_routes():
    A, g1, g2 = {"120": sp.Rational(1, 2)}, -X2**2 * Y2 / 2, X2**3
    assert third_order_commutator(OSC, A, g1, g2) != 0
    assert n3_determining_residuals(OSC, A, g1, g2).max() > 0.1


def test_determining_residuals_callable_mode():
    A, g1, g2 = OSC_INTEGRALS[0]
    f1 = sp.lambdify((X2, Y2), g1)
    f2 = sp.lambdify((X2, Y2), g2)
    r = n3_determining_residuals(lambda a, b: (a * a + b * b) / 2, A, f1, f2)
    assert r.max() < 1e-6


def test_determining_residual_perturbation_is_linear():
    A, g1, g2 = OSC_INTEGRALS[0]
    eps = sp.Rational(1, 1000)
    r = n3_determining_residuals(OSC, A, g1 + eps * X2, g2)
    assert abs(r.max_norms()["det1a"] - 1e-3) < 1e-12
    assert np.allclose(r.det1a, 1e-3, atol=1e-12)
