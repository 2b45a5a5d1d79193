import json
from fractions import Fraction

import numpy as np
import pytest

from superint.diffop import darboux_chain, dressed_ladder, oscillator_ladders
from superint.exactmath import WeightedFunction, X, below_ground_seed
from superint.potentials import (
    CallablePotential,
    Convention,
    extend_oscillator,
    oscillator,
    q18_potential,
    vd_potential,
)
from superint.spectral import (
    GridConfig,
    eigenvalues,
    inner_product,
    ladder_states,
    norm_squared,
    rayleigh_quotient,
)

PSI0 = WeightedFunction(X * (3 + 2 * X**2) / (1 + 2 * X**2), -1)
CHI = WeightedFunction(1 / (1 + 2 * X**2), -1)


def test_grid_config_defaults_and_validation():
    cfg = GridConfig()
    assert cfg.n == 4001 and cfg.half_width == 12 and cfg.spacing == pytest.approx(24 / 4000)
    assert cfg.points()[2000] == 0
    with pytest.raises(ValueError):
        GridConfig(n=4000)


def test_grid_points_from_environment(monkeypatch):
    monkeypatch.setenv("SUPERINT_GRID_POINTS", "2001")
    assert GridConfig.from_env().n == 2001
    monkeypatch.delenv("SUPERINT_GRID_POINTS")
    assert GridConfig.from_env().n == 4001


def test_oscillator_levels():
    s = eigenvalues(oscillator(), count=4)
    assert np.max(np.abs(s.eigenvalues - [1, 3, 5, 7])) < 1e-6


def test_half_convention_oscillator():
    s = eigenvalues(oscillator(Convention.HALF_P2), count=3)
    assert np.max(np.abs(s.eigenvalues - [0.5, 1.5, 2.5])) < 1e-6


@pytest.mark.parametrize("ms, levels", [
    ((2,), [-5, 1, 3, 5, 7]),
    ((4,), [-9, 1, 3, 5, 7]),
    ((2, 3), [-7, -5, 1, 3, 5]),
])
def test_extension_levels_within_estimated_error(ms, levels):
    s = eigenvalues(extend_oscillator(ms), count=5)
    err = np.abs(s.eigenvalues - levels)
    assert np.all(err <= s.estimated_error)
    assert np.all(s.estimated_error < 1e-5)
    assert s.strictly_increasing()


def test_q18_x_part_levels():
    xp, _ = q18_potential()
    s = eigenvalues(xp, count=4)
    assert np.max(np.abs(s.eigenvalues - np.array([-5, 13, 19, 25]) / 6)) < 1e-6


def test_callable_potential():
    v = CallablePotential(lambda x: x**2, Convention.FULL_D2)
    s = eigenvalues(v, count=3)
    assert np.max(np.abs(s.eigenvalues - [1, 3, 5])) < 1e-6


def test_singular_potential_names_point():
    v = CallablePotential(lambda x: 1 / x, Convention.FULL_D2)
    with pytest.raises(ValueError, match=r"singular on the grid at x = 0\.0"):
        eigenvalues(v, count=1)


@pytest.mark.parametrize("beta, levels", [(1, [2.5, 4.5, 6.5]), (3, [3.5, 5.5, 7.5])])
def test_singular_oscillator_half_line(beta, levels):
    """alpha1 = 2: -D^2/2 + x^2/2 + beta/x^2 with l(l+1) = 2 beta gives E = 2n + l + 3/2."""
    v = vd_potential("d2", alpha1=2, hbar=1, beta=beta)
    s = eigenvalues(v, count=3)
    assert np.all(np.abs(s.eigenvalues - levels) <= s.estimated_error)
    assert s.cutoff_sensitivity < 1e-8


def test_half_line_cutoff_is_reported():
    """With beta = 0 the Dirichlet wall sits at the cutoff, which shifts levels at first order."""
    v = vd_potential("d2", alpha1=2, hbar=1, beta=0)
    s = eigenvalues(v, count=3)
    assert 1e-5 < s.cutoff_sensitivity < 1e-3
    assert np.all(np.abs(s.eigenvalues - [1.5, 3.5, 5.5]) < 3 * s.cutoff_sensitivity)


def test_spectrum_serialization():
    s = eigenvalues(oscillator(), GridConfig(n=801), count=2)
    lines = s.to_csv().splitlines()
    assert lines[0] == "index,eigenvalue,error" and len(lines) == 3
    data = json.loads(json.dumps(s.to_json()))
    assert data["convention"] == "FullD2" and len(data["eigenvalues"]) == 2


# -- zero modes, ladders and quadrature ----------------------------------------

def test_zero_modes_are_normalizable():
    for f in (PSI0, CHI):
        r = norm_squared(f)
        assert r.normalizable and np.isfinite(r.value) and r.value > 0
    assert not norm_squared(WeightedFunction(1, 1)).normalizable


def test_gaussian_norm():
    assert norm_squared(WeightedFunction(1, -1)).value == pytest.approx(np.sqrt(np.pi), rel=1e-12)


def test_oscillator_ladder_gram_is_identity():
    _, b_dag = oscillator_ladders()
    ls = ladder_states(b_dag, WeightedFunction(1, -1), 3)
    assert np.max(np.abs(ls.gram - np.eye(3))) < 1e-8
    assert ls.annihilated_at is None


def test_dressed_ladder_states():
    a, a_dag = dressed_ladder(darboux_chain([below_ground_seed(2)]))
    ls = ladder_states(a_dag, PSI0, 3)
    assert np.max(np.abs(ls.gram - np.eye(3))) < 1e-8
    xp, _ = q18_potential()
    H = xp.hamiltonian()
    energies = [rayleigh_quotient(H, st) for st in ls.states]
    assert np.max(np.abs(np.array(energies) - (Fraction(13, 6) + np.arange(3)).astype(float))) < 1e-6


def test_raising_operator_kills_chi():
    _, a_dag = dressed_ladder(darboux_chain([below_ground_seed(2)]))
    assert a_dag(CHI).is_zero()
    ls = ladder_states(a_dag, CHI, 3)
    assert ls.annihilated_at == 0 and len(ls.states) == 1


def test_rayleigh_quotient_matches_eigenvalue_for_chi():
    xp, _ = q18_potential()
    e = rayleigh_quotient(xp.hamiltonian(), CHI)
    assert abs(e - eigenvalues(xp, count=1).eigenvalues[0]) < 1e-6


def test_inner_product_orthogonality():
    assert abs(inner_product(PSI0, CHI)) < 1e-12  # odd times even
