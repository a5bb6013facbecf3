import math

import numpy as np
import pytest

from chaincp.casimir import (
    continuum_decay_constant,
    cp_energy,
    cp_energy_continuum,
    decay_profile,
    ecp_force,
    force_curve,
)
from chaincp.errors import InvalidRegime
from chaincp.lattice import SymmetricSystem


def fig_system(delta=-1.0, J=0.3, lam=0.01, R=1, N=200):
    return SymmetricSystem.from_detuning(delta=delta, J=J, lam=lam, R=R, N=N)


def test_cp_energy_frozen_values():
    # hand-evaluated: a = -0.6, q = 1/3, prefactor lam^2/(delta sqrt(1-a^2))
    sys_ = fig_system()
    assert cp_energy(sys_, 1) == pytest.approx(-4.166666666666667e-05, rel=1e-12)
    assert cp_energy(sys_, 2) == pytest.approx(-1.388888888888889e-05, rel=1e-12)
    assert ecp_force(sys_, 1) == pytest.approx(-2.777777777777778e-05, rel=1e-12)


def test_cp_energy_frozen_value_other_detuning():
    sys_ = fig_system(delta=-2.0, J=0.6)
    assert ecp_force(sys_, 1) == pytest.approx(-1.3888888888888889e-05, rel=1e-12)


def test_energy_and_force_are_negative():
    sys_ = fig_system(J=0.4)
    for r in range(1, 30):
        assert cp_energy(sys_, r) < 0.0
        assert ecp_force(sys_, r) < 0.0


def test_force_is_the_literal_energy_difference():
    sys_ = fig_system(J=0.35)
    for r in (1, 4, 9):
        assert ecp_force(sys_, r) == -(cp_energy(sys_, r + 1) - cp_energy(sys_, r))


def test_energy_decays_geometrically():
    sys_ = fig_system()
    ratio = 1.0 / 3.0  # q at a = -0.6
    for r in range(1, 25):
        assert cp_energy(sys_, r + 1) / cp_energy(sys_, r) == pytest.approx(ratio, rel=1e-12)


def test_coupling_scaling_is_exactly_quadratic():
    # doubling lam multiplies lam**2 by exactly 4, a power of two, so the
    # computed energies must scale with no rounding at all
    weak = fig_system(lam=0.01)
    strong = fig_system(lam=0.02)
    for r in (1, 3, 7):
        assert cp_energy(strong, r) == 4.0 * cp_energy(weak, r)
        assert ecp_force(strong, r) == 4.0 * ecp_force(weak, r)


def test_separation_validation():
    sys_ = fig_system()
    with pytest.raises(ValueError):
        cp_energy(sys_, 0)
    with pytest.raises(TypeError):
        cp_energy(sys_, 2.0)


def test_force_curve_matches_pointwise():
    sys_ = fig_system(J=0.4)
    curve = force_curve(sys_, 2, 8)
    assert curve.separations() == list(range(2, 9))
    for rec in curve.records:
        assert rec.energy == cp_energy(sys_, rec.R)
        assert rec.force == ecp_force(sys_, rec.R)
    assert curve.forces() == [rec.force for rec in curve.records]


def test_force_curve_range_validation():
    sys_ = fig_system(N=20)
    with pytest.raises(ValueError):
        force_curve(sys_, 5, 3)
    with pytest.raises(ValueError):
        force_curve(sys_, 1, 20)  # force at 20 needs the energy at 21 > N
    with pytest.raises(ValueError):
        force_curve(sys_, 0, 5)


def test_decay_profile_reproduces_the_force():
    sys_ = fig_system(J=0.4)
    prof = decay_profile(sys_)
    for r in range(1, 20):
        modelled = prof.amplitude * math.exp(-prof.gamma * r)
        assert ecp_force(sys_, r) == pytest.approx(modelled, rel=1e-10)


def test_decay_profile_frozen_rate():
    prof = decay_profile(fig_system())
    assert prof.gamma == pytest.approx(math.log(3.0), rel=1e-14)
    assert prof.rc == pytest.approx(1.0 / math.log(3.0), rel=1e-14)
    assert prof.amplitude < 0.0


def test_decay_profile_flat_band_limit():
    prof = decay_profile(fig_system(J=0.0))
    assert prof.gamma == math.inf
    assert prof.rc == 0.0
    assert math.isfinite(prof.amplitude)
    # amplitude * exp(-inf * R) is still exactly zero
    assert prof.amplitude * math.exp(-prof.gamma * 1) == 0.0


def test_flat_band_has_no_interaction():
    sys_ = fig_system(J=0.0)
    for r in (1, 2, 10):
        assert cp_energy(sys_, r) == 0.0
        assert ecp_force(sys_, r) == 0.0


def test_force_grows_with_hopping():
    for r in (1, 2, 5):
        forces = [abs(ecp_force(fig_system(J=float(j)), r))
                  for j in np.linspace(0.01, 0.49, 25)]
        assert all(f2 > f1 for f1, f2 in zip(forces, forces[1:]))


def test_force_shrinks_with_detuning():
    for r in (1, 2, 5):
        forces = [abs(ecp_force(fig_system(delta=float(d)), r))
                  for d in np.linspace(-0.7, -3.0, 25)]
        assert all(f2 < f1 for f1, f2 in zip(forces, forces[1:]))


def test_decay_rate_falls_towards_the_band_edge():
    gammas = [decay_profile(fig_system(J=-float(a) / 2.0, N=50)).gamma
              for a in np.linspace(-0.99, -0.01, 100)]
    assert all(g2 > g1 for g1, g2 in zip(gammas, gammas[1:]))


def test_continuum_decay_constant_frozen_value():
    # edge distance 0.1, J = 0.45: b = sqrt(2)/3
    sys_ = fig_system(J=0.45)
    assert continuum_decay_constant(sys_) == pytest.approx(0.4714045207910317, rel=1e-14)


def test_continuum_needs_a_dispersive_band():
    with pytest.raises(InvalidRegime):
        continuum_decay_constant(fig_system(J=0.0))
    with pytest.raises(InvalidRegime):
        cp_energy_continuum(fig_system(J=0.0), 1)


def test_continuum_tracks_the_lattice_result_near_the_edge():
    # a = -0.9 is close enough to the band edge for percent-level agreement
    sys_ = fig_system(J=0.45)
    for r in (1, 2, 4):
        exact = cp_energy(sys_, r)
        approx = cp_energy_continuum(sys_, r)
        assert approx == pytest.approx(exact, rel=0.1)
    # deep below the band it parts ways with the true decay rate
    far = fig_system(J=0.3)
    b_far = continuum_decay_constant(far)
    gamma_far = decay_profile(far).gamma
    assert abs(b_far - gamma_far) / gamma_far > 0.04
