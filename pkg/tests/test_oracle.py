import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from chaincp.casimir import cp_energy
from chaincp.errors import DimensionError, InvalidRegime, NonConvergence
from chaincp.lattice import ChainParams, ImpurityConfig, SymmetricSystem, brillouin_modes, dispersion
from chaincp.oracle import (
    SingleElectronMatrix,
    build_matrix,
    cp_energy_ed,
    cp_energy_quadrature,
    exact_diagonalize,
    write_triplets,
)


def fig_system(delta=-1.0, J=0.3, lam=0.01, R=1, N=200):
    return SymmetricSystem.from_detuning(delta=delta, J=J, lam=lam, R=R, N=N)


def test_matrix_shape_and_symmetry():
    chain = ChainParams(omega=2.0, J=0.3, N=6)
    imps = ImpurityConfig(eps1=0.9, eps2=1.1, lambda0=0.01, lambda_r=0.02, R=3)
    mat = build_matrix(chain, imps)
    assert mat.dim == 15
    assert mat.basis_labels[:2] == ("imp1", "imp2")
    assert mat.basis_labels[2] == "site[-6]"
    assert mat.basis_labels[-1] == "site[6]"
    assert np.array_equal(mat.matrix, mat.matrix.T)


def test_matrix_entries():
    chain = ChainParams(omega=2.0, J=0.3, N=4)
    imps = ImpurityConfig(eps1=0.9, eps2=1.1, lambda0=0.01, lambda_r=0.02, R=2)
    h = build_matrix(chain, imps).matrix
    site0 = 2 + 4
    assert h[0, 0] == 0.9 and h[1, 1] == 1.1
    assert h[0, site0] == 0.01          # impurity 1 onto site 0
    assert h[1, site0 + 2] == 0.02      # impurity 2 onto site R
    assert h[0, 1] == 0.0               # no direct impurity-impurity term
    # chain diagonal and hopping, including the periodic bond
    assert np.all(np.diag(h)[2:] == 2.0)
    for j in range(2, h.shape[0] - 1):
        assert h[j, j + 1] in (-0.3, 0.0, 0.01, 0.02)
    assert h[2, h.shape[0] - 1] == -0.3
    # each chain row couples to exactly two neighbours
    chain_block = h[2:, 2:]
    assert np.all((chain_block == -0.3).sum(axis=0) == 2)


def test_matrix_rejects_offchain_separation():
    chain = ChainParams(omega=2.0, J=0.3, N=4)
    imps = ImpurityConfig(eps1=1.0, eps2=1.0, lambda0=0.01, lambda_r=0.01, R=5)
    with pytest.raises(DimensionError):
        build_matrix(chain, imps)


def test_exact_diagonalize_orthonormal_ascending():
    sys_ = fig_system(N=30)
    result = exact_diagonalize(build_matrix(sys_.chain, sys_.impurities))
    assert np.all(np.diff(result.energies) >= 0)
    gram = result.vectors.T @ result.vectors
    assert_allclose(gram, np.eye(result.energies.size), atol=1e-12)


def test_exact_diagonalize_rejects_tiny_matrices():
    mat = SingleElectronMatrix(matrix=np.eye(2), basis_labels=("a", "b"))
    with pytest.raises(ValueError):
        exact_diagonalize(mat)


def test_decoupled_impurities_leave_the_chain_spectrum_alone():
    chain = ChainParams(omega=2.0, J=0.3, N=25)
    imps = ImpurityConfig(eps1=1.0, eps2=1.0, lambda0=0.0, lambda_r=0.0, R=5)
    result = exact_diagonalize(build_matrix(chain, imps))
    ring = np.sort(dispersion(chain, brillouin_modes(chain)))
    expected = np.sort(np.concatenate(([1.0, 1.0], ring)))
    assert_allclose(result.energies, expected, atol=1e-12)


def test_three_site_ring_eigenvalues():
    # N = 1: ring eigenvalues are omega - 2J and a double omega + J
    chain = ChainParams(omega=2.0, J=0.3, N=1)
    imps = ImpurityConfig(eps1=1.0, eps2=1.0, lambda0=0.0, lambda_r=0.0, R=1)
    result = exact_diagonalize(build_matrix(chain, imps))
    assert_allclose(result.energies, [1.0, 1.0, 1.4, 2.3, 2.3], atol=1e-13)


def test_diagonalisation_is_deterministic():
    sys_ = fig_system(N=40)
    a = exact_diagonalize(build_matrix(sys_.chain, sys_.impurities))
    b = exact_diagonalize(build_matrix(sys_.chain, sys_.impurities))
    assert np.array_equal(a.energies, b.energies)
    assert np.array_equal(a.vectors, b.vectors)


def test_exactly_two_levels_bind_below_the_band():
    sys_ = fig_system(N=40, R=4)
    result = exact_diagonalize(build_matrix(sys_.chain, sys_.impurities))
    below = result.energies < sys_.chain.band_bottom
    assert below.sum() == 2


def test_ground_state_lives_on_the_even_combination():
    sys_ = fig_system(N=60, R=2)
    result = exact_diagonalize(build_matrix(sys_.chain, sys_.impurities))
    assert result.even_impurity_overlap() > 0.999
    assert result.splitting > 0.0


def test_ed_energy_matches_closed_form():
    sys_ = fig_system(N=200)
    for r in (1, 2, 3):
        ed = cp_energy_ed(sys_, r)
        closed = cp_energy(sys_, r)
        assert abs(ed - closed) / abs(closed) < 1e-2


def test_ed_systematics_shrink_with_chain_length():
    # the N-dependent part of the estimate is the ring image, geometric in
    # N; past that it settles onto its (N-independent) fourth-order floor
    values = [cp_energy_ed(fig_system(N=n, R=2), 2) for n in (8, 16, 32, 64)]
    drifts = [abs(v2 - v1) for v1, v2 in zip(values, values[1:])]
    assert drifts[0] > drifts[1] > drifts[2]
    assert drifts[2] < 1e-10


def test_ed_separation_cap():
    sys_ = fig_system(N=40)
    with pytest.raises(ValueError):
        cp_energy_ed(sys_, 11)  # N // 4 = 10
    with pytest.raises(ValueError):
        cp_energy_ed(sys_, 2, r_ref=2)


def test_ed_scaling_is_quadratic_up_to_fourth_order():
    # doubling the coupling must quadruple the second-order energy; the
    # diagonalisation keeps all orders, so allow twice the fourth-order
    # fraction (lam/gap)^2 of the stronger coupling as slack
    weak = cp_energy_ed(fig_system(lam=0.01, N=120), 2)
    strong = cp_energy_ed(fig_system(lam=0.02, N=120), 2)
    slack = 2.0 * (0.02 / 0.4) ** 2
    assert abs(strong / weak - 4.0) / 4.0 < slack


def test_ed_warns_when_systematics_bite():
    # lam / gap = 0.25: fourth-order term (lam/gap)^2 > 5%
    sys_ = fig_system(lam=0.1, N=80)
    with pytest.warns(UserWarning):
        cp_energy_ed(sys_, 1)


@pytest.mark.parametrize("J,R", [(0.3, 1), (0.3, 5), (0.4, 3), (0.45, 2)])
def test_quadrature_matches_closed_form(J, R):
    sys_ = fig_system(J=J)
    assert cp_energy_quadrature(sys_, R) == pytest.approx(cp_energy(sys_, R), rel=1e-12)


def test_quadrature_survives_deep_cancellation():
    # at R = 20 the integrand's mean is nine orders above the answer; a
    # float64 accumulation would be stuck near 1e-7 relative error
    sys_ = fig_system(J=0.3)
    assert cp_energy_quadrature(sys_, 20) == pytest.approx(cp_energy(sys_, 20), rel=1e-12)


def test_quadrature_at_zero_separation_gives_the_shift_scale():
    # R = 0 closes the integral to lam^2 / (delta sqrt(1 - a^2))
    sys_ = fig_system(J=0.3)
    expected = sys_.lam ** 2 / (sys_.delta * math.sqrt(1.0 - sys_.a ** 2))
    assert cp_energy_quadrature(sys_, 0) == pytest.approx(expected, rel=1e-12)


def test_quadrature_point_budget():
    sys_ = fig_system(J=0.3)
    with pytest.raises(NonConvergence):
        cp_energy_quadrature(sys_, 1, max_points=64)


def test_quadrature_rejects_flat_band_and_bad_separation():
    with pytest.raises(InvalidRegime):
        cp_energy_quadrature(fig_system(J=0.0), 1)
    with pytest.raises(ValueError):
        cp_energy_quadrature(fig_system(), -1)


def test_write_triplets_round_trip(tmp_path):
    chain = ChainParams(omega=2.0, J=0.3, N=5)
    imps = ImpurityConfig(eps1=0.9, eps2=1.1, lambda0=0.01, lambda_r=0.02, R=2)
    mat = build_matrix(chain, imps)
    path = tmp_path / "h.triplets"
    write_triplets(mat, path)

    lines = path.read_text().splitlines()
    dim = int(lines[0].split()[0])
    rebuilt = np.zeros((dim, dim))
    for line in lines[1:]:
        i, j, value = line.split()
        rebuilt[int(i), int(j)] = float(value)
        rebuilt[int(j), int(i)] = float(value)
    assert np.array_equal(rebuilt, mat.matrix)

    # a second dump is byte-identical
    other = tmp_path / "h2.triplets"
    write_triplets(mat, other)
    assert path.read_bytes() == other.read_bytes()
