import numpy as np
import pytest
from scipy.special import erf

from dnlslab.grid import (
    ComplexField,
    Grid,
    cumulative_integral,
    dealias_mask,
    derivative,
    differentiation_matrices,
    fourier_shift,
    integrate,
    l2_norm,
    h1_norm,
    random_smooth_field,
    real_inner,
    resample,
)


def direct_nonuniform_sample(grid, values, points):
    """Independent O(n^2) evaluation of the trigonometric interpolant."""
    n = grid.n
    coef = np.fft.fftshift(np.fft.fft(values)) / n
    m = np.arange(-n // 2, n // 2)
    k1 = np.pi / grid.half_width
    basis = np.exp(1j * k1 * np.outer(points + grid.half_width, m))
    return basis @ coef


def test_grid_layout():
    g = Grid(64, 10.0)
    assert g.dx == pytest.approx(20.0 / 64)
    assert np.allclose(g.nodes, -10.0 + g.dx * np.arange(64))
    assert g.nodes[32] == pytest.approx(0.0)


@pytest.mark.parametrize("n", [8, 15, 100, 0])
def test_grid_rejects_bad_sizes(n):
    with pytest.raises(ValueError):
        Grid(n, 10.0)


def test_complex_field_length_check():
    g = Grid(64, 10.0)
    with pytest.raises(ValueError):
        ComplexField(g, np.zeros(65))


def test_derivative_exact_on_trig():
    g = Grid(128, 5.0)
    k = 3 * np.pi / g.half_width
    u = np.sin(k * g.nodes)
    assert np.max(np.abs(derivative(g, u).real - k * np.cos(k * g.nodes))) < 1e-11
    assert np.max(np.abs(derivative(g, u, 2).real + k**2 * np.sin(k * g.nodes))) < 1e-10


def test_integrate_gaussian():
    g = Grid(512, 20.0)
    u = np.exp(-2.0 * g.nodes**2)
    assert integrate(g, u) == pytest.approx(np.sqrt(np.pi / 2.0), abs=1e-13)


def test_cumulative_integral_matches_erf():
    g = Grid(1024, 20.0)
    u = np.exp(-g.nodes**2)
    expected = 0.5 * np.sqrt(np.pi) * (erf(g.nodes) - erf(-g.half_width))
    assert np.max(np.abs(cumulative_integral(g, u) - expected)) < 1e-12


def test_cumulative_integral_inverts_derivative(rng):
    # integrate a spectral derivative of a decaying field: recovers the field
    g = Grid(512, 15.0)
    v = random_smooth_field(g, rng).real
    u = derivative(g, v).real
    got = cumulative_integral(g, u)
    assert np.max(np.abs(got - (v - v[0]))) < 1e-11


def test_inner_products():
    g = Grid(256, 10.0)
    u = np.exp(-g.nodes**2) * (1 + 2j)
    assert real_inner(g, u, u) == pytest.approx(l2_norm(g, u) ** 2, rel=1e-13)
    # (iu, u) = 0 for any u
    assert abs(real_inner(g, 1j * u, u)) < 1e-14
    assert h1_norm(g, u) > l2_norm(g, u)


def test_fourier_shift_by_lattice_step():
    g = Grid(128, 10.0)
    u = np.exp(-g.nodes**2) * np.exp(1j * g.nodes)
    shifted = fourier_shift(g, u, 5 * g.dx)
    assert np.max(np.abs(shifted - np.roll(u, -5))) < 1e-12


def test_resample_against_direct_sum(rng):
    g = Grid(256, 12.0)
    u = random_smooth_field(g, rng)
    for lam, shift in [(1.0, 0.7), (1.05, -0.3), (0.93, 1.1)]:
        got = resample(g, u, lam, shift)
        want = direct_nonuniform_sample(g, u, lam * g.nodes + shift)
        assert np.max(np.abs(got - want)) < 1e-9


def test_resample_derivative_order(rng):
    g = Grid(256, 12.0)
    u = random_smooth_field(g, rng)
    got = resample(g, u, 1.02, 0.4, order=1)
    uprime = derivative(g, u)
    want = direct_nonuniform_sample(g, uprime, 1.02 * g.nodes + 0.4)
    assert np.max(np.abs(got - want)) < 1e-8


def test_resample_round_trip(rng):
    g = Grid(512, 15.0)
    u = random_smooth_field(g, rng)
    v = resample(g, u, 1.04, 0.5)
    w = resample(g, v, 1 / 1.04, -0.5 / 1.04)
    assert np.max(np.abs(w - u)) < 1e-9


def test_dealias_mask():
    g = Grid(128, 10.0)
    mask = dealias_mask(g)
    assert mask[0]
    kept = np.abs(g.wavenumbers[mask])
    assert np.max(kept) <= 2.0 / 3.0 * g.k_max + 1e-12
    with pytest.raises(ValueError):
        dealias_mask(g, 0.0)


def test_differentiation_matrices_consistent(rng):
    g = Grid(64, 8.0)
    d1, d2 = differentiation_matrices(g)
    u = random_smooth_field(g, rng).real
    assert np.max(np.abs(d1 @ u - derivative(g, u).real)) < 1e-11
    assert np.max(np.abs(d2 @ u - derivative(g, u, 2).real)) < 1e-10
    assert np.max(np.abs(d1 + d1.T)) < 1e-12
    assert np.max(np.abs(d2 - d2.T)) < 1e-12


def test_random_smooth_field_properties():
    g = Grid(256, 20.0)
    u1 = random_smooth_field(g, np.random.default_rng(7))
    u2 = random_smooth_field(g, np.random.default_rng(7))
    assert np.array_equal(u1, u2)
    assert np.max(np.abs(u1)) == pytest.approx(1.0)
    assert abs(u1[0]) < 1e-10  # decays at the box edge
