"""Band-structure extraction: secular functions, dispersion, edges.

Irrational reference roots were frozen from an independent fine-step
scan-and-bisect oracle (1e-4 grid, 200 bisections); rational ones (n pi,
(n + 1/2) pi) are exact statements about the secular functions.
"""

import math

import numpy as np
import pytest

from deltacomb import (
    BlochParams,
    CombCouplings,
    InvalidLatticeSpacingError,
    PerfectReflectionError,
    QuadratureConfig,
    RootScanError,
    ScatteringAmplitudes,
    band_edges,
    band_rhs,
    band_structure,
    delta_amplitudes,
    delta_prime_amplitudes,
    dispersion,
    spectral_function,
    spectral_function_general,
)
from deltacomb.bands import _scan_roots

FREE = CombCouplings(w0=0.0, w1=0.0, a=1.0)
MIXED = CombCouplings(w0=0.0, w1=1.0, a=1.0)  # Omega = gamma = 0
KP = CombCouplings(w0=10.0, w1=0.0, a=1.0)

# Kronig-Penney w0 = 10, a = 1: first three roots at theta = 0 and theta = pi.
# k = 2 pi (theta = 0) and k = pi, 3 pi (theta = pi) are exact; the others are
# oracle values.
KP_ROOTS_0 = (2.284453709564703, 2.0 * math.pi, 7.463676172029721)
KP_ROOTS_PI = (math.pi, 4.761288969346805, 3.0 * math.pi)


def _free_amps(k):
    return ScatteringAmplitudes(t=1.0, rR=0.0, rL=0.0, k=k)


# ------------------------------------------------------------------- types


def test_bloch_params():
    bp = BlochParams(theta=math.pi / 2.0, a=2.0)
    assert bp.q == math.pi / 4.0
    with pytest.raises(ValueError):
        BlochParams(theta=3.5, a=1.0)
    with pytest.raises(InvalidLatticeSpacingError):
        BlochParams(theta=0.0, a=0.0)


# ---------------------------------------------------------------- band_rhs


def test_band_rhs_free_is_cosine():
    for k in (0.3, 1.0, 2.7, 9.1):
        assert band_rhs(_free_amps, k, 1.5) == pytest.approx(
            math.cos(1.5 * k), abs=1e-12
        )


def test_band_rhs_kronig_penney():
    w0 = 10.0
    for k in (0.5, 1.3, 4.0, 12.0):
        expected = math.cos(k) + (w0 / (2.0 * k)) * math.sin(k)
        got = band_rhs(lambda kk: delta_amplitudes(w0, kk), k, 1.0)
        assert got == pytest.approx(expected, abs=1e-12)


def test_band_rhs_delta_prime_closed_form():
    # for Omega != 0 the RHS equals -(cos ka + (gamma/2k) sin ka)/Omega
    rng = np.random.default_rng(42)
    for _ in range(50):
        w0 = rng.uniform(0.0, 8.0)
        w1 = rng.uniform(1.1, 2.5) * rng.choice((-1.0, 1.0))
        a = rng.uniform(0.3, 3.0)
        k = rng.uniform(0.05, 20.0)
        c = CombCouplings(w0=w0, w1=w1, a=a)
        rhs = band_rhs(lambda kk, c=c: delta_prime_amplitudes(c, kk), k, a)
        closed = -(math.cos(k * a) + 0.5 * c.gamma * math.sin(k * a) / k) / c.omega
        assert abs(rhs - closed) <= 1e-10 * max(1.0, abs(closed))


def test_band_rhs_perfect_reflection():
    refl = CombCouplings(w0=2.0, w1=1.0, a=1.0)  # t = 0 identically
    with pytest.raises(PerfectReflectionError):
        band_rhs(lambda k: delta_prime_amplitudes(refl, k), 1.0, 1.0)


def test_band_rhs_rejects_non_unitary_amplitudes():
    def bogus(k):
        return ScatteringAmplitudes(t=0.5, rR=0.3, rL=0.3, k=k)

    with pytest.raises(ValueError):
        band_rhs(bogus, 1.0, 1.0)
    with pytest.raises(InvalidLatticeSpacingError):
        band_rhs(_free_amps, 1.0, 0.0)


# ------------------------------------------------------- secular functions


def test_spectral_function_limits_and_examples():
    assert spectral_function(FREE, 0.0, 0.0) == 0.0
    # Omega = -1, gamma = 2: limit is -1 + 1 + gamma a/2 = 1
    c = CombCouplings.from_reduced(omega=-1.0, gamma=2.0, a=1.0)
    assert spectral_function(c, 0.0, 0.0) == pytest.approx(1.0, abs=1e-15)
    # mixed comb: g = cos(ka) for every theta
    for theta in (0.0, 1.0, math.pi):
        for k in (0.5, 2.0, 11.0):
            assert spectral_function(MIXED, k, theta) == math.cos(k)
    with pytest.raises(ValueError):
        spectral_function(FREE, -1.0, 0.0)


def test_spectral_function_general_free():
    for theta, k in ((0.0, 1.0), (1.2, 0.4), (math.pi, 3.3)):
        f = spectral_function_general(_free_amps, k, 1.0, theta)
        expected = 2.0 * (math.cos(theta) - math.cos(k))
        assert abs(f - expected) <= 1e-12


def test_general_secular_vanishes_at_closed_form_roots():
    # the two secular functions differ by a nonvanishing prefactor, so the
    # closed-form roots must annihilate the amplitude-based one
    rng = np.random.default_rng(777)
    for _ in range(100):
        w0 = rng.uniform(0.1, 8.0)
        w1 = rng.uniform(-2.5, 2.5)
        if abs(abs(w1) - 1.0) < 1e-3:
            w1 = 1.5
        a = rng.uniform(0.3, 3.0)
        theta = rng.uniform(0.0, math.pi)
        c = CombCouplings(w0=w0, w1=w1, a=a)
        for k in dispersion(c, theta, 2):
            f = spectral_function_general(
                lambda kk, c=c: delta_prime_amplitudes(c, kk), k, a, theta
            )
            assert abs(f) <= 1e-10


# -------------------------------------------------------------- dispersion


def test_dispersion_free_comb():
    ks = dispersion(FREE, math.pi / 2.0, 3)
    for got, expected in zip(ks, (0.5 * math.pi, 1.5 * math.pi, 2.5 * math.pi)):
        assert abs(got - expected) <= 1e-10


def test_dispersion_is_exactly_even_in_theta():
    for theta in (0.4, 1.3, 2.9):
        assert dispersion(KP, theta, 3) == dispersion(KP, -theta, 3)


def test_dispersion_kronig_penney_frozen_roots():
    got0 = dispersion(KP, 0.0, 3)
    gotpi = dispersion(KP, math.pi, 3)
    for got, expected in zip(got0, KP_ROOTS_0):
        assert abs(got - expected) <= 1e-10
    for got, expected in zip(gotpi, KP_ROOTS_PI):
        assert abs(got - expected) <= 1e-10
    # every root satisfies the Kronig-Penney band equation
    for theta, roots in ((0.0, got0), (math.pi, gotpi)):
        for k in roots:
            resid = math.cos(theta) - math.cos(k) - 10.0 * math.sin(k) / (2.0 * k)
            assert abs(resid) <= 1e-10


def test_dispersion_strong_coupling_pins_to_multiples_of_pi():
    strong = CombCouplings(w0=1e8, w1=0.0, a=1.0)
    for n, k in enumerate(dispersion(strong, 1.0, 2), start=1):
        assert abs(k - n * math.pi) / (n * math.pi) <= 1e-6


def test_dispersion_amplitude_source_matches_couplings():
    c = CombCouplings(w0=10.0, w1=0.0, a=1.0)
    via_amps = dispersion(
        lambda k: delta_amplitudes(10.0, k), 0.3, n_bands=2, a=1.0
    )
    via_couplings = dispersion(c, 0.3, 2)
    for x, y in zip(via_amps, via_couplings):
        assert abs(x - y) <= 1e-8


def test_dispersion_validation():
    with pytest.raises(ValueError):
        dispersion(FREE, 0.0, 0)
    with pytest.raises(ValueError):
        dispersion(FREE, 4.0, 1)  # |theta| > pi
    with pytest.raises(ValueError):
        dispersion(_free_amps, 0.0, 1)  # amplitude source needs a


def test_root_scan_reports_failure():
    # a secular function with no zeros at all
    cfg = QuadratureConfig()
    with pytest.raises(RootScanError, match="0 of 2"):
        _scan_roots(lambda k: 1.0 + 0.1 * math.sin(k), 1.0, 2, cfg)


def test_scan_counts_tangential_roots_twice():
    cfg = QuadratureConfig()
    # perfect tangency: double root away from any grid point
    roots = _scan_roots(lambda k: (k - 2.3) ** 2, 1.0, 2, cfg)
    assert len(roots) == 2 and roots[0] == roots[1]
    assert abs(roots[0] - 2.3) <= 1e-6
    # barely-split pair: the dip dives below zero between grid points
    roots = _scan_roots(lambda k: (k - 2.3) ** 2 - 1e-6, 1.0, 2, cfg)
    assert abs(roots[0] - (2.3 - 1e-3)) <= 1e-9
    assert abs(roots[1] - (2.3 + 1e-3)) <= 1e-9


# ------------------------------------------------------------------- edges


def test_band_edges_free_comb_touching_bands():
    edges = band_edges(FREE, 3)
    assert edges[0][0] == 0.0  # zero mode restored as the bottom edge
    for n, (lo, hi) in enumerate(edges):
        assert abs(lo - n * math.pi) <= 2e-9
        assert abs(hi - (n + 1) * math.pi) <= 2e-9
    # zero gaps: consecutive bands share the endpoint exactly
    assert edges[0][1] == edges[1][0]
    assert edges[1][1] == edges[2][0]


def test_band_edges_free_comb_scales_with_spacing():
    a = 2.5
    edges = band_edges(CombCouplings(w0=0.0, w1=0.0, a=a), 3)
    for n, (lo, hi) in enumerate(edges):
        assert abs(lo - n * math.pi / a) <= 2e-9
        assert abs(hi - (n + 1) * math.pi / a) <= 2e-9


def test_band_edges_mixed_comb_flat_bands():
    edges = band_edges(MIXED, 3)
    for n, (lo, hi) in enumerate(edges):
        assert lo == hi  # exactly flat: theta never enters the secular function
        assert abs(lo - (n + 0.5) * math.pi) <= 1e-10


def test_band_edges_kronig_penney():
    edges = band_edges(KP, 3)
    expected = [
        (KP_ROOTS_0[0], KP_ROOTS_PI[0]),
        (KP_ROOTS_PI[1], KP_ROOTS_0[1]),
        (KP_ROOTS_0[2], KP_ROOTS_PI[2]),
    ]
    for (lo, hi), (elo, ehi) in zip(edges, expected):
        assert abs(lo - elo) <= 1e-9
        assert abs(hi - ehi) <= 1e-9
    # ordered and disjoint
    for (lo, hi), (lo2, hi2) in zip(edges, edges[1:]):
        assert lo < hi
        assert hi <= lo2 + 1e-12


def test_band_edges_collapse_in_dirichlet_limit():
    strong = CombCouplings(w0=1e8, w1=0.0, a=1.0)
    for n, (lo, hi) in enumerate(band_edges(strong, 3), start=1):
        target = n * math.pi
        assert abs(lo - target) / target <= 1e-6
        assert abs(hi - target) / target <= 1e-6


# ---------------------------------------------------------- band_structure


def test_band_structure_kronig_penney_shape():
    bs = band_structure(KP, n_bands=2, n_theta=21)
    assert bs.a == 1.0 and len(bs.bands) == 2
    for band in bs.bands:
        ks = np.asarray(band.ks)
        assert len(band.thetas) == 21 and len(ks) == 21
        # even in theta, sample by sample
        assert all(ks[i] == ks[len(ks) - 1 - i] for i in range(len(ks)))
        # monotone along 0 <= theta <= pi and continuous on this grid
        half = ks[10:]
        diffs = np.diff(half)
        assert np.all(diffs >= 0.0) or np.all(diffs <= 0.0)
        assert np.max(np.abs(np.diff(ks))) < 0.5
        assert np.all(ks >= band.k_min - 1e-9)
        assert np.all(ks <= band.k_max + 1e-9)
        assert band.qs == band.thetas  # a = 1


def test_band_structure_free_comb_passes_through_zero():
    bs = band_structure(FREE, n_bands=2, n_theta=9)
    lowest = bs.bands[0]
    assert lowest.thetas[4] == 0.0
    assert lowest.ks[4] == 0.0  # zero mode restored at theta = 0
    assert lowest.ks[0] == pytest.approx(math.pi, abs=1e-8)


def test_band_structure_validation():
    with pytest.raises(ValueError):
        band_structure(FREE, n_bands=1, n_theta=1)
