"""Unit tests for sampling, reconstruction, low-pass filtering and Nyquist counts."""

import math

import numpy as np
import pytest

from tvband.application.charfun import exceptional_theta, mu_w_prime
from tvband.application.core import paley_wiener_pair
from tvband.application.kernel import KernelContext, kernel_grid
from tvband.application.sampling import (
    interpolate,
    l2_norm_on_grid,
    lowpass_project,
    max_abs_error,
    nyquist_comparison,
    reconstruct,
    sample_energy,
    sample_signal,
)
from tvband.application.spectral import sampling_sequence
from tvband.domain.errors import OutOfWindowError, SingularParameterError
from tvband.domain.models import (
    BandlimitPair,
    GridSignal,
    GridSpec,
    MobiusParam,
    SampledSignal,
)
from tvband.infrastructure.solvers.quadrature import gauss_legendre_rule

GRID = GridSpec(t0=-8.0, dt=0.05, n=321)


def _kernel_member(ctx: KernelContext, anchor: float):
    """f = K(., anchor), a unit-norm member of the space."""

    def f(x: np.ndarray) -> np.ndarray:
        return kernel_grid(ctx, x, [anchor])[:, 0]

    return f


@pytest.mark.unit
class TestInterpolation:
    """Tests for local cubic interpolation."""

    def test_cubics_are_exact(self) -> None:
        """Four-point Lagrange interpolation reproduces cubic polynomials."""
        times = GRID.times()
        signal = GridSignal.on_grid(GRID, times**3 - 2.0 * times + 1.0)
        points = np.array([-7.93, -1.234, 0.0, 3.3333, 7.99])
        np.testing.assert_allclose(
            interpolate(signal, points),
            points**3 - 2.0 * points + 1.0,
            rtol=1e-10,
            atol=1e-10,
        )

    def test_complex_values_kept(self) -> None:
        signal = GridSignal.on_grid(GRID, np.exp(1j * GRID.times()))
        assert np.iscomplexobj(interpolate(signal, [0.0]))

    def test_outside_window(self) -> None:
        """Points beyond the grid raise and carry the offending values."""
        signal = GridSignal.on_grid(GRID, np.ones(GRID.n))
        with pytest.raises(OutOfWindowError) as excinfo:
            interpolate(signal, [0.0, 9.5])
        assert excinfo.value.points == (9.5,)


@pytest.mark.unit
class TestReconstruction:
    """Tests for sample_signal and reconstruct."""

    def test_member_is_recovered(self, six_node_pair: BandlimitPair) -> None:
        """A space member is rebuilt from any complete level within 1e-10."""
        ctx = KernelContext.create(six_node_pair)
        anchor = float(sampling_sequence(six_node_pair, 0.3).points[2])
        f = _kernel_member(ctx, anchor)
        expected = f(GRID.times())
        for theta in (0.0, 0.6):
            if abs(theta - exceptional_theta(six_node_pair)) < 1e-6:
                continue
            sampled = sample_signal(f, sampling_sequence(six_node_pair, theta))
            rebuilt = reconstruct(ctx, sampled, GRID)
            assert np.max(np.abs(rebuilt.values - expected)) <= 1e-10

    def test_sample_energy_is_the_norm(self, six_node_pair: BandlimitPair) -> None:
        """Sampled energy of a unit-norm member is 1 on every complete level."""
        ctx = KernelContext.create(six_node_pair)
        f = _kernel_member(ctx, 0.37)
        for theta in (0.0, 0.2, 0.55, 0.8):
            if abs(theta - exceptional_theta(six_node_pair)) < 1e-6:
                continue
            samples = sampling_sequence(six_node_pair, theta)
            energy = sample_energy(sample_signal(f, samples).values)
            assert energy == pytest.approx(1.0, abs=1e-10)

    def test_parseval_averaged_over_levels(self, six_node_pair: BandlimitPair) -> None:
        """Sampled energy weighted by mu_w'(theta) over [0, 1] is the space norm."""
        ctx = KernelContext.create(six_node_pair)
        rng = np.random.default_rng(17)
        anchors = rng.uniform(-6.0, 6.0, size=4)
        amplitudes = rng.normal(size=4)

        def f(x: np.ndarray) -> np.ndarray:
            return kernel_grid(ctx, x, anchors) @ amplitudes

        norm_squared = float(amplitudes @ kernel_grid(ctx, anchors, anchors) @ amplitudes)
        theta_star = exceptional_theta(six_node_pair)

        for theta in (0.0, 0.3, 0.7):
            if abs(theta - theta_star) < 1e-6:
                continue
            samples = sampling_sequence(six_node_pair, theta)
            assert sample_energy(sample_signal(f, samples).values) == pytest.approx(
                norm_squared, abs=1e-8
            )

        nodes, weights = gauss_legendre_rule(40)
        thetas = 0.5 * (nodes + 1.0)
        assert np.min(np.abs(thetas - theta_star)) > 1e-8
        density = mu_w_prime(MobiusParam(0.4 + 0.1j), thetas)
        energies = np.array(
            [
                sample_energy(sample_signal(f, sampling_sequence(six_node_pair, t)).values)
                for t in thetas.tolist()
            ]
        )
        averaged = float(np.sum(0.5 * weights * density * energies))
        assert averaged == pytest.approx(norm_squared, abs=1e-8)

    def test_zero_samples(self, six_node_pair: BandlimitPair) -> None:
        ctx = KernelContext.create(six_node_pair)
        samples = sampling_sequence(six_node_pair, 0.0)
        rebuilt = reconstruct(ctx, SampledSignal(samples, np.zeros(samples.size)), GRID)
        assert not np.any(rebuilt.values)

    def test_exceptional_samples_rejected(self, six_node_pair: BandlimitPair) -> None:
        ctx = KernelContext.create(six_node_pair)
        samples = sampling_sequence(six_node_pair, exceptional_theta(six_node_pair))
        with pytest.raises(SingularParameterError):
            reconstruct(ctx, SampledSignal(samples, np.ones(samples.size)), GRID)

    def test_grid_signal_is_interpolated(self, six_node_pair: BandlimitPair) -> None:
        """Sampling a grid signal uses the cubic interpolant."""
        signal = GridSignal.on_grid(GRID, np.cos(GRID.times()))
        samples = sampling_sequence(six_node_pair, 0.0, window=(-7.0, 7.0))
        sampled = sample_signal(signal, samples)
        np.testing.assert_allclose(sampled.values, np.cos(samples.points), atol=1e-5)

    @pytest.mark.slow
    def test_shannon_reconstruction(self) -> None:
        """Integer samples of sinc(pi (t - 0.3)) rebuild it, better as N grows."""
        grid = GridSpec(t0=-2.0, dt=0.05, n=81)

        def shifted_sinc(x: np.ndarray) -> np.ndarray:
            return np.sinc(np.asarray(x) - 0.3)

        errors = []
        for half_width in (50, 200, 800):
            pair = paley_wiener_pair(math.pi, half_width)
            ctx = KernelContext.create(pair)
            sampled = sample_signal(shifted_sinc, sampling_sequence(pair, 0.0))
            rebuilt = reconstruct(ctx, sampled, grid)
            errors.append(max_abs_error(rebuilt.values, shifted_sinc(grid.times())))
        assert errors[1] <= 1e-2
        assert errors[0] > errors[1] > errors[2]


@pytest.mark.unit
class TestLowpass:
    """Tests for lowpass_project."""

    def test_member_is_fixed(self, six_node_pair: BandlimitPair) -> None:
        """Members of the rescaled space project onto themselves."""
        ctx = KernelContext.create(six_node_pair)
        anchor = 0.8

        def member(x: np.ndarray) -> np.ndarray:
            return kernel_grid(ctx, x, [anchor], scaling="identity")[:, 0]

        result = lowpass_project(ctx, 0.0, member)
        expected = member(result.samples.points)
        scale = float(np.max(np.abs(expected)))
        assert np.max(np.abs(result.coefficients - expected)) <= 1e-6 * scale
        assert result.tail_estimate == 0.0

    def test_projection_is_idempotent(self, six_node_pair: BandlimitPair) -> None:
        """Projecting the projection leaves its coefficients unchanged."""
        ctx = KernelContext.create(six_node_pair)

        def raw(x: np.ndarray) -> np.ndarray:
            return np.exp(-0.5 * x**2) * np.cos(3.0 * x)

        first = lowpass_project(ctx, 0.0, raw)
        second = lowpass_project(ctx, 0.0, first.evaluate)
        scale = float(np.max(np.abs(first.coefficients)))
        assert np.max(np.abs(second.coefficients - first.coefficients)) <= 1e-6 * scale

    def test_grid_input_keeps_its_grid(self, six_node_pair: BandlimitPair) -> None:
        ctx = KernelContext.create(six_node_pair)
        signal = GridSignal.on_grid(GRID, np.exp(-(GRID.times() ** 2)))
        result = lowpass_project(ctx, 0.0, signal)
        assert result.output is not None
        assert result.output.values.size == GRID.n
        assert result.report().window == (GRID.t0, GRID.end)
        assert result.report().coefficients == result.samples.size

    def test_exceptional_level_rejected(self, six_node_pair: BandlimitPair) -> None:
        ctx = KernelContext.create(six_node_pair)
        with pytest.raises(SingularParameterError):
            lowpass_project(ctx, exceptional_theta(six_node_pair), np.cos)

    def test_residual_is_orthogonal(self, six_node_pair: BandlimitPair) -> None:
        """P (I - P) f = 0: the residual projects to nothing."""
        ctx = KernelContext.create(six_node_pair)

        def raw(x: np.ndarray) -> np.ndarray:
            return np.exp(-0.5 * x**2) * np.cos(3.0 * x)

        first = lowpass_project(ctx, 0.0, raw)

        def residual(x: np.ndarray) -> np.ndarray:
            return raw(x) - first.evaluate(x)

        second = lowpass_project(ctx, 0.0, residual)
        scale = float(np.max(np.abs(first.coefficients)))
        assert np.max(np.abs(second.coefficients)) <= 1e-6 * scale

    @pytest.mark.slow
    def test_paley_wiener_removes_high_band(self) -> None:
        """sinc(pi t) + 0.5 cos(10 pi t) on [-20, 20] filters back to sinc(pi t)."""
        ctx = KernelContext.create(paley_wiener_pair(math.pi, 1000))
        window = (-20.0, 20.0)
        inner = GridSpec(t0=-15.0, dt=0.01, n=3001)

        def high(x: np.ndarray) -> np.ndarray:
            return 0.5 * np.cos(10.0 * math.pi * np.asarray(x))

        def raw(x: np.ndarray) -> np.ndarray:
            return np.sinc(np.asarray(x)) + high(x)

        filtered = lowpass_project(ctx, 0.0, raw, window=window, output_grid=inner)
        assert filtered.output is not None
        error = GridSignal.on_grid(inner, filtered.output.values - np.sinc(inner.times()))
        assert l2_norm_on_grid(error) <= 5e-2

        leaked = lowpass_project(ctx, 0.0, high, window=window, output_grid=inner)
        assert leaked.output is not None
        incoming = l2_norm_on_grid(GridSignal.on_grid(inner, high(inner.times())))
        suppression_db = 20.0 * math.log10(incoming / l2_norm_on_grid(leaked.output))
        assert suppression_db >= 20.0


@pytest.mark.unit
class TestNyquist:
    """Tests for nyquist_comparison."""

    def test_paley_wiener_counts(self) -> None:
        """Uniform Paley-Wiener sampling matches the Nyquist count."""
        pair = paley_wiener_pair(math.pi, 2000)
        report = nyquist_comparison(KernelContext.create(pair), (-10.5, 10.5))
        assert report.tv_sample_count == 21
        assert report.nyquist_count == pytest.approx(21.0, rel=2e-2)
        assert report.ratio == pytest.approx(1.0, rel=2e-2)
        assert 0.0 < report.w_star < 0.01

    def test_empty_window(self, six_node_pair: BandlimitPair) -> None:
        report = nyquist_comparison(KernelContext.create(six_node_pair), (1.0, 1.0))
        assert report.tv_sample_count == 0
        assert report.nyquist_count == 0.0
        assert report.ratio is None
        assert report.omega_max is None
