"""Randomness quantification and recovery for two-sided sequences.

The scalar randomness measure of a sequence is the essential infimum of its
spectrum modulus, realized here as the minimum over the frequency grid.  A
sequence with a zero in its spectrum carries no irreducible noise: its
missing samples can be recovered exactly, and the constant-modulus split
below assigns it an empty noise floor.

Everything here is a pure function of immutable inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Band,
    SpectrumGrid,
    TwoSidedSequence,
    grid_norm_l1,
    inverse_ztransform,
    ztransform,
)

#: Relative width (in units of the largest spectrum modulus) within which
#: grid minima are treated as tied when picking a recovery frequency.
_TIE_WIDTH = 1e-10


@dataclass(frozen=True)
class NoiseFloorReport:
    """Noise floor of a spectrum: minimum modulus, where it sits, and the
    normalized ratio ``2*pi*sigma / L1(|X|)`` (0 for the zero sequence)."""

    sigma: float
    omega0: float
    normalized_ratio: float
    grid_size: int


def noise_floor(x: TwoSidedSequence, grid_size: int = 4096) -> NoiseFloorReport:
    """Minimum of ``|X|`` over the grid; ties resolve to the smallest frequency."""
    spectrum = ztransform(x, grid_size)
    mod = np.abs(spectrum.values)
    i0 = int(np.argmin(mod))
    sigma = float(mod[i0])
    l1 = grid_norm_l1(spectrum)
    ratio = 0.0 if l1 == 0.0 else min(2.0 * np.pi * sigma / l1, 1.0)
    return NoiseFloorReport(
        sigma=sigma,
        omega0=float(spectrum.frequencies[i0]),
        normalized_ratio=ratio,
        grid_size=grid_size,
    )


@dataclass(frozen=True, eq=False)
class SpectralSplit:
    """Pointwise split ``X = Y + N`` with a constant-modulus noise part.

    Off the widening arc the noise has modulus exactly ``sigma``; on the arc
    (chord distance from the minimizer at most ``epsilon``) the noise absorbs
    the full spectrum value.  ``signal + noise`` reconstructs ``X`` at every
    grid point, so the L1 norms of the parts add up to the L1 norm of the
    whole for every ``epsilon``; the sup norms add up for ``epsilon = 0``.

    ``degenerate`` marks the trivial split returned when the noise floor is
    exactly zero and no arc is requested.
    """

    signal: SpectrumGrid
    noise: SpectrumGrid
    sigma: float
    omega0: float
    epsilon: float
    arc: Band | None
    degenerate: bool

    def signal_sequence(self, t_min: int, t_max: int) -> TwoSidedSequence:
        return inverse_ztransform(self.signal, t_min, t_max)

    def noise_sequence(self, t_min: int, t_max: int) -> TwoSidedSequence:
        return inverse_ztransform(self.noise, t_min, t_max)


def split_spectrum(
    x: TwoSidedSequence, epsilon: float = 0.0, grid_size: int = 4096
) -> SpectralSplit:
    """Split the spectrum into a vanishing signal part and a flat noise part.

    The noise gain is 1 on the arc of chord radius ``epsilon`` around the
    modulus minimizer and ``sigma/|X|`` elsewhere, so the noise modulus is
    constant off the arc and the signal vanishes at the minimizer.

    Parameters
    ----------
    x : TwoSidedSequence
        Input samples.
    epsilon : float
        Chord-distance radius of the arc on which the split is trivial.
        Must satisfy ``0 <= epsilon < 2`` (the chord metric has diameter 2).
    grid_size : int
        Frequency grid resolution.
    """
    epsilon = float(epsilon)
    if not (0.0 <= epsilon < 2.0):
        raise ValueError("epsilon must lie in [0, 2)")
    spectrum = ztransform(x, grid_size)
    mod = np.abs(spectrum.values)
    i0 = int(np.argmin(mod))
    sigma = float(mod[i0])
    omega = spectrum.frequencies
    omega0 = float(omega[i0])

    if sigma == 0.0 and epsilon == 0.0:
        zeros = SpectrumGrid(np.zeros(grid_size, dtype=complex))
        return SpectralSplit(
            signal=spectrum,
            noise=zeros,
            sigma=sigma,
            omega0=omega0,
            epsilon=epsilon,
            arc=None,
            degenerate=True,
        )

    gain = np.ones(grid_size)
    positive = mod > 0.0
    gain[positive] = sigma / mod[positive]
    chord = np.abs(np.exp(1j * omega) - np.exp(1j * omega0))
    gain[chord <= epsilon] = 1.0

    noise = gain * spectrum.values
    signal = spectrum.values - noise
    arc = Band(omega0, 2.0 * np.arcsin(epsilon / 2.0)) if epsilon > 0.0 else None
    return SpectralSplit(
        signal=SpectrumGrid(signal),
        noise=SpectrumGrid(noise),
        sigma=sigma,
        omega0=omega0,
        epsilon=epsilon,
        arc=arc,
        degenerate=False,
    )


@dataclass(frozen=True)
class RecoveryEstimate:
    """Missing-sample estimate together with the class worst-case error.

    ``worst_case_error`` is ``|Y(e^{i*omega0})|`` at the frequency the
    estimate was formed at: the noise floor of the zero-completed
    observation, which is what the recovery error becomes in the worst case
    over sequences whose spectrum modulus bottoms out at ``omega0``.
    """

    m: int
    estimate: complex
    worst_case_error: float
    omega0: float


def recover_missing(
    x_observed: TwoSidedSequence,
    m: int,
    grid_size: int = 4096,
    omega0: float | None = None,
) -> RecoveryEstimate:
    """Estimate an unobserved sample from all the others.

    With ``Y`` the spectrum of the observed samples, the estimate at the
    working frequency ``w`` is ``-e^{i*m*w} Y(e^{i*w})``; its error equals
    the completed spectrum's modulus at ``w``, so it is worst-case optimal
    over the class of sequences whose spectrum modulus attains its minimum
    at ``w``, and error-free when that minimum is zero.

    Parameters
    ----------
    x_observed : TwoSidedSequence
        The observed samples.  Any value stored at ``t = m`` is treated as
        unobserved and ignored.
    m : int
        Time index of the missing sample (any integer).
    grid_size : int
        Frequency grid resolution.
    omega0 : float, optional
        Known minimizing frequency of the underlying sequence class.  When
        omitted, the estimator picks the grid frequency in ``(0, pi]`` with
        the smallest observed ``|Y|``; near-ties (within 1e-10 of the
        modulus scale) resolve toward ``pi``.
    """
    m = int(m)
    values = np.array(x_observed.values)
    if x_observed.t_min <= m <= x_observed.t_max:
        values[m - x_observed.t_min] = 0.0
    observed = TwoSidedSequence(x_observed.t_min, values)

    spectrum = ztransform(observed, grid_size)
    omega = spectrum.frequencies
    mod = np.abs(spectrum.values)

    if omega0 is not None:
        target = float(np.asarray(omega0))
        idx = int(np.argmin(np.abs(np.exp(1j * omega) - np.exp(1j * target))))
    else:
        candidates = np.flatnonzero(omega > 0.0)
        cmod = mod[candidates]
        tie = _TIE_WIDTH * max(float(np.max(mod)), 1e-300)
        tied = candidates[cmod <= float(np.min(cmod)) + tie]
        idx = int(tied[-1])

    w0 = float(omega[idx])
    estimate = -np.exp(1j * m * w0) * spectrum.values[idx]
    return RecoveryEstimate(
        m=m,
        estimate=complex(estimate),
        worst_case_error=float(mod[idx]),
        omega0=w0,
    )


__all__ = [
    "NoiseFloorReport",
    "RecoveryEstimate",
    "SpectralSplit",
    "noise_floor",
    "recover_missing",
    "split_spectrum",
]
