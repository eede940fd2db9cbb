"""Sequence containers, circle arcs, and the grid-sampled Z-transform pair.

Conventions used throughout the package:

* Frequencies live on ``(-pi, pi]``.  The uniform grid of size ``N`` is
  ``omega_n = -pi + 2*pi*(n+1)/N`` for ``n = 0..N-1``, so ``pi`` is always a
  grid point and ``0`` is a grid point whenever ``N`` is even.
* Sequences are dense complex arrays over a contiguous integer window;
  samples outside the window are exact zeros.
* Arc membership is half-open: an arc with center ``c`` and half-width ``w``
  contains ``c - w`` and excludes ``c + w``, so edge-to-edge arc families
  partition the circle without double counting.
* The grid L1 norm uses the fixed quadrature rule ``(2*pi/N) * sum |X_n|``.

All objects are immutable and all operations are pure functions, so values
may be shared freely across threads.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi


def wrap_angle(omega):
    """Wrap an angle (scalar or array) into ``(-pi, pi]``."""
    return np.pi - np.mod(np.pi - np.asarray(omega), TWO_PI)


def _as_complex_samples(values) -> np.ndarray:
    out = np.ascontiguousarray(np.asarray(values, dtype=complex))
    if out.ndim != 1 or out.size == 0:
        raise ValueError("expected a non-empty 1-d array of samples")
    if not np.all(np.isfinite(out.real)) or not np.all(np.isfinite(out.imag)):
        raise ValueError("samples must be finite (no NaN/Inf)")
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class TwoSidedSequence:
    """Finite-support complex samples on integer time ``t_min .. t_max``.

    Values outside the stored window are exact zeros.
    """

    t_min: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t_min", int(self.t_min))
        object.__setattr__(self, "values", _as_complex_samples(self.values))

    @property
    def t_max(self) -> int:
        return self.t_min + len(self.values) - 1

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.t_min, self.t_max + 1)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, eq=False)
class OneSidedSequence:
    """Complex samples on ``t = -T+1 .. 0``; index 0 is the newest observation."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _as_complex_samples(self.values))

    @property
    def horizon(self) -> int:
        return len(self.values)

    @property
    def times(self) -> np.ndarray:
        return np.arange(-self.horizon + 1, 1)

    def as_two_sided(self) -> TwoSidedSequence:
        return TwoSidedSequence(-self.horizon + 1, self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Band:
    """An arc of the unit circle: center ``omega`` and half-width in ``(0, pi)``.

    Membership is half-open (includes ``center - half_width``, excludes
    ``center + half_width``).  The complement is again an arc, so the
    complement of the complement recovers the original band.
    """

    center: float
    half_width: float

    def __post_init__(self):
        hw = float(self.half_width)
        if not (0.0 < hw < np.pi):
            raise ValueError(f"half_width must be in (0, pi), got {hw}")
        object.__setattr__(self, "center", float(wrap_angle(float(self.center))))
        object.__setattr__(self, "half_width", hw)

    @property
    def measure(self) -> float:
        return 2.0 * self.half_width

    def contains(self, omega):
        d = wrap_angle(np.asarray(omega, dtype=float) - self.center)
        return (d >= -self.half_width) & (d < self.half_width)

    def complement(self) -> "Band":
        return Band(self.center + np.pi, np.pi - self.half_width)


def grid_frequencies(grid_size: int) -> np.ndarray:
    """The uniform frequency grid ``-pi + 2*pi*(n+1)/N`` for ``n = 0..N-1``."""
    if grid_size < 2:
        raise ValueError("grid size must be at least 2")
    return -np.pi + TWO_PI * np.arange(1, grid_size + 1) / grid_size


@dataclass(frozen=True, eq=False)
class SpectrumGrid:
    """Samples of a spectrum on the uniform ``(-pi, pi]`` grid."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.ascontiguousarray(np.asarray(self.values, dtype=complex))
        if vals.ndim != 1 or len(vals) < 2:
            raise ValueError("a spectrum grid needs at least 2 points")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def frequencies(self) -> np.ndarray:
        return grid_frequencies(self.size)


def ztransform(x: TwoSidedSequence, grid_size: int = 4096) -> SpectrumGrid:
    """Sample ``X(e^{i*omega}) = sum_t x(t) e^{-i*omega*t}`` on the grid.

    Direct summation over the finite support; for support length at most
    ``grid_size`` the pair ``ztransform`` / ``inverse_ztransform`` round-trips
    exactly (up to rounding).
    """
    if grid_size < 2:
        raise ValueError("grid size must be at least 2")
    omega = grid_frequencies(grid_size)
    phases = np.exp(-1j * np.outer(omega, x.times))
    return SpectrumGrid(phases @ x.values)


def inverse_ztransform(spectrum: SpectrumGrid, t_min: int, t_max: int) -> TwoSidedSequence:
    """Quadrature inverse ``x(t) = (1/N) sum_n X_n e^{i*omega_n*t}`` on a window."""
    if t_min > t_max:
        raise ValueError("t_min must not exceed t_max")
    omega = spectrum.frequencies
    t = np.arange(t_min, t_max + 1)
    phases = np.exp(1j * np.outer(t, omega))
    return TwoSidedSequence(t_min, (phases @ spectrum.values) / spectrum.size)


def modulate(x, omega: float):
    """Sample-wise rotation ``x(t) -> e^{i*omega*t} x(t)``; preserves the l2 norm."""
    factors = np.exp(1j * float(omega) * x.times)
    if isinstance(x, OneSidedSequence):
        return OneSidedSequence(factors * x.values)
    if isinstance(x, TwoSidedSequence):
        return TwoSidedSequence(x.t_min, factors * x.values)
    raise TypeError(f"cannot modulate {type(x).__name__}")


# -- norms --------------------------------------------------------------

def norm_l1(x) -> float:
    return float(np.sum(np.abs(x.values)))


def norm_l2(x) -> float:
    return float(np.linalg.norm(x.values))


def norm_linf(x) -> float:
    return float(np.max(np.abs(x.values)))


def grid_norm_l1(spectrum: SpectrumGrid) -> float:
    """L1 norm of ``|X|`` over ``(-pi, pi]`` by the fixed rule ``(2*pi/N) sum |X_n|``."""
    return float(TWO_PI / spectrum.size * np.sum(np.abs(spectrum.values)))


def grid_norm_linf(spectrum: SpectrumGrid) -> float:
    return float(np.max(np.abs(spectrum.values)))


# -- CSV interchange ----------------------------------------------------
#
# Sequence files: header ``t,re,im`` (``im`` optional, default 0), one sample
# per line, arbitrary order, duplicate ``t`` rejected.  Times absent from the
# file but inside the spanned window are zero samples.
# Spectrum files: header ``omega,re,im``.

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def read_sequence_csv(path) -> TwoSidedSequence:
    rows: dict[int, complex] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header[:2]] != ["t", "re"]:
            raise ValueError(f"{path}: expected header 't,re[,im]'")
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            try:
                t = int(row[0])
                re = float(row[1])
                im = float(row[2]) if len(row) > 2 and row[2].strip() else 0.0
            except (ValueError, IndexError) as exc:
                raise ValueError(f"{path}:{lineno}: malformed sample row") from exc
            if t in rows:
                raise ValueError(f"{path}:{lineno}: duplicate time index {t}")
            rows[t] = complex(re, im)
    if not rows:
        raise ValueError(f"{path}: no samples")
    t_min, t_max = min(rows), max(rows)
    values = np.zeros(t_max - t_min + 1, dtype=complex)
    for t, v in rows.items():
        values[t - t_min] = v
    return TwoSidedSequence(t_min, values)


def read_one_sided_csv(path) -> OneSidedSequence:
    """Read a sequence CSV whose samples all sit at ``t <= 0``."""
    two = read_sequence_csv(path)
    if two.t_max > 0:
        raise ValueError(f"{path}: one-sided input must have all samples at t <= 0")
    values = two.values
    if two.t_max < 0:
        values = np.concatenate([values, np.zeros(-two.t_max, dtype=complex)])
    return OneSidedSequence(values)


def write_sequence_csv(path, x) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("t,re,im\n")
        for t, v in zip(x.times, x.values):
            fh.write(f"{int(t)},{_fmt(v.real)},{_fmt(v.imag)}\n")


def write_spectrum_csv(path, spectrum: SpectrumGrid) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("omega,re,im\n")
        for w, v in zip(spectrum.frequencies, spectrum.values):
            fh.write(f"{_fmt(w)},{_fmt(v.real)},{_fmt(v.imag)}\n")


__all__ = [
    "Band",
    "OneSidedSequence",
    "SpectrumGrid",
    "TwoSidedSequence",
    "grid_frequencies",
    "grid_norm_l1",
    "grid_norm_linf",
    "inverse_ztransform",
    "modulate",
    "norm_l1",
    "norm_l2",
    "norm_linf",
    "read_one_sided_csv",
    "read_sequence_csv",
    "write_sequence_csv",
    "write_spectrum_csv",
    "wrap_angle",
    "ztransform",
]
