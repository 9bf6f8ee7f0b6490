"""Numerical propagation of a regularized delta-comb and Talbot-carpet rendering.

Three independent field routes:

* ``wave``  -- paraxial Fourier-mode series, ``sum_n w(n) e^{2 pi i xi n} e^{-i pi zeta n^2}``
* ``exact`` -- the same modes with the full propagation factor
  ``exp(2 pi i zeta L^2 sqrt(1 - (n/L)^2))``, ``L = a/lambda``; modes with
  ``|n| > L`` are evanescent and decay with ``zeta``
* ``path``  -- paraxial sum over slits, ``sum_n w(n) exp(i pi (xi + n)^2 / zeta)``

The comb is regularized by a Gaussian window ``w(n) = exp(-n^2 / (2 W^2))``
on the summation index, which turns each delta into a narrow Gaussian of
width ~``1/(2 pi W)`` (wave route) and leaves the quadratic phases intact.
Truncating at ``|n| <= N`` drops terms below ``exp(-N^2 / (2 W^2))``.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence, Union

import numpy as np

from .numtheory import FractionalDistance
from .talbot import image_positions

log = logging.getLogger(__name__)

Route = Literal["wave", "exact", "path"]
ROUTES = ("wave", "exact", "path")
Zeta = Union[float, Fraction, FractionalDistance]


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class CarpetSpec:
    xi_samples: int
    zetas: tuple
    n_trunc: int = 256
    apod_width: float = 48.0
    a_over_lambda: float = 1000.0

    def __post_init__(self):
        object.__setattr__(self, "zetas", tuple(self.zetas))

    def validate(self) -> "CarpetSpec":
        if self.xi_samples < 1:
            raise InvalidSpec(f"xi_samples >= 1 violated: {self.xi_samples}")
        if self.n_trunc < 0:
            raise InvalidSpec(f"n_trunc >= 0 violated: {self.n_trunc}")
        if not self.apod_width > 0:
            raise InvalidSpec(f"apod_width > 0 violated: {self.apod_width}")
        if not self.a_over_lambda > 0:
            raise InvalidSpec(f"a_over_lambda > 0 violated: {self.a_over_lambda}")
        if self.apod_width > self.n_trunc / 3:
            raise InvalidSpec(f"apod_width <= n_trunc/3 violated: {self.apod_width} > {self.n_trunc}/3")
        qs = [r[1] for r in map(_rational, self.zetas) if r is not None]
        if qs and self.n_trunc < 4 * max(qs):
            raise InvalidSpec(f"n_trunc >= 4*max(q) violated: {self.n_trunc} < 4*{max(qs)}")
        for z in self.zetas:
            if float(z) < 0:
                raise InvalidSpec(f"zeta >= 0 violated: {z}")
        return self

    def to_dict(self) -> dict:
        return {
            "xi_samples": self.xi_samples,
            "zetas": [str(z) if _rational(z) else float(z) for z in self.zetas],
            "n_trunc": self.n_trunc,
            "apod_width": self.apod_width,
            "a_over_lambda": self.a_over_lambda,
        }


@dataclass
class CarpetGrid:
    """``intensities[i, j] = |field(xi[j], zetas[i])|**2``."""

    intensities: np.ndarray
    xi: np.ndarray
    zetas: list
    route: str
    spec: CarpetSpec = field(repr=False)

    def row_power(self) -> np.ndarray:
        # periodic trapezoid rule over the unit cell
        return self.intensities.sum(axis=1) / self.intensities.shape[1]


def _rational(zeta: Zeta) -> tuple[int, int] | None:
    if isinstance(zeta, FractionalDistance):
        return zeta.p, zeta.q
    if isinstance(zeta, Fraction) and zeta > 0:
        return zeta.numerator, zeta.denominator
    return None


def _modes(spec: CarpetSpec) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(-spec.n_trunc, spec.n_trunc + 1, dtype=np.int64)
    w = np.exp(-(n.astype(float) ** 2) / (2 * spec.apod_width**2))
    return n, w


def _wave_coeffs(zeta: Zeta, spec: CarpetSpec) -> tuple[np.ndarray, np.ndarray]:
    n, w = _modes(spec)
    r = _rational(zeta)
    if r is not None:
        p, q = r
        turns = ((p * n * n) % (2 * q)) / q
    else:
        turns = np.mod(float(zeta) * (n * n).astype(float), 2.0)
    return n, w * np.exp(-1j * np.pi * turns)


def helmholtz_global_phase(zeta: Zeta, spec: CarpetSpec) -> complex:
    """``exp(i k z) = exp(2 pi i zeta L^2)``; divide it out to compare with paraxial routes."""
    frac = math.fmod(float(zeta) * spec.a_over_lambda**2, 1.0)
    return complex(np.exp(2j * np.pi * frac))


def _exact_coeffs(zeta: Zeta, spec: CarpetSpec) -> tuple[np.ndarray, np.ndarray]:
    n, w = _modes(spec)
    L = spec.a_over_lambda
    z = float(zeta)
    x2 = (n.astype(float) / L) ** 2
    prop = x2 <= 1.0
    factor = np.empty(n.shape, dtype=complex)
    # L^2 (sqrt(1 - x^2) - 1) written without cancellation
    rel = -(n[prop].astype(float) ** 2) / (1.0 + np.sqrt(1.0 - x2[prop]))
    factor[prop] = helmholtz_global_phase(zeta, spec) * np.exp(2j * np.pi * z * rel)
    factor[~prop] = np.exp(-2 * np.pi * z * L**2 * np.sqrt(x2[~prop] - 1.0))
    return n, w * factor


def _fourier_field(xi, n: np.ndarray, coeffs: np.ndarray):
    xi = np.asarray(xi, dtype=float)
    out = np.exp(2j * np.pi * np.multiply.outer(xi, n.astype(float))) @ coeffs
    return complex(out) if out.ndim == 0 else out


def field_paraxial_wave(xi, zeta: Zeta, spec: CarpetSpec):
    n, c = _wave_coeffs(zeta, spec)
    return _fourier_field(xi, n, c)


def field_exact_helmholtz(xi, zeta: Zeta, spec: CarpetSpec):
    """Includes the global ``exp(i k z)``; see :func:`helmholtz_global_phase`."""
    n, c = _exact_coeffs(zeta, spec)
    return _fourier_field(xi, n, c)


def field_paraxial_path(xi, zeta: Zeta, spec: CarpetSpec):
    if float(zeta) <= 0:
        raise ValueError("path route needs zeta > 0 (the slit sum diverges at the grating plane)")
    n, w = _modes(spec)
    xi = np.asarray(xi, dtype=float)
    nf = n.astype(float)
    r = _rational(zeta)
    if r is not None:
        p, q = r
        # pi q (xi^2 + 2 xi n + n^2) / p with the n^2 part reduced exactly
        static = ((q * n * n) % (2 * p)) / p
        turns = (q / p) * (np.multiply.outer(xi, 2 * nf) + (xi**2)[..., None]) + static
    else:
        turns = np.add.outer(xi, nf) ** 2 / float(zeta)
    out = np.exp(1j * np.pi * np.mod(turns, 2.0)) @ w
    return complex(out) if out.ndim == 0 else out


_FIELDS = {"wave": field_paraxial_wave, "exact": field_exact_helmholtz, "path": field_paraxial_path}


def xi_grid(samples: int) -> np.ndarray:
    """Uniform, endpoint-exclusive samples of the cell ``[-1/2, 1/2)``."""
    return -0.5 + np.arange(samples) / samples


def _thread_count() -> int:
    env = os.environ.get("GAUSS_TALBOT_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def render_carpet(spec: CarpetSpec, route: Route = "wave", workers: int | None = None) -> CarpetGrid:
    if route not in _FIELDS:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    spec.validate()
    if route == "path" and any(float(z) <= 0 for z in spec.zetas):
        raise InvalidSpec("path route needs every zeta > 0")
    xi = xi_grid(spec.xi_samples)
    f = _FIELDS[route]

    def row(z):
        return np.abs(f(xi, z, spec)) ** 2

    workers = workers or _thread_count()
    if workers > 1 and len(spec.zetas) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, spec.zetas))
    else:
        rows = [row(z) for z in spec.zetas]
    data = np.vstack(rows) if rows else np.empty((0, spec.xi_samples))
    return CarpetGrid(data, xi, list(spec.zetas), route, spec)


def extract_peaks(row: Sequence[float], q_expected: int | None = None) -> list[tuple[float, float]]:
    """Local maxima above half the row maximum, refined by a 3-point parabola.

    The row is taken as periodic samples of ``[-1/2, 1/2)`` (as produced by
    :func:`render_carpet`). Positions are returned in that cell.
    """
    y = np.asarray(row, dtype=float)
    M = y.size
    if M == 0 or y.max() == y.min():
        return []
    left, right = np.roll(y, 1), np.roll(y, -1)
    idx = np.flatnonzero((y > left) & (y >= right) & (y >= 0.5 * y.max()))
    peaks = []
    for j in idx:
        ym, y0, yp = left[j], y[j], right[j]
        curv = ym - 2 * y0 + yp
        delta = 0.5 * (ym - yp) / curv if curv < 0 else 0.0
        pos = -0.5 + (j + delta) / M
        pos -= math.floor(pos + 0.5)
        peaks.append((pos, y0 - 0.25 * (ym - yp) * delta))
    if q_expected is not None and len(peaks) < q_expected:
        log.warning("found %d peaks, expected %d", len(peaks), q_expected)
    return peaks


@dataclass
class PeakCheck:
    zeta: FractionalDistance
    peaks: list
    expected: list
    count_ok: bool
    max_offset_steps: float
    height_spread: float

    @property
    def flagged(self) -> bool:
        return not self.count_ok


def check_peaks(row: Sequence[float], zeta: FractionalDistance) -> PeakCheck:
    """Compare a carpet row against the predicted image centres ``e/2 + n/q``.

    ``max_offset_steps`` is the largest circular distance, in grid steps,
    from a found peak to its nearest predicted centre; ``height_spread`` is
    ``(max - min) / max`` of the peak heights.
    """
    M = len(row)
    peaks = extract_peaks(row, zeta.q)
    expected = [float(x) for x in image_positions(zeta).positions]
    offsets = []
    for pos, _ in peaks:
        d = min(abs((pos - e + 0.5) % 1.0 - 0.5) for e in expected)
        offsets.append(d * M)
    heights = [h for _, h in peaks]
    spread = (max(heights) - min(heights)) / max(heights) if heights else math.inf
    return PeakCheck(
        zeta=zeta,
        peaks=peaks,
        expected=expected,
        count_ok=len(peaks) == zeta.q,
        max_offset_steps=max(offsets) if offsets else math.inf,
        height_spread=spread,
    )
