"""Fractional Talbot revival amplitudes in the wave and particle pictures.

At ``zeta = p/q`` the propagated delta-comb collapses onto ``q`` images at
``xi = e/2 + n/q`` (``e = pq mod 2``). The wave picture (Fourier modes,
paraxial phase ``-pi*zeta*n**2``) weights them by

    A(n) = q**-1/2 * sum_{s<q} exp(i*pi*((2n + q e) s - p s^2)/q)

and the particle picture (paraxial path sum over slits) by

    At(n) = p**-1/2 * sum_{s<p} exp(i*pi*[((2n + q e) s + q s^2)/p + (2n + q e)^2/(4pq)]).

Each has a closed form in Jacobi symbols and modular inverses. The two
pictures differ by a constant eighth-turn: ``At(n) = exp(i*pi/4) * A(n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .gauss_sums import PhaseRational, phase_eval, phasor_sum
from .numtheory import FractionalDistance, bezout_pair, half_inverse, jacobi_symbol, mod_inverse
from .report import VerificationReport

Picture = Literal["wave", "particle"]
Method = Literal["direct", "closed"]

SQRT_I = phase_eval(PhaseRational(1, 4))


@dataclass(frozen=True)
class CoefficientRecord:
    n: int
    zeta: FractionalDistance
    picture: str
    method: str
    amp: complex


@dataclass(frozen=True)
class ImagePositions:
    zeta: FractionalDistance
    positions: list[Fraction]


def _shift(n: int, zeta: FractionalDistance) -> int:
    return 2 * n + zeta.q * zeta.e


def coeff_wave_direct(n: int, zeta: FractionalDistance) -> complex:
    p, q = zeta.p, zeta.q
    k = _shift(n, zeta) % (2 * q)
    s = np.arange(q, dtype=np.int64)
    nums = k * s - (p % (2 * q)) * ((s * s) % (2 * q))
    return phasor_sum(nums, q) / math.sqrt(q)


def coeff_particle_direct(n: int, zeta: FractionalDistance) -> complex:
    # common denominator 4pq: 4q((2n+qe)s + q s^2) + (2n+qe)^2
    p, q = zeta.p, zeta.q
    den = 4 * p * q
    mod = 2 * den
    k = _shift(n, zeta)
    s = np.arange(p, dtype=np.int64)
    # 4q*x mod 8pq only depends on x mod 2p; reducing first keeps int64 safe
    inner = ((k % (2 * p)) * s + q * ((s * s) % (2 * p))) % (2 * p)
    nums = 4 * q * inner + (k * k) % mod
    return phasor_sum(nums, den) / math.sqrt(p)


def coeff_wave_closed(n: int, zeta: FractionalDistance) -> complex:
    p, q = zeta.p, zeta.q
    if p % 2 == 0:
        inv_p = mod_inverse(p, q).value
        ph = Fraction(q - 1, 4) + Fraction(p, q) * inv_p**2 * n * n
        sign = jacobi_symbol(p, q)
    elif q % 2 == 0:
        inv_p = mod_inverse(p, q).value
        ph = -(Fraction(p, 4) - Fraction(p, q) * inv_p**2 * n * n)
        sign = jacobi_symbol(q, p)
    else:
        ph = Fraction(q - 1, 4) + _odd_wave_coeff(p, q) * (2 * n + q) ** 2
        sign = jacobi_symbol(p, q)
    return sign * phase_eval(PhaseRational.of(ph))


def coeff_particle_closed(n: int, zeta: FractionalDistance, uncorrected: bool = False) -> complex:
    """Closed form of :func:`coeff_particle_direct`.

    ``uncorrected=True`` evaluates the odd-``pq`` branch with the inverse
    ``[1/2q]_p`` unsquared. That variant disagrees with the direct sum and
    is kept only so the errata entry stays reproducible.
    """
    p, q = zeta.p, zeta.q
    if p % 2 == 0 or q % 2 == 0:
        inv_q = mod_inverse(q, p).value
        n_coeff = Fraction(q, p) * inv_q**2 - Fraction(1, q * p)
        if p % 2 == 0:
            ph = Fraction(q, 4) - n_coeff * n * n
            sign = jacobi_symbol(p, q)
        else:
            ph = -(Fraction(p - 1, 4) + n_coeff * n * n)
            sign = jacobi_symbol(q, p)
    else:
        coeff = _odd_particle_coeff(p, q, squared=not uncorrected)
        ph = -(Fraction(p - 1, 4) + coeff * (2 * n + q) ** 2)
        sign = jacobi_symbol(q, p)
    return sign * phase_eval(PhaseRational.of(ph))


def _odd_wave_coeff(p: int, q: int) -> Fraction:
    return Fraction(2 * p, q) * half_inverse(q).value * mod_inverse(2 * p, q).value ** 2


def _odd_particle_coeff(p: int, q: int, squared: bool = True) -> Fraction:
    inv = mod_inverse(2 * q, p).value
    return Fraction(2 * q, p) * half_inverse(p).value * inv ** (2 if squared else 1) - Fraction(1, 4 * q * p)


def coefficient(n: int, zeta: FractionalDistance, picture: Picture = "wave", method: Method = "direct") -> CoefficientRecord:
    funcs = {
        ("wave", "direct"): coeff_wave_direct,
        ("wave", "closed"): coeff_wave_closed,
        ("particle", "direct"): coeff_particle_direct,
        ("particle", "closed"): coeff_particle_closed,
    }
    try:
        f = funcs[picture, method]
    except KeyError:
        raise ValueError(f"unknown picture/method: {picture!r}/{method!r}") from None
    return CoefficientRecord(n, zeta, picture, method, f(n, zeta))


def coefficient_table(zeta: FractionalDistance, picture: Picture = "wave", method: Method = "direct") -> list[CoefficientRecord]:
    """One record per image, ``n`` over a full period ``[0, q)``."""
    return [coefficient(n, zeta, picture, method) for n in range(zeta.q)]


def complementarity_residual(n: int, zeta: FractionalDistance) -> float:
    """``|A(n) - exp(i*pi/4) * At(n)|`` from the two direct sums.

    This is the orientation ``A = sqrt(i) * At``. The direct sums actually
    satisfy ``At = sqrt(i) * A`` (see :func:`complementarity_ratio`), so
    this residual is ``sqrt(2)`` wherever the amplitudes are unit modulus.
    """
    return abs(coeff_wave_direct(n, zeta) - SQRT_I * coeff_particle_direct(n, zeta))


def complementarity_ratio(n: int, zeta: FractionalDistance) -> complex:
    """``At(n) / A(n)``; equals ``exp(i*pi/4)`` for every ``n`` and ``zeta``."""
    return coeff_particle_direct(n, zeta) / coeff_wave_direct(n, zeta)


def particle_from_wave_residual(n: int, zeta: FractionalDistance) -> float:
    """``|At(n) - exp(i*pi/4) * A(n)|``."""
    return abs(coeff_particle_direct(n, zeta) - SQRT_I * coeff_wave_direct(n, zeta))


def image_positions(zeta: FractionalDistance) -> ImagePositions:
    """Image centres ``e/2 + n/q`` folded into the cell ``[-1/2, 1/2)``."""
    out = []
    for n in range(zeta.q):
        x = Fraction(zeta.e, 2) + Fraction(n, zeta.q)
        out.append(x - math.floor(x + Fraction(1, 2)))
    return ImagePositions(zeta, out)


def _congruence(
    identity: str,
    params: dict,
    lhs: Fraction,
    rhs: Fraction,
    tolerance: float,
    multipliers=(1,),
) -> VerificationReport:
    """Check ``lhs * m = rhs * m (mod 2)`` for every multiplier ``m``, reporting the worst ``m``."""
    diff = lhs - rhs
    num, mod = diff.numerator, 2 * diff.denominator
    worst_r, worst_m = -1, 1
    for m in multipliers:
        r = (num * m) % mod
        r = min(r, mod - r)
        if r > worst_r:
            worst_r, worst_m = r, m
    return VerificationReport(
        identity,
        params,
        lhs=phase_eval(PhaseRational.of(lhs * worst_m)),
        rhs=phase_eval(PhaseRational.of(rhs * worst_m)),
        residual=worst_r / diff.denominator,
        tolerance=tolerance,
    )


def _integer_identity(identity: str, params: dict, lhs: int, rhs: int, tolerance: float) -> VerificationReport:
    return VerificationReport(identity, params, complex(lhs), complex(rhs), abs(lhs - rhs), tolerance)


def verify_phase_identities(zeta: FractionalDistance, tolerance: float = 1e-12) -> list[VerificationReport]:
    """Exact checks of the arithmetic that links the two closed forms.

    Every check is a congruence of rationals modulo 2 (or an integer
    equality), so residuals are exactly zero when an identity holds.
    ``n`` runs over ``[0, 2pq)``, a full period of every exponent.
    """
    p, q = zeta.p, zeta.q
    params = {"p": p, "q": q}
    inv_q_p, inv_p_q = (x.value for x in bezout_pair(p, q))
    reports = [
        _integer_identity("bezout", params, inv_q_p * q + inv_p_q * p, 1 + p * q, tolerance),
        _integer_identity(
            "bezout_squared_mod_2pq",
            params,
            ((inv_q_p * q) ** 2 + (inv_p_q * p) ** 2 - 1 - (p * q) ** 2) % (2 * p * q),
            0,
            tolerance,
        ),
    ]
    ns = range(2 * p * q)
    if (p * q) % 2 == 0:
        particle = Fraction(q, p) * inv_q_p**2 - Fraction(1, q * p)
        wave = Fraction(p, q) * inv_p_q**2
        reports.append(
            _congruence("n_dependence_even", params, -particle, wave, tolerance, [n * n for n in ns])
        )
        return reports

    particle = _odd_particle_coeff(p, q)
    wave = _odd_wave_coeff(p, q)
    extra = Fraction(p * q, 4)
    squares = [(2 * n + q) ** 2 for n in ns]
    reports.append(_congruence("n_dependence_odd", params, -particle, wave + extra, tolerance, squares))
    reports.append(
        _congruence(
            "quarter_bezout_odd",
            params,
            Fraction(inv_q_p * p + inv_p_q * q, 4) * (1 + p * q),
            Fraction(p + q, 2),
            tolerance,
        )
    )
    reports.append(
        _congruence(
            "constant_extra_phase", params, extra, Fraction(0), tolerance, [k - 1 for k in squares]
        )
    )
    assembled = extra - Fraction(p - 1, 4) - Fraction(q - 1, 4)
    reports.append(
        _congruence(
            "assembled_constant_phase",
            params,
            assembled,
            Fraction((p - 1) * (q - 1), 4) + Fraction(1, 4),
            tolerance,
        )
    )
    jj = jacobi_symbol(p, q) * jacobi_symbol(q, p)
    reciprocity_sign = -1 if ((p - 1) // 2 * ((q - 1) // 2)) % 2 else 1
    reports.append(_integer_identity("jacobi_reciprocity", params, jj, reciprocity_sign, tolerance))
    ratio = jj * phase_eval(PhaseRational.of(assembled))
    reports.append(
        VerificationReport("constant_ratio_sqrt_i", params, ratio, SQRT_I, abs(ratio - SQRT_I), tolerance)
    )
    return reports
