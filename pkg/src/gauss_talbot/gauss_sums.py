"""Quadratic Gauss sums, their closed forms and the reciprocity law.

Every exponent is kept as an exact rational multiple of ``i*pi`` and only
turned into a float when the phasor is evaluated. Sums are accumulated as
integer numerators over a common denominator, reduced modulo ``2*den``,
so large arguments cost no more precision than small ones.

The normalized Gauss sum used throughout is

    K(a, b, c) = (1/b) * sum_{m=0}^{b-1} exp(i*pi*(a*m**2 + c*m)/b),

which is the per-period average of the regularized infinite sum ``G``
whenever ``a*b + c`` is even.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numtheory import half_inverse, jacobi_symbol, mod_inverse
from .report import VerificationReport

_EXACT_QUARTERS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 2): 1j,
    Fraction(1): -1 + 0j,
    Fraction(3, 2): -1j,
}


@dataclass(frozen=True, init=False)
class PhaseRational:
    """The phase ``exp(i*pi*num/den)``, with ``num/den`` reduced into ``[0, 2)``."""

    num: int
    den: int

    def __init__(self, num: int, den: int = 1):
        num, den = int(num), int(den)
        if den <= 0:
            raise ValueError(f"phase denominator must be positive, got {den}")
        g = math.gcd(num, den)
        num, den = num // g, den // g
        object.__setattr__(self, "num", num % (2 * den))
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, x: Fraction | int) -> "PhaseRational":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other: "PhaseRational") -> "PhaseRational":
        return PhaseRational.of(self.as_fraction() + other.as_fraction())

    def __neg__(self) -> "PhaseRational":
        return PhaseRational(-self.num, self.den)

    def __sub__(self, other: "PhaseRational") -> "PhaseRational":
        return self + (-other)


def phase_eval(ph: PhaseRational) -> complex:
    exact = _EXACT_QUARTERS.get(ph.as_fraction())
    if exact is not None:
        return exact
    return cmath.exp(1j * math.pi * ph.num / ph.den)


def phasor_sum(numerators, den: int) -> complex:
    """``sum_j exp(i*pi*numerators[j]/den)`` for integer numerators.

    The numerators are reduced modulo ``2*den`` in integer arithmetic
    before anything is converted to floating point.
    """
    r = np.mod(np.asarray(numerators, dtype=np.int64), 2 * den)
    return complex(np.exp(1j * np.pi * (r / den)).sum())


def quadratic_sum(alpha: int, beta: int, den: int, count: int) -> complex:
    """``sum_{t=0}^{count-1} exp(i*pi*(alpha*t**2 + beta*t)/den)``."""
    t = np.arange(count, dtype=np.int64)
    mod = 2 * den
    t2 = (t * t) % mod
    return phasor_sum((alpha % mod) * t2 + (beta % mod) * t, den)


@dataclass(frozen=True)
class GaussSumParams:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("a must be nonzero")
        if self.b < 1:
            raise ValueError(f"b must be positive, got {self.b}")

    @property
    def parity_class(self) -> str:
        """'even' (ab, c both even), 'odd' (ab, c both odd) or 'mixed'."""
        ab, c = (self.a * self.b) & 1, self.c & 1
        if ab != c:
            return "mixed"
        return "odd" if ab else "even"


def k_direct(params: GaussSumParams) -> complex:
    """Normalized Gauss sum by direct summation; the oracle for :func:`k_closed`."""
    a, b, c = params.a, params.b, params.c
    return quadratic_sum(a, c, b, b) / b


def g_truncated(params: GaussSumParams, N: int) -> complex:
    """Symmetric partial average ``1/(2|a|bN) * sum_{m=-N|a|b}^{N|a|b} exp(i*pi*(a m^2 + c m)/b)``.

    Both endpoints are included, so the window holds one term more than
    ``2N|a|`` full periods; that surplus term is an ``O(1/N)`` error.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    a, b, c = params.a, params.b, params.c
    half = N * abs(a) * b
    m = np.arange(-half, half + 1, dtype=np.int64)
    mod = 2 * b
    nums = (a % mod) * ((m * m) % mod) + (c % mod) * (m % mod)
    return phasor_sum(nums, b) / (2 * half)


def k_closed(params: GaussSumParams) -> complex:
    """Closed form of :func:`k_direct` for coprime ``a >= 1``, ``b``.

    Branches: a even & b odd & c even; a odd & b even & c even;
    a odd & b odd & c odd. Any other parity combination raises.
    """
    a, b, c = params.a, params.b, params.c
    if a < 1:
        raise ValueError(f"closed form needs a >= 1, got {a}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"closed form needs coprime a, b, got ({a}, {b})")
    scale = 1 / math.sqrt(b)
    if a % 2 == 0 and b % 2 == 1 and c % 2 == 0:
        inv_a = mod_inverse(a, b).value
        ph = -(Fraction(b - 1, 4) + Fraction(a, b) * inv_a**2 * Fraction(c, 2) ** 2)
        return scale * jacobi_symbol(a, b) * phase_eval(PhaseRational.of(ph))
    if a % 2 == 1 and b % 2 == 0 and c % 2 == 0:
        inv_a = mod_inverse(a, b).value
        ph = Fraction(a, 4) - Fraction(a, b) * inv_a**2 * Fraction(c, 2) ** 2
        return scale * jacobi_symbol(b, a) * phase_eval(PhaseRational.of(ph))
    if a % 2 == 1 and b % 2 == 1 and c % 2 == 1:
        half = half_inverse(b).value
        inv_2a = mod_inverse(2 * a, b).value
        ph = -(Fraction(b - 1, 4) + Fraction(2 * a, b) * half * inv_2a**2 * c * c)
        return scale * jacobi_symbol(a, b) * phase_eval(PhaseRational.of(ph))
    raise ValueError(f"no closed form for this parity class: (a, b, c) = ({a}, {b}, {c})")


def classical_char_sum(b: int) -> complex:
    """``sum_{n=0}^{b-1} (n/b) exp(2*pi*i*n/b)`` with the Jacobi symbol as character."""
    if b < 3 or b % 2 == 0:
        raise ValueError(f"classical_char_sum needs an odd b >= 3, got {b}")
    chi = np.array([jacobi_symbol(n, b) for n in range(b)])
    n = np.arange(b)
    return complex((chi * np.exp(2j * np.pi * n / b)).sum())


def classical_char_sum_closed(b: int) -> complex:
    """``sqrt(b)`` for ``b = 1 (mod 4)`` and ``i*sqrt(b)`` for ``b = 3 (mod 4)``."""
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be odd and positive, got {b}")
    return math.sqrt(b) * phase_eval(PhaseRational((b - 1) ** 2, 8))


def reciprocity_sides(a: int, b: int, cs) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the Gauss-sum reciprocity law for every ``c`` in ``cs``.

    lhs = sum_{t<a} exp(i*pi*(b t^2 + c t)/a)
    rhs = sqrt(a/b) * exp(i*pi/4) * exp(-i*pi*c^2/(4ab)) * sum_{t<b} exp(-i*pi*(a t^2 + c t)/b)
    """
    cs = np.atleast_1d(np.asarray(cs, dtype=np.int64))
    ta = np.arange(a, dtype=np.int64)
    tb = np.arange(b, dtype=np.int64)
    mod_a, mod_b = 2 * a, 2 * b
    lhs_nums = (b * (ta * ta) % mod_a)[None, :] + (cs % mod_a)[:, None] * ta[None, :]
    rhs_nums = -((a * (tb * tb)) % mod_b)[None, :] - (cs % mod_b)[:, None] * tb[None, :]
    lhs = np.exp(1j * np.pi * (np.mod(lhs_nums, mod_a) / a)).sum(axis=1)
    inner = np.exp(1j * np.pi * (np.mod(rhs_nums, mod_b) / b)).sum(axis=1)
    # sqrt(i) * exp(-i*pi*c^2/(4ab)) as one exact phase (a*b - c^2) / (4ab)
    mod_c = 8 * a * b
    const = np.mod(a * b - np.mod(cs * cs, mod_c), mod_c)
    rhs = math.sqrt(a / b) * np.exp(1j * np.pi * (const / (4 * a * b))) * inner
    return lhs, rhs


def verify_reciprocity(params: GaussSumParams, tolerance: float = 1e-9) -> VerificationReport:
    a, b, c = params.a, params.b, params.c
    if a < 1:
        raise ValueError(f"reciprocity needs a >= 1, got {a}")
    if params.parity_class == "mixed":
        raise ValueError(f"reciprocity hypothesis not met: ab and c differ in parity for {params}")
    lhs, rhs = reciprocity_sides(a, b, [c])
    lhs, rhs = complex(lhs[0]), complex(rhs[0])
    return VerificationReport(
        identity="gauss_reciprocity",
        parameters={"a": a, "b": b, "c": c},
        lhs=lhs,
        rhs=rhs,
        residual=abs(lhs - rhs),
        tolerance=tolerance,
    )
