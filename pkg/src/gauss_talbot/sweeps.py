"""Parameter sweeps that back the ``verify`` command and the acceptance suite.

Each sweep returns a list of :class:`VerificationReport`. Dense sweeps
(reciprocity, complementarity, closed forms) emit one report per outer
parameter pair carrying the worst residual over the inner index, so the
reports stay small while every point is still checked.
"""

from __future__ import annotations

import math
import random
from typing import Callable

import numpy as np

from . import gauss_sums as gs
from . import talbot
from .numtheory import FractionalDistance, bezout_pair, jacobi_symbol
from .report import VerificationReport

SUITES = ("reciprocity", "complementarity", "bezout", "phase-identities", "char-sums", "closed-forms")

DEFAULT_MAX = {
    "reciprocity": 40,
    "complementarity": 50,
    "bezout": 10**4,
    "phase-identities": 50,
    "char-sums": 199,
    "closed-forms": 50,
}


def coprime_pairs(limit: int):
    for q in range(1, limit + 1):
        for p in range(1, limit + 1):
            if math.gcd(p, q) == 1:
                yield FractionalDistance(p, q)


def _worst(identity: str, params: dict, points, tolerance: float) -> VerificationReport:
    """``points`` yields ``(extra_params, lhs, rhs)``; keep the largest ``|lhs - rhs|``."""
    best = None
    count = 0
    for extra, lhs, rhs in points:
        count += 1
        r = abs(lhs - rhs)
        if best is None or r > best[0]:
            best = (r, extra, lhs, rhs)
    r, extra, lhs, rhs = best
    return VerificationReport(identity, {**params, **extra, "points": count}, lhs, rhs, r, tolerance)


def reciprocity(limit: int = 40, tolerance: float = 1e-9) -> list[VerificationReport]:
    """Every ``1 <= a, b <= limit`` and parity-admissible ``c`` in ``[-2ab, 2ab]``."""
    out = []
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            start = -2 * a * b
            if (start + a * b) % 2:
                start += 1
            cs = np.arange(start, 2 * a * b + 1, 2, dtype=np.int64)
            lhs, rhs = gs.reciprocity_sides(a, b, cs)
            res = np.abs(lhs - rhs)
            j = int(np.argmax(res))
            out.append(
                VerificationReport(
                    "gauss_reciprocity",
                    {"a": a, "b": b, "c": int(cs[j]), "points": int(cs.size)},
                    complex(lhs[j]),
                    complex(rhs[j]),
                    float(res[j]),
                    tolerance,
                )
            )
    return out


def complementarity(limit: int = 50, tolerance: float = 1e-9) -> list[VerificationReport]:
    """Both orientations of the eighth-turn relation between the two pictures.

    ``complementarity`` is ``A = sqrt(i) At``; ``particle_sqrt_i_wave`` is
    ``At = sqrt(i) A``. Only the second holds for the direct sums.
    """
    out = []
    for z in coprime_pairs(limit):
        amps = [(n, talbot.coeff_wave_direct(n, z), talbot.coeff_particle_direct(n, z)) for n in range(z.q)]
        params = {"p": z.p, "q": z.q}
        out.append(_worst("complementarity", params, (({"n": n}, A, talbot.SQRT_I * At) for n, A, At in amps), tolerance))
        out.append(
            _worst("particle_sqrt_i_wave", params, (({"n": n}, At, talbot.SQRT_I * A) for n, A, At in amps), tolerance)
        )
    return out


def random_coprime_pairs(count: int, limit: int, seed: int = 0, odd: bool = False) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        p, q = rng.randint(1, limit), rng.randint(1, limit)
        if odd:
            p, q = p | 1, q | 1
            if p > limit or q > limit:
                continue
        if math.gcd(p, q) == 1:
            pairs.append((p, q))
    return pairs


def bezout(limit: int = 10**4, samples: int = 1000, seed: int = 0) -> list[VerificationReport]:
    """Bezout identity on random coprime pairs and Jacobi reciprocity on random odd ones."""
    out = []
    for p, q in random_coprime_pairs(samples, limit, seed):
        u, v = bezout_pair(p, q)
        lhs, rhs = u.value * q + v.value * p, 1 + p * q
        out.append(VerificationReport("bezout", {"p": p, "q": q}, complex(lhs), complex(rhs), abs(lhs - rhs), 0.5))
    for p, q in random_coprime_pairs(samples, limit, seed + 1, odd=True):
        lhs = jacobi_symbol(p, q) * jacobi_symbol(q, p)
        rhs = -1 if ((p - 1) // 2 * ((q - 1) // 2)) % 2 else 1
        out.append(
            VerificationReport("jacobi_reciprocity", {"p": p, "q": q}, complex(lhs), complex(rhs), abs(lhs - rhs), 0.5)
        )
    return out


def phase_identities(limit: int = 50, tolerance: float = 1e-12) -> list[VerificationReport]:
    out = []
    for z in coprime_pairs(limit):
        out.extend(talbot.verify_phase_identities(z, tolerance))
    return out


def is_squarefree(n: int) -> bool:
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


def char_sums(limit: int = 199, tolerance: float = 1e-9) -> list[VerificationReport]:
    """Quadratic character sums for squarefree odd ``3 <= b <= limit``."""
    out = []
    for b in range(3, limit + 1, 2):
        if not is_squarefree(b):
            continue
        lhs, rhs = gs.classical_char_sum(b), gs.classical_char_sum_closed(b)
        out.append(VerificationReport("classical_char_sum", {"b": b}, lhs, rhs, abs(lhs - rhs), tolerance))
    return out


def gauss_closed_triples(limit: int = 20):
    """Coprime ``1 <= a, b <= limit`` with every ``c`` in ``[-2b, 2b]`` that has a closed form."""
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            if math.gcd(a, b) != 1:
                continue
            for c in range(-2 * b, 2 * b + 1):
                if (a * b) % 2 == 0 and c % 2 == 0 or (a * b) % 2 == 1 and c % 2 == 1:
                    yield gs.GaussSumParams(a, b, c)


def closed_forms(limit: int = 50, tolerance: float = 1e-9, gauss_limit: int = 20) -> list[VerificationReport]:
    out = []
    pairs: list[tuple[str, Callable, Callable]] = [
        ("wave_closed_vs_direct", talbot.coeff_wave_closed, talbot.coeff_wave_direct),
        ("particle_closed_vs_direct", talbot.coeff_particle_closed, talbot.coeff_particle_direct),
    ]
    for z in coprime_pairs(limit):
        for name, closed, direct in pairs:
            points = (({"n": n}, closed(n, z), direct(n, z)) for n in range(z.q))
            out.append(_worst(name, {"p": z.p, "q": z.q}, points, tolerance))
    by_ab: dict[tuple[int, int], list] = {}
    for prm in gauss_closed_triples(gauss_limit):
        by_ab.setdefault((prm.a, prm.b), []).append(prm)
    for (a, b), prms in by_ab.items():
        points = (({"c": prm.c}, gs.k_closed(prm), gs.k_direct(prm)) for prm in prms)
        out.append(_worst("gauss_closed_vs_direct", {"a": a, "b": b}, points, tolerance))
    return out


def run(suite: str, limit: int | None = None, tolerance: float | None = None) -> list[VerificationReport]:
    if suite == "all":
        return [r for s in SUITES for r in run(s, None, tolerance)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    limit = DEFAULT_MAX[suite] if limit is None else limit
    kwargs = {} if tolerance is None else {"tolerance": tolerance}
    if suite == "reciprocity":
        return reciprocity(limit, **kwargs)
    if suite == "complementarity":
        return complementarity(limit, **kwargs)
    if suite == "bezout":
        return bezout(limit)
    if suite == "phase-identities":
        return phase_identities(limit, **kwargs)
    if suite == "char-sums":
        return char_sums(limit, **kwargs)
    return closed_forms(limit, **kwargs)
