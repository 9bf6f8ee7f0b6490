"""Command-line front end.

Exit codes: 0 success (every check passed), 1 I/O failure or a failed
check, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from . import gauss_sums as gs
from . import sweeps, talbot
from .carpet import ROUTES, CarpetSpec, InvalidSpec, render_carpet
from .numtheory import FractionalDistance

log = logging.getLogger("gauss_talbot")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _g(x: float) -> str:
    return f"{x:.12g}"


def _parse_zeta(text: str) -> FractionalDistance:
    try:
        num, _, den = text.partition("/")
        p, q = int(num), int(den) if den else 1
    except ValueError:
        raise UsageError(f"cannot parse distance {text!r}; expected P/Q") from None
    if p <= 0 or q <= 0:
        raise UsageError(f"distance {text!r} needs positive P and Q")
    z = FractionalDistance(p, q)
    if (z.p, z.q) != (p, q):
        log.warning("reduced %s to %s", text, z)
    return z


def _coeff_rows(z: FractionalDistance, picture: str, method: str) -> list[dict]:
    rows = []
    for n in range(z.q):
        if method == "both":
            amp = talbot.coefficient(n, z, picture, "direct").amp
            closed = talbot.coefficient(n, z, picture, "closed").amp
        else:
            amp = talbot.coefficient(n, z, picture, method).amp
        row = {
            "n": n,
            "q": z.q,
            "p": z.p,
            "picture": picture,
            "method": method,
            "re": _g(amp.real),
            "im": _g(amp.imag),
            "modulus": _g(abs(amp)),
            "arg_over_pi": _g(math.atan2(amp.imag, amp.real) / math.pi),
        }
        if method == "both":
            row["residual"] = _g(abs(closed - amp))
        rows.append(row)
    return rows


def _open_out(path: str | None, mode: str = "w"):
    if path in (None, "-"):
        return sys.stdout if "b" not in mode else sys.stdout.buffer
    return open(path, mode, newline="" if "b" not in mode else None)


def cmd_coeff(args) -> int:
    z = _parse_zeta(args.zeta)
    rows = _coeff_rows(z, args.picture, args.method)
    out = _open_out(args.output)
    try:
        if args.format == "json":
            json.dump(rows, out, indent=2)
            out.write("\n")
        else:
            w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in sweeps.SUITES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.suite == "all" and args.max is not None:
        raise UsageError("--max applies to a single suite")
    reports = sweeps.run(args.suite, args.max, args.tol)
    failed = [r for r in reports if not r.passed]
    out = _open_out(args.output)
    try:
        json.dump([r.to_dict() for r in reports], out, indent=1)
        out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()
    by_identity: dict[str, list[int]] = {}
    for r in reports:
        by_identity.setdefault(r.identity, [0, 0])[0 if r.passed else 1] += 1
    for name, (ok, bad) in by_identity.items():
        print(f"{name}: {ok} passed, {bad} failed", file=sys.stderr)
    print(f"{args.suite}: {len(reports) - len(failed)}/{len(reports)} passed", file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


def farey(qmax: int, lo: Fraction, hi: Fraction) -> list[FractionalDistance]:
    """Reduced fractions ``p/q`` in ``[lo, hi]`` with ``0 < p`` and ``q <= qmax``, ascending."""
    fr = {Fraction(p, q) for q in range(1, qmax + 1) for p in range(1, int(hi * q) + 1)}
    return [FractionalDistance(f.numerator, f.denominator) for f in sorted(fr) if lo <= f <= hi]


def _zeta_list(args) -> list:
    zetas: list = []
    for text in args.zeta or []:
        if "/" in text:
            zetas.append(_parse_zeta(text))
        else:
            try:
                zetas.append(float(text))
            except ValueError:
                raise UsageError(f"cannot parse distance {text!r}") from None
    if args.zeta_grid:
        try:
            start, stop, count = args.zeta_grid.split(":")
            start, stop, count = Fraction(start), Fraction(stop), int(count)
        except ValueError:
            raise UsageError(f"--zeta-grid expects start:stop:count, got {args.zeta_grid!r}") from None
        if args.farey:
            zetas.extend(farey(args.farey, start, stop))
        else:
            zetas.extend(float(x) for x in np.linspace(float(start), float(stop), count))
    if not zetas:
        raise UsageError("give at least one --zeta or a --zeta-grid")
    return zetas


def write_pgm(path: str, image: np.ndarray) -> None:
    """8-bit binary PGM, max-normalized; rows top to bottom."""
    peak = image.max() if image.size else 0.0
    scaled = np.zeros(image.shape) if peak <= 0 else image / peak
    data = np.rint(scaled * 255).astype(np.uint8)
    h, w = data.shape
    with open(path, "wb") as f:
        f.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        f.write(data.tobytes())


def cmd_carpet(args) -> int:
    if not args.output and not args.csv:
        raise UsageError("give -o/--output (PGM) and/or --csv")
    zetas = _zeta_list(args)
    spec = CarpetSpec(
        xi_samples=args.xi,
        zetas=zetas,
        n_trunc=args.n_trunc,
        apod_width=args.apod,
        a_over_lambda=args.a_over_lambda,
    )
    try:
        spec.validate()
        if args.route == "path" and any(float(z) <= 0 for z in zetas):
            raise InvalidSpec("path route needs every zeta > 0")
    except InvalidSpec as exc:
        raise UsageError(str(exc)) from None
    grid = render_carpet(spec, args.route)
    try:
        if args.output:
            write_pgm(args.output, grid.intensities)
            sidecar = Path(args.output).with_suffix(Path(args.output).suffix + ".json")
            sidecar.write_text(json.dumps({"route": args.route, "spec": spec.to_dict()}, indent=2) + "\n")
        if args.csv:
            with open(args.csv, "w", newline="") as f:
                w = csv.writer(f, lineterminator="\n")
                w.writerow(["zeta"] + [_g(x) for x in grid.xi])
                for z, row in zip(spec.to_dict()["zetas"], grid.intensities):
                    w.writerow([z] + [_g(v) for v in row])
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _amp(z: complex) -> dict:
    return {"re": float(_g(z.real)), "im": float(_g(z.imag)), "modulus": float(_g(abs(z)))}


def cmd_gauss(args) -> int:
    try:
        prm = gs.GaussSumParams(args.a, args.b, args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result: dict = {"a": prm.a, "b": prm.b, "c": prm.c, "parity_class": prm.parity_class}
    result["K_direct"] = _amp(gs.k_direct(prm))
    result["G_truncated"] = {"N": args.N, **_amp(gs.g_truncated(prm, args.N))}
    try:
        result["K_closed"] = _amp(gs.k_closed(prm))
    except ValueError as exc:
        result["K_closed"] = None
        result["K_closed_error"] = str(exc)
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_errata(args) -> int:
    sys.stdout.write(resources.files("gauss_talbot").joinpath("errata.json").read_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gauss-talbot", description="Gauss sums and fractional Talbot images.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coeff", help="revival amplitudes for one distance p/q")
    c.add_argument("--zeta", required=True, help="distance P/Q in Talbot lengths")
    c.add_argument("--picture", choices=["wave", "particle"], default="wave")
    c.add_argument("--method", choices=["direct", "closed", "both"], default="direct")
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_coeff)

    v = sub.add_parser("verify", help="run an identity sweep and emit a JSON report")
    v.add_argument("--suite", default="all", help="one of: " + ", ".join(sweeps.SUITES + ("all",)))
    v.add_argument("--max", type=int, help="sweep bound (suite-specific default)")
    v.add_argument("--tol", type=float, help="residual tolerance (suite-specific default)")
    v.add_argument("--format", choices=["json"], default="json")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("carpet", help="render a Talbot carpet to PGM and/or CSV")
    k.add_argument("--zeta", action="append", help="P/Q or decimal; repeatable")
    k.add_argument("--zeta-grid", help="start:stop:count (uniform, endpoints included)")
    k.add_argument("--farey", type=int, metavar="QMAX", help="with --zeta-grid: all p/q in range with q <= QMAX")
    k.add_argument("--xi", type=int, default=512, help="samples across the unit cell")
    k.add_argument("--route", choices=ROUTES, default="wave")
    k.add_argument("--n-trunc", type=int, default=256)
    k.add_argument("--apod", type=float, default=48.0)
    k.add_argument("--a-over-lambda", type=float, default=1000.0)
    k.add_argument("-o", "--output", help="PGM path (a .json sidecar is written next to it)")
    k.add_argument("--csv")
    k.set_defaults(func=cmd_carpet)

    g = sub.add_parser("gauss", help="evaluate K (direct and closed) and truncated G")
    g.add_argument("--a", type=int, required=True)
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--c", type=int, default=0)
    g.add_argument("--N", type=int, default=16)
    g.set_defaults(func=cmd_gauss)

    e = sub.add_parser("errata", help="print the corrections applied to quoted closed forms")
    e.set_defaults(func=cmd_errata)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {exc}\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
