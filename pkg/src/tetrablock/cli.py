"""Command-line front end.

Exit status: 0 on success or a passing check, 1 on a negative answer or a
failed check, 2 on a usage error.  Records go to stdout as JSON (sorted keys)
or CSV; progress lines go to stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__, io
from ._validation import GeometryError, Tolerance
from .cconvexity import AffineLine, cconvexity_scan, check_line, raster_slice
from .domains import (
    Domain,
    classify_boundary_e,
    drho_defining,
    e_defining,
    g2_defining,
    g2rho,
    g2rho_defining,
    in_e,
    polydisc,
    punctured_bidisc,
    tetrablock,
)
from .hyperplanes import (
    AffineHyperplane,
    RatioPredicate,
    UnionFamily,
    gamma_e_point,
    gamma_g2rho,
    hyperplane_misses_domain,
    separating_hyperplane_e,
)
from .maps import phi, worst_omega
from .verify import SUITES, Sizes, run

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    tol: float = 1e-9
    resolution: int = 256
    seed: int = 42
    lines: int = 10_000
    format: str = "json"
    timestamp: bool = True

    def __post_init__(self):
        if not (self.tol > 0 and self.resolution > 0 and self.lines > 0):
            raise UsageError("--tol, --res and --lines must be positive")
        if self.format not in ("json", "csv"):
            raise UsageError(f"unknown format {self.format!r}")

    @property
    def tolerance(self) -> Tolerance:
        return Tolerance(self.tol, self.tol)


# -- parsing ------------------------------------------------------------------------

_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_PAIR = re.compile(rf"^\(?\s*({_NUM})\s*,\s*({_NUM})\s*\)?$")


def parse_complex(text: str) -> complex:
    """Parse ``re,im``, ``(re,im)``, ``a+bi`` / ``a+bj`` or a plain real."""
    s = text.strip()
    m = _PAIR.match(s)
    if m:
        return complex(float(m.group(1)), float(m.group(2)))
    try:
        return complex(s.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def parse_point(tokens, n: int | None = None) -> np.ndarray:
    pt = np.array([parse_complex(t) for t in tokens], dtype=complex)
    if n is not None and len(pt) != n:
        raise UsageError(f"expected {n} coordinates, got {len(pt)}")
    if not np.all(np.isfinite(pt)):
        raise UsageError("coordinates must be finite")
    return pt


def _protect_negatives(argv):
    # "-0.5,1" would otherwise be taken for an option flag
    return [" " + a if re.match(r"^-[\d.(]", a) else a for a in argv]


def _cplx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _domain(name: str, rho: float | None) -> Domain:
    name = name.upper()
    if name == "E":
        return tetrablock()
    if name == "G2":
        return g2rho(1.0)
    if name == "G2RHO":
        if rho is None:
            raise UsageError("G2RHO needs --rho")
        return g2rho(rho)
    if name in ("D2", "POLYDISC"):
        return polydisc(2)
    if name == "D3":
        return polydisc(3)
    if name == "CONTROL":
        return punctured_bidisc(0.3)
    raise UsageError(f"unknown domain {name!r}")


# -- commands -----------------------------------------------------------------------


def cmd_member(args, cfg: CliConfig):
    name = args.domain.upper()
    if name == "E":
        x = parse_point(args.point, 3)
        val = float(e_defining(x))
    elif name == "G2":
        x = parse_point(args.point, 2)
        val = float(g2_defining(x))
    elif name in ("G2RHO", "DRHO"):
        if args.rho is None:
            raise UsageError(f"{name} needs --rho")
        x = parse_point(args.point, 2)
        val = float(g2rho_defining(x, args.rho) if name == "G2RHO" else drho_defining(x, args.rho))
    else:
        raise UsageError(f"unknown domain {args.domain!r}; expected E, G2, G2RHO or DRHO")
    rec = {"command": "member", "domain": name, "point": [_cplx(z) for z in x],
           "defining": val, "member": val < 0}
    if name in ("G2RHO", "DRHO"):
        rec["rho"] = args.rho
    return EXIT_OK, rec


def cmd_classify(args, cfg: CliConfig):
    x = parse_point(args.point, 3)
    cls = classify_boundary_e(x, cfg.tolerance)
    rec = {"command": "classify", "point": [_cplx(z) for z in x], "defining": float(e_defining(x)),
           "tol": cfg.tol, **cls.as_dict()}
    if cls.case is not None:
        rec["canonical"] = [_cplx(z) for z in cls.canonical()]
    return EXIT_OK, rec


def cmd_separate(args, cfg: CliConfig):
    x = parse_point(args.point, 3)
    if in_e(x):
        return EXIT_NEGATIVE, {"command": "separate", "point": [_cplx(z) for z in x], "inside": True,
                               "defining": float(e_defining(x))}
    omega = worst_omega(x) if args.omega is None else parse_complex(args.omega)
    h = separating_hyperplane_e(x, None if args.omega is None else omega)
    rec = {"command": "separate", "point": [_cplx(z) for z in x], "inside": False,
           "omega": _cplx(omega), "phi_image": [_cplx(z) for z in phi(omega, x)],
           "coefficients": [_cplx(c) for c in h.coeffs], "class": h.cls.as_list(),
           "constant": _cplx(h.constant)}
    return EXIT_OK, rec


def _miss_record(h: AffineHyperplane, domain: Domain, n: int, seed: int) -> dict:
    r = hyperplane_misses_domain(h, domain, n, seed)
    return {"class": h.cls.as_list(), **r.as_dict()}


def cmd_gamma(args, cfg: CliConfig):
    name = args.domain.upper()
    n = args.samples if args.samples is not None else 20
    if name == "E":
        x = parse_point(args.point, 3)
        gset = gamma_e_point(x, cfg.tolerance)
        domain = tetrablock()
    elif name == "G2RHO":
        if args.rho is None:
            raise UsageError("G2RHO needs --rho")
        x = parse_point(args.point, 2)
        gset = gamma_g2rho(x, args.rho, cfg.tolerance)
        domain = g2rho(args.rho)
    else:
        raise UsageError(f"unknown domain {args.domain!r}; expected E or G2RHO")
    members = gset.sample(n, cfg.seed)
    rec = {"command": "gamma", "domain": name, "point": [_cplx(z) for z in x], "seed": cfg.seed,
           **gset.describe()}
    if isinstance(gset, UnionFamily):
        members.append(gset.common_member)
        rec["common_member"] = gset.common_member.as_list()
    if isinstance(gset, RatioPredicate):
        rec["zero_member"] = bool(gset.contains_ratio(0.0))
    miss_n = args.miss_samples
    checks = [_miss_record(AffineHyperplane.through(x, v), domain, miss_n, cfg.seed + i)
              for i, v in enumerate(members)]
    rec.update(samples=len(members), miss_samples=miss_n, members=checks,
               all_miss=all(c["misses"] for c in checks))
    return (EXIT_OK if rec["all_miss"] else EXIT_NEGATIVE), rec


def cmd_slice(args, cfg: CliConfig):
    domain = _domain(args.domain, args.rho)
    base = parse_point(args.base, domain.dim)
    direction = parse_point(args.dir, domain.dim)
    if not np.any(direction):
        raise UsageError("direction must be non-zero")
    line = AffineLine(tuple(base), tuple(direction))
    r = raster_slice(domain, line, cfg.resolution)
    passed, topo = check_line(domain, line, cfg.resolution, args.min_blob)
    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    files = {"pgm": f"{prefix}.pgm", "csv": f"{prefix}.csv", "json": f"{prefix}.json"}
    io.write_pgm(files["pgm"], r.bits)
    Path(files["csv"]).write_text(io.raster_csv(r.bits), encoding="utf-8", newline="")
    rec = {"command": "slice", "domain": domain.name, "line": line.as_dict(), "halfwidth": r.halfwidth,
           "resolution": r.resolution, "min_blob": args.min_blob, "passed": passed, **topo.as_dict(),
           "files": files}
    io.write_json(files["json"], _stamp(rec, cfg))
    return (EXIT_OK if passed else EXIT_NEGATIVE), rec


def cmd_scan(args, cfg: CliConfig):
    domain = _domain(args.domain, args.rho)
    rep = cconvexity_scan(domain, cfg.lines, cfg.seed, cfg.resolution, args.min_blob)
    rec = {"command": "scan", "passed": rep.passed, **rep.as_dict()}
    if args.out:
        io.write_json(args.out, _stamp(rec, cfg))
    return (EXIT_OK if rep.passed else EXIT_NEGATIVE), rec


def cmd_verify(args, cfg: CliConfig):
    sizes = Sizes(resolution=cfg.resolution)
    if args.samples is not None:
        sizes = sizes.scaled_samples(args.samples)
    if args.lines is not None:
        sizes = sizes.with_lines(args.lines)

    def progress(r):
        print(f"{r.suite}: {'PASS' if r.passed else 'FAIL'} ({r.elapsed:.1f} s)", file=sys.stderr, flush=True)

    results = run(args.suite, cfg.seed, sizes, cfg.tolerance, progress)
    passed = all(r.passed for r in results)
    rec = {"command": "verify", "suite": args.suite, "seed": cfg.seed, "tol": cfg.tol,
           "sizes": sizes.__dict__, "passed": passed, "suites": [r.as_dict() for r in results]}
    if args.out:
        io.write_json(args.out, _stamp(rec, cfg))
    return (EXIT_OK if passed else EXIT_NEGATIVE), rec


# -- output -------------------------------------------------------------------------


def _stamp(rec: dict, cfg: CliConfig) -> dict:
    out = {**rec, "version": __version__}
    if cfg.timestamp:
        out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return out


def _csv_rows(rec: dict) -> list[dict]:
    # one row per natural item for list-valued outputs, otherwise the record itself
    if rec.get("command") == "verify":
        return [{"suite": s["suite"], **c} for s in rec["suites"] for c in s["checks"]]
    if rec.get("command") == "scan":
        return [{"index": v["index"], **v["topology"], "line": v["line"]} for v in rec["violations"]]
    if rec.get("command") == "gamma":
        return rec["members"]
    return [rec]


def emit(rec: dict, cfg: CliConfig, stream=None) -> None:
    stream = stream or sys.stdout
    rec = _stamp(rec, cfg)
    if cfg.format == "csv":
        stream.write(io.records_csv(_csv_rows(rec)))
    else:
        stream.write(io.dumps(rec) + "\n")


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="membership tolerance")
    common.add_argument("--res", type=int, default=256, help="raster resolution (pixels per side)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--lines", type=int, default=None, help="number of random lines")
    common.add_argument("--rho", type=float, default=None)
    common.add_argument("--omega", default=None, help="complex omega, e.g. 0.5,0.2")
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    parser = argparse.ArgumentParser(prog="tetrablock", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("member", parents=[common], help="defining value and membership")
    p.add_argument("domain", help="E, G2, G2RHO or DRHO")
    p.add_argument("point", nargs="+", help="coordinates as re,im")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("classify", parents=[common], help="locate a point relative to the tetrablock")
    p.add_argument("point", nargs=3)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("separate", parents=[common], help="separating hyperplane at an outside point")
    p.add_argument("point", nargs=3)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("gamma", parents=[common], help="supporting hyperplanes at a boundary point")
    p.add_argument("point", nargs="+")
    p.add_argument("--domain", default="E", help="E (default) or G2RHO")
    p.add_argument("--miss-samples", type=int, default=20_000)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("slice", parents=[common], help="rasterize one complex line slice")
    p.add_argument("domain", help="E, G2, G2RHO, D2, D3 or CONTROL")
    p.add_argument("--base", nargs="+", required=True)
    p.add_argument("--dir", nargs="+", required=True)
    p.add_argument("--out", default="slice", help="output prefix for .pgm, .csv and .json")
    p.add_argument("--min-blob", type=int, default=4)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("scan", parents=[common], help="C-convexity scan over random lines")
    p.add_argument("domain", help="E, G2, G2RHO, D2, D3 or CONTROL")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.add_argument("--min-blob", type=int, default=4)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = args.lines if args.lines is not None else 10_000
        cfg = CliConfig(args.tol, args.res, args.seed, lines, args.format, not args.no_timestamp)
        if args.command != "verify":
            args.lines = lines
        status, rec = args.func(args, cfg)
    except (UsageError, GeometryError, ValueError) as exc:
        print(f"tetrablock {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(rec, cfg)
    return status


__all__ = ["CliConfig", "build_parser", "main", "parse_complex", "parse_point"]
