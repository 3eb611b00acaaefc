"""Command-line interface.

One executable, ``su2slopes``, with a subcommand per tool.  Every
subcommand that produces data accepts ``--json`` for machine-readable
output; integers that can exceed 64 bits (cover orders, resultant values)
are emitted as strings.  Exit codes: 0 success (for ``certify``: slope
certified), 1 input error, 2 slope open, 3 slope fails in general.
Configuration is by flags only, so runs are reproducible from the command
line alone.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__, quatopt
from .certify import (
    EXIT_CODES,
    certificate_to_dict,
    certify,
    enumerate_certified,
    summarize,
)
from .covers import cyclic_reps, fox_branched_order, nondegeneracy_check
from .knots import determinant, enumerate_lspace_alexander, torus_alexander
from .laurent import LaurentPoly, PolynomialParseError
from .presentations import (
    format_presentation,
    lens_presentation,
    parse_presentation,
    surgery_presentation,
)
from .selftest import run_selftest
from .simple_knots import simple_knot_invariants
from .slopes import Slope, SlopeParseError
from .su2search import DEFAULT_EPS, DEFAULT_TOL, search_irreducible

_NOT_FOUND_NOTE = (
    "no irreducible representation found; exhausting restarts is evidence, "
    "not a proof of nonexistence"
)


@dataclass
class Config:
    """Run configuration assembled from flags (never from the environment)."""

    tol: float = DEFAULT_TOL
    eps: float = DEFAULT_EPS
    restarts: int = 200
    seed: int = 1
    json_output: bool = False

    def __post_init__(self):
        if self.tol <= 0 or self.eps <= 0:
            raise ValueError("tolerances must be positive")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")


def _emit(data):
    print(json.dumps(data, indent=2, sort_keys=True))


def _euler_pairs(euler):
    return [[e, c] for e, c in euler.entries]


def _cmd_certify(args):
    cert = certify(Slope.parse(args.slope))
    if args.json:
        _emit(certificate_to_dict(cert))
    else:
        print(f"slope {cert.slope}: {cert.verdict}")
        for record in cert.chain:
            print(f"  rule {record.rule}: {record.citation}")
            for key, value in sorted(record.witnesses.items()):
                print(f"    {key} = {value}")
        if not cert.chain:
            for key, value in sorted(cert.witnesses.items()):
                print(f"  {key} = {value}")
    return EXIT_CODES[cert.verdict]


def _cmd_enumerate(args):
    lo = Slope.parse(args.lo).as_fraction()
    hi = Slope.parse(args.hi).as_fraction()
    certs = enumerate_certified(args.max_p, lo, hi)
    summary = summarize(certs)
    if args.json:
        _emit(
            {
                "max_p": args.max_p,
                "from": str(lo),
                "to": str(hi),
                "summary": summary,
                "slopes": [certificate_to_dict(c) for c in certs],
            }
        )
    else:
        for cert in certs:
            head = cert.chain[0].rule if cert.chain else "-"
            print(f"{str(cert.slope):>9}  {cert.verdict:<16} {head}")
        print(
            "summary: "
            + ", ".join(f"{k}={v}" for k, v in sorted(summary.items()))
        )
    return 0


def _cmd_simple_knot(args):
    slope = Slope.from_fraction(args.p, args.q)
    inv = simple_knot_invariants(slope)
    _emit(
        {
            "p": slope.p,
            "q": slope.q,
            "d": inv.d,
            "genus": inv.genus,
            "alexander": str(inv.alexander),
            "cover_order": str(inv.cover_order),
            "euler": _euler_pairs(inv.euler),
        }
    )
    return 0


def _cmd_alexander(args):
    poly = torus_alexander(args.a, args.b)
    if args.json:
        _emit({"a": args.a, "b": args.b, "alexander": str(poly)})
    else:
        print(poly)
    return 0


def _cmd_lspace_alex(args):
    polys = sorted(enumerate_lspace_alexander(args.genus), key=str)
    if args.json:
        _emit(
            {
                "genus": args.genus,
                "count": len(polys),
                "polynomials": [str(p) for p in polys],
            }
        )
    else:
        for p in polys:
            print(p)
    return 0


def _cmd_det(args):
    poly = LaurentPoly.parse(args.poly)
    value = determinant(poly)
    if args.json:
        _emit({"polynomial": str(poly), "determinant": value})
    else:
        print(value)
    return 0


def _cmd_fox(args):
    poly = LaurentPoly.parse(args.poly)
    order = fox_branched_order(poly, args.n)
    data = {
        "polynomial": str(poly),
        "n": args.n,
        "order": str(order),  # 0 encodes infinite first homology
        "infinite": order == 0,
    }
    if args.json:
        _emit(data)
    else:
        print("infinite" if order == 0 else order)
    return 0


def _cmd_nondegenerate(args):
    poly = LaurentPoly.parse(args.poly)
    result = nondegeneracy_check(poly, args.p, args.e)
    data = {
        "polynomial": str(poly),
        "p": args.p,
        "e": args.e,
        "n": 2 * args.p**args.e,
        "nondegenerate": result,
    }
    if args.json:
        _emit(data)
    else:
        print("nondegenerate" if result else "degenerate")
    return 0


def _cmd_cyclic_reps(args):
    reps = cyclic_reps(args.h)
    data = {
        "h": reps.order,
        "representations": [
            {"pi_multiple": str(a), "radians": r}
            for a, r in zip(reps.angles, reps.radians())
        ],
    }
    if args.json:
        _emit(data)
    else:
        for entry in data["representations"]:
            print(f"{entry['pi_multiple']} * pi  =  {entry['radians']:.12f}")
    return 0


def _cmd_presentation(args):
    if args.kind == "lens":
        pres = lens_presentation(args.a)
    else:
        if args.unfilled:
            slope = None
        elif args.slope is None:
            raise ValueError("give either --slope p/q or --unfilled")
        else:
            slope = Slope.parse(args.slope)
        pres = surgery_presentation(args.a, args.b, slope)
    sys.stdout.write(format_presentation(pres))
    return 0


def _cmd_su2_search(args):
    config = Config(
        tol=args.tol,
        eps=args.eps,
        restarts=args.restarts,
        seed=args.seed,
        json_output=args.json,
    )
    with open(args.file, encoding="utf-8") as handle:
        pres = parse_presentation(handle.read())
    result = search_irreducible(
        pres, restarts=config.restarts, seed=config.seed,
        tol=config.tol, eps=config.eps,
    )
    if config.json_output:
        data = {
            "backend": quatopt.BACKEND,
            "found": result.found,
            "defect": result.defect,
            "irreducibility_margin": result.irreducibility_margin,
            "restarts_used": result.restarts_used,
            "seed": result.seed,
            "image_type_heuristic": result.image_type,
            "images": (
                result.assignment.images.tolist() if result.assignment else None
            ),
        }
        if not result.found:
            data["note"] = _NOT_FOUND_NOTE
        _emit(data)
    else:
        print(f"backend: {quatopt.BACKEND}")
        if result.found:
            print(
                f"found irreducible representation: defect={result.defect:.3e}, "
                f"commutator margin={result.irreducibility_margin:.3e}, "
                f"restarts used={result.restarts_used}"
            )
            print(f"image type (heuristic): {result.image_type}")
            for row in result.assignment.images:
                print("  " + "  ".join(f"{x:+.12f}" for x in row))
        else:
            print(
                f"{_NOT_FOUND_NOTE} "
                f"(best defect {result.defect:.3e}, margin "
                f"{result.irreducibility_margin:.3e}, "
                f"{result.restarts_used} restarts)"
            )
    return 0


def _cmd_selftest(args):
    ok = run_selftest()
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="su2slopes",
        description="surgery-slope certification and SU(2) representation search",
    )
    parser.add_argument(
        "--version", action="version", version=f"su2slopes {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="certify a surgery slope")
    p.add_argument("slope", help="rational slope, 'p/q' or an integer")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("enumerate", help="certify every slope in a window")
    p.add_argument("--max-p", type=int, required=True, dest="max_p")
    p.add_argument("--from", required=True, dest="lo", help="lower bound a/b")
    p.add_argument("--to", required=True, dest="hi", help="upper bound c/d")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "simple-knot", help="invariants of the simple knot of a slope (JSON)"
    )
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_simple_knot)

    p = sub.add_parser("alexander", help="Alexander polynomial of a torus knot")
    p.add_argument("kind", choices=["torus"])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser(
        "lspace-alex", help="Alexander polynomials allowed for L-space knots"
    )
    p.add_argument("genus", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lspace_alex)

    p = sub.add_parser("det", help="determinant |p(-1)| of an Alexander polynomial")
    p.add_argument("poly", help="polynomial, e.g. 't - 1 + t^-1'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("fox", help="order of the n-fold cyclic branched cover")
    p.add_argument("poly", help="polynomial, e.g. 't - 1 + t^-1'")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fox)

    p = sub.add_parser(
        "nondegenerate",
        help="no nontrivial (2 p^e)-th root of unity is a zero of the polynomial",
    )
    p.add_argument("poly", help="polynomial, e.g. 't - 1 + t^-1'")
    p.add_argument("p", type=int)
    p.add_argument("e", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nondegenerate)

    p = sub.add_parser("cyclic-reps", help="cyclic representations with meridian image i")
    p.add_argument("h", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cyclic_reps)

    p = sub.add_parser("presentation", help="print a group presentation file")
    kinds = p.add_subparsers(dest="kind", required=True)
    torus = kinds.add_parser("torus", help="surgered torus-knot group")
    torus.add_argument("a", type=int)
    torus.add_argument("b", type=int)
    torus.add_argument("--slope", default=None, help="filling slope p/q")
    torus.add_argument(
        "--unfilled", action="store_true", help="knot complement, no filling"
    )
    torus.set_defaults(func=_cmd_presentation)
    lens = kinds.add_parser("lens", help="cyclic lens-space group <x | x^p>")
    lens.add_argument("a", type=int, metavar="p")
    lens.set_defaults(func=_cmd_presentation, unfilled=False, b=None)

    p = sub.add_parser("su2-search", help="search for an irreducible representation")
    p.add_argument("--file", required=True, help="presentation file")
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_su2_search)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 0 for --help/--version
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (PolynomialParseError, SlopeParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
