"""Command-line front end.

Subcommands: `verify` runs one identity check and prints a JSON report,
`sweep` tabulates an identity over an alpha grid into CSV (optionally an
SVG chart), `eval` evaluates a single special function, and `list` shows
the registered identities.

Exit codes: 0 pass, 2 verification failure (or failed sweep rows),
3 domain/convergence error, 64 usage error.  The environment variable
KOSHLIAKOV_PROFILE ("double" or "extended") selects the precision
profile; complex flags accept sign-delimited literals such as
`0.5+0.25i`.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import arith, kernels, specfun
from .errors import KoshliakovError
from .identities import IDENTITIES
from .profiles import PrecisionProfile, default_profile
from .quadrature import QuadratureSpec
from .reporting import SweepRow, csv_lines, report_json, write_csv, write_svg

EXIT_PASS = 0
EXIT_FAIL = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 64


def parse_complex_literal(text: str) -> complex:
    """`0.5`, `-0.3`, `0.5+0.25i`, `1e-3i`, `i`: i-suffixed, sign-delimited."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    if not s.endswith(("i", "I")):
        return complex(float(s), 0.0)
    body = s[:-1]
    re_part, im_part = "", body
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            re_part, im_part = body[:k], body[k:]
            break
    if im_part in ("", "+"):
        im = 1.0
    elif im_part == "-":
        im = -1.0
    else:
        im = float(im_part)
    re = float(re_part) if re_part else 0.0
    return complex(re, im)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract reserves 2 for
    # verification failures and uses 64 for usage problems.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class SweepConfig:
    identity_id: str
    alpha_min: float
    alpha_max: float
    alpha_steps: int
    fixed: dict
    out_path: str | None
    svg_path: str | None

    def __post_init__(self):
        if self.alpha_min <= 0.0:
            raise ValueError("alpha-min must be positive")
        if self.alpha_steps < 2:
            raise ValueError("steps must be >= 2")
        if not (0.25 <= self.alpha_min <= self.alpha_max <= 4.0):
            raise ValueError("alpha range must sit inside [1/4, 4]")

    def grid(self) -> list[float]:
        h = (self.alpha_max - self.alpha_min) / (self.alpha_steps - 1)
        return [self.alpha_min + i * h for i in range(self.alpha_steps)]


# Per-parameter parse kind and default for the verify/sweep dispatch.
_PARAMS: dict = {
    "z": ("complex", 0.5 + 0.0j),
    "alpha": ("float", 1.0),
    "terms": ("int", 50),
    "s": ("complex", 2.0 + 0.0j),
    "nu": ("complex", 0.0 + 0.0j),
    "q": ("float", 1.0),
    "x": ("float", 1.0),
    "y": ("float", 1.0),
    "pair": ("str", "k-bessel"),
    "pair_alpha": ("float", 2.0),
}

_KIND_TYPES = {"complex": parse_complex_literal, "float": float, "int": int,
               "str": str}


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    for name, (kind, _) in _PARAMS.items():
        parser.add_argument(f"--{name.replace('_', '-')}", dest=name,
                            type=_KIND_TYPES[kind], default=None)


def _quad_spec(profile: PrecisionProfile) -> QuadratureSpec | None:
    # The verifiers' built-in 1e-11 targets already undercut every pass
    # tolerance; only the extended profile tightens them.
    if profile.name == "extended":
        return QuadratureSpec(abs_tol=1e-13, rel_tol=1e-13)
    return None


def _resolve_args(entry, args) -> list:
    values = []
    for name in entry.arg_names:
        given = getattr(args, name, None)
        values.append(_PARAMS[name][1] if given is None else given)
    extraneous = [name for name in _PARAMS
                  if getattr(args, name, None) is not None
                  and name not in entry.arg_names]
    if extraneous:
        raise _UsageError(
            f"parameter(s) {', '.join('--' + e for e in extraneous)} do not "
            f"apply; this identity takes ({', '.join(entry.arg_names)})")
    return values


class _UsageError(Exception):
    pass


def cmd_verify(args, profile: PrecisionProfile) -> int:
    entry = IDENTITIES.get(args.identity)
    if entry is None:
        raise _UsageError(f"unknown identity '{args.identity}'; "
                          f"known: {', '.join(sorted(IDENTITIES))}")
    values = _resolve_args(entry, args)
    tol = entry.tolerance if args.tolerance is None else args.tolerance
    report = entry.runner(*values, spec=_quad_spec(profile), tolerance=tol)
    print(report_json(report))
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_sweep(args, profile: PrecisionProfile) -> int:
    entry = IDENTITIES.get(args.identity)
    if entry is None:
        raise _UsageError(f"unknown identity '{args.identity}'; "
                          f"known: {', '.join(sorted(IDENTITIES))}")
    if "alpha" not in entry.arg_names:
        raise _UsageError(f"identity '{args.identity}' has no alpha "
                          "parameter to sweep")
    try:
        config = SweepConfig(identity_id=args.identity,
                             alpha_min=args.alpha_min,
                             alpha_max=args.alpha_max,
                             alpha_steps=args.steps,
                             fixed={}, out_path=args.out, svg_path=args.svg)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None

    spec = _quad_spec(profile)
    tol = entry.tolerance if args.tolerance is None else args.tolerance
    rows = []
    failures = 0
    for alpha in config.grid():
        try:
            values = []
            for name in entry.arg_names:
                if name == "alpha":
                    values.append(alpha)
                else:
                    given = getattr(args, name, None)
                    values.append(_PARAMS[name][1] if given is None else given)
            report = entry.runner(*values, spec=spec, tolerance=tol)
            rows.append(SweepRow.from_report(report))
        except KoshliakovError as exc:
            print(f"alpha={alpha:.6g}: {exc}", file=sys.stderr)
            rows.append(SweepRow.failed(alpha))
            failures += 1
    if config.out_path:
        write_csv(config.out_path, rows)
    else:
        print("\n".join(csv_lines(rows)))
    if config.svg_path:
        write_svg(config.svg_path, rows, config.identity_id)
    return EXIT_FAIL if failures else EXIT_PASS


# eval function table: name -> (argument names, callable).
def _eval_table() -> dict:
    return {
        "gamma": (("s",), lambda a: specfun.gamma(a.s)),
        "zeta": (("s",), lambda a: specfun.riemann_zeta(a.s)),
        "hurwitz": (("s", "a"), lambda a: specfun.hurwitz_zeta(a.s, a.a)),
        "digamma": (("s",), lambda a: specfun.digamma(a.s)),
        "xi": (("s",), lambda a: specfun.xi(a.s)),
        "big-xi": (("t",), lambda a: specfun.big_xi(a.t)),
        "bessel-j": (("nu", "x"), lambda a: specfun.bessel_j(a.nu, a.x)),
        "bessel-y": (("nu", "x"), lambda a: specfun.bessel_y(a.nu, a.x)),
        "bessel-k": (("nu", "x"), lambda a: specfun.bessel_k(a.nu, a.x)),
        "li": (("x",), lambda a: specfun.exp_integral_li(a.x)),
        "kernel": (("z", "x"), lambda a: kernels.koshliakov_kernel(a.z, a.x)),
        "omega": (("x", "z"),
                  lambda a: kernels.omega(a.x, a.z, mode=a.mode,
                                          n_terms=a.terms)),
        "lambda": (("x", "z"), lambda a: kernels.lambda_fn(a.x, a.z)),
        "sigma": (("a", "n"), lambda a: arith.sigma(a.a, a.n)),
    }


def cmd_eval(args, profile: PrecisionProfile) -> int:
    table = _eval_table()
    if args.function not in table:
        raise _UsageError(f"unknown function '{args.function}'; "
                          f"known: {', '.join(sorted(table))}")
    arg_names, fn = table[args.function]
    missing = [n for n in arg_names if getattr(args, n, None) is None]
    defaults = {"s": 2.0 + 0.0j, "a": 1.0 + 0.0j, "t": 0.0 + 0.0j,
                "nu": 0.0, "x": 1.0, "z": 0.5 + 0.0j, "n": 1}
    for n in missing:
        setattr(args, n, defaults[n])
    value = complex(fn(args))
    wd = profile.working_digits
    print(f"{value.real:.{wd}g} {value.imag:.{wd}g}")
    return EXIT_PASS


def cmd_list(args) -> int:
    for name in sorted(IDENTITIES):
        entry = IDENTITIES[name]
        params = ", ".join(entry.arg_names)
        print(f"{name:24s} ({params})  tol {entry.tolerance:g}  "
              f"{entry.summary}")
    return EXIT_PASS


def build_parser() -> _Parser:
    parser = _Parser(prog="koshliakov",
                     description="Verify Koshliakov-kernel zeta identities "
                                 "and evaluate the special functions behind "
                                 "them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run one identity check")
    p_verify.add_argument("identity")
    _add_param_flags(p_verify)
    p_verify.add_argument("--tolerance", type=float, default=None)

    p_sweep = sub.add_parser("sweep", help="tabulate an identity over alpha")
    p_sweep.add_argument("identity")
    p_sweep.add_argument("--alpha-min", type=float, default=0.5)
    p_sweep.add_argument("--alpha-max", type=float, default=2.0)
    p_sweep.add_argument("--steps", type=int, default=31)
    for name, (kind, _) in _PARAMS.items():
        if name != "alpha":
            p_sweep.add_argument(f"--{name.replace('_', '-')}", dest=name,
                                 type=_KIND_TYPES[kind], default=None)
    p_sweep.add_argument("--tolerance", type=float, default=None)
    p_sweep.add_argument("--out", default=None, help="CSV path (default: "
                                                     "stdout)")
    p_sweep.add_argument("--svg", default=None, help="SVG chart path")

    p_eval = sub.add_parser("eval", help="evaluate one special function")
    p_eval.add_argument("function")
    for flag, kind in [("s", "complex"), ("a", "complex"), ("t", "complex"),
                       ("nu", "complex"), ("z", "complex"), ("x", "complex"),
                       ("q", "float"), ("n", "int"), ("terms", "int")]:
        p_eval.add_argument(f"--{flag}", type=_KIND_TYPES[kind], default=None)
    p_eval.add_argument("--mode", choices=["partial-fraction", "definition"],
                        default="partial-fraction")

    sub.add_parser("list", help="list registered identities")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        profile = default_profile()
        if args.command == "verify":
            return cmd_verify(args, profile)
        if args.command == "sweep":
            return cmd_sweep(args, profile)
        if args.command == "eval":
            # eval accepts complex --x for bessel-k; real-only consumers
            # reject an imaginary part themselves.
            if getattr(args, "x", None) is not None and args.function in (
                    "li", "kernel", "omega", "lambda", "bessel-j",
                    "bessel-y"):
                if args.x.imag != 0.0:
                    raise _UsageError(f"--x must be real for "
                                      f"{args.function}")
                args.x = args.x.real
            if getattr(args, "nu", None) is not None and args.function in (
                    "bessel-j", "bessel-y"):
                if args.nu.imag != 0.0:
                    raise _UsageError(f"--nu must be real for "
                                      f"{args.function}")
                args.nu = args.nu.real
            if getattr(args, "n", None) is None and args.function == "sigma":
                args.n = 1
            if args.terms is None:
                args.terms = 500
            return cmd_eval(args, profile)
        if args.command == "list":
            return cmd_list(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KoshliakovError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
