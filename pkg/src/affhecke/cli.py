"""
Command line front end.

    python -m affhecke describe --type B2 --lattice sc
    python -m affhecke mul a.json b.json --model im --type A1
    python -m affhecke convert theta.json --to im --round-trip
    python -m affhecke satake 1 --type A1
    python -m affhecke satake --center-orbit 1 --type A1
    python -m affhecke check --suite all --type A2

Exit status: 0 success, 1 property failure, 2 input error, 3 budget or solve failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import io
from .checks import SUITES, CheckFailed, make_algebras, run_suite
from .coeffring import LaurentScalar
from .heckebern import BernAlgebra, SolveFailed
from .heckeim import BudgetExceeded, NotDominant
from .rootdata import IncompatibleLattice, InvalidCartan, RootDatum, build_root_datum
from .satake import (
    center_map_Z,
    e_K_and_poincare,
    orbit_monomial_sum,
    sat_transform,
    satake_spherical,
    w_invariance_check,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    cartan_type: str = "A1"
    lattice: str = "sc"
    q0: Fraction | None = None
    budget: int = 40
    fmt: str = "json"
    custom: dict | None = None

    def root_datum(self) -> RootDatum:
        try:
            if self.custom is not None:
                return build_root_datum("custom", "custom", self.custom)
            return build_root_datum(self.cartan_type, self.lattice)
        except (InvalidCartan, IncompatibleLattice) as exc:
            raise InputError(f"invalid root datum: {exc}") from None


def _parse_q(text: str) -> Fraction | None:
    if text == "formal":
        return None
    try:
        q0 = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--q must be 'formal' or a rational number, got {text!r}") from None
    if q0 <= 1:
        raise InputError("a specialized q must be > 1")
    return q0


def build_config(args) -> CliConfig:
    base: dict = {}
    if args.config:
        try:
            with open(args.config) as fh:
                base = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config: {exc}") from None
        if not isinstance(base, dict):
            raise InputError("config must be a JSON object")
    custom = None
    if "simple_roots" in base and args.type is None and args.lattice is None:
        custom = {"simple_roots": base["simple_roots"], "simple_coroots": base.get("simple_coroots")}
    budget = args.budget if args.budget is not None else base.get("budget", 40)
    if not isinstance(budget, int) or budget < 1:
        raise InputError("budget must be an integer >= 1")
    q = args.q if args.q is not None else str(base.get("q", "formal"))
    return CliConfig(
        cartan_type=args.type or base.get("type", "A1"),
        lattice=args.lattice or base.get("lattice", "sc"),
        q0=_parse_q(q),
        budget=budget,
        fmt=args.format or base.get("format", "json"),
        custom=custom,
    )


def _coords(text: str, rd: RootDatum) -> tuple:
    try:
        x = tuple(int(c) for c in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad coordinates {text!r}") from None
    if len(x) != rd.dim:
        raise InputError(f"expected {rd.dim} coordinates, got {text!r}")
    return x


def _load(path: str):
    text = path
    if not path.lstrip().startswith("{"):
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _q_poly(p: LaurentScalar) -> str:
    return LaurentScalar({e // 2: c for e, c in p.items()}).format("q")


def _emit(cfg: CliConfig, obj, text: str, out):
    if cfg.fmt == "text":
        print(text, file=out)
    else:
        print(io.dumps(obj), file=out)


def cmd_describe(cfg: CliConfig, args, out) -> int:
    rd = cfg.root_datum()
    _, WK = e_K_and_poincare(BernAlgebra(rd))
    report = {
        "type": rd.cartan_type,
        "lattice": rd.lattice,
        "rank": rd.rank,
        "dim": rd.dim,
        "cartan": [list(r) for r in rd.cartan],
        "positive_roots": [list(a) for a in rd.positive_roots],
        "positive_coroots": [list(c) for c in rd.positive_coroots],
        "weyl_order": len(rd.weyl_group),
        "rho": list(rd.rho),
        "poincare": _q_poly(WK),
    }
    lines = [f"{k}: {v}" for k, v in report.items()]
    _emit(cfg, report, "\n".join(lines), out)
    return EXIT_OK


def _algebras(cfg: CliConfig, rd: RootDatum, corrupt: bool = False):
    quadratic = (1 - LaurentScalar.q(), LaurentScalar.q()) if corrupt else None
    return make_algebras(rd, budget=cfg.budget, quadratic=quadratic)


def _element_out(cfg: CliConfig, f, out):
    try:
        obj = io.element_to_json(f, cfg.q0)
    except io.ParseError as exc:
        raise InputError(str(exc)) from None
    _emit(cfg, obj, repr(f), out)


def cmd_mul(cfg: CliConfig, args, out) -> int:
    rd = cfg.root_datum()
    im, bern = _algebras(cfg, rd)
    lhs, rhs = _load(args.lhs), _load(args.rhs)
    models = {d.get("model") if isinstance(d, dict) else None for d in (lhs, rhs)}
    if len(models) != 1:
        raise InputError("operands use different models")
    if args.model and models != {args.model}:
        raise InputError(f"operands are not in the {args.model} model")
    f = io.element_from_json(lhs, im, bern)
    g = io.element_from_json(rhs, im, bern)
    _element_out(cfg, f * g, out)
    return EXIT_OK


def cmd_convert(cfg: CliConfig, args, out) -> int:
    rd = cfg.root_datum()
    im, bern = _algebras(cfg, rd)
    f = io.element_from_json(_load(args.input), im, bern)
    source = "im" if f.alg is im else "bern"
    if args.to == source:
        g = f
    elif args.to == "im":
        g = bern.to_im(f)
    else:
        g = bern.from_im(f)
    if args.round_trip:
        back = g if args.to == source else (bern.from_im(g) if source == "bern" else bern.to_im(g))
        if io.element_to_json(back) != io.element_to_json(f):
            raise SolveFailed("round trip did not reproduce the input")
    _element_out(cfg, g, out)
    return EXIT_OK


def cmd_satake(cfg: CliConfig, args, out) -> int:
    rd = cfg.root_datum()
    _, bern = _algebras(cfg, rd)
    orbit = args.center_orbit
    if orbit is not None:
        x = _coords(orbit, rd)
        img = sat_transform(center_map_Z(bern.orbit_sum(x)))
        ok = img == orbit_monomial_sum(rd, x)
        obj = {"mode": "center", "x": list(x), "image": io.groupalg_to_json(img, cfg.q0), "matches_orbit_sum": ok}
        _emit(cfg, obj, f"{img!r}\nmatches orbit sum: {ok}", out)
        return EXIT_OK if ok else EXIT_FAIL
    if args.lam is None:
        raise InputError("give a dominant lambda or --center-orbit")
    lam = _coords(args.lam, rd)
    if not rd.is_dominant(lam):
        raise InputError(f"lambda {lam} is not dominant")
    img = satake_spherical(bern, lam)
    inv = w_invariance_check(img)
    obj = {"mode": "spherical", "lambda": list(lam), "image": io.groupalg_to_json(img, cfg.q0), "w_invariant": inv}
    _emit(cfg, obj, f"{img!r}\nW-invariant: {inv}", out)
    return EXIT_OK if inv else EXIT_FAIL


def cmd_check(cfg: CliConfig, args, out) -> int:
    rd = cfg.root_datum()
    im, bern = _algebras(cfg, rd, corrupt=args.corrupt_quadratic)
    q0 = cfg.q0 if cfg.q0 is not None else Fraction(2)
    if q0.denominator != 1:
        raise InputError("check needs an integer q")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = {}
    for name in names:
        try:
            results[name] = run_suite(name, rd, im, bern, q0=int(q0), seed=args.seed)
        except CheckFailed as exc:
            _emit(cfg, {"status": "fail", "passed": results, **exc.to_json()},
                  f"FAIL {name}: {exc.prop}\nwitness: {io.dumps(exc.witness)}", out)
            return EXIT_FAIL
    _emit(cfg, {"status": "pass", "passed": results},
          "\n".join(f"PASS {k} ({n} checks)" for k, n in results.items()), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Cartan type label, e.g. A2, B2, C2, G2 (default A1)")
    common.add_argument("--lattice", choices=["sc", "ad", "gl"], help="lattice (default sc)")
    common.add_argument("--config", help="JSON config file; flags win over its entries")
    common.add_argument("--q", help="'formal' (default) or a rational q0 > 1 to specialize output")
    common.add_argument("--budget", type=int, help="maximum word length for IM computations (default 40)")
    common.add_argument("--format", choices=["json", "text"], help="output format (default json)")

    p = argparse.ArgumentParser(prog="affhecke", description="Exact computations in affine Hecke algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("describe", parents=[common], help="summarize the root datum")

    m = sub.add_parser("mul", parents=[common], help="multiply two elements")
    m.add_argument("lhs")
    m.add_argument("rhs")
    m.add_argument("--model", choices=["im", "bern"])

    c = sub.add_parser("convert", parents=[common], help="convert between the IM and Bernstein bases")
    c.add_argument("input")
    c.add_argument("--to", choices=["im", "bern"], required=True)
    c.add_argument("--round-trip", action="store_true", help="convert back and compare before printing")

    s = sub.add_parser("satake", parents=[common], help="Satake transform of c_lambda or of Z(orbit sum)")
    s.add_argument("lam", nargs="?", metavar="LAMBDA", help="dominant coordinates, e.g. '1,0'")
    s.add_argument("--center-orbit", "--orbit", dest="center_orbit", metavar="X")

    k = sub.add_parser("check", parents=[common], help="run property suites")
    k.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--corrupt-quadratic", action="store_true", help=argparse.SUPPRESS)
    return p


COMMANDS = {
    "describe": cmd_describe,
    "mul": cmd_mul,
    "convert": cmd_convert,
    "satake": cmd_satake,
    "check": cmd_check,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = build_config(args)
        return COMMANDS[args.command](cfg, args, out)
    except (InputError, io.ParseError, NotDominant) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, SolveFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
