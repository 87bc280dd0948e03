"""Command-line entry point: ``sklyanin <subcommand> ...``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 unreadable or malformed input, 4 degree bound violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import geometry as geo
from . import ppring
from . import report as rp
from .freealg import (InvalidPresentation, NcPoly, QuadPresentation, parse_polynomial, parse_presentation,
                      relation_span_equal, sklyanin_presentation)
from .quadops import (GradedAutomorphism, InvalidAutomorphism, OreData, certify_normal, koszul_dual, ore_extension,
                      ore_presentation, pairing_matrix, sigma, tau, zhang_twist)
from .rewrite import MonomialOrder, complete_to_degree, hilbert_function
from .scalars import Field, FieldError, FieldSpec, PrimeField, make_field

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


class BoundError(Exception):
    pass


@dataclass
class RunConfig:
    field: Field
    order: MonomialOrder
    max_degree: int
    oracle_max: int
    out: str | None
    fmt: str

    def validate(self):
        if self.max_degree < 1:
            raise BoundError("--max-degree must be positive")
        if self.oracle_max < 1:
            raise BoundError("--oracle-max must be positive")


# ----------------------------------------------------------------------
# presentations


def builtin_presentation(name: str, fld: Field) -> QuadPresentation:
    """``s111``, ``s100``, ``s1bc:b,c``, ``sabc:a,b,c``, ``ore:b,c``, ``ore-ext:b,c``."""
    head, _, args = name.partition(":")
    vals = [fld.parse(a) for a in args.split(",")] if args else []
    if head == "s111" and not vals:
        return sklyanin_presentation(1, 1, 1, fld=fld)
    if head == "s100" and not vals:
        return sklyanin_presentation(1, 0, 0, fld=fld)
    if head == "s1bc" and len(vals) == 2:
        return sklyanin_presentation(fld.one, *vals, fld=fld)
    if head == "sabc" and len(vals) == 3:
        return sklyanin_presentation(*vals, fld=fld)
    if head == "ore" and len(vals) == 2:
        return ore_presentation(*vals, fld=fld)
    if head == "ore-ext" and len(vals) == 2:
        return ore_extension(*vals, fld=fld)
    raise InputError(f"unknown builtin presentation {name!r}")


def load_presentation(spec: str, fld: Field) -> QuadPresentation:
    try:
        if spec.startswith("builtin:"):
            return builtin_presentation(spec[len("builtin:"):], fld)
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror}") from None
        return parse_presentation(text, fld)
    except (InvalidPresentation, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from None


def parse_auto(text: str, fld: Field) -> GradedAutomorphism:
    base, _, power = text.partition("^")
    n = int(power) if power else 1
    if base == "sigma":
        auto = sigma(fld)
    elif base == "tau":
        auto = tau(fld)
    elif base.startswith("matrix:"):
        entries = base[len("matrix:"):].split(",")
        try:
            auto = GradedAutomorphism.from_matrix([fld.parse(e) for e in entries], fld)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        raise InputError(f"unknown automorphism {text!r}")
    return auto if n == 1 else auto ** n


def relations_out(P: QuadPresentation) -> list[str]:
    return [r.format(P.field, P.names) for r in P.relations]


# ----------------------------------------------------------------------
# subcommands


def cmd_hilbert(args, cfg: RunConfig) -> rp.Report:
    P = load_presentation(args.presentation, cfg.field)
    rs = complete_to_degree(P, cfg.order, cfg.max_degree)
    dims = hilbert_function(rs, cfg.max_degree)
    rep = rp.Report(data={"dims": dims, "presentation": relations_out(P), "order": cfg.order.label(P.names)})
    expected = _expected_dims(args.presentation, cfg.max_degree)
    if expected is not None:
        rep.add(rp.Check("hilbert function", expected[0], dims, expected[1]))
    return rep


def _expected_dims(spec: str, D: int):
    if spec.startswith("builtin:s111") or spec.startswith("builtin:s100") or spec.startswith("builtin:s1bc"):
        return rp.degenerate_dims(D), rp.PAPER
    return None


def cmd_koszul(args, cfg: RunConfig) -> rp.Report:
    P = load_presentation(args.presentation, cfg.field)
    dual = koszul_dual(P)
    rs = complete_to_degree(dual, cfg.order, cfg.max_degree)
    rep = rp.Report(data={"dual_relations": relations_out(dual), "dual_dims": hilbert_function(rs, cfg.max_degree)})
    rep.add(rp.Check("dual pairs to zero", True, all(not v for r in pairing_matrix(P, dual) for v in r), rp.TRIVIAL))
    params = P.params
    if params is not None and params[1] and params[2] and params[1] ** 3 == 1 and params[2] ** 3 == 1:
        b, c = params[1], params[2]
        rep.add(rp.Check("printed dual span", True,
                         relation_span_equal(rp.printed_dual(b, c, cfg.field), dual), rp.PAPER), printed_claim=True)
    return rep


def cmd_twist(args, cfg: RunConfig) -> rp.Report:
    P = load_presentation(args.presentation, cfg.field)
    auto = parse_auto(args.auto, cfg.field)
    T = zhang_twist(P, auto)
    D = cfg.max_degree
    dims_p = hilbert_function(complete_to_degree(P, cfg.order, D), D)
    dims_t = hilbert_function(complete_to_degree(T, cfg.order, D), D)
    rep = rp.Report(data={"twisted_relations": relations_out(T), "dims": dims_t})
    rep.add(rp.Check("twist preserves the Hilbert function", dims_p, dims_t, rp.TRIVIAL))
    if args.expect:
        Q = load_presentation(args.expect, cfg.field)
        rep.add(rp.Check(f"twist equals {args.expect}", True, relation_span_equal(T, Q), rp.PAPER))
    return rep


def cmd_certify(args, cfg: RunConfig) -> rp.Report:
    P = load_presentation(args.presentation, cfg.field)
    if args.element:
        try:
            omega = parse_polynomial(args.element, cfg.field, P.names)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    elif args.presentation.startswith("builtin:ore"):
        _, _, vals = args.presentation.partition(":")[2].partition(":")
        b, c = (cfg.field.parse(v) for v in vals.split(","))
        omega = OreData(b, c).omega()
    else:
        raise InputError("--element is required for this presentation")
    deg = omega.homogeneous_degree()
    if deg is None:
        raise InputError("element must be homogeneous")
    rs = complete_to_degree(P, cfg.order, max(deg + 1, 2))
    gens = [P.names.index(g) for g in args.generators.split(",")] if args.generators else range(3)
    cert = certify_normal(rs, omega, tuple(gens))
    data = {"element": omega.format(cfg.field, P.names), "normal": cert is not None}
    if cert is not None:
        data["certificate"] = {
            P.names[g]: NcPoly.linear(row).format(cfg.field, P.names) for g, row in zip(gens, cert)
        }
    rep = rp.Report(data=data)
    rep.add(rp.Check("normality certificate found", True, cert is not None, rp.DERIVED))
    return rep


def cmd_ptscheme(args, cfg: RunConfig) -> rp.Report:
    fld = cfg.field
    if not isinstance(fld, PrimeField):
        raise InputError("ptscheme enumerates points over a prime field; use --field fp:<p>")
    if args.d > 5 and args.mode != "components":
        raise BoundError("enumeration is bounded by d <= 5")
    P = sklyanin_presentation(1, 1, 1, fld=fld) if not args.presentation else load_presentation(args.presentation, fld)
    specs = geo.component_specs(args.d) if P.params == (fld.one,) * 3 else None
    rep = rp.Report(data={"d": args.d, "field": fld.spec.label()})
    if args.mode in ("enumerate", "compare"):
        V = geo.enumerate_Vd(P, args.d, fld)
        rep.data["points"] = len(V)
        if specs is None:
            rep.data["support_profile"] = geo.support_profile(V)
    if args.mode in ("components", "compare"):
        if specs is None:
            raise InputError("component tables exist only for S(1,1,1)")
        comps = [geo.component_points(s, fld) for s in specs]
        rep.data["components"] = [{"index": s.index, "pattern": s.label(), "points": len(c)}
                                  for s, c in zip(specs, comps)]
        sing = geo.singular_locus(args.d, fld)
        rep.data["singular_points"] = [{"point": [p.format(fld) for p in pts], "components": list(ij)}
                                       for pts, ij in sing]
        union = set().union(*comps)
        rep.data["component_union"] = len(union)
    if args.mode == "compare":
        rep.add(rp.Check("V_d equals union of components", True, V == union, rp.PAPER))
    return rep


def cmd_ppring(args, cfg: RunConfig) -> rp.Report:
    if cfg.oracle_max > cfg.max_degree:
        raise BoundError("--oracle-max may not exceed --max-degree")
    if cfg.oracle_max > 8 and not args.allow_large:
        raise BoundError("--oracle-max above 8 needs --allow-large (3^d columns)")
    return rp.ppring_suite(cfg.field, cfg.max_degree, cfg.oracle_max)


def cmd_kernel(args, cfg: RunConfig) -> rp.Report:
    d = args.d
    if d > 6:
        raise BoundError("kernel computations are bounded by d <= 6")
    rs = complete_to_degree(sklyanin_presentation(1, 1, 1, fld=cfg.field), cfg.order, d + 1)
    kr = ppring.kernel_report(d, rs, cfg.field)
    rep = rp.Report(data={
        "d": d, "dim_S": kr.dim_S, "dim_B": kr.dim_B, "kernel_dim": len(kr.basis),
        "new_generators": kr.new_generators,
        "basis": [k.format(cfg.field) for k in kr.basis],
    })
    rep.add(rp.Check("dim K = dim S - dim B", kr.dim_S - ppring.dim_B(d), len(kr.basis), rp.PAPER))
    return rep


def cmd_verify_all(args, cfg: RunConfig) -> rp.Report:
    if cfg.oracle_max > cfg.max_degree:
        raise BoundError("--oracle-max may not exceed --max-degree")
    return rp.verify_all(cfg.field, cfg.max_degree, cfg.oracle_max, cfg.order)


COMMANDS = {
    "hilbert": cmd_hilbert, "koszul-dual": cmd_koszul, "twist": cmd_twist, "certify-normal": cmd_certify,
    "ptscheme": cmd_ptscheme, "ppring": cmd_ppring, "kernel": cmd_kernel, "verify-all": cmd_verify_all,
}


# ----------------------------------------------------------------------
# output


def render(rep: rp.Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.as_dict(), sort_keys=True, indent=2, default=str) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "provenance", "expected", "computed", "pass", "discrepancy"])
    for c, flag in [(c, False) for c in rep.checks] + [(c, True) for c in rep.discrepancies]:
        w.writerow([c.name, c.provenance, json.dumps(c.expected, default=str),
                    json.dumps(c.computed, default=str), c.passed, flag])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="qzeta | q | fp:<p> (default qzeta)")
    common.add_argument("--order", default="x,y,z", help="generator precedence, smallest first")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--oracle-max", type=int, default=None)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--fast", action="store_true", help="work over F_7 with smaller bounds")
    common.add_argument("--strict", action="store_true", help="count contradicted printed claims as failures")

    parser = argparse.ArgumentParser(prog="sklyanin", description="Degenerate Sklyanin algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common])
    p.add_argument("presentation")
    p = sub.add_parser("koszul-dual", parents=[common])
    p.add_argument("presentation")
    p = sub.add_parser("twist", parents=[common])
    p.add_argument("presentation")
    p.add_argument("--auto", default="sigma", help="sigma | tau | sigma^-1 | matrix:<9 scalars>")
    p.add_argument("--expect", default=None, help="presentation the twist should equal")
    p = sub.add_parser("certify-normal", parents=[common])
    p.add_argument("presentation", nargs="?", default="builtin:ore-ext:1,1")
    p.add_argument("--element", default=None)
    p.add_argument("--generators", default=None, help="comma-separated subset, e.g. x")
    p = sub.add_parser("ptscheme", parents=[common])
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--mode", choices=("enumerate", "components", "compare"), default="compare")
    p.add_argument("--presentation", default=None)
    p = sub.add_parser("ppring", parents=[common])
    p.add_argument("--allow-large", action="store_true")
    p = sub.add_parser("kernel", parents=[common])
    p.add_argument("--d", type=int, default=4)
    sub.add_parser("verify-all", parents=[common])
    return parser


def make_config(args) -> RunConfig:
    field_text = args.field or ("fp:7" if args.fast else "qzeta")
    try:
        fld = make_field(FieldSpec.parse(field_text))
    except FieldError as exc:
        raise InputError(str(exc)) from None
    try:
        order = MonomialOrder.parse(args.order)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    default_max = {"ppring": 10, "verify-all": 8}.get(args.command, 8)
    default_oracle = 8
    if args.fast:
        default_max, default_oracle = 6, 6
    max_degree = args.max_degree if args.max_degree is not None else default_max
    oracle = args.oracle_max if args.oracle_max is not None else min(default_oracle, max_degree)
    cfg = RunConfig(fld, order, max_degree, oracle, args.out, args.fmt)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        rep = COMMANDS[args.command](args, cfg)
    except BoundError as exc:
        print(f"sklyanin: bound violation: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, InvalidAutomorphism) as exc:
        print(f"sklyanin: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(rep, cfg.fmt)
    if cfg.out:
        try:
            with open(cfg.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"sklyanin: cannot write {cfg.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    ok = rep.passed and not (args.strict and rep.discrepancies)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
