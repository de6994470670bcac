"""Command-line front end: ``supercontact <command> ...``.

Exit codes: 0 success, 1 failed check or computation error, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .calculus import (
    BUILTIN_CHARTS,
    Chart,
    CalculusError,
    apply_vf,
    exterior_derivative,
    graded_commutator,
    interior_product,
    lie_derivative,
    pullback,
)
from .checks import VerifyConfig, verify_paper
from .components import ComponentError, multiplet_of
from .contact import ContactError, OneForm, classify_contact_vf, hamiltonian_vf, kernel_basis, reeb, standard_form
from .kernel import KernelError, Parity
from .lie import BUILTIN_ALGEBRAS, LieError, decompose_mc, exponent_of, maurer_cartan
from .linear import SolveError
from .syntax import (
    Context,
    ParseError,
    parse_algebra,
    parse_chart,
    parse_expr,
    parse_map,
    parse_vf,
    print_canonical,
    print_vector_field,
)

COMPUTATION_ERRORS = (CalculusError, ComponentError, ContactError, KernelError, LieError, SolveError)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _chart(spec: str) -> Chart:
    if spec in BUILTIN_CHARTS:
        return BUILTIN_CHARTS[spec]
    return parse_chart(_read(spec))


def _names(text: str | None) -> list[str]:
    return [n.strip() for n in (text or "").split(",") if n.strip()]


def _context(args) -> Context:
    ctx = Context(_chart(args.chart))
    ctx.declare_functions(_names(args.even_fns), Parity.EVEN)
    ctx.declare_functions(_names(args.odd_fns), Parity.ODD)
    return ctx


def _form(ctx: Context, text: str | None) -> OneForm:
    if text is None:
        return standard_form(ctx.chart)
    return OneForm(ctx.chart, parse_expr(text, ctx))


def _emit(args, text: str, payload: dict | None = None) -> None:
    if args.json:
        print(json.dumps(payload if payload is not None else {"result": text}, indent=2, sort_keys=True))
    else:
        print(text)


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------


def cmd_eval(args, ctx):
    e = parse_expr(args.expr, ctx)
    _emit(args, print_canonical(e))


def cmd_d(args, ctx):
    _emit(args, print_canonical(exterior_derivative(parse_expr(args.form, ctx), ctx.chart)))


def cmd_ip(args, ctx):
    _emit(args, print_canonical(interior_product(parse_vf(args.vf, ctx), parse_expr(args.form, ctx))))


def cmd_lie(args, ctx):
    _emit(args, print_canonical(lie_derivative(parse_vf(args.vf, ctx), parse_expr(args.form, ctx))))


def cmd_bracket(args, ctx):
    Z = graded_commutator(parse_vf(args.x, ctx), parse_vf(args.y, ctx))
    _emit(args, print_vector_field(Z))


def cmd_kernel(args, ctx):
    dist = kernel_basis(_form(ctx, args.form))
    basis = [print_vector_field(X) for X in dist.basis]
    _emit(args, "\n".join(basis), {"basis": basis, "corank": list(dist.corank)})


def cmd_reeb(args, ctx):
    _emit(args, print_vector_field(reeb(_form(ctx, args.form))))


def cmd_ham(args, ctx):
    X = hamiltonian_vf(_form(ctx, args.form), parse_expr(args.superfield, ctx))
    _emit(args, print_vector_field(X))


def cmd_classify(args, ctx):
    c = classify_contact_vf(parse_vf(args.vf, ctx), _form(ctx, args.form))
    mult = print_canonical(c.multiplier) if c.multiplier is not None else None
    lines = [f"kind: {c.kind}"]
    if c.kind == "contact":
        lines += [f"multiplier: {mult}", f"body: {c.body_status}"]
    _emit(args, "\n".join(lines), {"kind": c.kind, "multiplier": mult, "body_status": c.body_status})


def cmd_pullback(args, ctx):
    phi = parse_map(_read(args.map), ctx)
    _emit(args, print_canonical(pullback(phi, parse_expr(args.form, ctx))))


def cmd_components(args, ctx):
    phi = parse_expr(args.superfield, ctx)
    X = parse_vf(args.vf, ctx)
    before = multiplet_of(phi, ctx.chart)
    delta = multiplet_of(apply_vf(X, phi), ctx.chart)
    table = {name: print_canonical(v) for name, v in zip(("q", "psi", "psib", "b"), delta)}
    comps = {name: print_canonical(v) for name, v in zip(("q", "psi", "psib", "b"), before)}
    text = "\n".join(f"delta {k} = {v}" for k, v in table.items())
    _emit(args, text, {"components": comps, "delta": table})


def _load_algebra(args, ctx):
    if args.algebra in BUILTIN_ALGEBRAS:
        pres, chart = BUILTIN_ALGEBRAS[args.algebra]
        if args.chart_given and chart != ctx.chart:
            raise UsageError(f"algebra {args.algebra} lives on chart {chart.name}")
        return pres, chart
    return parse_algebra(_read(args.algebra), ctx), ctx.chart


def cmd_mc(args, ctx):
    pres, chart = _load_algebra(args, ctx)
    mc = maurer_cartan(exponent_of(pres), chart, args.order_cap)
    stab, coset = decompose_mc(mc.omega, pres.stabilizer)
    payload = {
        "algebra": pres.name,
        "i_omega": {s: print_canonical(f) for s, f in mc.i_omega.terms.items()},
        "omega": {s: print_canonical(f) for s, f in mc.omega.terms.items()},
        "terms": mc.order,
        "stabilizer": {s: print_canonical(f) for s, f in stab.terms.items()},
        "coset": {s: print_canonical(f) for s, f in coset.terms.items()},
    }
    lines = [f"i*Omega = {mc.i_omega}", f"Omega = {mc.omega}", f"series terms: {mc.order}"]
    for s in pres.symbols:
        if s in pres.stabilizer:
            lines.append(f"stabilizer {s}: {print_canonical(mc.omega[s])}")
    _emit(args, "\n".join(lines), payload)


def cmd_verify(args, ctx):
    if args.form is not None:
        # validate before running so a malformed form is a usage error
        OneForm(ctx.chart, parse_expr(args.form, ctx))
    report = verify_paper(VerifyConfig(seed=args.seed, instances=args.instances, form=args.form))
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.passed else 1


# --------------------------------------------------------------------------
# Argument parsing
# --------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--chart", default=None, help="r1n1, r1n2 or a chart file (default r1n2)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--odd-fns", default="", metavar="LIST", help="comma-separated odd function symbols")
    p.add_argument("--even-fns", default="", metavar="LIST", help="comma-separated even function symbols")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercontact", description="Exact Cartan calculus on low-dimensional superspaces.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common()]

    def add(name, fn, help_text, *positional):
        p = sub.add_parser(name, parents=common, help=help_text)
        for arg in positional:
            p.add_argument(arg)
        p.set_defaults(fn=fn)
        return p

    add("eval", cmd_eval, "canonicalize an expression", "expr")
    add("d", cmd_d, "exterior derivative", "form")
    add("ip", cmd_ip, "interior product", "vf", "form")
    add("lie", cmd_lie, "Lie derivative", "vf", "form")
    add("bracket", cmd_bracket, "graded commutator of vector fields", "x", "y")
    add("kernel", cmd_kernel, "kernel distribution of a one-form", "form")
    add("reeb", cmd_reeb, "Reeb vector field", "form")
    add("ham", cmd_ham, "contact Hamiltonian vector field", "superfield").add_argument("--form", default=None)
    add("classify", cmd_classify, "strict / contact / none", "vf").add_argument("--form", default=None)
    add("pullback", cmd_pullback, "pull back along a coordinate map", "form").add_argument("--map", required=True)
    add("components", cmd_components, "component variations of a superfield", "superfield").add_argument("--vf", required=True)
    mc = add("mc", cmd_mc, "Maurer-Cartan form of a coset exponent")
    mc.add_argument("--algebra", required=True, help="n1, n2 or an algebra file")
    mc.add_argument("--order-cap", type=int, default=16)
    v = add("verify", cmd_verify, "replay the identity checks", "target")
    v.add_argument("--form", default=None, help="replace the N=2 contact form")
    v.add_argument("--seed", type=int, default=VerifyConfig.seed)
    v.add_argument("--instances", type=int, default=VerifyConfig.instances)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and args.target != "paper":
        print(f"error: unknown verification target {args.target!r} (expected 'paper')", file=sys.stderr)
        return 2
    args.chart_given = args.chart is not None
    if args.chart is None:
        args.chart = "r1n1" if getattr(args, "algebra", None) == "n1" else "r1n2"
    try:
        ctx = _context(args)
        code = args.fn(args, ctx)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except COMPUTATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())
