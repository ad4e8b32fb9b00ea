"""Batch command-line front end.

Every pipeline of the library is exposed as a subcommand with deterministic,
scriptable output: ``--format text`` (default) prints stable single-purpose
lines, ``--format structured`` prints canonical JSON.  Domain failures print
one line ``ErrorName: context`` and exit with status 1; command-line misuse
exits with status 2 (argparse's convention).  Inputs are inline expression
flags or ``--in FILE`` with a structured document.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exprio
from .algebra import VeroneseContext, enum_basis, express, groebner_reduce, member, phi
from .amalgam import (AmalgamWord, assemble, normal_form, normal_form_mod_E,
                      word_from_document, word_to_document)
from .automorphisms import (Automorphism2, compose, decompose, equal_mod_E,
                            invert, is_n_graded_aut)
from .derivations import (DEFAULT_NILPOTENCY_CAP, Derivation2, DerivationV,
                          exp_lnd, lift_derivation, restrict_to_V)
from .errors import DomainError, NotLocallyNilpotent, SchemaError
from .lifting import AutomorphismV, induce_on_V, lift_automorphism
from .poly import XY, Poly, x_ring
from .triangulation import triangulate
from .rng import (CounterRng, sample_graded_derivation, sample_lnd,
                  sample_tame_word)


def _structured(args) -> bool:
    return getattr(args, "format", "text") == "structured"


def _emit(args, text_lines: list[str], doc: dict) -> None:
    if _structured(args):
        sys.stdout.write(exprio.dumps(doc))
    else:
        for line in text_lines:
            print(line)


def _load_doc(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return exprio.loads(handle.read())
    except OSError as exc:
        raise SchemaError("$", f"cannot read {path}: {exc}") from exc


def _expect_kind(obj, kinds, flag: str):
    if not isinstance(obj, kinds):
        raise SchemaError("kind", f"{flag} must hold one of: "
                          + ", ".join(k.__name__ for k in kinds))
    return obj


def _derivation_from(args, dx_flag="dx", dy_flag="dy", in_flag="infile") -> Derivation2:
    path = getattr(args, in_flag, None)
    if path:
        return _expect_kind(exprio.read_map(_load_doc(path)), (Derivation2,), "--in")
    dx = getattr(args, dx_flag, None)
    dy = getattr(args, dy_flag, None)
    if dx is None or dy is None:
        raise SchemaError("$", f"provide --{dx_flag}/--{dy_flag} or --in FILE")
    return Derivation2(exprio.parse_poly(dx, XY), exprio.parse_poly(dy, XY))


def _automorphism_from(args, fx_flag="fx", fy_flag="fy", in_flag="infile") -> Automorphism2:
    path = getattr(args, in_flag, None)
    if path:
        return _expect_kind(exprio.read_map(_load_doc(path)), (Automorphism2,), "--in")
    fx = getattr(args, fx_flag, None)
    fy = getattr(args, fy_flag, None)
    if fx is None or fy is None:
        raise SchemaError("$", f"provide --{fx_flag}/--{fy_flag} or --in FILE")
    return Automorphism2(exprio.parse_poly(fx, XY), exprio.parse_poly(fy, XY))


def _generator_images_from(args, ctx: VeroneseContext, cls):
    if args.infile:
        kind = DerivationV if cls is DerivationV else AutomorphismV
        obj = _expect_kind(exprio.read_map(_load_doc(args.infile)), (kind,), "--in")
        if obj.ctx.n != ctx.n:
            raise SchemaError("n", f"document has n={obj.ctx.n}, flag has n={ctx.n}")
        return obj
    if not args.images:
        raise SchemaError("images", "provide --images or --in FILE")
    images = tuple(exprio.parse_poly(text, XY) for text in args.images)
    return cls(ctx, images)


def _bool_result(args, value: bool) -> int:
    _emit(args, ["true" if value else "false"], {"result": value})
    return 0


def _pair_doc(kind: str, a) -> dict:
    return {"kind": kind, "fx": str(a.fx), "fy": str(a.fy)}


def _factor_lines(factors) -> list[str]:
    return [str(f) for f in factors] if factors else ["identity"]


def _factor_docs(factors) -> list[dict]:
    docs = []
    for f in factors:
        name = type(f).__name__
        if name == "Linear":
            docs.append({"linear": [[str(f.a), str(f.b)], [str(f.c), str(f.d)]]})
        elif name == "ShearX":
            docs.append({"shear_x": {"alpha": str(f.alpha), "m": f.m}})
        else:
            docs.append({"shear_y": {"alpha": str(f.alpha), "m": f.m}})
    return docs


def _word_lines(word: AmalgamWord) -> list[str]:
    return [f"head: {word.head}"] + [str(f) for f in word.factors]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_reduce(args) -> int:
    ctx = VeroneseContext(args.n)
    p = exprio.parse_poly(args.expr, ctx.big_ring)
    result = groebner_reduce(p, ctx)
    _emit(args, [str(result)], {"result": str(result)})
    return 0


def _cmd_phi(args) -> int:
    ctx = VeroneseContext(args.n)
    p = exprio.parse_poly(args.expr, ctx.big_ring)
    result = phi(p, ctx)
    _emit(args, [str(result)], {"result": str(result)})
    return 0


def _cmd_express(args) -> int:
    ctx = VeroneseContext(args.n)
    p = exprio.parse_poly(args.expr, XY)
    result = express(p, ctx)
    _emit(args, [str(result)], {"result": str(result)})
    return 0


def _cmd_member(args) -> int:
    ctx = VeroneseContext(args.n)
    p = exprio.parse_poly(args.expr, XY)
    return _bool_result(args, member(p, ctx))


def _cmd_basis(args) -> int:
    ctx = VeroneseContext(args.n)
    monomials = enum_basis(ctx, args.deg)
    names = [str(b) for b in monomials]
    _emit(args, [" ".join(names)], {"monomials": names, "count": len(names)})
    return 0


def _cmd_lift_derivation(args) -> int:
    ctx = VeroneseContext(args.n)
    dv = _generator_images_from(args, ctx, DerivationV)
    lifted = lift_derivation(dv)
    _emit(args, [str(lifted)],
          {"kind": "derivation2", "fx": str(lifted.fx), "fy": str(lifted.fy)})
    return 0


def _cmd_restrict(args) -> int:
    ctx = VeroneseContext(args.n)
    d = _derivation_from(args)
    dv = restrict_to_V(d, ctx)
    _emit(args, [str(dv)], exprio.write_map(dv))
    return 0


def _cmd_triangulate(args) -> int:
    d = _derivation_from(args)
    result = triangulate(d, args.n)
    conj = result.conjugator_automorphism()
    if args.figure:
        from .plots import render_support_figure

        render_support_figure(d, args.n, args.figure)
    lines = [f"factor: {line}" for line in _factor_lines(result.conjugator)]
    lines += [f"conjugator: {conj}", f"normal_fy: {result.normal_fy}"]
    _emit(args, lines, {
        "factors": _factor_docs(result.conjugator),
        "conjugator": [str(conj.fx), str(conj.fy)],
        "normal_fy": str(result.normal_fy),
    })
    return 0


def _cmd_is_lnd(args) -> int:
    d = _derivation_from(args)
    if args.figure:
        from .plots import render_support_figure

        render_support_figure(d, args.n, args.figure)
    try:
        triangulate(d, args.n)
        return _bool_result(args, True)
    except NotLocallyNilpotent:
        return _bool_result(args, False)


def _cmd_support(args) -> int:
    from .plots import render_support_figure, support_rows

    d = _derivation_from(args)
    if args.figure:
        render_support_figure(d, args.n, args.figure)
    rows = support_rows(d)
    lines = ["s,t,part"] + [f"{s},{t},{part}" for s, t, part in rows]
    _emit(args, lines,
          {"strengths": [{"s": s, "t": t, "part": part} for s, t, part in rows]})
    return 0


def _cmd_exp(args) -> int:
    d = _derivation_from(args)
    result = exp_lnd(d, cap=args.cap)
    _emit(args, [str(result)], _pair_doc("automorphism2", result))
    return 0


def _cmd_decompose(args) -> int:
    a = _automorphism_from(args)
    factors = decompose(a)
    _emit(args, _factor_lines(factors), {"factors": _factor_docs(factors)})
    return 0


def _cmd_invert(args) -> int:
    a = _automorphism_from(args)
    result = invert(a)
    _emit(args, [str(result)], _pair_doc("automorphism2", result))
    return 0


def _cmd_compose(args) -> int:
    a = _automorphism_from(args)
    b = _automorphism_from(args, "gx", "gy", "infile2")
    result = compose(a, b)
    _emit(args, [str(result)], _pair_doc("automorphism2", result))
    return 0


def _cmd_induce(args) -> int:
    ctx = VeroneseContext(args.n)
    a = _automorphism_from(args)
    av = induce_on_V(a, ctx)
    _emit(args, [str(av)], exprio.write_map(av))
    return 0


def _cmd_lift_automorphism(args) -> int:
    ctx = VeroneseContext(args.n)
    av = _generator_images_from(args, ctx, AutomorphismV)
    result = lift_automorphism(av)
    _emit(args, [str(result)], _pair_doc("automorphism2", result))
    return 0


def _cmd_normal_form(args, mod_e: bool) -> int:
    a = _automorphism_from(args)
    word = (normal_form_mod_E if mod_e else normal_form)(a, args.n)
    _emit(args, _word_lines(word), word_to_document(word))
    return 0


def _cmd_equal_mod_e(args) -> int:
    a = _automorphism_from(args)
    b = _automorphism_from(args, "gx", "gy", "infile2")
    return _bool_result(args, equal_mod_E(a, b, args.n))


def _cmd_assemble(args) -> int:
    word = word_from_document(_load_doc(args.infile), args.n)
    result = assemble(word)
    _emit(args, [str(result)], _pair_doc("automorphism2", result))
    return 0


def _cmd_random(args) -> int:
    rng = CounterRng(args.seed, (args.kind, str(args.n)))
    lines: list[str] = []
    docs: list[dict] = []
    for index in range(args.count):
        sub = rng.child(index)
        if args.kind == "automorphism":
            _, a = sample_tame_word(sub, args.n)
            lines.append(str(a))
            docs.append(_pair_doc("automorphism2", a))
        elif args.kind == "derivation":
            d = sample_graded_derivation(sub, args.n)
            lines.append(str(d))
            docs.append({"kind": "derivation2", "fx": str(d.fx), "fy": str(d.fy)})
        else:
            d, _, _ = sample_lnd(sub, args.n)
            lines.append(str(d))
            docs.append({"kind": "derivation2", "fx": str(d.fx), "fy": str(d.fy)})
    _emit(args, lines, {"samples": docs})
    return 0


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    passed, failed = run_selftest(name_filter=args.filter)
    print(f"passed={passed} failed={failed}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser construction
# ---------------------------------------------------------------------------


def _add_common(sub, n_required=True, fmt=True):
    if n_required is not None:
        sub.add_argument("--n", type=int, required=n_required,
                         help="index of the subalgebra (n >= 2)")
    if fmt:
        sub.add_argument("--format", choices=("text", "structured"),
                         default="text", help="output format")


def _add_derivation_flags(sub):
    sub.add_argument("--dx", help="image of x")
    sub.add_argument("--dy", help="image of y")
    sub.add_argument("--in", dest="infile", help="structured document file")


def _add_automorphism_flags(sub):
    sub.add_argument("--fx", help="image of x")
    sub.add_argument("--fy", help="image of y")
    sub.add_argument("--in", dest="infile", help="structured document file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veronese",
        description="Exact computations with the degree-n subalgebra "
                    "K[x^n, x^(n-1)y, ..., y^n] of the plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="normal form modulo the quadratic relations")
    _add_common(p)
    p.add_argument("expr", help="polynomial in X0..Xn")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("phi", help="substitute Xi -> x^(n-i) y^i")
    _add_common(p)
    p.add_argument("expr", help="polynomial in X0..Xn")
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("express", help="rewrite a member in the generators")
    _add_common(p)
    p.add_argument("expr", help="polynomial in x, y")
    p.set_defaults(func=_cmd_express)

    p = sub.add_parser("member", help="test membership in the subalgebra")
    _add_common(p)
    p.add_argument("expr", help="polynomial in x, y")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("basis", help="basis monomials of one degree")
    _add_common(p)
    p.add_argument("--deg", type=int, required=True, help="degree in X0..Xn")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("lift-derivation",
                       help="extend generator images to a graded derivation")
    _add_common(p)
    p.add_argument("--images", nargs="+", help="n+1 generator images")
    p.add_argument("--in", dest="infile", help="derivationV document file")
    p.set_defaults(func=_cmd_lift_derivation)

    p = sub.add_parser("restrict", help="restrict a graded derivation")
    _add_common(p)
    _add_derivation_flags(p)
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("triangulate",
                       help="conjugate a nilpotent graded derivation to f(y) d/dx")
    _add_common(p)
    _add_derivation_flags(p)
    p.add_argument("--figure", help="write a support figure to this file")
    p.set_defaults(func=_cmd_triangulate)

    p = sub.add_parser("is-lnd", help="decide local nilpotency")
    _add_common(p)
    _add_derivation_flags(p)
    p.add_argument("--figure", help="write a support figure to this file")
    p.set_defaults(func=_cmd_is_lnd)

    p = sub.add_parser("support", help="list strengths of a derivation (CSV)")
    _add_common(p)
    _add_derivation_flags(p)
    p.add_argument("--figure", help="write a support figure to this file")
    p.set_defaults(func=_cmd_support)

    p = sub.add_parser("exp", help="exponential of a locally nilpotent derivation")
    _add_common(p, n_required=False)
    _add_derivation_flags(p)
    p.add_argument("--cap", type=int, default=DEFAULT_NILPOTENCY_CAP,
                   help="iteration bound")
    p.set_defaults(func=_cmd_exp)

    p = sub.add_parser("decompose", help="elementary factors of an automorphism")
    _add_common(p, n_required=False)
    _add_automorphism_flags(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("invert", help="inverse automorphism")
    _add_common(p, n_required=False)
    _add_automorphism_flags(p)
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("compose", help="compose two automorphisms")
    _add_common(p, n_required=False)
    _add_automorphism_flags(p)
    p.add_argument("--gx", help="image of x under the second map")
    p.add_argument("--gy", help="image of y under the second map")
    p.add_argument("--in2", dest="infile2", help="second document file")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("induce", help="induced map on the subalgebra")
    _add_common(p)
    _add_automorphism_flags(p)
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("lift-automorphism",
                       help="lift generator images to a graded automorphism")
    _add_common(p)
    p.add_argument("--images", nargs="+", help="n+1 generator images")
    p.add_argument("--in", dest="infile", help="automorphismV document file")
    p.set_defaults(func=_cmd_lift_automorphism)

    p = sub.add_parser("normal-form", help="canonical amalgam word")
    _add_common(p)
    _add_automorphism_flags(p)
    p.set_defaults(func=lambda args: _cmd_normal_form(args, mod_e=False))

    p = sub.add_parser("normal-form-mod-e",
                       help="canonical amalgam word modulo scalar maps")
    _add_common(p)
    _add_automorphism_flags(p)
    p.set_defaults(func=lambda args: _cmd_normal_form(args, mod_e=True))

    p = sub.add_parser("equal-mod-e", help="equality modulo scalar maps")
    _add_common(p)
    _add_automorphism_flags(p)
    p.add_argument("--gx", help="image of x under the second map")
    p.add_argument("--gy", help="image of y under the second map")
    p.add_argument("--in2", dest="infile2", help="second document file")
    p.set_defaults(func=_cmd_equal_mod_e)

    p = sub.add_parser("assemble", help="compose an amalgam word document")
    _add_common(p)
    p.add_argument("--in", dest="infile", required=True, help="word document file")
    p.set_defaults(func=_cmd_assemble)

    p = sub.add_parser("random", help="seeded sample objects")
    _add_common(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kind", choices=("automorphism", "derivation", "lnd"),
                   default="automorphism")
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("selftest", help="run the golden-file suite")
    p.add_argument("--filter", help="only cases whose name contains this")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{exc.name}: {exc}")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
