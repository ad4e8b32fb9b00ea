"""Golden-file suite: concrete worked examples frozen as JSON cases.

Each file under ``golden/v1`` holds one case named ``module-op-case`` with an
``op``, its ``args``, and the expected result.  The runner executes the op
through the public API and compares exactly; domain errors compare by their
stable names.  A corrupted or undecodable golden file counts as a failure.
"""

from __future__ import annotations

import io
import json
import os
import tempfile
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import exprio
from .algebra import VeroneseContext, enum_basis, express, groebner_reduce, member, phi
from .amalgam import assemble, normal_form, normal_form_mod_E, word_from_document, word_to_document
from .automorphisms import Automorphism2, compose, decompose, equal_mod_E, invert, is_n_graded_aut
from .derivations import (Derivation2, DerivationV, apply, conjugate, exp_lnd,
                          is_n_graded_derivation, lift_derivation, restrict_to_V)
from .errors import DomainError, ParseError
from .lifting import AutomorphismV, induce_on_V, lift_automorphism
from .poly import XY, Poly, Weight, diff, exact_div, gcd, graded_components, nth_root_rational, subst, w_parts, x_ring
from .triangulation import classify, support, triangulate

GOLDEN_DIR = Path(__file__).parent / "golden" / "v1"


def _ring(args: dict):
    return x_ring(args["n"]) if "n" in args else XY


def _poly(args: dict, key: str, ring=None) -> Poly:
    return exprio.parse_poly(args[key], ring if ring is not None else _ring(args))


def _derivation(args: dict) -> Derivation2:
    return Derivation2(_poly(args, "dx", XY), _poly(args, "dy", XY))


def _automorphism(args: dict, fx="fx", fy="fy") -> Automorphism2:
    return Automorphism2(_poly(args, fx, XY), _poly(args, fy, XY))


def _images(args: dict, ctx: VeroneseContext, cls):
    return cls(ctx, tuple(exprio.parse_poly(s, XY) for s in args["images"]))


def _run_exact_div(args):
    return {"result": str(exact_div(_poly(args, "a"), _poly(args, "b")))}


def _run_gcd(args):
    return {"result": str(gcd(_poly(args, "a", XY), _poly(args, "b", XY)))}


def _run_diff(args):
    return {"result": str(diff(_poly(args, "p"), args["var"]))}


def _run_subst(args):
    p = _poly(args, "p")
    images = [exprio.parse_poly(s, XY) for s in args["images"]]
    return {"result": str(subst(p, images))}


def _run_w_parts(args):
    w = Weight(*args["w"])
    parts = w_parts(_poly(args, "p", XY), w)
    return {"parts": {str(d): str(q) for d, q in parts.items()}}


def _run_graded_components(args):
    parts = graded_components(_poly(args, "p", XY), args["n"])
    total = Poly.zero(XY)
    for q in parts.values():
        total = total + q
    return {"parts": {str(r): str(q) for r, q in parts.items()}, "sum": str(total)}


def _run_nth_root(args):
    return {"result": str(nth_root_rational(Fraction(args["c"]), args["k"]))}


def _run_parse_print(args):
    return {"result": str(exprio.parse_poly(args["text"], _ring(args)))}


def _run_read_map(args):
    return {"doc": exprio.write_map(exprio.read_map(args["doc"]))}


def _run_member(args):
    return {"result": member(_poly(args, "p", XY), VeroneseContext(args["n"]))}


def _run_phi(args):
    ctx = VeroneseContext(args["n"])
    return {"result": str(phi(_poly(args, "p", ctx.big_ring), ctx))}


def _run_express(args):
    ctx = VeroneseContext(args["n"])
    return {"result": str(express(_poly(args, "p", XY), ctx))}


def _run_reduce(args):
    ctx = VeroneseContext(args["n"])
    p = _poly(args, "p", ctx.big_ring)
    outer = groebner_reduce(p, ctx, strategy="outer")
    inner = groebner_reduce(p, ctx, strategy="inner")
    if outer != inner:
        return {"error": "strategy mismatch"}
    return {"result": str(outer)}


def _run_basis(args):
    ctx = VeroneseContext(args["n"])
    monomials = enum_basis(ctx, args["m"])
    return {"count": len(monomials), "monomials": [str(b) for b in monomials]}


def _run_apply(args):
    return {"result": str(apply(_derivation(args), _poly(args, "p", XY)))}


def _run_is_graded_derivation(args):
    return {"result": is_n_graded_derivation(_derivation(args), args["n"])}


def _run_restrict(args):
    dv = restrict_to_V(_derivation(args), VeroneseContext(args["n"]))
    return {"images": [str(p) for p in dv.images]}


def _run_lift_derivation(args):
    ctx = VeroneseContext(args["n"])
    d = lift_derivation(_images(args, ctx, DerivationV))
    return {"dx": str(d.fx), "dy": str(d.fy)}


def _run_exp(args):
    a = exp_lnd(_derivation(args), cap=args.get("cap", 256))
    return {"fx": str(a.fx), "fy": str(a.fy)}


def _run_conjugate(args):
    d = conjugate(_derivation(args), _automorphism(args, "ax", "ay"))
    return {"dx": str(d.fx), "dy": str(d.fy)}


def _run_support(args):
    return {"strengths": [list(st) for st in sorted(support(_derivation(args)))]}


def _run_classify(args):
    shape = classify(_derivation(args), args["n"])
    out = {"kind": shape.kind}
    if shape.s0 is not None:
        out["s0"] = shape.s0
        out["t0"] = shape.t0
    return out


def _run_triangulate(args):
    result = triangulate(_derivation(args), args["n"])
    conj = result.conjugator_automorphism()
    return {
        "factors": [str(f) for f in result.conjugator],
        "conjugator": [str(conj.fx), str(conj.fy)],
        "normal_fy": str(result.normal_fy),
    }


def _run_compose(args):
    c = compose(_automorphism(args), _automorphism(args, "gx", "gy"))
    return {"fx": str(c.fx), "fy": str(c.fy)}


def _run_decompose(args):
    return {"factors": [str(f) for f in decompose(_automorphism(args))]}


def _run_invert(args):
    inv = invert(_automorphism(args))
    return {"fx": str(inv.fx), "fy": str(inv.fy)}


def _run_is_graded_automorphism(args):
    return {"result": is_n_graded_aut(_automorphism(args), args["n"])}


def _run_induce(args):
    av = induce_on_V(_automorphism(args), VeroneseContext(args["n"]))
    return {"images": [str(p) for p in av.images]}


def _run_lift_automorphism(args):
    ctx = VeroneseContext(args["n"])
    a = lift_automorphism(_images(args, ctx, AutomorphismV))
    return {"fx": str(a.fx), "fy": str(a.fy)}


def _run_equal_mod_e(args):
    return {"result": equal_mod_E(_automorphism(args),
                                  _automorphism(args, "gx", "gy"), args["n"])}


def _run_normal_form(args):
    word = normal_form(_automorphism(args), args["n"])
    return {"word": word_to_document(word)}


def _run_normal_form_mod_e(args):
    word = normal_form_mod_E(_automorphism(args), args["n"])
    return {"word": word_to_document(word)}


def _run_assemble(args):
    a = assemble(word_from_document(args["word"], args["n"]))
    return {"fx": str(a.fx), "fy": str(a.fy)}


def _run_cli(args):
    from .cli import main

    argv = list(args["argv"])
    with tempfile.TemporaryDirectory() as tmp:
        for name, doc in args.get("files", {}).items():
            path = os.path.join(tmp, name)
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(exprio.dumps(doc))
            argv = [os.path.join(tmp, a) if a == name else a for a in argv]
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(argv)
    return {"exit": code, "stdout": buffer.getvalue()}


OPS: dict[str, Callable[[dict], dict]] = {
    "exact_div": _run_exact_div,
    "gcd": _run_gcd,
    "diff": _run_diff,
    "subst": _run_subst,
    "w_parts": _run_w_parts,
    "graded_components": _run_graded_components,
    "nth_root": _run_nth_root,
    "parse_print": _run_parse_print,
    "read_map": _run_read_map,
    "member": _run_member,
    "phi": _run_phi,
    "express": _run_express,
    "reduce": _run_reduce,
    "basis": _run_basis,
    "apply": _run_apply,
    "is_graded_derivation": _run_is_graded_derivation,
    "restrict": _run_restrict,
    "lift_derivation": _run_lift_derivation,
    "exp": _run_exp,
    "conjugate": _run_conjugate,
    "support": _run_support,
    "classify": _run_classify,
    "triangulate": _run_triangulate,
    "compose": _run_compose,
    "decompose": _run_decompose,
    "invert": _run_invert,
    "is_graded_automorphism": _run_is_graded_automorphism,
    "induce": _run_induce,
    "lift_automorphism": _run_lift_automorphism,
    "equal_mod_e": _run_equal_mod_e,
    "normal_form": _run_normal_form,
    "normal_form_mod_e": _run_normal_form_mod_e,
    "assemble": _run_assemble,
    "cli": _run_cli,
}


def run_case(case: dict) -> dict:
    op = case["op"]
    try:
        return OPS[op](case.get("args", {}))
    except ParseError as exc:
        return {"error": exc.name, "offset": exc.diagnostic.offset}
    except DomainError as exc:
        result = {"error": exc.name}
        if exc.name == "NeedsRootExtension":
            result["message"] = str(exc)
        return result


def run_selftest(name_filter: str | None = None, emit=print) -> tuple[int, int]:
    """Run all golden cases, printing one line per case; returns
    (passed, failed)."""
    passed = failed = 0
    for path in sorted(GOLDEN_DIR.glob("*.json")):
        name = path.stem
        if name_filter and name_filter not in name:
            continue
        try:
            case = json.loads(path.read_text(encoding="utf-8"))
            got = run_case(case)
            expect = case["expect"]
        except Exception as exc:  # noqa: BLE001 - corrupted case counts as failing
            failed += 1
            emit(f"FAIL {name} (unrunnable: {exc})")
            continue
        if got == expect:
            passed += 1
            emit(f"PASS {name}")
        else:
            failed += 1
            emit(f"FAIL {name} (expected {expect!r}, got {got!r})")
    return passed, failed
