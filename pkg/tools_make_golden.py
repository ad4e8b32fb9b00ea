#!/usr/bin/env python3
"""Write the golden-file suite. Expected values are stated explicitly here
(hand-derived); run `veronese selftest` afterwards to cross-check."""

import json
from pathlib import Path

OUT = Path(__file__).parent / "src" / "veronese" / "golden" / "v1"

CASES = {
    # ---- poly ----
    "poly-exact_div-cancel": {
        "op": "exact_div", "args": {"a": "2*x*y", "b": "2*x"},
        "expect": {"result": "y"}},
    "poly-exact_div-monomial_factor": {
        "op": "exact_div", "args": {"a": "x^2*y + x*y^2", "b": "x*y"},
        "expect": {"result": "x + y"}},
    "poly-exact_div-inexact": {
        "op": "exact_div", "args": {"a": "x^2 + 1", "b": "x"},
        "expect": {"error": "DivisionNotExact"}},
    "poly-gcd-common_factor": {
        "op": "gcd", "args": {"a": "y - x^3", "b": "3*x^2*y - 3*x^5"},
        "expect": {"result": "x^3 - y"}},
    "poly-gcd-coprime_vars": {
        "op": "gcd", "args": {"a": "x", "b": "y"},
        "expect": {"result": "1"}},
    "poly-diff-power_rule": {
        "op": "diff", "args": {"p": "x^2 + 2*x*y^3 + y^6", "var": "x"},
        "expect": {"result": "2*x + 2*y^3"}},
    "poly-subst-relation_vanishes": {
        "op": "subst",
        "args": {"n": 2, "p": "X0*X2 - X1^2", "images": ["x^2", "x*y", "y^2"]},
        "expect": {"result": "0"}},
    "poly-w_parts-one_line": {
        "op": "w_parts", "args": {"p": "y - x^3", "w": [2, 6]},
        "expect": {"parts": {"6": "-x^3 + y"}}},
    "poly-graded_components-partition": {
        "op": "graded_components", "args": {"p": "x + x^2 + y^3 + 2", "n": 2},
        "expect": {"parts": {"0": "x^2 + 2", "1": "x + y^3"},
                   "sum": "x^2 + x + y^3 + 2"}},
    "poly-nth_root-cube": {
        "op": "nth_root", "args": {"c": "8", "k": 3},
        "expect": {"result": "2"}},
    "poly-nth_root-even_choice": {
        "op": "nth_root", "args": {"c": "1/16", "k": 4},
        "expect": {"result": "1/2"}},
    "poly-nth_root-irrational": {
        "op": "nth_root", "args": {"c": "2", "k": 2},
        "expect": {"error": "NeedsRootExtension", "message": "u=2, n=2"}},
    # ---- exprio ----
    "exprio-parse_print-relation": {
        "op": "parse_print", "args": {"n": 2, "text": "X0*X2 - X1^2"},
        "expect": {"result": "X0*X2 - X1^2"}},
    "exprio-parse_print-coefficients": {
        "op": "parse_print", "args": {"text": "  3/2 * x^2 * y - y^3 "},
        "expect": {"result": "3/2*x^2*y - y^3"}},
    "exprio-parse_print-malformed": {
        "op": "parse_print", "args": {"text": "x + * y"},
        "expect": {"error": "ParseError", "offset": 4}},
    "exprio-read_map-derivation_v": {
        "op": "read_map",
        "args": {"doc": {"kind": "derivationV", "n": 2,
                         "images": ["2*x*y", "y^2", "0"]}},
        "expect": {"doc": {"kind": "derivationV", "n": 2,
                           "images": ["2*x*y", "y^2", "0"]}}},
    "exprio-read_map-shear_pair": {
        "op": "read_map",
        "args": {"doc": {"kind": "automorphism2", "n": 2,
                         "fx": "x+y^3", "fy": "y"}},
        "expect": {"doc": {"kind": "automorphism2",
                           "fx": "x + y^3", "fy": "y"}}},
    "exprio-read_map-missing_images": {
        "op": "read_map", "args": {"doc": {"kind": "derivationV", "n": 2}},
        "expect": {"error": "SchemaError"}},
    # ---- algebra ----
    "algebra-member-in_two": {
        "op": "member", "args": {"p": "x^3*y", "n": 2},
        "expect": {"result": True}},
    "algebra-member-odd_degree": {
        "op": "member", "args": {"p": "x^2*y", "n": 2},
        "expect": {"result": False}},
    "algebra-member-in_three": {
        "op": "member", "args": {"p": "x^2*y^4", "n": 3},
        "expect": {"result": True}},
    "algebra-phi-generator": {
        "op": "phi", "args": {"p": "X1", "n": 3},
        "expect": {"result": "x^2*y"}},
    "algebra-phi-relation": {
        "op": "phi", "args": {"p": "X0*X2 - X1^2", "n": 2},
        "expect": {"result": "0"}},
    "algebra-express-mixed_power": {
        "op": "express", "args": {"p": "x^4*y^2", "n": 2},
        "expect": {"result": "X0*X1^2"}},
    "algebra-express-pure_power": {
        "op": "express", "args": {"p": "y^2", "n": 2},
        "expect": {"result": "X2"}},
    "algebra-express-rejects": {
        "op": "express", "args": {"p": "x^2*y", "n": 2},
        "expect": {"error": "NotInAlgebra"}},
    "algebra-reduce-one_step": {
        "op": "reduce", "args": {"p": "X0*X2", "n": 3},
        "expect": {"result": "X1^2"}},
    "algebra-reduce-two_steps": {
        "op": "reduce", "args": {"p": "X0*X2*X3", "n": 3},
        "expect": {"result": "X1*X2^2"}},
    "algebra-reduce-already_normal": {
        "op": "reduce", "args": {"p": "X1^2", "n": 2},
        "expect": {"result": "X1^2"}},
    "algebra-basis-n2_m2": {
        "op": "basis", "args": {"n": 2, "m": 2},
        "expect": {"count": 5,
                   "monomials": ["X0^2", "X0*X1", "X1^2", "X1*X2", "X2^2"]}},
    "algebra-basis-n3_m2": {
        "op": "basis", "args": {"n": 3, "m": 2},
        "expect": {"count": 7,
                   "monomials": ["X0^2", "X0*X1", "X1^2", "X1*X2", "X2^2",
                                  "X2*X3", "X3^2"]}},
    # ---- derivations ----
    "derivations-apply-slide_on_x2": {
        "op": "apply", "args": {"dx": "y", "dy": "0", "p": "x^2"},
        "expect": {"result": "2*x*y"}},
    "derivations-is_graded-constant": {
        "op": "is_graded_derivation", "args": {"dx": "1", "dy": "0", "n": 2},
        "expect": {"result": False}},
    "derivations-is_graded-example": {
        "op": "is_graded_derivation",
        "args": {"dx": "y - x^3", "dy": "3*x^2*y - 3*x^5", "n": 2},
        "expect": {"result": True}},
    "derivations-restrict-n2": {
        "op": "restrict", "args": {"dx": "y", "dy": "0", "n": 2},
        "expect": {"images": ["2*x*y", "y^2", "0"]}},
    "derivations-restrict-n3": {
        "op": "restrict", "args": {"dx": "y", "dy": "0", "n": 3},
        "expect": {"images": ["3*x^2*y", "2*x*y^2", "y^3", "0"]}},
    "derivations-lift_derivation-round": {
        "op": "lift_derivation",
        "args": {"n": 2, "images": ["2*x*y", "y^2", "0"]},
        "expect": {"dx": "y", "dy": "0"}},
    "derivations-lift_derivation-invalid": {
        "op": "lift_derivation", "args": {"n": 2, "images": ["x^2", "0", "0"]},
        "expect": {"error": "NotADerivation"}},
    "derivations-exp-shear": {
        "op": "exp", "args": {"dx": "y", "dy": "0"},
        "expect": {"fx": "x + y", "fy": "y"}},
    "derivations-exp-not_nilpotent": {
        "op": "exp", "args": {"dx": "x", "dy": "0", "cap": 10},
        "expect": {"error": "NotLocallyNilpotent"}},
    "derivations-conjugate-example": {
        "op": "conjugate",
        "args": {"dx": "y - x^3", "dy": "3*x^2*y - 3*x^5",
                 "ax": "x", "ay": "y - x^3"},
        "expect": {"dx": "y", "dy": "0"}},
    # ---- triangulation ----
    "triangulation-support-slide": {
        "op": "support", "args": {"dx": "y", "dy": "0"},
        "expect": {"strengths": [[-1, 1]]}},
    "triangulation-support-example": {
        "op": "support", "args": {"dx": "y - x^3", "dy": "3*x^2*y - 3*x^5"},
        "expect": {"strengths": [[-1, 1], [2, 0], [5, -1]]}},
    "triangulation-classify-example": {
        "op": "classify",
        "args": {"dx": "y - x^3", "dy": "3*x^2*y - 3*x^5", "n": 2},
        "expect": {"kind": "triangle", "s0": 5, "t0": 1}},
    "triangulation-classify-cubic": {
        "op": "classify", "args": {"dx": "x^3", "dy": "0", "n": 2},
        "expect": {"kind": "not-lnd"}},
    "triangulation-triangulate-example": {
        "op": "triangulate",
        "args": {"dx": "y - x^3", "dy": "3*x^2*y - 3*x^5", "n": 2},
        "expect": {"factors": ["shear_y alpha=1 m=3"],
                   "conjugator": ["x", "-x^3 + y"], "normal_fy": "y"}},
    "triangulation-triangulate-swap_case": {
        "op": "triangulate", "args": {"dx": "0", "dy": "x", "n": 2},
        "expect": {"factors": ["linear [[0, 1], [1, 0]]"],
                   "conjugator": ["y", "x"], "normal_fy": "y"}},
    # ---- automorphisms ----
    "automorphisms-compose-swap_shear": {
        "op": "compose", "args": {"fx": "y", "fy": "x",
                                  "gx": "x - 2*y^3", "gy": "y"},
        "expect": {"fx": "-2*x^3 + y", "fy": "x"}},
    "automorphisms-decompose-shear": {
        "op": "decompose", "args": {"fx": "x - 2*y^3", "fy": "y"},
        "expect": {"factors": ["shear_x alpha=2 m=3"]}},
    "automorphisms-decompose-swapped_shear": {
        "op": "decompose", "args": {"fx": "-2*x^3 + y", "fy": "x"},
        "expect": {"factors": ["linear [[0, 1], [1, 0]]",
                                "shear_x alpha=2 m=3"]}},
    "automorphisms-decompose-not_auto": {
        "op": "decompose", "args": {"fx": "x", "fy": "x*y"},
        "expect": {"error": "NotAnAutomorphism"}},
    "automorphisms-invert-shear": {
        "op": "invert", "args": {"fx": "x + y^3", "fy": "y"},
        "expect": {"fx": "x - y^3", "fy": "y"}},
    "automorphisms-is_graded-affine": {
        "op": "is_graded_automorphism", "args": {"fx": "x + 1", "fy": "y", "n": 2},
        "expect": {"result": False}},
    "automorphisms-is_graded-shear": {
        "op": "is_graded_automorphism", "args": {"fx": "x + y^3", "fy": "y", "n": 2},
        "expect": {"result": True}},
    "automorphisms-equal_mod_e-even": {
        "op": "equal_mod_e",
        "args": {"n": 2, "fx": "x", "fy": "y", "gx": "-x", "gy": "-y"},
        "expect": {"result": True}},
    "automorphisms-equal_mod_e-odd": {
        "op": "equal_mod_e",
        "args": {"n": 3, "fx": "x", "fy": "y", "gx": "-x", "gy": "-y"},
        "expect": {"result": False}},
    # ---- lifting ----
    "lifting-induce-shear": {
        "op": "induce", "args": {"n": 2, "fx": "x + y^3", "fy": "y"},
        "expect": {"images": ["x^2 + 2*x*y^3 + y^6", "x*y + y^4", "y^2"]}},
    "lifting-lift_automorphism-shear": {
        "op": "lift_automorphism",
        "args": {"n": 2, "images": ["x^2 + 2*x*y^3 + y^6", "x*y + y^4", "y^2"]},
        "expect": {"fx": "x + y^3", "fy": "y"}},
    "lifting-lift_automorphism-scalar": {
        "op": "lift_automorphism",
        "args": {"n": 2, "images": ["4*x^2", "4*x*y", "4*y^2"]},
        "expect": {"fx": "2*x", "fy": "2*y"}},
    "lifting-lift_automorphism-root_needed": {
        "op": "lift_automorphism",
        "args": {"n": 3,
                 "images": ["2*x^3", "2*x^2*y", "2*x*y^2", "2*y^3"]},
        "expect": {"error": "NeedsRootExtension", "message": "u=1/4, n=3"}},
    # ---- amalgam ----
    "amalgam-normal_form-shear": {
        "op": "normal_form", "args": {"n": 2, "fx": "x - 2*y^3", "fy": "y"},
        "expect": {"word": {
            "head": {"alpha": "1", "gamma": "0", "beta": "1"},
            "factors": [{"t": "-2*y^3"}]}}},
    "amalgam-normal_form-swap": {
        "op": "normal_form", "args": {"n": 2, "fx": "y", "fy": "x"},
        "expect": {"word": {
            "head": {"alpha": "1", "gamma": "0", "beta": "1"},
            "factors": [{"gl": "0"}]}}},
    "amalgam-assemble-shear": {
        "op": "assemble",
        "args": {"n": 2, "word": {
            "head": {"alpha": "1", "gamma": "0", "beta": "1"},
            "factors": [{"t": "-2*y^3"}]}},
        "expect": {"fx": "x - 2*y^3", "fy": "y"}},
    "amalgam-normal_form_mod_e-even": {
        "op": "normal_form_mod_e", "args": {"n": 2, "fx": "-x", "fy": "-y"},
        "expect": {"word": {
            "head": {"alpha": "1", "gamma": "0", "beta": "1"},
            "factors": []}}},
    "amalgam-normal_form_mod_e-odd": {
        "op": "normal_form_mod_e", "args": {"n": 3, "fx": "-x", "fy": "-y"},
        "expect": {"word": {
            "head": {"alpha": "-1", "gamma": "0", "beta": "-1"},
            "factors": []}}},
    # ---- cli ----
    "cli-reduce-example": {
        "op": "cli", "args": {"argv": ["reduce", "--n", "3", "X0*X2"]},
        "expect": {"exit": 0, "stdout": "X1^2\n"}},
    "cli-triangulate-example": {
        "op": "cli",
        "args": {"argv": ["triangulate", "--n", "2", "--dx", "y - x^3",
                           "--dy", "3*x^2*y - 3*x^5"]},
        "expect": {"exit": 0,
                   "stdout": "factor: shear_y alpha=1 m=3\n"
                             "conjugator: (x, -x^3 + y)\n"
                             "normal_fy: y\n"}},
    "cli-lift-root_error": {
        "op": "cli",
        "args": {"argv": ["lift-automorphism", "--n", "3", "--in",
                           "scaled.json"],
                 "files": {"scaled.json": {
                     "kind": "automorphismV", "n": 3,
                     "images": ["2*x^3", "2*x^2*y", "2*x*y^2", "2*y^3"]}}},
        "expect": {"exit": 1, "stdout": "NeedsRootExtension: u=1/4, n=3\n"}},
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for stale in OUT.glob("*.json"):
        stale.unlink()
    for name, case in CASES.items():
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(case, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")
    print(f"wrote {len(CASES)} cases to {OUT}")


if __name__ == "__main__":
    main()
