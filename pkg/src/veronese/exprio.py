"""Parsing and printing for polynomials and structured documents.

Text grammar (whitespace between tokens is insignificant)::

    poly  := ['-'] term {('+' | '-') term}
    term  := coeff ['*' monos] | monos
    monos := var ['^' nat] {'*' var ['^' nat]}
    coeff := nat ['/' nat]
    var   := identifier

Multiplication is always explicit ("2*x", never "2x") and coefficients sit in
front of their monomial, which keeps diagnostics simple and makes printing an
exact inverse of parsing.  Printing emits terms in descending lex order of
the ring, so output is deterministic and round-trips.

Structured documents are JSON objects with a ``kind`` field; polynomial
values inside them reuse the text grammar.  Supported kinds::

    {"kind": "derivation2",   "fx": "y", "fy": "0"}
    {"kind": "automorphism2", "fx": "x + y^3", "fy": "y"}
    {"kind": "derivationV",   "n": 2, "images": ["2*x*y", "y^2", "0"]}
    {"kind": "automorphismV", "n": 2, "images": ["x^2", "x*y", "y^2"]}

``fx``/``fy`` are the images of x and y; ``images`` lists the images of the
n+1 generators in order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Union

from .algebra import VeroneseContext
from .automorphisms import Automorphism2
from .derivations import Derivation2, DerivationV
from .errors import ParseDiagnostic, ParseError, SchemaError, UnknownVariable
from .lifting import AutomorphismV
from .poly import XY, Poly

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[+\-*/^])"
)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(ParseDiagnostic(pos, f"unexpected character {text[pos]!r}"))
        pos = match.end()
        kind = match.lastgroup
        if kind == "ws":
            continue
        value = match.group()
        tokens.append((kind if kind != "op" else value, value, match.start()))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: tuple[str, ...]):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            self.fail({kind})
        self.pos += 1
        return tok

    def fail(self, expected: set[str]):
        tok = self.tokens[self.pos]
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(
            ParseDiagnostic(tok[2], f"unexpected {got}", frozenset(expected))
        )

    def parse(self) -> Poly:
        total = Poly.zero(self.ring)
        sign = 1
        if self.peek()[0] == "-":
            self.take("-")
            sign = -1
        total = total + self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take(self.peek()[0])[1] == "+" else -1
            total = total + self.term().scale(sign)
        if self.peek()[0] != "end":
            self.fail({"+", "-", "end of input"})
        return total

    def term(self) -> Poly:
        kind = self.peek()[0]
        if kind == "nat":
            coeff = self.coefficient()
            if self.peek()[0] == "*":
                self.take("*")
                return self.monomials().scale(coeff)
            return Poly.const(self.ring, coeff)
        if kind == "ident":
            return self.monomials()
        self.fail({"number", "identifier"})

    def coefficient(self) -> Fraction:
        num_tok = self.take("nat")
        num = int(num_tok[1])
        if self.peek()[0] == "/":
            self.take("/")
            den_tok = self.take("nat")
            den = int(den_tok[1])
            if den == 0:
                raise ParseError(ParseDiagnostic(den_tok[2], "zero denominator"))
            return Fraction(num, den)
        return Fraction(num)

    def monomials(self) -> Poly:
        out = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            out = out * self.factor()
        return out

    def factor(self) -> Poly:
        name_tok = self.take("ident")
        name = name_tok[1]
        if name not in self.ring:
            raise UnknownVariable(name, name_tok[2], self.ring)
        exponent = 1
        if self.peek()[0] == "^":
            self.take("^")
            exponent = int(self.take("nat")[1])
        return Poly.variable(self.ring, name) ** exponent


def parse_poly(text: str, ring) -> Poly:
    """Parse the grammar above over the given ring.

    Raises :class:`ParseError` (with offset and expected-token diagnostics)
    on malformed input and :class:`UnknownVariable` for identifiers outside
    the ring.
    """
    ring = tuple(ring)
    if len(set(ring)) != len(ring):
        raise ValueError("ring names must be distinct")
    for name in ring:
        if not _IDENT.match(name):
            raise ValueError(f"ring name {name!r} is not an identifier")
    return _Parser(text, ring).parse()


def print_poly(p: Poly) -> str:
    """Canonical text form; ``parse_poly(print_poly(p), p.ring) == p``."""
    return str(p)


# ---------------------------------------------------------------------------
# structured documents
# ---------------------------------------------------------------------------

MapObject = Union[Derivation2, DerivationV, Automorphism2, AutomorphismV]


def _require(doc: dict, field: str, types) -> object:
    if field not in doc:
        raise SchemaError(field)
    value = doc[field]
    if not isinstance(value, types) or isinstance(value, bool):
        raise SchemaError(field, f"expected {types}")
    return value


def _poly_field(doc: dict, field: str) -> Poly:
    return parse_poly(_require(doc, field, str), XY)


def read_map(doc: dict) -> MapObject:
    """Build a derivation or automorphism from a structured document."""
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    kind = _require(doc, "kind", str)
    if kind in ("derivation2", "automorphism2"):
        fx = _poly_field(doc, "fx")
        fy = _poly_field(doc, "fy")
        if "n" in doc:
            _require(doc, "n", int)
        cls = Derivation2 if kind == "derivation2" else Automorphism2
        return cls(fx, fy)
    if kind in ("derivationV", "automorphismV"):
        n = _require(doc, "n", int)
        if n < 2:
            raise SchemaError("n", "must be at least 2")
        raw = _require(doc, "images", list)
        if len(raw) != n + 1:
            raise SchemaError("images", f"expected {n + 1} entries")
        images = []
        for idx, entry in enumerate(raw):
            if not isinstance(entry, str):
                raise SchemaError(f"images[{idx}]", "expected a polynomial string")
            images.append(parse_poly(entry, XY))
        ctx = VeroneseContext(n)
        cls = DerivationV if kind == "derivationV" else AutomorphismV
        return cls(ctx, tuple(images))
    raise SchemaError("kind", f"unknown kind {kind!r}")


def write_map(obj: MapObject) -> dict:
    """Structured document for a derivation or automorphism; inverse of
    :func:`read_map`."""
    if isinstance(obj, Derivation2):
        return {"kind": "derivation2", "fx": str(obj.fx), "fy": str(obj.fy)}
    if isinstance(obj, Automorphism2):
        return {"kind": "automorphism2", "fx": str(obj.fx), "fy": str(obj.fy)}
    if isinstance(obj, DerivationV):
        return {
            "kind": "derivationV",
            "n": obj.ctx.n,
            "images": [str(p) for p in obj.images],
        }
    if isinstance(obj, AutomorphismV):
        return {
            "kind": "automorphismV",
            "n": obj.ctx.n,
            "images": [str(p) for p in obj.images],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc: dict) -> str:
    """Canonical JSON rendering of a structured document."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    """Parse JSON text into a document, reporting syntax issues as schema
    errors on the pseudo-field ``$``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected a JSON object")
    return doc
