"""Exact sparse polynomial arithmetic over the rationals.

A :class:`Poly` is a finite map from exponent vectors to nonzero ``Fraction``
coefficients, tagged with an ordered tuple of variable names (the *ring*).
Monomials are compared lexicographically through their exponent tuples, so the
first ring variable is the largest: over ``("x", "y")`` this is the lex order
with x > y, and over ``("X0", ..., "Xn")`` it is the order with X0 > ... > Xn.

Beyond ring arithmetic the module provides the pieces the rest of the library
is built from: exact division, a bivariate gcd via a primitive polynomial
remainder sequence, formal partial derivatives, substitution, the mod-n
grading by total degree, weight gradings, and exact rational n-th roots.

All values are immutable after construction and all operations are pure, so
they are safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import DivisionNotExact, NeedsRootExtension

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

#: The standard bivariate ring.
XY: tuple[str, str] = ("x", "y")


def x_ring(n: int) -> tuple[str, ...]:
    """Variable names X0..Xn for the ambient ring of the index-n subalgebra."""
    return tuple(f"X{i}" for i in range(n + 1))


class Poly:
    """A multivariate polynomial with exact rational coefficients.

    ``terms`` never stores a zero coefficient, every exponent tuple has the
    ring's arity, and two polynomials are equal iff their rings and term maps
    are equal.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Iterable[str], terms: Mapping[Exponents, Scalar] = ()):
        ring = tuple(ring)
        width = len(ring)
        clean: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            c = Fraction(coeff)
            if c == 0:
                continue
            e = tuple(int(v) for v in exps)
            if len(e) != width:
                raise ValueError(f"exponent vector {e} has wrong arity for {ring}")
            if any(v < 0 for v in e):
                raise ValueError(f"negative exponent in {e}")
            clean[e] = clean.get(e, Fraction(0)) + c
            if clean[e] == 0:
                del clean[e]
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guards misuse
        raise AttributeError("Poly values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: Iterable[str]) -> "Poly":
        return cls(ring)

    @classmethod
    def const(cls, ring: Iterable[str], value: Scalar) -> "Poly":
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): Fraction(value)})

    @classmethod
    def variable(cls, ring: Iterable[str], name: str) -> "Poly":
        ring = tuple(ring)
        if name not in ring:
            raise ValueError(f"unknown variable {name!r} in ring {ring}")
        exps = tuple(1 if v == name else 0 for v in ring)
        return cls(ring, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, ring: Iterable[str], exps: Exponents, coeff: Scalar = 1) -> "Poly":
        return cls(ring, {tuple(exps): Fraction(coeff)})

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def constant_term(self) -> Fraction:
        zero = (0,) * len(self.ring)
        return self.terms.get(zero, Fraction(0))

    def as_constant(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.constant_term

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        idx = self.ring.index(name)
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def depends_on(self, name: str) -> bool:
        idx = self.ring.index(name)
        return any(e[idx] for e in self.terms)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending lex order (largest monomial first)."""
        return [(e, self.terms[e]) for e in sorted(self.terms, reverse=True)]

    def leading_exponents(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_exponents()]

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_ring(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(u + v for u, v in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return Poly(self.ring, out)

    def __rmul__(self, other: Scalar) -> "Poly":
        return self.scale(other)

    def scale(self, value: Scalar) -> "Poly":
        c = Fraction(value)
        if c == 0:
            return Poly.zero(self.ring)
        return Poly(self.ring, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.ring, 1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    # -- comparison / rendering ----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring, exps)
                if e
            )
            mag = -coeff if coeff < 0 else coeff
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({'/'.join(self.ring)}: {self})"


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------


def exact_div(a: Poly, b: Poly) -> Poly:
    """Return q with ``a == b * q``; raise :class:`DivisionNotExact` otherwise.

    Uses leading-term reduction in the lex order.  For a single divisor the
    remainder of the division algorithm vanishes iff the quotient is exact, so
    failure of any reduction step certifies inexactness.
    """
    a._check_ring(b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_b = b.leading_exponents()
    coeff_b = b.terms[lead_b]
    quotient: dict[Exponents, Fraction] = {}
    rest = dict(a.terms)
    while rest:
        lead_r = max(rest)
        step = tuple(u - v for u, v in zip(lead_r, lead_b))
        if any(v < 0 for v in step):
            raise DivisionNotExact(f"{a} is not divisible by {b}")
        c = rest[lead_r] / coeff_b
        quotient[step] = c
        for eb, cb in b.terms.items():
            e = tuple(u + v for u, v in zip(step, eb))
            nxt = rest.get(e, Fraction(0)) - c * cb
            if nxt == 0:
                rest.pop(e, None)
            else:
                rest[e] = nxt
    return Poly(a.ring, quotient)


def divides(b: Poly, a: Poly) -> bool:
    try:
        exact_div(a, b)
        return True
    except DivisionNotExact:
        return False


# ---------------------------------------------------------------------------
# bivariate gcd via a primitive polynomial remainder sequence
# ---------------------------------------------------------------------------

# Univariate helpers work on dense-free dicts {exponent: Fraction} in the
# second ring variable; they back the content computations below.


def _to_uni(p: Poly, idx: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        if any(v for j, v in enumerate(e) if j != idx):
            raise ValueError("polynomial is not univariate in the requested variable")
        out[e[idx]] = c
    return out


def _from_uni(ring: tuple[str, ...], idx: int, d: Mapping[int, Fraction]) -> Poly:
    width = len(ring)
    terms = {}
    for e, c in d.items():
        exps = [0] * width
        exps[idx] = e
        terms[tuple(exps)] = c
    return Poly(ring, terms)


def _uni_divmod(a: dict[int, Fraction], b: dict[int, Fraction]):
    if not b:
        raise ZeroDivisionError
    db = max(b)
    lb = b[db]
    q: dict[int, Fraction] = {}
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        c = r[dr] / lb
        q[dr - db] = c
        for e, cb in b.items():
            k = dr - db + e
            nxt = r.get(k, Fraction(0)) - c * cb
            if nxt == 0:
                r.pop(k, None)
            else:
                r[k] = nxt
    return q, r


def _uni_gcd(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if not a:
        return {}
    lead = a[max(a)]
    return {e: c / lead for e, c in a.items()}


def _coefficients_in(p: Poly, idx: int) -> Iterator[Poly]:
    """The coefficients of p viewed as univariate in variable ``idx``."""
    buckets: dict[int, dict[Exponents, Fraction]] = {}
    for e, c in p.terms.items():
        rest = tuple(0 if j == idx else v for j, v in enumerate(e))
        buckets.setdefault(e[idx], {})[rest] = c
    for d in sorted(buckets, reverse=True):
        yield Poly(p.ring, buckets[d])


def _lead_in(p: Poly, idx: int) -> tuple[int, Poly]:
    deg = max(e[idx] for e in p.terms)
    coeff = {
        tuple(0 if j == idx else v for j, v in enumerate(e)): c
        for e, c in p.terms.items()
        if e[idx] == deg
    }
    return deg, Poly(p.ring, coeff)


def _content_in(p: Poly, idx: int, other: int) -> Poly:
    """gcd of the coefficients of p (univariate in variable ``other``)."""
    acc: dict[int, Fraction] = {}
    for coeff in _coefficients_in(p, idx):
        acc = _uni_gcd(acc, _to_uni(coeff, other))
        if acc == {0: Fraction(1)}:
            break
    return _from_uni(p.ring, other, acc)


def _primitive_in(p: Poly, idx: int, other: int) -> Poly:
    if p.is_zero:
        return p
    return exact_div(p, _content_in(p, idx, other))


def _pseudo_rem(a: Poly, b: Poly, idx: int) -> Poly:
    """Pseudo-remainder of a by b in variable ``idx`` (up to a unit power of
    b's leading coefficient, harmless before taking primitive parts)."""
    db, lb = _lead_in(b, idx)
    r = a
    var_mono = tuple(1 if j == idx else 0 for j in range(len(a.ring)))
    while not r.is_zero:
        dr, lr = _lead_in(r, idx)
        if dr < db:
            break
        shift = Poly.monomial(a.ring, tuple(v * (dr - db) for v in var_mono))
        r = lb * r - lr * shift * b
    return r


def _monic_lex(p: Poly) -> Poly:
    """Scale so the coefficient of the lex-greatest monomial is 1."""
    if p.is_zero:
        return p
    return p.scale(1 / p.leading_coefficient())


def gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor in a bivariate ring.

    Treats the first ring variable as the main one and runs a primitive
    polynomial remainder sequence, with contents handled by univariate
    Euclidean gcds.  The result is normalized so its leading coefficient in
    the lex order is 1.
    """
    a._check_ring(b)
    if len(a.ring) != 2:
        raise ValueError("gcd is implemented for bivariate rings only")
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return _monic_lex(b)
    if b.is_zero:
        return _monic_lex(a)
    da, db_ = a.degree_in(a.ring[0]), b.degree_in(a.ring[0])
    if da == 0 and db_ == 0:
        return _monic_lex(_from_uni(a.ring, 1, _uni_gcd(_to_uni(a, 1), _to_uni(b, 1))))
    cont_a = _content_in(a, 0, 1)
    cont_b = _content_in(b, 0, 1)
    cont = _from_uni(a.ring, 1, _uni_gcd(_to_uni(cont_a, 1), _to_uni(cont_b, 1)))
    r0 = exact_div(a, cont_a)
    r1 = exact_div(b, cont_b)
    if r0.degree_in(a.ring[0]) < r1.degree_in(a.ring[0]):
        r0, r1 = r1, r0
    while not r1.is_zero:
        rem = _pseudo_rem(r0, r1, 0)
        r0, r1 = r1, _primitive_in(rem, 0, 1)
    return _monic_lex(cont * r0)


# ---------------------------------------------------------------------------
# derivatives and substitution
# ---------------------------------------------------------------------------


def diff(p: Poly, name: str) -> Poly:
    """Formal partial derivative with respect to the named variable."""
    if name not in p.ring:
        raise ValueError(f"unknown variable {name!r} in ring {p.ring}")
    idx = p.ring.index(name)
    out: dict[Exponents, Fraction] = {}
    for e, c in p.terms.items():
        if e[idx] == 0:
            continue
        d = list(e)
        d[idx] -= 1
        out[tuple(d)] = out.get(tuple(d), Fraction(0)) + c * e[idx]
    return Poly(p.ring, out)


def subst(p: Poly, images: list[Poly]) -> Poly:
    """Evaluate p at the given images (one per ring variable), exactly.

    The images must share one ring, which becomes the ring of the result.
    Substitution is a ring homomorphism; powers of the images are cached.
    """
    if len(images) != len(p.ring):
        raise ValueError(
            f"expected {len(p.ring)} images for ring {p.ring}, got {len(images)}"
        )
    if not images:
        raise ValueError("empty ring")
    target = images[0].ring
    for im in images:
        if im.ring != target:
            raise ValueError("substitution images must share one ring")
    cache: dict[tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        key = (i, e)
        if key not in cache:
            cache[key] = images[i] ** e
        return cache[key]

    total = Poly.zero(target)
    for exps, coeff in p.terms.items():
        term = Poly.const(target, coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# gradings
# ---------------------------------------------------------------------------


def graded_component(p: Poly, n: int, residue: int) -> Poly:
    """Terms of p whose total degree is congruent to ``residue`` mod n."""
    if n < 2:
        raise ValueError("grading modulus must be at least 2")
    if not 0 <= residue < n:
        raise ValueError(f"residue {residue} out of range for modulus {n}")
    if len(p.ring) != 2:
        raise ValueError("grading is defined on bivariate rings")
    return Poly(p.ring, {e: c for e, c in p.terms.items() if sum(e) % n == residue})


def graded_components(p: Poly, n: int) -> dict[int, Poly]:
    """All nonzero graded components, keyed by residue.  They sum to p."""
    parts: dict[int, dict[Exponents, Fraction]] = {}
    for e, c in p.terms.items():
        parts.setdefault(sum(e) % n, {})[e] = c
    return {r: Poly(p.ring, t) for r, t in sorted(parts.items())}


def in_component(p: Poly, n: int, residue: int) -> bool:
    """True iff every term of p has total degree congruent to residue mod n.

    The zero polynomial lies in every component.
    """
    return all(sum(e) % n == residue for e in p.terms)


class Weight:
    """A nonzero integer weight vector (w1, w2) for the weight grading."""

    __slots__ = ("w1", "w2")

    def __init__(self, w1: int, w2: int):
        if w1 == 0 and w2 == 0:
            raise ValueError("weight vector must be nonzero")
        object.__setattr__(self, "w1", int(w1))
        object.__setattr__(self, "w2", int(w2))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Weight values are immutable")

    def value(self, exps: Exponents) -> int:
        return exps[0] * self.w1 + exps[1] * self.w2

    def __eq__(self, other):
        return isinstance(other, Weight) and (self.w1, self.w2) == (other.w1, other.w2)

    def __hash__(self):
        return hash((self.w1, self.w2))

    def __repr__(self):
        return f"Weight({self.w1}, {self.w2})"


def w_parts(p: Poly, w: Weight) -> dict[int, Poly]:
    """Decompose p by weighted degree.  The parts sum back to p."""
    if len(p.ring) != 2:
        raise ValueError("weight decomposition is defined on bivariate rings")
    parts: dict[int, dict[Exponents, Fraction]] = {}
    for e, c in p.terms.items():
        parts.setdefault(w.value(e), {})[e] = c
    return {d: Poly(p.ring, t) for d, t in sorted(parts.items())}


# ---------------------------------------------------------------------------
# rational roots
# ---------------------------------------------------------------------------


def _int_nth_root(m: int, n: int) -> int | None:
    """Exact n-th root of a nonnegative integer, or None."""
    if m in (0, 1):
        return m
    lo, hi = 1, 1 << ((m.bit_length() + n - 1) // n + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == m else None


def nth_root_rational(c: Scalar, n: int) -> Fraction:
    """The rational v with v**n == c, when one exists.

    For even n the positive root is returned.  Raises
    :class:`NeedsRootExtension` (carrying c and n) when no rational root
    exists, including negative c with even n.
    """
    c = Fraction(c)
    if n < 2:
        raise ValueError("root index must be at least 2")
    if c == 0:
        raise ValueError("nth_root_rational requires a nonzero argument")
    negative = c < 0
    if negative and n % 2 == 0:
        raise NeedsRootExtension(c, n)
    mag = -c if negative else c
    num = _int_nth_root(mag.numerator, n)
    den = _int_nth_root(mag.denominator, n)
    if num is None or den is None:
        raise NeedsRootExtension(c, n)
    root = Fraction(num, den)
    return -root if negative else root
