"""Domain errors shared across the library.

Every failure mode that a caller can provoke with bad (but well-typed) input
is a subclass of :class:`DomainError` and carries a stable ``name`` used by
the command-line front end as the first word of its error report.  Genuine
programming errors (wrong ring, bad arity) raise ``ValueError`` instead and
are not part of the CLI contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DomainError(Exception):
    """Base class for recoverable algebraic failures."""

    name = "DomainError"


class DivisionNotExact(DomainError):
    """Polynomial division left a nonzero remainder."""

    name = "DivisionNotExact"


class NotInAlgebra(DomainError):
    """A polynomial is not a member of the degree-n subalgebra."""

    name = "NotInAlgebra"


class NotGraded(DomainError):
    """Images are not homogeneous of residue 1 in the mod-n grading."""

    name = "NotGraded"


class NotADerivation(DomainError):
    """Generator images are incompatible with any derivation."""

    name = "NotADerivation"


class NotLocallyNilpotent(DomainError):
    """Iterates failed to vanish, or the triangulation case analysis ruled
    the derivation out."""

    name = "NotLocallyNilpotent"

    def __init__(self, message: str, cap: int | None = None):
        super().__init__(message)
        self.cap = cap


class NotAnAutomorphism(DomainError):
    """The image pair (or generator images) define no invertible map."""

    name = "NotAnAutomorphism"


class NeedsRootExtension(DomainError):
    """An n-th root of a rational constant does not exist over the rationals.

    Carries the constant and the root index so the caller can report the
    field extension that would be required.
    """

    name = "NeedsRootExtension"

    def __init__(self, value, degree: int):
        super().__init__(f"u={value}, n={degree}")
        self.value = value
        self.degree = degree


class SchemaError(DomainError):
    """A structured document is missing or misusing a field."""

    name = "SchemaError"

    def __init__(self, fieldname: str, detail: str | None = None):
        message = fieldname if detail is None else f"{fieldname} ({detail})"
        super().__init__(message)
        self.field = fieldname
        self.detail = detail


@dataclass(frozen=True)
class ParseDiagnostic:
    """Location and expectation info for a text-parse failure."""

    offset: int
    message: str
    expected: frozenset[str] = field(default_factory=frozenset)


class ParseError(DomainError):
    """Malformed polynomial text."""

    name = "ParseError"

    def __init__(self, diagnostic: ParseDiagnostic):
        expected = ""
        if diagnostic.expected:
            expected = f" (expected {', '.join(sorted(diagnostic.expected))})"
        super().__init__(
            f"{diagnostic.message} at offset {diagnostic.offset}{expected}"
        )
        self.diagnostic = diagnostic


class UnknownVariable(ParseError):
    """Identifier outside the ring.  Reported to the CLI as a ParseError."""

    def __init__(self, varname: str, offset: int, ring: tuple[str, ...]):
        super().__init__(
            ParseDiagnostic(offset, f"unknown variable '{varname}'", frozenset(ring))
        )
        self.varname = varname
