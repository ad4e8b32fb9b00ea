"""Exact algebra of the plane Veronese subalgebra K[x^n, x^(n-1)y, ..., y^n].

The package computes, over the rationals and with exact arithmetic:

* sparse polynomial arithmetic, gcds, gradings (:mod:`veronese.poly`);
* the subalgebra as a quotient by quadratic relations, with normal forms and
  a monomial basis (:mod:`veronese.algebra`);
* derivations and their unique graded lifts, exponentials of locally
  nilpotent derivations (:mod:`veronese.derivations`);
* the triangulation of locally nilpotent graded derivations
  (:mod:`veronese.triangulation`);
* tame decomposition, inversion, and the lifting of subalgebra automorphisms
  (:mod:`veronese.automorphisms`, :mod:`veronese.lifting`);
* canonical amalgamated-free-product words (:mod:`veronese.amalgam`);
* parsing/printing and structured documents (:mod:`veronese.exprio`).

Points where the rationals are smaller than an algebraically closed field
surface as :class:`veronese.errors.NeedsRootExtension`.
"""

from .algebra import (BasisMonomial, Relation, VeroneseContext, enum_basis,
                      express, groebner_reduce, is_normal_form, member, phi,
                      s_polynomial)
from .amalgam import (AmalgamWord, BElement, GLRep, TRep, assemble, in_E,
                      normal_form, normal_form_mod_E, order_mod_E,
                      word_from_document, word_from_elements,
                      word_to_document)
from .automorphisms import (Automorphism2, ElementaryFactor, Linear, ShearX,
                            ShearY, SWAP, compose, compose_all, decompose,
                            equal_mod_E, invert, is_n_graded_aut)
from .derivations import (DEFAULT_NILPOTENCY_CAP, Derivation2, DerivationV,
                          apply, conjugate, conjugate_by_factors, exp_lnd,
                          is_n_graded_derivation, lift_derivation,
                          restrict_to_V)
from .errors import (DivisionNotExact, DomainError, NeedsRootExtension,
                     NotADerivation, NotAnAutomorphism, NotGraded,
                     NotInAlgebra, NotLocallyNilpotent, ParseDiagnostic,
                     ParseError, SchemaError, UnknownVariable)
from .exprio import dumps, loads, parse_poly, print_poly, read_map, write_map
from .lifting import AutomorphismV, induce_on_V, lift_automorphism
from .poly import (XY, Poly, Weight, diff, exact_div, gcd, graded_component,
                   graded_components, in_component, nth_root_rational, subst,
                   w_parts, x_ring)
from .triangulation import (Classification, Strength, TriangulationResult,
                            classify, is_locally_nilpotent, support,
                            triangulate)

__version__ = "0.1.0"
