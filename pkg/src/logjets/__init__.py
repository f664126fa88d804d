"""Exact computations with logarithmic Hasse-Schmidt rings, jet multiplicities
and the polynomial abc inequalities."""

from .errors import (ContextMismatchError, LogJetsError, ParseError, PreconditionError,
                     ResourceLimitError, UnsupportedError)
from .polycore import Mod, PolyRing, Polynomial, TruncatedPolynomial, parse_polynomial
from .groebner import (GroebnerContext, Ideal, LocalizedContext, eliminate, groebner_basis,
                       ideal_contains, ideal_equal, localize, normal_form, saturate)
from .logmonoid import (LogAlgebraPresentation, MonoidMorphism, MonoidPresentation,
                        PreLogStructure, amalgamated_sum, associated_log,
                        check_log_morphism, group_of_units, localize_log_algebra)
from .hschmidt import (HSPresentation, apply_d, build_hs, check_exact_sequences,
                       check_gendiff, check_d_well_defined, log_partial, omega_presentation)
from .jetmult import (DivisorRep, JetPoint, RationalPoint, jet_vanishing_test,
                      multiplicity_via_jets, taylor_multiplicity)
from .masoncheck import (PuncturedLineMorphism, check_mason, check_mason_corollary,
                         conductor, pullback_order_bound, verify_projective_gluing)
from .presentation import load_presentation, parse_presentation

__version__ = "0.1.0"
