"""Conversions between logjets polynomials and sympy, used as an independent oracle."""

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from logjets.polycore import PolyRing


def symbols_of(R: PolyRing):
    return sympy.symbols(" ".join(R.variables), seq=True)


def to_sympy(p):
    syms = symbols_of(p.ring)
    out = sympy.Integer(0)
    for e, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return out


def from_sympy(expr, R: PolyRing):
    poly = sympy.Poly(sympy.expand(expr), *symbols_of(R))
    return R.from_dict({m: Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))
                        for m, c in poly.terms()})


def polynomials(R: PolyRing, max_degree=3, max_terms=4, coeff=5):
    """Hypothesis strategy for small polynomials of R."""
    exps = st.tuples(*[st.integers(0, max_degree)] * R.nvars).filter(
        lambda e: sum(e) <= max_degree)
    terms = st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms)
    return terms.map(R.from_dict)
