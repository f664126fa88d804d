"""Multiplicity of a divisor at a rational point, computed two ways.

``taylor_multiplicity`` shifts the point to the origin and reads off the
lowest total degree.  ``multiplicity_via_jets`` uses the jet criterion:
mult_p(s) >= n+1 iff s vanishes to order n along every jet through p,
where the jets are written with symbolic coefficients

    x_j  ->  p_j + c_{j,1} t + ... + c_{j,n} t^n

and vanishing means the t^0..t^n coefficients of s(jet) are identically
zero (modulo the jet equations of the ambient hypersurface, if any).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .errors import PreconditionError, UnsupportedError
from .groebner import GroebnerContext, Ideal, groebner_basis
from .polycore import Polynomial, PolyRing, TruncatedPolynomial, poly_substitute

DEFAULT_CAP = 16

__all__ = [
    "DEFAULT_CAP",
    "RationalPoint",
    "DivisorRep",
    "JetPoint",
    "MultiplicityResult",
    "taylor_multiplicity",
    "jet_vanishing_test",
    "multiplicity_via_jets",
    "random_instance",
]


class RationalPoint:
    """A point with one field coordinate per variable of a ring."""

    def __init__(self, ring: PolyRing, coordinates):
        if isinstance(coordinates, Mapping):
            missing = [v for v in ring.variables if v not in coordinates]
            if missing:
                raise PreconditionError(f"no coordinate for {', '.join(missing)}")
            coords = [coordinates[v] for v in ring.variables]
        else:
            coords = list(coordinates)
        if len(coords) != ring.nvars:
            raise PreconditionError(
                f"point has {len(coords)} coordinates, ring has {ring.nvars} variables")
        self.ring = ring
        self.coordinates = tuple(ring.scalar(c) for c in coords)

    def as_dict(self) -> dict:
        return dict(zip(self.ring.variables, self.coordinates))

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coordinates) + ")"


class DivisorRep:
    """A local equation s of a Cartier divisor on an affine ambient R/I."""

    def __init__(self, equation, ambient: GroebnerContext | PolyRing):
        if isinstance(ambient, PolyRing):
            ambient = groebner_basis(Ideal(ambient, []))
        self.ambient = ambient
        self.ring = ambient.ring
        self.equation = ambient._own(equation)

    @property
    def kind(self) -> str:
        gens = self.ambient.ideal.generators
        if not self.ambient.basis:
            return "free"
        if len(gens) == 1:
            return "hypersurface"
        return "general"


class JetPoint:
    """Symbolic order-n jets through a base point."""

    def __init__(self, base: RationalPoint, order: int):
        self.base = base
        self.order = order
        names = [f"c_{x}_{i}" for x in base.ring.variables for i in range(1, order + 1)]
        self.coeff_ring = PolyRing(names, "grevlex", base.ring.characteristic)

    def images(self) -> dict:
        R, n = self.coeff_ring, self.order
        out = {}
        for x, p in zip(self.base.ring.variables, self.base.coordinates):
            coeffs = [R.constant(p)] + [R.var(f"c_{x}_{i}") for i in range(1, n + 1)]
            out[x] = TruncatedPolynomial(coeffs, n, R)
        return out

    def expand(self, f: Polynomial) -> TruncatedPolynomial:
        if not f.used_variables():
            return TruncatedPolynomial.constant(f.constant_value(), self.order, self.coeff_ring)
        return poly_substitute(f, self.images())


@dataclass
class MultiplicityResult:
    value: int | float
    at_least: bool = False
    witness: Polynomial | None = None

    def __str__(self):
        if self.value == math.inf:
            return "mult = inf"
        return f"mult >= {self.value}" if self.at_least else f"mult = {self.value}"


def _check_point(D: DivisorRep, p: RationalPoint):
    if p.ring.variables != D.ring.variables:
        raise PreconditionError("point and divisor live in different rings")
    kind = D.kind
    if kind == "general":
        raise UnsupportedError("only free and hypersurface ambients are supported")
    if kind == "hypersurface":
        (h,) = D.ambient.ideal.generators
        pt = p.as_dict()
        if h.evaluate(pt):
            raise PreconditionError(f"point {p} does not lie on the ambient hypersurface")
        grad = [h.derivative(v).evaluate(pt) for v in D.ring.variables]
        if not any(grad):
            raise PreconditionError(f"point {p} is a singular point of the ambient")


def taylor_multiplicity(D: DivisorRep, p: RationalPoint) -> int | float:
    """Lowest total degree of s(x + p); infinity for s = 0.  Free ambient only."""
    if D.kind != "free":
        raise UnsupportedError("the Taylor oracle is defined for a free ambient only")
    _check_point(D, p)
    if D.equation.is_zero():
        return math.inf
    return D.equation.shift(p.as_dict()).min_degree()


class _JetEngine:
    """Incremental jet expansion: coefficients of s(jet) and the ambient constraints."""

    def __init__(self, D: DivisorRep, p: RationalPoint):
        _check_point(D, p)
        self.D, self.p = D, p
        self.h = D.ambient.ideal.generators[0] if D.kind == "hypersurface" else None

    def coefficient(self, n: int) -> tuple[Polynomial, GroebnerContext | None]:
        jp = JetPoint(self.p, n)
        s = jp.expand(self.D.equation).coefficient(n)
        if self.h is None:
            return s, None
        hj = jp.expand(self.h)
        constraints = groebner_basis(Ideal(jp.coeff_ring, list(hj.coeffs)))
        return s, constraints

    def vanishes(self, n: int) -> tuple[bool, Polynomial]:
        s, G = self.coefficient(n)
        if G is not None:
            s = G.normal_form(s)
        return s.is_zero(), s


def jet_vanishing_test(D: DivisorRep, p: RationalPoint, n: int) -> bool:
    """True iff the t^0..t^n coefficients of s along the symbolic jet vanish."""
    eng = _JetEngine(D, p)
    return all(eng.vanishes(k)[0] for k in range(n + 1))


def multiplicity_via_jets(D: DivisorRep, p: RationalPoint, cap: int = DEFAULT_CAP
                          ) -> MultiplicityResult:
    """The smallest n whose jet test fails, or ``>= cap`` if none below cap fails."""
    eng = _JetEngine(D, p)
    for n in range(cap):
        ok, coeff = eng.vanishes(n)
        if not ok:
            return MultiplicityResult(n, False, coeff)
    return MultiplicityResult(cap, True, None)


def random_instance(rng, max_vars: int = 3, max_degree: int = 6, max_mult: int = 5,
                    bound: int = 2) -> tuple[DivisorRep, RationalPoint]:
    """A random (s, p) on affine space whose multiplicity at p is at most ``max_mult``.

    s is built in coordinates centred at p from monomials of degree between
    k = mult and ``max_degree``, with at least one monomial of degree exactly k.
    """
    nv = rng.randint(1, max_vars)
    R = PolyRing(["x", "y", "z"][:nv])
    p = [rng.randint(-bound, bound) for _ in range(nv)]
    k = rng.randint(0, max_mult)

    def monomial(deg):
        e = [0] * nv
        for _ in range(deg):
            e[rng.randrange(nv)] += 1
        return tuple(e)

    terms = {monomial(k): rng.choice([c for c in range(-5, 6) if c])}
    for _ in range(rng.randint(0, 5)):
        e = monomial(rng.randint(k, max_degree))
        terms[e] = terms.get(e, 0) + rng.randint(-5, 5)
    if not any(terms[e] for e in terms if sum(e) == k):
        terms[monomial(k)] = 1
    centred = R.from_dict({e: c for e, c in terms.items() if c})
    s = centred.shift({v: -c for v, c in zip(R.variables, p)})
    return DivisorRep(s, R), RationalPoint(R, p)
