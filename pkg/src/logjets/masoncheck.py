"""Polynomial abc machinery over Q.

Conductor, the Mason-Stothers inequality and its multiplicity corollary,
the pullback bound for punctured lines, and the gluing of the differential
log form on projective space.  Everything here is characteristic 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, UnsupportedError
from .polycore import (Polynomial, PolyRing, rational_roots, root_multiplicity,
                       squarefree_decomposition, squarefree_part, univariate_divmod,
                       univariate_gcd)
from .report import CheckReport

__all__ = [
    "ConductorReport",
    "conductor",
    "check_mason",
    "check_mason_corollary",
    "PuncturedLineMorphism",
    "pullback_order_bound",
    "verify_projective_gluing",
    "random_polynomial",
    "random_coprime_pair",
]


def _univariate(*polys: Polynomial) -> PolyRing:
    R = polys[0].ring
    for p in polys:
        if p.ring != R:
            raise PreconditionError("polynomials live in different rings")
    if R.characteristic:
        raise UnsupportedError(
            "abc inequalities fail in positive characteristic; only characteristic 0 is supported")
    used = set()
    for p in polys:
        used |= set(p.used_variables())
    if len(used) > 1:
        raise PreconditionError(f"expected univariate input, got variables {sorted(used)}")
    return R


def _deg(p: Polynomial) -> int:
    return p.total_degree()


def _coprime(a: Polynomial, b: Polynomial) -> bool:
    return univariate_gcd(a, b).is_constant() and not (a.is_zero() and b.is_zero())


@dataclass
class ConductorReport:
    input: Polynomial
    conductor: int
    squarefree_part: Polynomial

    def __str__(self):
        return f"N({self.input}) = {self.conductor}"


def conductor(f: Polynomial) -> ConductorReport:
    """Number of distinct complex roots: deg f - deg gcd(f, f')."""
    _univariate(f)
    if f.is_zero():
        raise PreconditionError("the zero polynomial has no conductor")
    sf = squarefree_part(f)
    return ConductorReport(f, _deg(sf), sf)


def check_mason(f: Polynomial, g: Polynomial, h: Polynomial) -> CheckReport:
    """max deg(f, g, h) <= N(fgh) - 1 for coprime f + g + h = 0."""
    _univariate(f, g, h)
    if not (f + g + h).is_zero():
        raise PreconditionError("f + g + h is not zero")
    for a, b, name in ((f, g, "f, g"), (f, h, "f, h"), (g, h, "g, h")):
        if not _coprime(a, b):
            raise PreconditionError(f"{name} are not coprime")
    if all(p.is_constant() for p in (f, g, h)):
        raise PreconditionError("all three polynomials are constant")
    lhs = max(_deg(f), _deg(g), _deg(h))
    rhs = conductor(f * g * h).conductor - 1
    rep = CheckReport(f"mason {f} | {g} | {h}")
    rep.add("max deg <= N(fgh) - 1", lhs <= rhs, f"{lhs} <= {rhs}")
    return rep


def _taylor_agreement(a: Polynomial, b: Polynomial, point) -> int:
    """Number of leading Taylor coefficients at ``point`` on which a and b agree."""
    var = (a.used_variables() or b.used_variables() or a.ring.variables)[0]
    sa, sb = a.shift({var: point}), b.shift({var: point})
    top = max(_deg(sa), _deg(sb)) + 1
    k = 0
    while k < top:
        mono = {var: k} if k else {}
        if sa.coefficient(mono) != sb.coefficient(mono):
            return k
        k += 1
    return k if not (sa - sb).is_zero() else top + 1


def check_mason_corollary(f: Polynomial, g: Polynomial, *, subtract: bool = False) -> CheckReport:
    """mult_p(f + g) <= N(fg) at every root p (``subtract`` uses f - g).

    Multiplicities come from the squarefree decomposition; rational roots are
    exhibited individually, irrational ones are covered by the degree-level
    bound.  Each rational root also checks that the Taylor expansions of f and
    -g (resp. g) agree in at most N(fg) terms.
    """
    _univariate(f, g)
    if f.is_constant() and g.is_constant():
        raise PreconditionError("f and g are both constant")
    if not _coprime(f, g):
        raise PreconditionError("f and g are not coprime")
    other = g if subtract else -g
    s = f - other
    N = conductor(f * g).conductor
    op = "-" if subtract else "+"
    rep = CheckReport(f"mason corollary ({f}) {op} ({g})")
    if s.is_zero():
        raise PreconditionError("f and g cancel identically")
    parts = squarefree_decomposition(s)
    top = len(parts)
    rep.add("max mult over all roots <= N(fg)", top <= N, f"{top} <= {N}")
    best = 0
    rep.multiplicities = {}
    for mult, a in enumerate(parts, start=1):
        for r in rational_roots(a) if not a.is_constant() else []:
            best = max(best, mult)
            rep.multiplicities[r] = mult
            agree = _taylor_agreement(f, other, r)
            rep.add(f"mult at {r} <= N(fg)", mult <= N, f"{mult} <= {N}")
            rep.add(f"taylor agreement at {r}", agree == mult and agree <= N,
                    f"{agree} terms <= {N}")
    rep.max_rational_multiplicity = best
    rep.conductor = N
    return rep


# ---------------------------------------------------------------------------
# punctured lines

class PuncturedLineMorphism:
    """j: A^1 minus finitely many points -> A^k, given by polynomial images.

    The removed set is given by rational points, by a locus polynomial, or
    both; ``removal`` is the monic squarefree polynomial vanishing exactly there.
    """

    def __init__(self, ring: PolyRing, images: dict, removed_points: Sequence = (),
                 locus: Polynomial | None = None, units: Sequence = ()):
        if ring.nvars != 1:
            raise PreconditionError("a punctured line has one coordinate")
        if ring.characteristic:
            raise UnsupportedError("punctured lines are handled in characteristic 0 only")
        self.ring = ring
        self.z = ring.gens()[0]
        self.images = {k: ring(v) if isinstance(v, str) else v for k, v in images.items()}
        self.removed_points = [Fraction(p) for p in removed_points]
        rem = ring.one()
        for p in self.removed_points:
            rem = rem * (self.z - p)
        if locus is not None:
            if locus.is_zero():
                raise PreconditionError("the locus polynomial is zero")
            rem = rem * locus
        self.removal = squarefree_part(rem) if not rem.is_constant() else ring.one()
        self.units = list(units)

    @property
    def removed_count(self) -> int:
        return _deg(self.removal)

    def pullback(self, f: Polynomial) -> Polynomial:
        return f.compose(self.images, self.ring)

    def unit_obstruction(self, u: Polynomial) -> Polynomial | None:
        """None if j#(u) is a unit on the punctured line, else the offending factor."""
        p = self.pullback(u)
        if p.is_zero():
            return self.ring.zero()
        if p.is_constant():
            return None
        sf = squarefree_part(p)
        r = univariate_divmod(self.removal, sf)[1]
        if r.is_zero():
            return None
        return univariate_divmod(sf, univariate_gcd(sf, self.removal))[0]


def pullback_order_bound(alpha: Polynomial, f: Polynomial, g: Polynomial,
                         j: PuncturedLineMorphism) -> CheckReport:
    """Either j(C) lies in D = (f + g) or ord_p j*(D) <= N at every p in C."""
    if not (alpha.ring == f.ring == g.ring):
        raise PreconditionError("alpha, f and g must share a ring")
    for u in j.units or [f, g]:
        bad = j.unit_obstruction(u)
        if bad is not None:
            roots = rational_roots(bad) if not bad.is_zero() else []
            where = f" (root {roots[0]})" if roots else ""
            raise PreconditionError(
                f"{u} does not pull back to a unit: {bad} vanishes off the removed points{where}")
    bad = j.unit_obstruction(alpha)
    if bad is not None:
        raise PreconditionError(f"j does not land in the locus where {alpha} is invertible")
    N = j.removed_count
    D = j.pullback(f + g)
    rep = CheckReport(f"pullback bound for {f + g} (N = {N})")
    rep.multiplicities = {}
    if D.is_zero():
        rep.add("j(C) contained in D", True, "containment branch")
        rep.contained = True
        return rep
    rep.contained = False
    # drop the factors supported on the removed points
    rest = D
    while not rest.is_constant():
        h = univariate_gcd(rest, j.removal)
        if h.is_constant():
            break
        rest = univariate_divmod(rest, h)[0]
    top = len(squarefree_decomposition(rest)) if not rest.is_constant() else 0
    rep.add("max order over C <= N", top <= N, f"{top} <= {N}")
    if not rest.is_constant():
        for r in rational_roots(rest):
            k = root_multiplicity(D, r)
            rep.multiplicities[r] = k
            rep.add(f"ord at {r} <= N", k <= N, f"{k} <= {N}")
    return rep


# ---------------------------------------------------------------------------
# gluing on projective space

def _chart_overlap(f: Polynomial, i: int, j: int, corrupt_chart):
    """omega_i - omega_j on the overlap of charts i and j, reduced in the localized HS."""
    from .hschmidt import build_hs, log_partial
    from .logmonoid import LogAlgebraPresentation

    X = f.ring.variables
    n = len(X) - 1
    m = f.total_degree()
    w = f.ring.fresh_names("w", 1, avoid=X)[0]
    names = [x for k, x in enumerate(X) if k != i] + [w]
    R = PolyRing(names, "grevlex", 0)
    # y_k = x_k / x_i in chart i; w = x_i / x_j
    y = {x: (R.one() if k == i else R.var(x)) for k, x in enumerate(X)}
    W = R.var(w)
    f_i = f.compose(y, R)
    f_j = f_i * W ** m
    last_i = y[X[n]]
    last_j = y[X[n]] * W

    log, weights = {}, {}

    def add(name, poly, coeff):
        if poly.is_constant():
            return
        log[name] = poly
        weights[name] = weights.get(name, 0) + coeff

    drop_i = corrupt_chart == i
    drop_j = corrupt_chart == j
    add("f_i", f_i, 1)
    add("f_j", f_j, -1)
    if not drop_i:
        add("t_i", last_i, -m)
    if not drop_j:
        add("t_j", last_j, m)
    L = LogAlgebraPresentation.build(names, [y[X[j]] * W - 1], log)
    H = build_hs(L, 1)
    loc = H.loc_embed
    diff = loc.ring.zero()
    for name, c in weights.items():
        if c:
            diff = diff + log_partial(name, 1, H) * c
    return loc.normal_form(diff)


def verify_projective_gluing(f: Polynomial, *, corrupt_chart: int | None = None,
                             report: bool = False):
    """Check omega_i = omega_j on every overlap of the standard charts of P^n.

    On chart i, omega_i = dlog f(x / x_i) - m dlog(x_n / x_i), with log
    structure generated by x_n / x_i and f.  ``corrupt_chart`` drops the
    second term on that chart (a negative control).
    """
    if f.is_zero() or not f.is_homogeneous():
        raise PreconditionError("f must be a nonzero homogeneous polynomial")
    if f.total_degree() <= 0:
        raise PreconditionError("f must have positive degree")
    n = f.ring.nvars - 1
    if n < 1:
        raise PreconditionError("projective space needs at least two coordinates")
    rep = CheckReport(f"projective gluing for {f}")
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            r = _chart_overlap(f, i, j, corrupt_chart)
            rep.add(f"omega_{i} - omega_{j} on U_{i}U_{j}", r.is_zero(),
                    "0" if r.is_zero() else str(r))
    return rep if report else rep.ok


# ---------------------------------------------------------------------------
# random inputs

def random_polynomial(ring: PolyRing, rng: random.Random, max_degree: int = 8,
                      bound: int = 9) -> Polynomial:
    z = ring.gens()[0]
    d = rng.randint(0, max_degree)
    p = ring.zero()
    for k in range(d + 1):
        p = p + z ** k * rng.randint(-bound, bound)
    if p.is_zero():
        p = ring.one()
    return p


def random_coprime_pair(ring: PolyRing, rng: random.Random, max_degree: int = 8
                        ) -> tuple[Polynomial, Polynomial]:
    """A coprime pair, not both constant, that does not cancel."""
    while True:
        f = random_polynomial(ring, rng, max_degree)
        g = random_polynomial(ring, rng, max_degree)
        if f.is_constant() and g.is_constant():
            continue
        if (f + g).is_zero():
            continue
        if _coprime(f, g):
            return f, g
