"""Commutative monoid presentations, amalgamated sums and log structures.

A finitely presented commutative monoid <e_1..e_r | l_j = r_j> is decided
through its binomial ideal: e^a = e^b holds iff x^a - x^b lies in the ideal
generated by the x^l_j - x^r_j.  Group presentations are Z^r modulo the
relation lattice and are decided with the Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .errors import PreconditionError, UnsupportedError
from .groebner import (GroebnerContext, Ideal, LocalizedContext, groebner_basis,
                       ideal_equal, localize, saturate, unit_inverse)
from .polycore import Polynomial, PolyRing

__all__ = [
    "smith_normal_form",
    "lattice_contains",
    "integer_left_kernel",
    "MonoidPresentation",
    "MonoidMorphism",
    "MultiplicativeMonoid",
    "AmalgamatedSum",
    "amalgamated_sum",
    "group_of_units",
    "PreLogStructure",
    "LogStructure",
    "LogElement",
    "associated_log",
    "LogAlgebraPresentation",
    "LogMorphismReport",
    "check_log_square",
    "check_log_morphism",
    "localize_log_algebra",
]


# ---------------------------------------------------------------------------
# integer linear algebra

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None):
    """Return (D, U, V) with U*A*V = D diagonal, d_1 | d_2 | ..., d_i >= 0.

    U and V are unimodular.  ``ncols`` is needed only when A has no rows.
    """
    D = [list(map(int, row)) for row in A]
    m = len(D)
    n = len(D[0]) if m else (ncols or 0)
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (D, U):
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                cands = ([(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
                         + [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]])
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return D, U, V


def _diag(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def lattice_contains(rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Is ``v`` an integer combination of ``rows``?"""
    v = list(v)
    if not rows:
        return not any(v)
    D, U, V = smith_normal_form(rows)
    w = [sum(v[i] * V[i][j] for i in range(len(v))) for j in range(len(v))]
    d = _diag(D)
    for j, wj in enumerate(w):
        dj = d[j] if j < len(d) else 0
        if dj == 0:
            if wj:
                return False
        elif wj % dj:
            return False
    return True


def integer_left_kernel(A: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """A basis of {x in Z^m : x A = 0}."""
    if not A:
        return []
    D, U, V = smith_normal_form(A, ncols)
    rank = sum(1 for d in _diag(D) if d)
    return [U[i] for i in range(rank, len(A))]


# ---------------------------------------------------------------------------
# monoid presentations

def _vec(x, n):
    x = tuple(int(a) for a in x)
    if len(x) != n:
        raise ValueError(f"expected a vector of length {n}, got {x}")
    return x


class MonoidPresentation:
    """<generators | relations>, commutative, written additively.

    ``relations`` is a sequence of (lhs, rhs) exponent vectors.  With
    ``is_group=True`` the presentation describes the abelian group Z^r / L,
    vectors may have negative entries, and every element is a unit.
    """

    def __init__(self, generators: Sequence[str], relations=(), is_group: bool = False):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate monoid generator names")
        self.n = len(self.generators)
        self.is_group = is_group
        rels = []
        for lhs, rhs in relations:
            lhs, rhs = self.vector(lhs), self.vector(rhs)
            if not is_group and (min(lhs, default=0) < 0 or min(rhs, default=0) < 0):
                raise ValueError("monoid relations need nonnegative exponents")
            rels.append((lhs, rhs))
        self.relations = tuple(rels)

    # elements ----------------------------------------------------------------
    def vector(self, x) -> tuple[int, ...]:
        if isinstance(x, Mapping):
            v = [0] * self.n
            for name, k in x.items():
                v[self.generators.index(name)] += int(k)
            return tuple(v)
        return _vec(x, self.n)

    def zero(self):
        return (0,) * self.n

    def basis(self, i: int):
        return tuple(int(j == i) for j in range(self.n))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(self.vector(a), self.vector(b)))

    def combine(self, images: Sequence, coeffs: Sequence[int]):
        """sum_i coeffs[i] * images[i]; negative coefficients need unit images."""
        out = self.zero()
        for img, c in zip(images, coeffs):
            if c == 0:
                continue
            img = self.vector(img)
            if c < 0:
                img, c = self.negate(img), -c
            out = tuple(a + c * b for a, b in zip(out, img))
        return out

    def negate(self, a):
        a = self.vector(a)
        if self.is_group:
            return tuple(-x for x in a)
        return self.unit_inverse(a)

    def contains(self, a) -> bool:
        """Is ``a`` a legal element vector (nonnegative for monoids)?"""
        a = self.vector(a)
        return self.is_group or min(a, default=0) >= 0

    # word problem ----------------------------------------------------------
    @cached_property
    def lattice(self) -> list[list[int]]:
        return [[l - r for l, r in zip(lhs, rhs)] for lhs, rhs in self.relations]

    @cached_property
    def _binomial_ring(self) -> PolyRing:
        return PolyRing([f"g{i}" for i in range(self.n)])

    def _monomial(self, a) -> Polynomial:
        return self._binomial_ring.from_dict({tuple(a): 1})

    @cached_property
    def binomial_ideal(self) -> GroebnerContext:
        R = self._binomial_ring
        gens = [self._monomial(l) - self._monomial(r) for l, r in self.relations]
        return groebner_basis(Ideal(R, gens))

    def equal(self, a, b) -> bool:
        a, b = self.vector(a), self.vector(b)
        if self.is_group:
            return lattice_contains(self.lattice, [x - y for x, y in zip(a, b)]) \
                if self.lattice else a == b
        if not self.contains(a) or not self.contains(b):
            raise ValueError("monoid elements must have nonnegative coordinates")
        return self.binomial_ideal.contains(self._monomial(a) - self._monomial(b))

    @cached_property
    def _integral(self) -> bool:
        if self.is_group or not self.relations:
            return True
        R = self._binomial_ring
        prod = R.one()
        for g in R.gens():
            prod = prod * g
        return ideal_equal(self.binomial_ideal, saturate(self.binomial_ideal, prod))

    def is_integral(self) -> bool:
        """Cancellativity: the binomial ideal equals its saturation by x_1...x_r."""
        return self._integral

    @cached_property
    def _unit_gens(self) -> tuple[bool, ...]:
        if self.is_group:
            return (True,) * self.n
        G = self.binomial_ideal
        # e_i is a unit iff x_i is invertible in the monoid algebra (graded argument)
        return tuple(G.generates_unit_with(g) for g in self._binomial_ring.gens())

    def unit_generators(self) -> list[int]:
        return [i for i, u in enumerate(self._unit_gens) if u]

    def is_unit(self, a) -> bool:
        a = self.vector(a)
        if self.is_group:
            return True
        return all(self._unit_gens[i] for i, k in enumerate(a) if k)

    def unit_inverse(self, a):
        """A nonnegative representative of -a, for a unit ``a``."""
        a = self.vector(a)
        if self.is_group:
            return tuple(-x for x in a)
        if not self.is_unit(a):
            raise PreconditionError(f"{self.format(a)} is not a unit")
        inv = unit_inverse(self.binomial_ideal, self._monomial(a))
        if len(inv) != 1:
            raise PreconditionError("inverse of a unit is not a monomial")
        (e, c), = inv.items()
        return tuple(e)

    def as_monoid(self) -> "MonoidPresentation":
        """A monoid presentation of a group: add one inverse generator per generator."""
        if not self.is_group:
            return self
        names = list(self.generators) + [f"{g}_inv" for g in self.generators]
        rels = [(self.to_monoid_vector(l), self.to_monoid_vector(r)) for l, r in self.relations]
        for i in range(self.n):
            v = [0] * (2 * self.n)
            v[i] = v[self.n + i] = 1
            rels.append((tuple(v), (0,) * (2 * self.n)))
        return MonoidPresentation(names, rels)

    def to_monoid_vector(self, a):
        """Split a group vector into positive parts and inverse-generator parts."""
        a = self.vector(a)
        return tuple(max(x, 0) for x in a) + tuple(max(-x, 0) for x in a)

    def invariants(self) -> tuple[int, list[int]]:
        """(free rank, torsion coefficients) of the group completion Z^r / L."""
        if not self.lattice:
            return self.n, []
        D, _, _ = smith_normal_form(self.lattice)
        d = [x for x in _diag(D) if x]
        return self.n - len(d), [x for x in d if x > 1]

    # printing ----------------------------------------------------------------
    def format(self, a) -> str:
        a = self.vector(a)
        parts = []
        for name, k in zip(self.generators, a):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{k} {name}")
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        kind = "group" if self.is_group else "monoid"
        rels = "; ".join(f"{self.format(l)} = {self.format(r)}" for l, r in self.relations)
        return f"{kind} <{', '.join(self.generators)}" + (f" | {rels}>" if rels else ">")

    __repr__ = __str__


class MultiplicativeMonoid:
    """The multiplicative monoid of a quotient ring, with alpha the identity."""

    is_group = False

    def __init__(self, ring: GroebnerContext):
        self.ring = ring

    def zero(self):
        return self.ring.ring.one()

    def vector(self, x):
        return self.ring._own(x)

    def combine(self, images, coeffs):
        out = self.ring.ring.one()
        for img, c in zip(images, coeffs):
            img = self.ring._own(img)
            if c < 0:
                img, c = unit_inverse(self.ring, img), -c
            out = out * img ** c
        return self.ring.normal_form(out)

    def equal(self, a, b) -> bool:
        return self.ring.equal(a, b)

    def is_unit(self, a) -> bool:
        return self.ring.generates_unit_with(a)

    def alpha_of(self, a) -> Polynomial:
        return self.ring._own(a)

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"MultiplicativeMonoid({self.ring.ring!r})"


class MonoidMorphism:
    """A morphism given by the images of the source generators."""

    def __init__(self, source: MonoidPresentation, target, images: Sequence):
        if len(images) != source.n:
            raise ValueError("one image per source generator is required")
        self.source = source
        self.target = target
        self.images = tuple(target.vector(x) for x in images)

    def __call__(self, a):
        return self.target.combine(self.images, self.source.vector(a))

    def check(self) -> tuple[bool, str | None]:
        """Well-definedness: relations map to equal elements; groups map to units."""
        if self.source.is_group:
            for name, img in zip(self.source.generators, self.images):
                if not self.target.is_unit(img):
                    return False, f"image of group generator {name} is not a unit"
        for lhs, rhs in self.source.relations:
            if not self.target.equal(self(lhs), self(rhs)):
                return False, (f"relation {self.source.format(lhs)} = "
                               f"{self.source.format(rhs)} is not respected")
        return True, None

    def compose(self, inner: "MonoidMorphism") -> "MonoidMorphism":
        """self o inner."""
        return MonoidMorphism(inner.source, self.target, [self(x) for x in inner.images])

    def agrees_with(self, other: "MonoidMorphism") -> bool:
        return all(self.target.equal(a, b) for a, b in zip(self.images, other.images))

    @classmethod
    def identity(cls, M: MonoidPresentation) -> "MonoidMorphism":
        return cls(M, M, [M.basis(i) for i in range(M.n)])


# ---------------------------------------------------------------------------
# amalgamated sums

class AmalgamatedSum(MonoidPresentation):
    """Q1 (+)_P Q2 together with its structure maps v1, v2."""

    def __init__(self, generators, relations, is_group, P, Q1, Q2, u1, u2, embed1, embed2):
        super().__init__(generators, relations, is_group)
        self.P, self.Q1, self.Q2, self.u1, self.u2 = P, Q1, Q2, u1, u2
        self._embed1, self._embed2 = embed1, embed2
        self.v1 = MonoidMorphism(Q1, self, [embed1(Q1.basis(i)) for i in range(Q1.n)])
        self.v2 = MonoidMorphism(Q2, self, [embed2(Q2.basis(i)) for i in range(Q2.n)])

    def factor(self, w1: MonoidMorphism, w2: MonoidMorphism) -> MonoidMorphism:
        """The unique h with h o v1 = w1 and h o v2 = w2 (needs w1 u1 = w2 u2)."""
        T = w1.target
        for i in range(self.P.n):
            p = self.P.basis(i)
            if not T.equal(w1(self.u1(p)), w2(self.u2(p))):
                raise PreconditionError(
                    f"cone does not commute on generator {self.P.generators[i]}")
        images = list(w1.images)
        if self.Q1.is_group and not self.is_group:
            images += [T.negate(x) if hasattr(T, "negate") else T.combine([x], [-1])
                       for x in w1.images]
        images += list(w2.images)
        if self.Q2.is_group and not self.is_group:
            images += [T.negate(x) if hasattr(T, "negate") else T.combine([x], [-1])
                       for x in w2.images]
        h = MonoidMorphism(self, T, images)
        ok, why = h.check()
        if not ok:
            raise PreconditionError(f"factoring map is not well defined: {why}")
        return h


def amalgamated_sum(P: MonoidPresentation, Q1: MonoidPresentation, Q2: MonoidPresentation,
                    u1: MonoidMorphism, u2: MonoidMorphism) -> AmalgamatedSum:
    """Pushout of Q1 <- P -> Q2.  Requires P or Q2 to be a group."""
    if not (P.is_group or Q2.is_group):
        raise PreconditionError("amalgamated sums are built only when P or Q2 is a group")
    for u, Q in ((u1, Q1), (u2, Q2)):
        if u.source is not P and u.source.generators != P.generators:
            raise PreconditionError("structure maps must start at P")
        ok, why = u.check()
        if not ok:
            raise PreconditionError(f"structure map not well defined: {why}")
    as_group = Q1.is_group and Q2.is_group
    names1 = list(Q1.generators)
    names2 = [g if g not in names1 else f"{g}_2" for g in Q2.generators]
    M1 = Q1 if as_group else Q1.as_monoid()
    M2 = Q2 if as_group else Q2.as_monoid()
    if M1 is not Q1:
        names1 += [f"{g}_inv" for g in names1]
    if M2 is not Q2:
        names2 += [f"{g}_inv" for g in names2]
    n1, n2 = M1.n, M2.n

    def lift1(a):
        a = Q1.vector(a)
        a = a if (as_group or not Q1.is_group) else Q1.to_monoid_vector(a)
        return tuple(a) + (0,) * n2

    def lift2(a):
        a = Q2.vector(a)
        a = a if (as_group or not Q2.is_group) else Q2.to_monoid_vector(a)
        return (0,) * n1 + tuple(a)

    rels = [(tuple(l) + (0,) * n2, tuple(r) + (0,) * n2) for l, r in M1.relations]
    rels += [((0,) * n1 + tuple(l), (0,) * n1 + tuple(r)) for l, r in M2.relations]
    for i in range(P.n):
        p = P.basis(i)
        lhs, rhs = lift1(u1(p)), lift2(u2(p))
        if lhs != rhs:
            rels.append((lhs, rhs))
    return AmalgamatedSum(names1 + names2, rels, as_group, P, Q1, Q2, u1, u2, lift1, lift2)


def group_of_units(M: MonoidPresentation) -> MonoidPresentation:
    """The unit group M* as a group presentation on the unit generators.

    Requires M integral; then M* is the image of Z^U in Z^r / L, i.e.
    Z^U / (L meet Z^U).
    """
    if M.is_group:
        return M
    if not M.is_integral():
        raise UnsupportedError("unit groups are computed for integral (fine) presentations only")
    U = M.unit_generators()
    others = [j for j in range(M.n) if j not in U]
    L = M.lattice
    if L:
        K = integer_left_kernel([[row[j] for j in others] for row in L], len(others)) \
            if others else _identity(len(L))
        sub = [[sum(k[i] * L[i][j] for i in range(len(L))) for j in U] for k in K]
    else:
        sub = []
    sub = [row for row in sub if any(row)]
    names = [M.generators[j] for j in U]
    return MonoidPresentation(names, [(row, [0] * len(U)) for row in sub], is_group=True)


# ---------------------------------------------------------------------------
# pre-log and log structures

def _ring_of(ctx):
    return ctx.extended if isinstance(ctx, LocalizedContext) else ctx


class PreLogStructure:
    """alpha: M -> (R/I, *) given on generators by polynomials."""

    def __init__(self, monoid: MonoidPresentation, ring, alpha: Sequence):
        self.monoid = monoid
        self.ring = ring
        G = _ring_of(ring)
        self.quotient = G
        if len(alpha) != monoid.n:
            raise ValueError("one alpha image per monoid generator is required")
        self.alpha = tuple(G._own(a) if not isinstance(ring, LocalizedContext)
                           else ring.lift(a) for a in alpha)
        for lhs, rhs in monoid.relations:
            if not G.equal(self.alpha_of(lhs), self.alpha_of(rhs)):
                raise PreconditionError(
                    f"alpha does not respect {monoid.format(lhs)} = {monoid.format(rhs)}")
        if monoid.is_group:
            for name, a in zip(monoid.generators, self.alpha):
                if not G.generates_unit_with(a):
                    raise PreconditionError(f"alpha({name}) must be a unit for a group")

    def alpha_of(self, v) -> Polynomial:
        v = self.monoid.vector(v)
        G = self.quotient
        out = G.ring.one()
        for a, k in zip(self.alpha, v):
            if k > 0:
                out = out * a ** k
            elif k < 0:
                out = out * unit_inverse(G, a) ** (-k)
        return out

    # MonoidMorphism target protocol
    def vector(self, x):
        return self.monoid.vector(x)

    def combine(self, images, coeffs):
        return self.monoid.combine(images, coeffs)

    def equal(self, a, b):
        return self.monoid.equal(a, b)

    def is_unit(self, a):
        return self.monoid.is_unit(a)

    def zero(self):
        return self.monoid.zero()

    def format(self, a):
        return self.monoid.format(a)

    @classmethod
    def trivial(cls, ring) -> "PreLogStructure":
        return cls(MonoidPresentation([]), ring, [])

    def __repr__(self):
        al = ", ".join(f"{g} -> {a}" for g, a in zip(self.monoid.generators, self.alpha))
        return f"PreLogStructure({self.monoid}; {al})"


@dataclass(frozen=True)
class LogElement:
    """An element (m, u) of M (+)_{alpha^-1(A*)} A*: a monoid vector and a unit."""

    vector: tuple
    unit: Polynomial


class LogStructure:
    """The log structure associated to a pre-log structure.

    Elements are pairs (m, u) with u a unit of the ring.  Two pairs are
    identified when alpha(m) u = alpha(m') u' in the ring; this is the
    correct equality when alpha is injective into an integral domain,
    which is a declared (not verified) hypothesis.
    """

    def __init__(self, pre: PreLogStructure):
        G = pre.quotient
        for name, a in zip(pre.monoid.generators, pre.alpha):
            if G.contains(a):
                raise PreconditionError(f"alpha({name}) is zero modulo the ideal")
        self.pre = pre
        self.ring = G
        self.unit_face = tuple(i for i, a in enumerate(pre.alpha) if G.generates_unit_with(a))

    def element(self, v=None, unit=1, *, check: bool = True) -> LogElement:
        v = self.pre.monoid.vector(v) if v is not None else self.pre.monoid.zero()
        u = self.ring._own(unit)
        if check and not self.ring.generates_unit_with(u):
            raise PreconditionError(f"{u} is not a unit of the ring")
        return LogElement(v, u)

    def alpha(self, a: LogElement) -> Polynomial:
        return self.ring.normal_form(self.pre.alpha_of(a.vector) * a.unit)

    def add(self, a: LogElement, b: LogElement) -> LogElement:
        return LogElement(self.pre.monoid.add(a.vector, b.vector), a.unit * b.unit)

    def equal(self, a: LogElement, b: LogElement) -> bool:
        return self.ring.equal(self.pre.alpha_of(a.vector) * a.unit,
                               self.pre.alpha_of(b.vector) * b.unit)

    def is_unit(self, a: LogElement) -> bool:
        return self.ring.generates_unit_with(self.alpha(a))


def associated_log(pre: PreLogStructure) -> LogStructure:
    return LogStructure(pre)


# ---------------------------------------------------------------------------
# log algebras

@dataclass
class LogMorphismReport:
    ok: bool
    failures: list = field(default_factory=list)

    @property
    def witness(self):
        return self.failures[0] if self.failures else None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "log morphism: square commutes on all generators"
        return "log morphism: FAILED\n" + "\n".join(f"  {f}" for f in self.failures)


class LogAlgebraPresentation:
    """B = k[x]/I with a pre-log structure, optionally relative to a base A.

    ``ring_map`` sends base ring variables to polynomials of B (default:
    same-named variables); ``monoid_map`` gives, per base log generator, a
    vector in B's monoid.  ``structure`` is ``"strict"`` (the log monoid is
    taken exactly as presented) or ``"submonoid"`` (M is the submonoid of
    B generated by the alpha images; B integral and alpha injective are
    declared hypotheses).
    """

    STRUCTURES = ("strict", "submonoid")

    def __init__(self, ring: GroebnerContext, log: PreLogStructure | None = None,
                 base: "LogAlgebraPresentation | None" = None,
                 ring_map: Mapping[str, Polynomial] | None = None,
                 monoid_map: Sequence | None = None, structure: str = "strict",
                 name: str | None = None):
        if structure not in self.STRUCTURES:
            raise ValueError(f"structure must be one of {self.STRUCTURES}")
        self.ring = ring
        self.log = log if log is not None else PreLogStructure.trivial(ring)
        self.base = base
        self.structure = structure
        self.name = name
        if base is not None:
            R = ring.ring
            rmap = {}
            for v in base.ring.ring.variables:
                if ring_map and v in ring_map:
                    img = ring_map[v]
                    rmap[v] = R(img) if isinstance(img, str) else img
                else:
                    rmap[v] = R.var(v)
            self.ring_map = rmap
            mm = list(monoid_map) if monoid_map is not None else \
                [self.log.monoid.zero()] * base.log.monoid.n
            self.monoid_map = MonoidMorphism(base.log.monoid, self.log.monoid, mm)
        else:
            self.ring_map = {}
            self.monoid_map = None
        for name_, a in zip(self.log.monoid.generators, self.log.alpha):
            if ring.contains(a):
                raise PreconditionError(f"alpha({name_}) is zero modulo the ideal")

    @classmethod
    def build(cls, variables, ideal=(), log: Mapping[str, str] | Sequence = (),
              relations=(), characteristic: int = 0, order: str = "grevlex",
              structure: str = "strict", base=None, ring_map=None, monoid_map=None):
        """Convenience constructor from strings."""
        R = PolyRing(variables, order, characteristic)
        G = groebner_basis(Ideal(R, [R(g) if isinstance(g, str) else g for g in ideal]))
        items = list(log.items()) if isinstance(log, Mapping) else list(log)
        M = MonoidPresentation([k for k, _ in items], relations)
        pre = PreLogStructure(M, G, [R(a) if isinstance(a, str) else a for _, a in items])
        return cls(G, pre, base=base, ring_map=ring_map, monoid_map=monoid_map,
                   structure=structure)

    @property
    def poly_ring(self) -> PolyRing:
        return self.ring.ring

    @property
    def log_generators(self) -> tuple[str, ...]:
        return self.log.monoid.generators

    def __repr__(self):
        return (f"LogAlgebraPresentation({self.ring!r}, {self.log!r}, "
                f"structure={self.structure})")


def check_log_square(source: LogAlgebraPresentation, target_ring: GroebnerContext,
                     target_log, ring_map: Mapping[str, Polynomial],
                     log_map: Sequence) -> LogMorphismReport:
    """Check f o alpha_A = alpha_B o f_flat on generators, and well-definedness.

    ``target_log`` is a :class:`PreLogStructure` or a
    :class:`MultiplicativeMonoid`; ``log_map`` lists target elements.
    """
    failures = []
    R = target_ring.ring
    imgs = {v: (R(p) if isinstance(p, str) else p) for v, p in ring_map.items()}
    for g in source.ring.ideal.generators:
        if not target_ring.contains(g.compose(imgs, R)):
            failures.append(f"ring map does not kill {g}")
    fl = MonoidMorphism(source.log.monoid, target_log, log_map)
    ok, why = fl.check()
    if not ok:
        failures.append(f"monoid map: {why}")
    alpha_t = target_log.alpha_of
    for name, a, img in zip(source.log.monoid.generators, source.log.alpha, fl.images):
        lhs = a.compose(imgs, R)
        rhs = alpha_t(img)
        if not target_ring.equal(lhs, rhs):
            failures.append(f"square fails on {name}: f(alpha({name})) = {target_ring.normal_form(lhs)}"
                            f" but alpha(f_flat({name})) = {target_ring.normal_form(rhs)}")
    return LogMorphismReport(not failures, failures)


def check_log_morphism(L: LogAlgebraPresentation) -> LogMorphismReport:
    """The structure morphism A -> B of L commutes with the alpha maps."""
    if L.base is None:
        return LogMorphismReport(True, [])
    return check_log_square(L.base, L.ring, L.log, L.ring_map, L.monoid_map.images)


def localize_log_algebra(L: LogAlgebraPresentation, S: Sequence,
                         names: Sequence[str] | None = None) -> LogAlgebraPresentation:
    """Invert S in the ring; log generators whose alpha is inverted become units.

    Such generators get an inverse generator ``<m>_inv`` with alpha equal to
    the adjoined inverse variable.
    """
    loc = localize(L.ring, S, names=names)
    G = loc.extended
    R = G.ring
    M = L.log.monoid
    gens = list(M.generators)
    rels = [(tuple(l), tuple(r)) for l, r in M.relations]
    alpha = [a.to_ring(R) for a in L.log.alpha]
    extra = []
    for k, (mname, a) in enumerate(zip(M.generators, L.log.alpha)):
        for inv_name, s in zip(loc.inverse_names, loc.inverted):
            if L.ring.equal(a, s):
                extra.append((k, f"{mname}_inv", R.var(inv_name)))
                break
    n = M.n + len(extra)
    rels = [(l + (0,) * len(extra), r + (0,) * len(extra)) for l, r in rels]
    for j, (k, nm, inv) in enumerate(extra):
        gens.append(nm)
        alpha.append(inv)
        v = [0] * n
        v[k] = v[M.n + j] = 1
        rels.append((tuple(v), (0,) * n))
    pre = PreLogStructure(MonoidPresentation(gens, rels), G, alpha)
    mm = None
    if L.base is not None:
        mm = [tuple(v) + (0,) * len(extra) for v in L.monoid_map.images]
    out = LogAlgebraPresentation(
        G, pre, base=L.base,
        ring_map={v: p.to_ring(R) for v, p in L.ring_map.items()},
        monoid_map=mm, structure=L.structure)
    out.localization = loc
    return out
