"""Ideals, reduced Groebner bases, normal forms and localization.

Buchberger's algorithm with the sugar selection strategy and the
Gebauer-Moeller pair criteria.  The output basis is reduced, monic and
sorted by decreasing leading monomial, so printed bases are byte-stable.

Localization at a finite set S adjoins one inverse variable u_k per
s_k together with the relation u_k*s_k - 1 (the Rabinowitsch trick).
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import ContextMismatchError, PreconditionError, ResourceLimitError
from .polycore import Polynomial, PolyRing

__all__ = [
    "Ideal",
    "GroebnerContext",
    "LocalizedContext",
    "groebner_basis",
    "normal_form",
    "ideal_contains",
    "ideal_equal",
    "is_groebner",
    "eliminate",
    "saturate",
    "localize",
    "unit_inverse",
    "map_is_well_defined",
    "factor_through_localization",
]


# ---------------------------------------------------------------------------
# raw dict-level routines; a polynomial is {exponent tuple: coefficient}

def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _disjoint(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _lead(p, key):
    return max(p, key=key)


def _neg(k):
    return tuple(-v for v in k)


def _reduce(p: dict, basis: Sequence, key, full: bool = True) -> dict:
    """Remainder of ``p`` on division by ``basis`` (list of (lm, lc, dict)).

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    p = dict(p)
    rem = {}
    heap = [(_neg(key(e)), e) for e in p]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = p.get(m)
        if c is None:
            continue
        for gm, gc, g in basis:
            if _divides(gm, m):
                q = _sub(m, gm)
                f = c / gc
                for e, a in g.items():
                    e2 = _add(e, q)
                    v = p.get(e2)
                    if v is None:
                        p[e2] = -f * a
                        heapq.heappush(heap, (_neg(key(e2)), e2))
                    else:
                        v = v - f * a
                        if v:
                            p[e2] = v
                        else:
                            del p[e2]
                break
        else:
            del p[m]
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _spoly(f, fm, fc, g, gm, gc):
    l = _lcm(fm, gm)
    qf, qg = _sub(l, fm), _sub(l, gm)
    out = {}
    for e, a in f.items():
        out[_add(e, qf)] = a / fc
    for e, a in g.items():
        e2 = _add(e, qg)
        v = out.get(e2)
        if v is None:
            out[e2] = -a / gc
        else:
            v = v - a / gc
            if v:
                out[e2] = v
            else:
                del out[e2]
    return out


def _buchberger(gens: list, key, max_pairs=None) -> list:
    """Reduced monic Groebner basis of the raw polynomials ``gens``."""
    polys, lms, sugar = [], [], []
    G: list[int] = []
    pairs: dict = {}

    def sig(i, j):
        l = _lcm(lms[i], lms[j])
        s = max(sugar[i] + sum(l) - sum(lms[i]), sugar[j] + sum(l) - sum(lms[j]))
        return (s, key(l), i, j)

    def update(h):
        nonlocal G
        hm = lms[h]
        cand = list(G)
        keep = []
        for idx, g1 in enumerate(cand):
            l1 = _lcm(hm, lms[g1])
            if _disjoint(hm, lms[g1]):
                keep.append(g1)
                continue
            others = cand[idx + 1:] + keep
            if not any(_divides(_lcm(hm, lms[g2]), l1) for g2 in others):
                keep.append(g1)
        new_pairs = [g for g in keep if not _disjoint(hm, lms[g])]
        for (a, b) in list(pairs):
            l = _lcm(lms[a], lms[b])
            if (_divides(hm, l) and _lcm(lms[a], hm) != l and _lcm(lms[b], hm) != l):
                del pairs[(a, b)]
        for g in new_pairs:
            a, b = min(g, h), max(g, h)
            pairs[(a, b)] = sig(a, b)
        G = [g for g in G if not _divides(hm, lms[g])] + [h]

    def add(p, s):
        polys.append(p)
        lms.append(_lead(p, key))
        sugar.append(s)
        update(len(polys) - 1)

    def basis_view():
        return [(lms[g], polys[g][lms[g]], polys[g]) for g in G]

    start = sorted((p for p in gens if p), key=lambda p: key(_lead(p, key)))
    for p in start:
        r = _reduce(p, basis_view(), key)
        if r:
            add(r, max(sum(e) for e in p))
    processed = 0
    while pairs:
        (i, j), sg = min(pairs.items(), key=lambda kv: kv[1])
        del pairs[(i, j)]
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise ResourceLimitError(
                f"Groebner computation exceeded {max_pairs} S-pairs")
        s = _spoly(polys[i], lms[i], polys[i][lms[i]], polys[j], lms[j], polys[j][lms[j]])
        if not s:
            continue
        r = _reduce(s, basis_view(), key)
        if r:
            add(r, sg[0])
    return _interreduce([polys[g] for g in G], key)


def _interreduce(polys: list, key) -> list:
    items = [(_lead(p, key), p) for p in polys if p]
    minimal = []
    for i, (m, p) in enumerate(items):
        if any(_divides(m2, m) and (m2 != m or j < i)
               for j, (m2, _) in enumerate(items) if j != i):
            continue
        minimal.append((m, p))
    out = []
    for i, (m, p) in enumerate(minimal):
        others = [(m2, q[m2], q) for j, (m2, q) in enumerate(minimal) if j != i]
        lc = p[m]
        tail = {e: c for e, c in p.items() if e != m}
        r = _reduce(tail, others, key)
        r[m] = lc
        inv = 1 / lc
        out.append({e: c * inv for e, c in r.items()})
    out.sort(key=lambda p: key(_lead(p, key)), reverse=True)
    return out


# ---------------------------------------------------------------------------
# public objects

class Ideal:
    """A finite generating set of an ideal in a :class:`PolyRing`."""

    def __init__(self, ring: PolyRing, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise ContextMismatchError(f"generator {g} is not in {ring!r}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    def __repr__(self):
        return f"Ideal<{', '.join(map(str, self.generators))}>"

    def __add__(self, other: "Ideal | Iterable") -> "Ideal":
        extra = other.generators if isinstance(other, Ideal) else other
        return Ideal(self.ring, list(self.generators) + list(extra))


class GroebnerContext:
    """A quotient ring R/I together with the reduced Groebner basis of I."""

    def __init__(self, ideal: Ideal, basis: Sequence[Polynomial]):
        self.ideal = ideal
        self.ring = ideal.ring
        self.basis = tuple(basis)
        self.order = self.ring.order
        self._view = [(b.leading_monomial, b.leading_coefficient, b._terms)
                      for b in self.basis]

    def _own(self, f) -> Polynomial:
        if isinstance(f, str):
            return self.ring(f)
        if not isinstance(f, Polynomial):
            return self.ring.constant(f)
        if f.ring != self.ring:
            raise ContextMismatchError(f"{f} is not in {self.ring!r}")
        return f

    def normal_form(self, f) -> Polynomial:
        f = self._own(f)
        return self.ring._make(_reduce(f._terms, self._view, self.ring.key))

    def contains(self, f) -> bool:
        return self.normal_form(f).is_zero()

    def equal(self, f, g) -> bool:
        """Equality of two elements in the quotient ring."""
        return self.contains(self._own(f) - self._own(g))

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def generates_unit_with(self, f) -> bool:
        """True iff 1 lies in I + <f>, i.e. f is a unit in R/I."""
        f = self._own(f)
        return groebner_basis(Ideal(self.ring, self.basis + (f,))).is_unit_ideal()

    def __str__(self):
        return "\n".join(str(b) for b in self.basis) if self.basis else "0"

    def __repr__(self):
        return f"GroebnerContext({self.ring!r}, [{', '.join(map(str, self.basis))}])"


def groebner_basis(ideal: Ideal | PolyRing, generators: Iterable | None = None,
                   *, max_pairs: int | None = None) -> GroebnerContext:
    """Reduced Groebner basis.  Accepts an :class:`Ideal` or (ring, generators)."""
    if isinstance(ideal, PolyRing):
        ideal = Ideal(ideal, generators or ())
    ring = ideal.ring
    raw = _buchberger([g._terms for g in ideal.generators], ring.key, max_pairs)
    return GroebnerContext(ideal, [ring._make(p) for p in raw])


def normal_form(f: Polynomial, G: GroebnerContext) -> Polynomial:
    return G.normal_form(f)


def ideal_contains(f: Polynomial, G: GroebnerContext) -> bool:
    return G.contains(f)


def ideal_equal(G1: GroebnerContext, G2: GroebnerContext) -> bool:
    """Mutual containment of generators.  Rings must agree up to order."""
    if G1.ring.variables != G2.ring.variables or \
            G1.ring.characteristic != G2.ring.characteristic:
        raise ContextMismatchError("ideal_equal needs ideals in the same ring")
    return (all(G2.contains(b.to_ring(G2.ring)) for b in G1.basis)
            and all(G1.contains(b.to_ring(G1.ring)) for b in G2.basis))


def is_groebner(polys: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return True
    key = polys[0].ring.key
    view = [(p.leading_monomial, p.leading_coefficient, p._terms) for p in polys]
    for i in range(len(view)):
        for j in range(i + 1, len(view)):
            fm, fc, f = view[i]
            gm, gc, g = view[j]
            s = _spoly(f, fm, fc, g, gm, gc)
            if s and _reduce(s, view, key):
                return False
    return True


def eliminate(G: GroebnerContext | Ideal, names: Iterable[str],
              *, max_pairs: int | None = None) -> GroebnerContext:
    """Intersect the ideal with the subring not involving ``names``."""
    ideal = G.ideal if isinstance(G, GroebnerContext) else G
    ring = ideal.ring
    drop = [v for v in ring.variables if v in set(names)]
    keep = [v for v in ring.variables if v not in set(names)]
    big = PolyRing(drop + keep, f"elim:{len(drop)}", ring.characteristic)
    gb = groebner_basis(Ideal(big, [g.to_ring(big) for g in ideal.generators]),
                        max_pairs=max_pairs)
    small = PolyRing(keep, ring.order, ring.characteristic)
    kept = [b.to_ring(small) for b in gb.basis
            if not any(v in drop for v in b.used_variables())]
    return groebner_basis(Ideal(small, kept), max_pairs=max_pairs)


def saturate(G: GroebnerContext, s, *, max_pairs: int | None = None) -> GroebnerContext:
    """I : s^infinity, computed as (I + <u*s - 1>) intersected with R."""
    s = G._own(s)
    if s.is_zero():
        raise PreconditionError("cannot saturate by zero")
    (u,) = G.ring.fresh_names("sat", 1)
    big = G.ring.extend([u])
    gens = [g.to_ring(big) for g in G.ideal.generators]
    gens.append(big.var(u) * s.to_ring(big) - 1)
    res = eliminate(Ideal(big, gens), [u], max_pairs=max_pairs)
    return groebner_basis(Ideal(G.ring, [b.to_ring(G.ring) for b in res.basis]))


class LocalizedContext:
    """S^{-1}(R/I) realized as R[u_1..u_m]/(I + <u_k s_k - 1>)."""

    def __init__(self, base: GroebnerContext, inverted: Sequence[Polynomial],
                 inverse_names: Sequence[str], extended: GroebnerContext):
        self.base = base
        self.inverted = tuple(inverted)
        self.inverse_names = tuple(inverse_names)
        self.extended = extended
        self.ring = extended.ring

    def lift(self, f) -> Polynomial:
        """Map an element of the base ring (or already extended) into the extension."""
        if isinstance(f, str):
            return self.ring(f)
        if not isinstance(f, Polynomial):
            return self.ring.constant(f)
        return f if f.ring == self.ring else f.to_ring(self.ring)

    def inverse(self, k: int) -> Polynomial:
        return self.ring.var(self.inverse_names[k])

    def normal_form(self, f) -> Polynomial:
        return self.extended.normal_form(self.lift(f))

    def contains(self, f) -> bool:
        return self.extended.contains(self.lift(f))

    def equal(self, f, g) -> bool:
        return self.contains(self.lift(f) - self.lift(g))

    def is_unit(self, f) -> bool:
        return self.extended.generates_unit_with(self.lift(f))

    def __repr__(self):
        inv = ", ".join(f"{n} = 1/({s})" for n, s in zip(self.inverse_names, self.inverted))
        return f"LocalizedContext({inv}; {self.extended!r})"


def localize(G: GroebnerContext, S: Iterable, *, names: Sequence[str] | None = None,
             stem: str = "inv", max_pairs: int | None = None) -> LocalizedContext:
    """Invert every element of ``S`` in R/I.

    Raises :class:`PreconditionError` if some s is zero in R/I, or if the
    localized ring collapses to zero (some s nilpotent modulo I).
    """
    S = [G._own(s) for s in S]
    for s in S:
        if G.contains(s):
            raise PreconditionError(f"cannot invert {s}: it is zero modulo the ideal")
    if names is None:
        names = G.ring.fresh_names(stem, len(S))
    elif len(names) != len(S):
        raise ValueError("one inverse name per inverted element is required")
    ring = G.ring.extend(names)
    gens = [g.to_ring(ring) for g in G.ideal.generators]
    for n, s in zip(names, S):
        gens.append(ring.var(n) * s.to_ring(ring) - 1)
    ext = groebner_basis(Ideal(ring, gens), max_pairs=max_pairs)
    if ext.is_unit_ideal():
        raise PreconditionError(
            "localization is the zero ring: some inverted element is nilpotent modulo the ideal")
    return LocalizedContext(G, S, names, ext)


def unit_inverse(G: GroebnerContext, f) -> Polynomial:
    """The inverse of ``f`` in R/I, as a reduced polynomial.

    Uses an elimination order with the adjoined inverse variable largest, so
    the normal form of that variable no longer involves it.
    """
    f = G._own(f)
    (u,) = G.ring.fresh_names("unitinv", 1)
    big = PolyRing((u,) + G.ring.variables, "elim:1", G.ring.characteristic)
    gens = [g.to_ring(big) for g in G.ideal.generators]
    gens.append(big.var(u) * f.to_ring(big) - 1)
    gb = groebner_basis(Ideal(big, gens))
    if gb.is_unit_ideal():
        raise PreconditionError("the quotient ring is zero")
    inv = gb.normal_form(big.var(u))
    if u in inv.used_variables():
        raise PreconditionError(f"{f} is not a unit modulo the ideal")
    return G.normal_form(inv.to_ring(G.ring))


def map_is_well_defined(source: GroebnerContext, target: GroebnerContext,
                        images: dict) -> tuple[bool, Polynomial | None]:
    """Check that x -> images[x] kills every generator of the source ideal.

    Returns (ok, first offending generator or None).
    """
    for g in source.ideal.generators:
        if not target.contains(g.compose(images, target.ring)):
            return False, g
    return True, None


def factor_through_localization(loc: LocalizedContext, target: GroebnerContext,
                                images: dict) -> dict:
    """Extend a ring map R/I -> T sending every s in S to a unit of T.

    The image of each inverse variable is forced to be the inverse of the
    image of s, so the extension is unique; it is returned as a full map on
    the variables of the localized ring.
    """
    ok, bad = map_is_well_defined(loc.base, target, images)
    if not ok:
        raise PreconditionError(f"map does not kill the ideal generator {bad}")
    full = dict(images)
    for name, s in zip(loc.inverse_names, loc.inverted):
        img = s.compose(images, target.ring)
        full[name] = unit_inverse(target, img)
    ok, bad = map_is_well_defined(loc.extended, target, full)
    if not ok:
        raise PreconditionError(f"extension does not kill {bad}")
    return full
