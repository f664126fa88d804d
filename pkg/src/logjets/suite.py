"""Regression suite over the worked examples and the randomized property checks.

Every case is a function returning ``(ok, detail)``.  Reports contain no
timings so that two runs with the same seed are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .groebner import Ideal, groebner_basis, localize
from .hschmidt import (TruncatedLogUnit, alpha_hat, apply_d_localized, build_hs,
                       check_first_exact_sequence, check_gendiff,
                       check_second_exact_sequence, check_d_well_defined, log_partial,
                       omega_presentation, truncated_log_unit_mul)
from .jetmult import (DivisorRep, RationalPoint, multiplicity_via_jets, random_instance,
                      taylor_multiplicity)
from .logmonoid import (LogAlgebraPresentation, MonoidMorphism, MonoidPresentation,
                        amalgamated_sum, check_log_square, MultiplicativeMonoid)
from .masoncheck import (PuncturedLineMorphism, check_mason, check_mason_corollary,
                         conductor, pullback_order_bound, random_coprime_pair,
                         verify_projective_gluing)
from .polycore import PolyRing
from .presentation import load_presentation, shipped_presentations

DEFAULT_SEED = 20240601


@dataclass
class CaseResult:
    name: str
    source: str
    ok: bool
    detail: str


@dataclass
class SuiteResult:
    seed: int
    cases: list[CaseResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def format(self, fmt: str = "text") -> str:
        passed = sum(c.ok for c in self.cases)
        failed = len(self.cases) - passed
        if fmt == "machine":
            lines = [f"seed={self.seed}"]
            for c in self.cases:
                lines.append(f"case.{c.name}.source={c.source}")
                lines.append(f"case.{c.name}.verdict={'pass' if c.ok else 'fail'}")
                lines.append(f"case.{c.name}.detail={c.detail}")
            lines += [f"summary.passed={passed}", f"summary.failed={failed}"]
        else:
            lines = [f"logjets suite, seed {self.seed}"]
            for c in self.cases:
                lines.append(f"[{'pass' if c.ok else 'FAIL'}] {c.name} ({c.source}): {c.detail}")
            lines.append(f"{passed} passed, {failed} failed")
        return "\n".join(lines) + "\n"


def _pres(stem: str) -> LogAlgebraPresentation:
    return load_presentation(shipped_presentations()[stem]).build()


# -- cases -------------------------------------------------------------------

def case_cusp_omega(seed):
    H = build_hs(_pres("cusp"), 1)
    R = H.ring
    nf = H.normal_form(R("2*del1_x - 3*del1_y"))
    rank = omega_presentation(H).rank
    return nf.is_zero() and rank == 1, f"normal_form(2 del1_x - 3 del1_y) = {nf}; omega rank {rank}"


def case_cusp_zero_divisor(seed):
    L = _pres("cusp_strict")
    H = build_hs(L, 1)
    R = H.ring
    e = R("2*del1_x - 3*del1_y")
    x2e = H.naive.contains(R("x^2") * e)
    plain = H.naive.contains(e)
    loc = localize(H.naive, [R("x"), R("y")])
    after = loc.contains(e)
    ok = x2e and not plain and after
    return ok, f"x^2 e in I: {x2e}; e in I: {plain}; e in I after inverting x, y: {after}"


def case_conductor_table(seed):
    z = PolyRing(["z"]).var("z")
    f = z ** 5 * (z + 1) ** 11
    D = DivisorRep(f, f.ring)
    N = conductor(f).conductor
    m0 = taylor_multiplicity(D, RationalPoint(f.ring, [0]))
    m1 = taylor_multiplicity(D, RationalPoint(f.ring, [-1]))
    j0 = multiplicity_via_jets(D, RationalPoint(f.ring, [0])).value
    j1 = multiplicity_via_jets(D, RationalPoint(f.ring, [-1])).value
    ok = (N, m0, m1, j0, j1) == (2, 5, 11, 5, 11)
    return ok, f"N = {N}; mult_0 = {m0}/{j0}; mult_-1 = {m1}/{j1} (taylor/jets)"


def case_corollary_sharpness(seed):
    R = PolyRing(["z"])
    z = R.var("z")
    bad = []
    for n in range(1, 13):
        rep = check_mason_corollary(z ** n + 1, R.one(), subtract=True)
        mult = taylor_multiplicity(DivisorRep(z ** n, R), RationalPoint(R, [0]))
        if not (rep.ok and mult == rep.conductor == n == rep.max_rational_multiplicity):
            bad.append(n)
    return not bad, "mult_0(f - g) = N(fg) = n for n = 1..12" if not bad else f"fails at n = {bad}"


def case_pullback_sharpness(seed):
    R = PolyRing(["z"])
    z = R.var("z")
    A = PolyRing(["x", "y"])
    x, y = A.gens()
    bad = []
    for N in range(1, 11):
        j = PuncturedLineMorphism(R, {"x": z ** N - (z - 1) ** N, "y": z ** N},
                                  locus=z * (z ** N - (z - 1) ** N))
        rep = pullback_order_bound(x * y, -x, y, j)
        if not (rep.ok and rep.multiplicities.get(1) == N == j.removed_count):
            bad.append(N)
    return not bad, "ord_1 j*(y - x) = N = removed points for N = 1..10" if not bad \
        else f"fails at N = {bad}"


def case_random_mason(seed):
    R = PolyRing(["z"])
    rng = random.Random(seed)
    bad = 0
    for _ in range(200):
        f, g = random_coprime_pair(R, rng, 8)
        if not check_mason(f, g, -(f + g)).ok or not check_mason_corollary(f, g).ok:
            bad += 1
    return bad == 0, f"200 coprime pairs, {bad} violations"


def case_identity_pullback(seed):
    R = PolyRing(["z"])
    rng = random.Random(seed + 1)
    bad = 0
    for _ in range(20):
        f, g = random_coprime_pair(R, rng, 5)
        cor = check_mason_corollary(f, g)
        j = PuncturedLineMorphism(R, {"z": R.var("z")}, locus=f * g)
        pb = pullback_order_bound(f * g, f, g, j)
        if cor.multiplicities != pb.multiplicities or not pb.ok:
            bad += 1
    return bad == 0, f"20 identity morphisms, {bad} disagreements with the corollary"


def case_jets_vs_taylor(seed):
    rng = random.Random(seed + 2)
    bad = 0
    for _ in range(300):
        D, p = random_instance(rng)
        if multiplicity_via_jets(D, p).value != taylor_multiplicity(D, p):
            bad += 1
    return bad == 0, f"300 random instances, {bad} disagreements"


def case_d_well_defined(seed):
    L = _pres("cusp")
    out = []
    ok = True
    for n in (1, 2, 3):
        r = check_d_well_defined(L, n)
        ok &= r.ok
        out.append(f"n={n}:{'ok' if r.ok else 'fail'}")
    return ok, "d(ideal) in next ideal " + " ".join(out)


def case_higher_differentials(seed):
    ok, out = True, []
    for n in (1, 2):
        r = check_gendiff(_pres("cusp"), n)
        ok &= r.ok
        out.append(f"QQ n={n}:{'ok' if r.ok else 'fail'}")
    r = check_gendiff(_pres("gf2_line"), 1)
    flagged = r.ok and r.regime is not None
    ok &= flagged
    out.append(f"GF(2) d(d1 x) = 0 {'flagged' if flagged else 'missed'}")
    return ok, "; ".join(out)


def case_dlog_prolongation(seed):
    H = build_hs(_pres("cusp"), 1)
    H1 = H.successor()
    loc = H1.loc_embed
    ok = True
    for k, m in enumerate(H.log_generators):
        u = loc.inverse(k)
        lhs = apply_d_localized(log_partial(m, 1, H), H, H1)
        a = H.L.log.alpha[k]
        d1 = H1.to_loc(H1.divided(a, 1))
        d2 = H1.to_loc(H1.divided(a, 2))
        rhs = d2 * u * 2 - (d1 * u) ** 2
        ok &= loc.contains(lhs - rhs)
    return ok, "d(del1 m) = 2 d2 a/a - (d1 a/a)^2 in the localized ring"


def case_gluing(seed, corrupt=False):
    P = PolyRing(["x0", "x1", "x2"])
    f = P("x0^2*x2 - x1^3")
    rep = verify_projective_gluing(f, corrupt_chart=0 if corrupt else None, report=True)
    fails = [i.label for i in rep.failures]
    return rep.ok, ("all three overlaps glue" if rep.ok else "does not glue: " + ", ".join(fails))


def case_gluing_control(seed):
    P = PolyRing(["x0", "x1", "x2"])
    f = P("x0^2*x2 - x1^3")
    caught = not verify_projective_gluing(f, corrupt_chart=0)
    return caught, "dropping the m dlog(x_n/x_i) term breaks gluing" if caught else \
        "corrupted forms glue (control not detected)"


def case_alpha_hat(seed):
    L = _pres("cusp_strict")
    pre = L.log
    R = L.poly_ring
    G = L.ring
    rng = random.Random(seed + 3)

    def rand_poly():
        return R.from_dict({(i, j): rng.randint(-3, 3) for i in range(3) for j in range(3 - i)})

    def rand_unit():
        return TruncatedLogUnit(3, (rng.randint(0, 3), rng.randint(0, 3)),
                                [rand_poly() for _ in range(3)], pre)

    bad = 0
    for _ in range(100):
        a, b = rand_unit(), rand_unit()
        lhs = alpha_hat(truncated_log_unit_mul(a, b))
        rhs = alpha_hat(a) * alpha_hat(b)
        if any(G.normal_form(p) != G.normal_form(q) for p, q in zip(lhs.coeffs, rhs.coeffs)):
            bad += 1
    return bad == 0, f"100 random pairs at order 3, {bad} failures"


def case_exact_sequences(seed):
    out, ok = [], True
    for n in (1, 2):
        r = check_second_exact_sequence(_pres("cusp_strict"), n)
        ok &= r.ok
        out.append(f"second n={n}:{'ok' if r.ok else 'fail'}")
    r = check_first_exact_sequence(_pres("plane_over_line"), 2)
    ok &= r.ok
    out.append(f"first n=2:{'ok' if r.ok else 'fail'}")
    return ok, " ".join(out)


def case_free_ring(seed):
    H = build_hs(_pres("plane"), 2)
    return H.ideal.is_zero_ideal(), f"k[x, y] at order 2 has ideal {'0' if H.ideal.is_zero_ideal() else 'nonzero'}"


def case_log_square(seed):
    L = _pres("plane_log")
    T = groebner_basis(Ideal(PolyRing(["t"]), ["t^2"]))
    Mt = MultiplicativeMonoid(T)
    t = T.ring.var("t")
    good = check_log_square(L, T, Mt, {"x": t, "y": t}, [t, t])
    broken = check_log_square(L, T, Mt, {"x": t, "y": t}, [t, T.ring.one()])
    return good.ok and not broken.ok, \
        f"x, y -> t into k[t]/t^2 commutes: {good.ok}; broken image rejected: {not broken.ok}"


def case_amalgamated_sum(seed):
    P = MonoidPresentation(["p"], is_group=True)
    Q1 = MonoidPresentation(["a", "b"], is_group=True)
    Q2 = MonoidPresentation(["c"], is_group=True)
    S = amalgamated_sum(P, Q1, Q2, MonoidMorphism(P, Q1, [(1, 1)]), MonoidMorphism(P, Q2, [(2,)]))
    rank, torsion = S.invariants()
    return (rank, torsion) == (2, []), f"Z^2 +_Z Z has rank {rank}, torsion {torsion}"


CASES: list[tuple[str, str, Callable]] = [
    ("cusp-omega", "cusp, log generators x and y, order 1", case_cusp_omega),
    ("cusp-zero-divisor", "naive cusp quotient and its localization", case_cusp_zero_divisor),
    ("conductor-table", "z^5 (z+1)^11", case_conductor_table),
    ("corollary-sharpness", "z^n + 1 against 1", case_corollary_sharpness),
    ("pullback-sharpness", "z^N - (z-1)^N, z^N into the plane", case_pullback_sharpness),
    ("random-mason", "random coprime pairs", case_random_mason),
    ("identity-pullback", "identity morphism against the corollary", case_identity_pullback),
    ("jets-vs-taylor", "random divisors and points", case_jets_vs_taylor),
    ("d-well-defined", "operator d on the cusp, orders 1..3", case_d_well_defined),
    ("higher-differentials", "higher differentials from d, QQ and GF(2)", case_higher_differentials),
    ("dlog-prolongation", "d of a log partial", case_dlog_prolongation),
    ("projective-gluing", "x0^2 x2 - x1^3 on P^2", case_gluing),
    ("gluing-control", "corrupted forms on P^2", case_gluing_control),
    ("alpha-hat", "truncated log units on the cusp", case_alpha_hat),
    ("exact-sequences", "plane to cusp; point to line to plane", case_exact_sequences),
    ("free-ring", "k[x, y] at order 2", case_free_ring),
    ("log-square", "x, y -> t into k[t]/t^2", case_log_square),
    ("amalgamated-sum", "pushout of free abelian groups", case_amalgamated_sum),
]


def run_suite(seed: int = DEFAULT_SEED, *, corrupt_gluing: bool = False,
              only: list[str] | None = None) -> SuiteResult:
    results = []
    for name, source, fn in CASES:
        if only and name not in only:
            continue
        try:
            if name == "projective-gluing":
                ok, detail = fn(seed, corrupt=corrupt_gluing)
            else:
                ok, detail = fn(seed)
        except Exception as exc:  # a crash is a failed case, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CaseResult(name, source, bool(ok), detail))
    return SuiteResult(seed, results)
