import random

from logjets.cli import main
from logjets.groebner import localize
from logjets.hschmidt import (TruncatedLogUnit, alpha_hat, build_hs, check_d_well_defined,
                              check_first_exact_sequence, check_gendiff,
                              check_second_exact_sequence, omega_presentation,
                              truncated_log_unit_mul)
from logjets.jetmult import (DivisorRep, RationalPoint, multiplicity_via_jets, random_instance,
                             taylor_multiplicity)
from logjets.masoncheck import (PuncturedLineMorphism, check_mason, check_mason_corollary,
                                conductor, pullback_order_bound, random_coprime_pair,
                                verify_projective_gluing)
from logjets.polycore import PolyRing
from logjets.presentation import load_presentation, shipped_presentations
from logjets.suite import DEFAULT_SEED

from acceptance_log import criterion


def pres(stem):
    return load_presentation(shipped_presentations()[stem]).build()


def test_01_cusp_presentation():
    with criterion(1, "cusp HS^1: 2 del1_x - 3 del1_y reduces to 0, omega rank 1", 1.0):
        H = build_hs(pres("cusp"), 1)
        assert H.normal_form(H.ring("2*del1_x - 3*del1_y")).is_zero()
        assert omega_presentation(H).rank == 1


def test_02_zero_divisor_in_naive_quotient():
    with criterion(2, "naive quotient: x^2 e in I, e not in I, e in I after localizing", 1.0):
        H = build_hs(pres("cusp_strict"), 1)
        R = H.ring
        e = R("2*del1_x - 3*del1_y")
        assert H.naive.contains(R("x^2") * e) is True
        assert H.naive.contains(e) is False
        assert localize(H.naive, [R("x"), R("y")]).contains(e) is True


def test_03_conductor_table():
    with criterion(3, "z^5 (z+1)^11: N = 2, mult_0 = 5, mult_-1 = 11"):
        Z = PolyRing(["z"])
        f = Z("z^5*(z+1)^11")
        D = DivisorRep(f, Z)
        assert conductor(f).conductor == 2
        for pt, m in ((0, 5), (-1, 11)):
            p = RationalPoint(Z, [pt])
            assert taylor_multiplicity(D, p) == m
            assert multiplicity_via_jets(D, p).value == m


def test_04_corollary_sharpness():
    with criterion(4, "z^n + 1 against 1: mult_0 = N(fg) = n for n = 1..12"):
        Z = PolyRing(["z"])
        z = Z.var("z")
        for n in range(1, 13):
            f, g = z ** n + 1, Z.one()
            rep = check_mason_corollary(f, g, subtract=True)
            assert rep.ok
            m = taylor_multiplicity(DivisorRep(f - g, Z), RationalPoint(Z, [0]))
            assert m == conductor(f * g).conductor == n == rep.max_rational_multiplicity


def test_05_pullback_sharpness():
    with criterion(5, "x -> z^N - (z-1)^N, y -> z^N: ord_1 = N = removed points, N = 1..10"):
        Z = PolyRing(["z"])
        z = Z.var("z")
        A = PolyRing(["x", "y"])
        x, y = A.gens()
        for N in range(1, 11):
            j = PuncturedLineMorphism(Z, {"x": z ** N - (z - 1) ** N, "y": z ** N},
                                      locus=z * (z ** N - (z - 1) ** N))
            rep = pullback_order_bound(x * y, -x, y, j)
            assert rep.ok and not rep.contained
            assert rep.multiplicities[1] == N == j.removed_count


def test_06_random_mason():
    with criterion(6, "200 random coprime pairs: Mason and corollary hold", 30.0):
        Z = PolyRing(["z"])
        rng = random.Random(DEFAULT_SEED)
        for _ in range(200):
            f, g = random_coprime_pair(Z, rng, 8)
            assert max(f.total_degree(), g.total_degree()) <= 8
            assert check_mason(f, g, -(f + g)).ok
            assert check_mason_corollary(f, g).ok


def test_07_jets_vs_taylor():
    with criterion(7, "300 random (s, p): jets equal Taylor multiplicity", 60.0):
        rng = random.Random(DEFAULT_SEED)
        for _ in range(300):
            D, p = random_instance(rng, max_vars=3, max_degree=6, max_mult=5)
            t = taylor_multiplicity(D, p)
            assert t <= 5
            assert multiplicity_via_jets(D, p).value == t


def test_08_d_well_defined():
    with criterion(8, "cusp, n = 1..3: d of every ideal generator lies in the next ideal", 30.0):
        L = pres("cusp")
        for n in (1, 2, 3):
            rep = check_d_well_defined(L, n)
            assert rep.ok and rep.items


def test_09_higher_differentials():
    with criterion(9, "higher differentials from d over QQ (n = 1, 2); GF(2) regime flagged"):
        for n in (1, 2):
            rep = check_gendiff(pres("cusp"), n)
            assert rep.ok and rep.regime is None
        rep = check_gendiff(pres("gf2_line"), 1)
        assert rep.ok and rep.regime is not None
        assert any(i.label == "d(d_1 x) = 0" and i.ok for i in rep.items)


def test_10_projective_gluing():
    with criterion(10, "x0^2 x2 - x1^3 glues on P^2; corrupted control fails", 10.0):
        f = PolyRing(["x0", "x1", "x2"])("x0^2*x2 - x1^3")
        rep = verify_projective_gluing(f, report=True)
        assert rep.ok and len(rep.items) == 3
        assert verify_projective_gluing(f, corrupt_chart=0) is False


def test_11_alpha_hat_homomorphism():
    with criterion(11, "alpha-hat is a monoid homomorphism on 100 random pairs at order 3"):
        L = pres("cusp_strict")
        R = L.poly_ring
        rng = random.Random(DEFAULT_SEED)

        def unit():
            tail = [R.from_dict({(i, j): rng.randint(-3, 3) for i in range(3)
                                 for j in range(3 - i)}) for _ in range(3)]
            return TruncatedLogUnit(3, (rng.randint(0, 3), rng.randint(0, 3)), tail, L.log)

        for _ in range(100):
            a, b = unit(), unit()
            lhs = alpha_hat(truncated_log_unit_mul(a, b))
            rhs = alpha_hat(a) * alpha_hat(b)
            assert lhs.coeffs == rhs.coeffs


def test_12_exact_sequences():
    with criterion(12, "second sequence k[x,y] -> cusp (n = 1, 2); first k -> k[x] -> k[x,y] (n = 2)"):
        for n in (1, 2):
            assert check_second_exact_sequence(pres("cusp_strict"), n).ok
        assert check_first_exact_sequence(pres("plane_over_line"), 2).ok


def test_13_suite_determinism(capsys):
    with criterion(13, "two suite runs with the same seed are byte-identical"):
        outs = []
        for _ in range(2):
            assert main(["suite", "--seed", str(DEFAULT_SEED)]) == 0
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1] and outs[0]
