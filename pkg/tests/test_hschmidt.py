import random

import pytest

from logjets.errors import PreconditionError, ResourceLimitError
from logjets.groebner import groebner_basis, localize
from logjets.hschmidt import (HSPresentation, JetMorphismData, TruncatedLogUnit, alpha_hat,
                              apply_d, build_hs, check_base_localization,
                              check_d_well_defined, check_derivation_axioms,
                              check_first_exact_sequence, check_gendiff,
                              check_jet_factorization, check_second_exact_sequence,
                              log_partial, omega_presentation, truncated_log_unit_mul,
                              universal_derivation)
from logjets.logmonoid import LogAlgebraPresentation
from logjets.polycore import PolyRing, TruncatedPolynomial
from logjets.presentation import load_presentation, shipped_presentations


def pres(stem):
    return load_presentation(shipped_presentations()[stem]).build()


@pytest.fixture(scope="module")
def cusp():
    return pres("cusp")


def test_cusp_order_one(cusp):
    H = build_hs(cusp, 1)
    R = H.ring
    assert sorted(H.symbols()) == ["d1_x", "d1_y", "del1_x", "del1_y", "x", "y"]
    assert H.normal_form(R("2*del1_x - 3*del1_y")).is_zero()
    assert H.contains(R("d1_x - x*del1_x"))
    assert not H.contains(R("del1_x"))
    assert omega_presentation(H).rank == 1


def test_strict_cusp_has_a_zero_divisor():
    H = build_hs(pres("cusp_strict"), 1)
    R = H.ring
    e = R("2*del1_x - 3*del1_y")
    assert H.naive.contains(R("x^2") * e)
    assert not H.naive.contains(e)
    assert localize(H.naive, [R("x"), R("y")]).contains(e)


def test_free_plane_has_zero_ideal():
    H = build_hs(pres("plane"), 2)
    assert H.ideal.is_zero_ideal()
    assert omega_presentation(build_hs(pres("plane"), 1)).rank == 2


def test_order_cap():
    with pytest.raises(ResourceLimitError):
        build_hs(pres("line"), 6)
    assert build_hs(pres("line"), 6, cap=6).order == 6


def test_apply_d_on_symbols(cusp):
    H = build_hs(cusp, 1)
    H1 = H.successor()
    R1 = H1.ring
    assert apply_d(H.ring("x"), H, H1) == R1("d1_x")
    assert apply_d(H.ring("d1_x"), H, H1) == R1("2*d2_x")
    assert apply_d(H.ring("del1_y"), H, H1) == R1("2*del2_y - del1_y^2")


def test_log_partial_is_dlog(cusp):
    H = build_hs(cusp, 2)
    loc = H.loc_embed
    u = loc.inverse(0)
    assert loc.contains(log_partial("x", 1, H) - H.to_loc(H.ring("d1_x")) * u)
    assert log_partial("x", 0, H) == loc.ring.one()
    # del_1 of 2x equals del_1 of 3y
    assert loc.contains(log_partial((2, 0), 1, H) - log_partial((0, 3), 1, H))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_d_well_defined(cusp, n):
    assert check_d_well_defined(cusp, n).ok


@pytest.mark.parametrize("n", [1, 2])
def test_higher_differentials_over_q(cusp, n):
    rep = check_gendiff(cusp, n)
    assert rep.ok and rep.regime is None


def test_higher_differentials_gf2_regime():
    rep = check_gendiff(pres("gf2_line"), 1)
    assert rep.ok
    assert "characteristic 2" in rep.regime


@pytest.mark.parametrize("n", [1, 2])
def test_universal_derivation_axioms(cusp, n):
    H = build_hs(cusp, n)
    assert check_derivation_axioms(universal_derivation(H), trials=5).ok


def test_jet_into_dual_numbers_factors():
    L = pres("plane_log")
    H = build_hs(L, 1)
    T = groebner_basis(PolyRing(["a", "b"]), [])
    a, b = T.ring.gens()
    ring_images = {"x": TruncatedPolynomial([a, a], 1, T.ring),
                   "y": TruncatedPolynomial([b, 2 * b], 1, T.ring)}
    J = JetMorphismData(1, T, ring_images, {"x": [1], "y": [2]})
    assert J.validate(H).ok
    assert check_jet_factorization(J, H, trials=4).ok
    bad = JetMorphismData(1, T, ring_images, {"x": [1], "y": [3]})
    assert not bad.validate(H).ok


def random_unit(rng, log, order):
    R = log.quotient.ring
    polys = [R.from_dict({(i, j): rng.randint(-3, 3) for i in range(3) for j in range(3 - i)})
             for _ in range(order)]
    return TruncatedLogUnit(order, (rng.randint(0, 3), rng.randint(0, 3)), polys, log)


def test_alpha_hat_is_multiplicative():
    L = pres("cusp_strict")
    rng = random.Random(3)
    for _ in range(25):
        a, b = random_unit(rng, L.log, 3), random_unit(rng, L.log, 3)
        lhs = alpha_hat(truncated_log_unit_mul(a, b))
        rhs = alpha_hat(a) * alpha_hat(b)
        assert all(L.ring.equal(p, q) for p, q in zip(lhs.coeffs, rhs.coeffs))


def test_truncated_log_unit_needs_full_tail():
    L = pres("cusp_strict")
    with pytest.raises(ValueError):
        TruncatedLogUnit(2, (1, 0), [L.poly_ring.one()], L.log)


@pytest.mark.parametrize("n", [1, 2])
def test_second_exact_sequence(n):
    assert check_second_exact_sequence(pres("cusp_strict"), n).ok


def test_second_exact_sequence_needs_strict():
    with pytest.raises(PreconditionError):
        check_second_exact_sequence(pres("cusp"), 1)


def test_first_exact_sequence():
    assert check_first_exact_sequence(pres("plane_over_line"), 2).ok
    with pytest.raises(PreconditionError):
        check_first_exact_sequence(pres("plane"), 1)


def test_base_localization():
    A = LogAlgebraPresentation.build(["s"])
    B = LogAlgebraPresentation.build(["x", "y"], ["x*y - 1"], base=A,
                                     ring_map={"s": PolyRing(["x", "y"])("x")})
    assert check_base_localization(B, [A.poly_ring("s")], 1).ok


def test_relative_hs_kills_base():
    H = HSPresentation(pres("plane_over_line"), 1)
    assert H.contains(H.ring("d1_x"))
    assert not H.contains(H.ring("d1_y"))
