from fractions import Fraction

import pytest

from hilbertpoly.arith import TruncSeries, UniPoly, binom_poly
from hilbertpoly.chern import (
    CompleteIntersection,
    chern_cone_normal,
    chern_cone_tangent,
    chern_tangent,
    character_table,
    ci_grid,
    ci_hilbert_series_oracle,
    euler_char_twist,
    euler_top,
    generic_ci_ideal,
    hilbert_poly_characters,
    hilbert_poly_hrr,
    projective_character,
    todd_class,
)
from hilbertpoly.grobner import hilbert_data
from hilbertpoly.partitions import Partition, enumerate_partitions
from hilbertpoly.symfun import CoeffSeq, d_coeff, delta_coeff, delta_det


CI = CompleteIntersection


def test_ci_validation():
    with pytest.raises(ValueError):
        CI(2, (1, 1, 1))
    with pytest.raises(ValueError):
        CI(3, (0,))
    assert CI(4, (2, 3)).m == 2
    assert CI(4, (2, 3)).degree == 6


def test_chern_tangent_examples():
    curve = chern_tangent(CI(2, (4,)))
    assert curve.series == TruncSeries(2, [1, -1])  # 1 + (3-d) h, d=4
    proj = chern_tangent(CI(3, ()))
    assert proj.series == TruncSeries(4, [1, 4, 6, 4])  # (1+h)^4 truncated
    quadric = chern_tangent(CI(3, (2,)))
    assert quadric.series == TruncSeries(3, [1, 2, 2])


def test_cone_bundle_classes():
    curve = CI(2, (5,))
    assert chern_cone_normal(curve).series == TruncSeries(2, [1, 4])
    linear = CI(4, (1, 1))
    assert chern_cone_normal(linear).series == TruncSeries.one(3)
    assert chern_cone_tangent(linear).series == TruncSeries.one(3)
    hyp = CI(4, (3,))
    assert chern_cone_tangent(hyp).series == TruncSeries(4, [1, -2, 4, -8])


def test_todd_class_examples():
    line = todd_class(CI(1, ()))
    assert line.series == TruncSeries(2, [1, 1])
    cubic = todd_class(CI(2, (3,)))
    assert cubic.series == TruncSeries(2, [1, 0])
    for ci in (CI(3, (2,)), CI(4, (2, 2)), CI(5, ())):
        assert todd_class(ci).series[0] == 1


def test_euler_char_twist_examples():
    assert euler_char_twist(CI(2, ()), 1) == 3
    assert euler_char_twist(CI(2, (3,)), 0) == 0
    assert euler_char_twist(CI(3, (2,)), 2) == 9


def test_hilbert_poly_hrr_examples():
    for n in range(1, 6):
        assert hilbert_poly_hrr(CI(n, ())) == binom_poly(n, n)
    for n, d in [(2, 2), (3, 3), (4, 2)]:
        expected = binom_poly(n, n) - binom_poly(n - d, n)
        assert hilbert_poly_hrr(CI(n, (d,))) == expected
    ci = CI(5, (2, 3))
    p = hilbert_poly_hrr(ci)
    assert p.coefficient(ci.m) == Fraction(ci.degree, 6)


def test_projective_characters_plane_curves():
    for d in range(1, 7):
        assert projective_character(CI(2, (d,)), Partition([1])) == d * (d - 1)


def test_projective_character_empty_partition_is_degree():
    for ci in (CI(3, (2, 2)), CI(4, (3,)), CI(5, (2, 2, 2))):
        assert projective_character(ci, Partition()) == ci.degree


def test_projective_characters_linear_vanish():
    ci = CI(4, (1, 1))
    for k in range(1, ci.m + 1):
        for lam in enumerate_partitions(k, max_part=ci.n - ci.m):
            assert projective_character(ci, lam) == 0


def test_projective_character_wide_partition_vanishes():
    ci = CI(3, (2,))  # n-m = 1
    assert projective_character(ci, Partition([2])) == 0


def test_character_size_guard():
    with pytest.raises(ValueError):
        projective_character(CI(2, (3,)), Partition([1, 1]))


def test_hilbert_poly_characters_plane_curves():
    for d in range(1, 7):
        p = hilbert_poly_characters(CI(2, (d,)))
        assert p.coefficient(0) == Fraction(d * (3 - d), 2)
        assert p.coefficient(1) == d


def test_hilbert_poly_characters_quadric_surface():
    assert hilbert_poly_characters(CI(3, (2,))) == UniPoly([1, 2, 1])


def test_curve_p0_from_characters_directly():
    # p_0 = deg V - (1/2) deg P_1 for any smooth curve here
    for ci in (CI(2, (4,)), CI(3, (2, 2)), CI(4, (2, 1, 3))):
        if ci.m != 1:
            continue
        p0 = hilbert_poly_characters(ci).coefficient(0)
        expected = ci.degree - Fraction(1, 2) * projective_character(ci, Partition([1]))
        assert p0 == expected


def test_euler_top_examples():
    assert euler_top(CI(2, (3,))) == 0
    assert euler_top(CI(2, ())) == 3
    assert euler_top(CI(3, (2,))) == 4
    for d in range(1, 7):
        g = (d - 1) * (d - 2) // 2
        assert euler_top(CI(2, (d,))) == 2 - 2 * g


def test_series_oracle_examples():
    assert ci_hilbert_series_oracle(CI(4, ())) == binom_poly(4, 4)
    assert ci_hilbert_series_oracle(CI(3, (2,))) == UniPoly([1, 2, 1])
    assert ci_hilbert_series_oracle(CI(3, (2, 2))) == UniPoly([0, 4])


def test_three_way_agreement_small_grid():
    for ci in ci_grid(4, 2, 3):
        oracle = ci_hilbert_series_oracle(ci)
        assert hilbert_poly_hrr(ci) == oracle
        assert hilbert_poly_characters(ci) == oracle


def test_twist_values_match_polynomial_at_all_integers():
    # chi of the d-th twist equals the Hilbert polynomial at d, also for
    # negative d where the Hilbert function itself differs
    for ci in ci_grid(3, 2, 3):
        p = ci_hilbert_series_oracle(ci)
        for d in range(-3, 4):
            value = euler_char_twist(ci, d)
            assert isinstance(value, int)
            assert value == p(d), (ci, d)


def test_todd_class_plane_curve_values():
    for d in (1, 2, 5):
        td = todd_class(CI(2, (d,)))
        assert td.series == TruncSeries(2, [1, Fraction(3 - d, 2)])


def test_rational_normal_curve_formula_identity():
    # with the known inputs deg V = n, deg P_1 = 2(n-1) the curve formula
    # p_0 = delta_0 deg V + delta_1 deg P_1 must give 1 (since p = nT + 1)
    for n in range(2, 11):
        p0 = (delta_coeff(1, 0, Partition()) * n
              + delta_coeff(1, 0, Partition([1])) * 2 * (n - 1))
        assert p0 == 1


def test_tensor_lemma_numeric_identity():
    for ci in ci_grid(4, 2, 3):
        tangent = chern_tangent(ci)
        K = ci.m + 1
        values = [TruncSeries.one(K)]
        values += [TruncSeries.monomial(K, i, tangent.coefficient(i))
                   for i in range(1, K)]
        cseq = CoeffSeq(values, pad=True)
        chars = character_table(ci)
        for size in range(ci.m + 1):
            for lam in enumerate_partitions(size):
                det = delta_det(lam.conjugate(), cseq)
                lhs = det[lam.size] * ci.degree
                rhs = Fraction(0)
                for j in range(size + 1):
                    for mu in enumerate_partitions(j, max_part=ci.n - ci.m):
                        if lam.contains(mu):
                            rhs += ((-1) ** mu.size * d_coeff(lam, mu, ci.m)
                                    * chars[mu])
                assert lhs == rhs, (ci, lam)


def test_interpolation_of_twists_matches_hrr():
    from hilbertpoly.reductions import interpolate
    for ci in ci_grid(4, 2, 3):
        pts = [(d, euler_char_twist(ci, d)) for d in range(ci.m + 1)]
        assert interpolate(pts, ci.m) == hilbert_poly_hrr(ci)


def test_grobner_cross_check_one_case():
    ci = CI(3, (2, 2))
    data = hilbert_data(generic_ci_ideal(ci, seed=5))
    assert data.hilbert_polynomial == ci_hilbert_series_oracle(ci)
