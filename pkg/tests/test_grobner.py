import random
from fractions import Fraction

import pytest

from hilbertpoly.arith import MultiPoly, UniPoly, binom_poly, parse_poly
from hilbertpoly.grobner import (
    GREVLEX,
    LEX,
    HomIdeal,
    INFINITE,
    MonomialOrder,
    ResourceCapExceeded,
    buchberger,
    count_zero_dim,
    hilbert_data,
    hilbert_function_direct,
    hilbert_series_monomial,
    ideal_file_text,
    in_ideal,
    membership_via_hilbert,
    normal_form,
    parse_ideal_file,
)


def ideal(var_text, *polys):
    variables = tuple(var_text.split())
    return HomIdeal.from_polys(variables, [parse_poly(p, variables) for p in polys])


def polys(var_text, *texts):
    variables = tuple(var_text.split())
    return [parse_poly(p, variables) for p in texts]


# -- Buchberger


def test_buchberger_hand_example():
    gens = polys("x y", "x^2 - y", "y")
    gb = buchberger(gens, LEX)
    assert gb == polys("x y", "y", "x^2")


def test_buchberger_zero_ideal():
    assert buchberger([MultiPoly.zero(("x",))]) == []


def test_buchberger_redundant_generator():
    gens = polys("x y", "x", "x^2")
    assert buchberger(gens) == polys("x y", "x")


def test_buchberger_generator_order_irrelevant():
    rng = random.Random(0)
    gens = polys("x y z",
                 "x^2 + y*z", "y^2 - x*z", "z^2 + x*y - y^2")
    reference = buchberger(gens)
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled) == reference


def test_buchberger_idempotent():
    gens = polys("x y z", "x*y - z^2", "y^2 - x*z")
    gb = buchberger(gens)
    assert buchberger(gb) == gb


def test_resource_caps():
    gens = polys("x y z", "x^2 + y*z", "y^3 - x*z^2", "z^4 - x*y^3")
    with pytest.raises(ResourceCapExceeded):
        buchberger(gens, max_basis=1)


# -- normal forms and membership


def test_normal_form_examples():
    assert in_ideal(*polys("x y", "x*y"), ideal("x y", "x"))
    r = normal_form(polys("x", "x+1")[0], polys("x", "x"))
    assert r == parse_poly("1", ("x",))
    assert in_ideal(polys("x0 x1 x2", "x0*x2")[0],
                    ideal("x0 x1 x2", "x0*x2 - x1^2", "x1"))


# -- Hilbert series of monomial ideals


def test_series_numerator_free_ring():
    assert hilbert_series_monomial([], 3) == UniPoly.constant(1)


def test_series_numerator_single_variable():
    assert hilbert_series_monomial([(1, 0, 0)], 3) == UniPoly([1, -1])


def test_series_numerator_two_generators():
    # L = (x0^2, x0 x1) in two variables
    q = hilbert_series_monomial([(2, 0), (1, 1)], 2)
    assert q == UniPoly([1, 0, -2, 1])


# -- Hilbert data


def test_hilbert_projective_space():
    data = hilbert_data(ideal("x0 x1 x2"))
    assert data.hilbert_polynomial == binom_poly(2, 2)
    assert data.index_of_regularity == 0


def test_hilbert_hypersurface():
    for n, d in [(2, 3), (3, 2), (4, 3)]:
        variables = tuple("x%d" % i for i in range(n + 1))
        f = MultiPoly(variables, {tuple(d if i == j else 0 for i in range(n + 1)): 1
                                  for j in range(1)})
        # x0^d + x1^d + ... is irreducible enough for Hilbert purposes;
        # any degree-d hypersurface has the same Hilbert polynomial
        f = MultiPoly(variables,
                      {tuple(d if i == j else 0 for i in range(n + 1)): 1
                       for j in range(n + 1)})
        data = hilbert_data(HomIdeal.from_polys(variables, [f]))
        assert data.hilbert_polynomial == binom_poly(n, n) - binom_poly(n - d, n)


def test_hilbert_twisted_cubicish_conic():
    data = hilbert_data(ideal("x0 x1 x2", "x0*x2 - x1^2"))
    assert data.hilbert_polynomial == UniPoly([1, 2])  # conic: 2T + 1


def test_hilbert_function_agrees_with_polynomial_beyond_regularity():
    corpus = [
        ideal("x0 x1 x2"),
        ideal("x0 x1 x2", "x0*x2 - x1^2"),
        ideal("x0 x1 x2 x3", "x0*x3 - x1*x2", "x1^2 - x0*x2", "x2^2 - x1*x3"),
        ideal("x0 x1", "x0^3"),
    ]
    for I in corpus:
        data = hilbert_data(I)
        for k in range(data.index_of_regularity, data.index_of_regularity + 6):
            assert data.hilbert_function(k) == data.hilbert_polynomial(k)
            assert hilbert_function_direct(I, k) == data.hilbert_function(k)


def test_hilbert_degree_equals_dimension():
    # twisted cubic: dimension 1, degree 3
    I = ideal("x0 x1 x2 x3", "x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2")
    data = hilbert_data(I)
    assert data.hilbert_polynomial.degree == 1
    assert data.hilbert_polynomial == UniPoly([1, 3])


def test_hilbert_function_direct_examples():
    assert hilbert_function_direct(ideal("x0 x1 x2"), 2) == 6
    assert hilbert_function_direct(ideal("x0 x1", "x0"), 3) == 1
    assert hilbert_function_direct(ideal("x0 x1 x2", "x0*x2 - x1^2"), 2) == 5


# -- zero-dimensional counting


def test_count_univariate():
    assert count_zero_dim(polys("x", "x^2 - 1")) == 2


def test_count_positive_dimensional_is_infinite():
    assert count_zero_dim(polys("x y", "x*y")) == INFINITE


def test_count_product_system():
    assert count_zero_dim(polys("x y", "x^2 - 1", "y^3 - y")) == 6


def test_count_inconsistent_system():
    assert count_zero_dim(polys("x y", "x", "x + 1")) == 0


def test_bezout_small_random_systems():
    rng = random.Random(20240)
    for _ in range(6):
        n = rng.randint(1, 2)
        degs = [rng.randint(1, 3) for _ in range(n)]
        variables = tuple("x%d" % (i + 1) for i in range(n))
        gens = []
        for d in degs:
            terms = {}
            from hilbertpoly.grobner import monomials_of_degree
            for e in monomials_of_degree(n, 0):
                pass
            for k in range(d + 1):
                for e in monomials_of_degree(n, k):
                    terms[e] = Fraction(rng.randint(-5, 5))
            # ensure exact degree d appears
            lead = tuple(d if i == 0 else 0 for i in range(n))
            terms[lead] = Fraction(rng.randint(1, 5))
            gens.append(MultiPoly(variables, terms))
        expected = 1
        for d in degs:
            expected *= d
        assert count_zero_dim(gens) == expected


# -- membership via Hilbert polynomials


def test_membership_via_hilbert_examples():
    I = ideal("x0 x1", "x0")
    assert membership_via_hilbert(I, parse_poly("x0^2", ("x0", "x1")))
    assert not membership_via_hilbert(I, parse_poly("x1", ("x0", "x1")))


def test_membership_matches_normal_form_oracle():
    I = ideal("x0 x1 x2", "x0*x2 - x1^2")
    cases = ["x0^2*x2 - x0*x1^2", "x0*x1", "x0*x2^2 - x1^2*x2", "x1^3"]
    for text in cases:
        g = parse_poly(text, ("x0", "x1", "x2"))
        assert membership_via_hilbert(I, g) == in_ideal(g, I)


def test_membership_rejects_bad_inputs():
    I = ideal("x0 x1", "x0")
    with pytest.raises(ValueError):
        membership_via_hilbert(I, parse_poly("3", ("x0", "x1")))
    with pytest.raises(ValueError):
        membership_via_hilbert(I, parse_poly("x0 + 1", ("x0", "x1")))


# -- ideal files


def test_ideal_file_roundtrip():
    I = ideal("x0 x1 x2", "x0*x2 - x1^2", "x1^3 - x0^2*x2")
    assert parse_ideal_file(ideal_file_text(I)) == I


def test_ideal_file_requires_header():
    with pytest.raises(ValueError):
        parse_ideal_file("x0 + x1\n")


def test_lex_order_keys():
    lex = MonomialOrder("lex")
    assert lex.key((1, 0)) > lex.key((0, 5))
    assert GREVLEX.key((0, 5)) > GREVLEX.key((1, 0))
    # grevlex tie-break: for equal degree, smaller power of the last variable wins
    assert not GREVLEX.key((1, 1, 0)) > GREVLEX.key((2, 0, 0))
    assert GREVLEX.key((2, 0, 0)) > GREVLEX.key((1, 1, 0))


def test_variable_ranking_permutes_priority():
    lex_yx = MonomialOrder("lex", ranking=(1, 0))  # y outranks x
    assert lex_yx.key((5, 0)) < lex_yx.key((0, 1))
    gb = buchberger(polys("x y", "x^2 - y", "y"), lex_yx)
    assert sorted(g.to_text() for g in gb) == ["x^2", "y"]


def test_every_spoly_reduces_to_zero():
    from hilbertpoly.grobner import GrobnerBasis, leading_term, _spoly
    gens = polys("x y z", "x^2 + y*z", "y^2 - x*z", "x*y + z^2")
    gb = GrobnerBasis.of(gens)
    els = gb.elements
    for i in range(len(els)):
        for j in range(i):
            lti = leading_term(els[i], gb.order)[0]
            ltj = leading_term(els[j], gb.order)[0]
            s = _spoly(els[i], lti, els[j], ltj, gb.order)
            assert not gb.normal_form(s)


def test_reduced_basis_leads_are_incomparable():
    from hilbertpoly.grobner import GrobnerBasis
    gens = polys("x y z", "x^2 - y^2", "x*y*z - z^3", "y^4 - x*z^3")
    gb = GrobnerBasis.of(gens)
    lts = gb.leading_exponents()
    for i, a in enumerate(lts):
        for j, b in enumerate(lts):
            if i != j:
                assert not all(p <= q for p, q in zip(a, b))


def test_normal_form_is_linear_and_kills_multiples():
    from hilbertpoly.grobner import GrobnerBasis
    rng = random.Random(5)
    variables = ("x", "y", "z")
    gb = GrobnerBasis.of(polys("x y z", "x*y - z^2", "y^2 - x*z"))

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(0, 5)):
            e = tuple(rng.randint(0, 3) for _ in variables)
            terms[e] = Fraction(rng.randint(-4, 4))
        return MultiPoly(variables, terms)

    for _ in range(25):
        f, g = rand_poly(), rand_poly()
        nf = gb.normal_form
        assert nf(f + g) == nf(nf(f) + nf(g))
        member = f * gb.elements[rng.randrange(len(gb.elements))]
        assert not nf(member)
        assert nf(f + member) == nf(f)


def test_hilbert_data_zero_dimensional_quotient():
    # S/(x0^2, x1^2): finite dimensional, Hilbert polynomial 0,
    # function 1,2,1,0,... with regularity 3
    I = ideal("x0 x1", "x0^2", "x1^2")
    data = hilbert_data(I)
    assert data.hilbert_polynomial == UniPoly()
    assert [data.hilbert_function(k) for k in range(5)] == [1, 2, 1, 0, 0]
    assert data.index_of_regularity == 3


def test_regularity_agreement_on_wider_corpus():
    from hilbertpoly.chern import CompleteIntersection, generic_ci_ideal
    from hilbertpoly.reductions import CnfFormula, sat_to_ideal
    corpus = [
        ideal("x0 x1 x2", "x0^2*x2 - x1^3"),
        ideal("x0 x1 x2 x3", "x0*x3 - x1*x2"),
        sat_to_ideal(CnfFormula(num_vars=3, clauses=((1, -2), (2, 3)))),
        generic_ci_ideal(CompleteIntersection(3, (2, 2)), seed=3),
    ]
    for I in corpus:
        data = hilbert_data(I)
        for k in range(data.index_of_regularity, data.index_of_regularity + 6):
            assert data.hilbert_polynomial(k) == hilbert_function_direct(I, k)
        if data.index_of_regularity > 0:
            k = data.index_of_regularity - 1
            assert data.hilbert_polynomial(k) != data.hilbert_function(k)
