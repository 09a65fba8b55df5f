
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ndautonomy.groebner import (
    GroebnerBasis,
    GREVLEX,
    LEX,
    StepLimitExceeded,
    UnitIdealError,
    block_order,
    buchberger,
    contains_ideal,
    dimension,
    eliminate,
    ideal_equal,
    ideal_quotient,
    is_groebner,
    is_reduced,
    is_unit_ideal,
    normal_form,
    s_polynomial,
    saturate,
    saturate_variables,
    saturated_basis,
)
from ndautonomy.laurent import LaurentPoly, monomials_up_to

from conftest import P, polys, rank


def gb(*texts, n=2, order=GREVLEX):
    return buchberger([P(t, n) for t in texts], order, n)


def to_sympy(p, syms):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** k for s, k in zip(syms, e)])
               for e, c in p.terms)


def sympy_reduced_gb(gens, n, order):
    syms = sympy.symbols(f"s1:{n + 1}")
    G = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order=str(order), domain="QQ")
    out = set()
    for g in G.exprs:
        terms = dict(sympy.Poly(g, *syms).terms())
        lead = terms[max(terms, key=order.key)]
        out.add(tuple(sorted((m, sympy.Rational(c) / lead) for m, c in terms.items())))
    return out


def as_term_sets(basis):
    return {tuple(sorted((e, sympy.Rational(c.numerator, c.denominator)) for e, c in g.terms)) for g in basis.gens}


class TestBuchberger:
    def test_already_a_basis(self):
        assert gb("s1 - 1", "s2 - 1").gens == (P("s1 - 1"), P("s2 - 1"))

    def test_unit(self):
        G = gb("s1", "1")
        assert G.gens == (LaurentPoly.one(2),) and is_unit_ideal(G)

    def test_empty(self):
        G = buchberger([], GREVLEX, 2)
        assert G.is_zero and not is_unit_ideal(G)

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            gb("s1^-1 - 1")

    def test_s_polynomial_of_basis_reduces(self):
        G = gb("s1 - 1", "s2 - 1")
        assert normal_form(s_polynomial(*G.gens), G).is_zero

    def test_cyclic3_against_sympy(self):
        gens = [P(t, 3) for t in ("s1 + s2 + s3", "s1*s2 + s2*s3 + s3*s1", "s1*s2*s3 - 1")]
        for order in (GREVLEX, LEX):
            G = buchberger(gens, order, 3)
            assert is_groebner(G) and is_reduced(G)
            assert as_term_sets(G) == sympy_reduced_gb(gens, 3, order)

    def test_step_limit(self, monkeypatch):
        monkeypatch.setenv("AUTONOMY_GB_STEP_LIMIT", "3")
        with pytest.raises(StepLimitExceeded):
            buchberger([P(t, 3) for t in ("s1 + s2 + s3", "s1*s2 + s2*s3 + s3*s1", "s1*s2*s3 - 1")], GREVLEX, 3)


class TestNormalForm:
    def test_reduces_to_one(self):
        assert normal_form(P("s1*s2"), gb("s1 - 1", "s2 - 1")) == LaurentPoly.one(2)

    def test_empty_basis(self):
        p = P("s1^3 + 2*s2")
        assert normal_form(p, buchberger([], GREVLEX, 2)) == p

    def test_member(self):
        G = gb("s1^2 - s2", "s1*s2 - 1")
        assert normal_form(G.gens[0] * P("s1 + 7"), G).is_zero


class TestQuotient:
    def test_monomial(self):
        assert ideal_quotient(gb("s1*s2"), P("s1")).gens == (P("s2"),)

    def test_by_one(self):
        I = gb("s1^2 - s2", "s2^2 - 1")
        assert ideal_quotient(I, P("1")).gens == I.gens

    def test_square(self):
        assert ideal_quotient(gb("s1^2"), P("s1")).gens == (P("s1"),)

    def test_zero_divisor_rejected(self):
        with pytest.raises(ValueError):
            ideal_quotient(gb("s1"), LaurentPoly.zero(2))

    def test_defining_property_brute_force(self):
        # g ∈ (I : f)  <=>  g f ∈ I, checked on every monomial up to degree 3
        I = gb("s1^2*s2 - s1", "s2^2 - s2")
        f = P("s1*s2 - 1")
        Q = ideal_quotient(I, f)
        for e in monomials_up_to(2, 3):
            if min(e) < 0:
                continue
            m = LaurentPoly.monomial(e)
            assert (m in Q) == ((m * f) in I)
        assert all((g * f) in I for g in Q.gens)


class TestSaturate:
    def test_strip_variable_factor(self):
        assert saturate(gb("s1*s2 - s1"), P("s1")).gens == (P("s2 - 1"),)

    def test_unit_on_torus(self):
        assert is_unit_ideal(saturate(gb("s1"), P("s1*s2")))

    def test_non_monomial(self):
        # (s1 (s1 - 1)) : (s1 - 1)^inf = (s1)
        assert saturate(gb("s1^2 - s1"), P("s1 - 1")).gens == (P("s1"),)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            saturate(gb("s1"), LaurentPoly.zero(2))

    @pytest.mark.parametrize("gens", [("s1^2*s2 - s1", "s2^2*s1 - s2"), ("s1*s2^2 - s1*s2", "s1^2 - s1*s2"),
                                      ("s1^3 - s2*s1", "s1*s2 - s2")])
    def test_against_extra_variable_route(self, gens):
        # monomial saturation runs through homogenization; compare with the
        # textbook I + (1 - t f) elimination done by sympy
        I = gb(*gens)
        S = saturate(I, P("s1*s2"))
        s1, s2, t = sympy.symbols("s1 s2 t")
        G = sympy.groebner([to_sympy(g, (s1, s2)) for g in I.gens] + [1 - t * s1 * s2], t, s1, s2,
                           order="lex", domain="QQ")
        expected = buchberger([P(str(g).replace("**", "^"), 2) for g in G.exprs if t not in g.free_symbols], GREVLEX, 2)
        assert S.gens == expected.gens
        assert contains_ideal(S, I)


class TestEliminate:
    def test_to_zero(self):
        I = gb("s1 - s2")
        E = eliminate(I, [0])
        assert E.is_zero
        # no nonzero polynomial in s2 of degree <= 3 lies in I: normal forms are independent
        nfs = [normal_form(P(f"s2^{k}"), I).as_dict() for k in range(4)]
        assert rank(nfs) == 4

    def test_keeps_second_coordinate(self):
        assert eliminate(gb("s1 - 1", "s2 - 1"), [0]).gens == (P("s2 - 1"),)

    def test_drop_nothing(self):
        I = gb("s1^2 - s2", "s1*s2 - 1")
        assert eliminate(I, []).gens == I.gens

    def test_twisted_cubic(self):
        I = gb("s2 - s1^2", "s3 - s1^3", n=3)
        E = eliminate(I, [0])
        assert E.gens == buchberger([P("s2^3 - s3^2", 3)], GREVLEX, 3).gens


class TestDimension:
    def test_examples(self):
        assert dimension(buchberger([], GREVLEX, 2)) == 2
        assert dimension(gb("s1 - 1")) == 1
        assert dimension(gb("s1 - 1", "s2 - 1")) == 0

    def test_unit_ideal_raises(self):
        with pytest.raises(UnitIdealError):
            dimension(gb("s1", "s1 - 1"))

    def test_order_independent(self):
        gens = ("s1*s2 - s3", "s1^2 - s2", )
        assert dimension(gb(*gens, n=3)) == dimension(gb(*gens, n=3, order=LEX)) == 1


@pytest.mark.parametrize("gens,unit", [(("s1", "s1 - 1"), True), (("s1 - 1",), False)])
def test_is_unit_ideal(gens, unit):
    assert is_unit_ideal(gb(*gens)) is unit


# properties -----------------------------------------------------------------

ideal_gens = st.lists(polys(n=2, deg=2), min_size=1, max_size=3)
orders = st.sampled_from([GREVLEX, LEX, block_order([0]), block_order([1], LEX)])


@given(ideal_gens, orders)
def test_output_is_reduced_groebner(gens, order):
    G = buchberger(gens, order, 2)
    assert is_groebner(G) and is_reduced(G)
    assert all(normal_form(g, G).is_zero for g in gens)


@given(ideal_gens, st.randoms(use_true_random=False),
       st.lists(st.fractions(min_value=-5, max_value=5).filter(bool), min_size=3, max_size=3))
def test_unique_under_permutation_and_rescaling(gens, rnd, scales):
    G = buchberger(gens, GREVLEX, 2)
    shuffled = [g.scale(c) for g, c in zip(gens, scales)]
    rnd.shuffle(shuffled)
    assert buchberger(shuffled, GREVLEX, 2).gens == G.gens


@given(ideal_gens, polys(n=2, deg=3, max_terms=5))
def test_normal_form_idempotent(gens, p):
    G = buchberger(gens, GREVLEX, 2)
    r = normal_form(p, G)
    assert normal_form(r, G) == r
    assert normal_form(p - r, G).is_zero


@given(ideal_gens, st.lists(polys(n=2, deg=2, nonzero=False), min_size=3, max_size=3))
def test_combinations_are_members(gens, hs):
    G = buchberger(gens, GREVLEX, 2)
    g = sum((h * a for h, a in zip(hs, gens)), LaurentPoly.zero(2))
    assert normal_form(g, G).is_zero


@given(ideal_gens, polys(n=2, deg=2))
def test_dimension_monotone(gens, extra):
    I = buchberger(gens, GREVLEX, 2)
    J = buchberger(gens + [extra], GREVLEX, 2)
    assert contains_ideal(J, I)
    if not is_unit_ideal(J):
        assert dimension(I) >= dimension(J)


@given(st.lists(polys(n=2, deg=2), min_size=1, max_size=2))
def test_matches_sympy(gens):
    assert as_term_sets(buchberger(gens, GREVLEX, 2)) == sympy_reduced_gb(gens, 2, GREVLEX)


@given(st.lists(polys(n=3, deg=1, max_terms=3), min_size=1, max_size=2), st.sampled_from([[0], [2], [0, 1]]))
def test_eliminate_stays_in_ideal(gens, drop):
    I = buchberger(gens, GREVLEX, 3)
    E = eliminate(I, drop)
    for g in E.gens:
        assert all(e[i] == 0 for e, _ in g.terms for i in drop)
        assert normal_form(g, I).is_zero
    # against a lex-style elimination computed from scratch
    ref = buchberger(gens, block_order(drop), 3)
    kept = [g for g in ref.gens if all(e[i] == 0 for e, _ in g.terms for i in drop)]
    assert ideal_equal(E, buchberger(kept, GREVLEX, 3))


@given(st.lists(polys(n=2, deg=2), min_size=1, max_size=2))
def test_saturation_contains_and_is_stable(gens):
    I = buchberger(gens, GREVLEX, 2)
    S = saturate(I, P("s1*s2"))
    assert contains_ideal(S, I)
    assert saturate(S, P("s1*s2")).gens == S.gens
    # every generator of S times a power of s1 s2 lands in I
    f = P("s1*s2")
    for g in S.gens:
        assert any((g * f ** m) in I for m in range(8))


@given(st.lists(polys(n=3, deg=2, max_terms=4), min_size=1, max_size=3), st.sampled_from([[0], [1, 2], [0, 1, 2]]))
def test_homogeneous_saturation_matches_two_step_route(gens, variables):
    two_step = saturate_variables(buchberger(gens, GREVLEX, 3), variables)
    assert saturated_basis(gens, variables, 3).gens == two_step.gens


@given(st.lists(polys(n=3, deg=2, max_terms=3), min_size=1, max_size=4), orders)
def test_criteria_check_agrees_with_exhaustive_check(gens, order):
    G = buchberger(gens, order, 3)
    assert is_groebner(G, criteria=True) and is_groebner(G)
    # the monic generators themselves are usually not a basis
    raw = GroebnerBasis(order, 3, tuple(g.scale(1 / dict(g.terms)[max(g.support(), key=order.key)]) for g in gens))
    assert is_groebner(raw, criteria=True) == is_groebner(raw)


def test_non_basis_detected():
    G = GroebnerBasis(GREVLEX, 2, (P("s1^2 - s2"), P("s1*s2 - 1")))
    assert not is_groebner(G) and not is_groebner(G, criteria=True)
