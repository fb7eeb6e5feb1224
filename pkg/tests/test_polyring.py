import random
from fractions import Fraction

import pytest
import sympy

from cli.expression import parse_bipoly
from core.affine import Level
from core.errors import UnsupportedSystemError
from core.polyring import (
    T1, T1_SYMBOL, T2, T2_SYMBOL, BiPoly, MonomialOrder, QuotientDim, Variety, admissible_weights, groebner,
    ideal_contains, is_ordinary, leading_form, linear_factors, normal_form, ordinary_lines, quotient_dim,
    s_polynomial, solve_factored, solve_variety, standard_monomials, verify_on_line,
)

P1 = parse_bipoly("t1*(2*t1-4*t2+1)")
P2 = parse_bipoly("t2*(2*t2-4*t1+1)")
Q1 = parse_bipoly("t1*(t1-2*t2)")
Q2 = parse_bipoly("t2*(t2-2*t1)")

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def _sympy_groebner(gens, order: MonomialOrder):
    method = "grevlex" if order is MonomialOrder.DEGREVLEX else "lex"
    basis = sympy.groebner([g.to_sympy().as_expr() for g in gens], T1_SYMBOL, T2_SYMBOL, order=method)
    return {BiPoly.from_sympy(sympy.Poly(g, T1_SYMBOL, T2_SYMBOL, domain=sympy.QQ)).monic(order) for g in basis.exprs}


def _random_poly(rng: random.Random) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(0, 3)
        d1 = rng.randint(0, d)
        terms[(d1, d - d1)] = rng.randint(-4, 4)
    p = BiPoly(terms)
    return p if p else T1 + BiPoly.constant(rng.randint(1, 3))


class TestBiPoly:

    def test_arithmetic(self):
        assert (T1 + T2) * (T1 - T2) == T1 * T1 - T2 * T2
        assert P1.evaluate(HALF, 0) == 1
        assert leading_form(P1) == parse_bipoly("2*t1^2-4*t1*t2")

    def test_orders(self):
        p = parse_bipoly("t1*t2 + t2^3 + t1^2")
        assert p.leading_monomial(MonomialOrder.DEGREVLEX) == (0, 3)
        assert p.leading_monomial(MonomialOrder.LEX) == (2, 0)
        assert parse_bipoly("t1*t2 + t2^2").leading_monomial() == (1, 1)

    def test_sympy_round_trip(self):
        assert BiPoly.from_sympy(P1.to_sympy()) == P1


class TestGroebner:

    def test_single_generator(self):
        assert groebner([T1]) == [T1]

    def test_boundary_level_ideal(self):
        basis = groebner([P1, P2])
        assert normal_form(P1, basis) == 0
        assert normal_form(P2, basis) == 0
        assert set(basis) == _sympy_groebner([P1, P2], MonomialOrder.DEGREVLEX)

    def test_c2_ideal_has_pure_powers(self):
        leads = [g.leading_monomial() for g in groebner([Q1, Q2])]
        assert any(e[1] == 0 for e in leads)
        assert any(e[0] == 0 for e in leads)

    def test_unit_ideal(self):
        assert groebner([T1, T1 + BiPoly.constant(1)]) == [BiPoly.constant(1)]

    def test_needs_a_generator(self):
        with pytest.raises(ValueError):
            groebner([BiPoly()])

    def test_membership(self):
        assert ideal_contains([P1, P2], P1 * T2 + P2.scale(3))
        assert not ideal_contains([P1, P2], T1)

    @pytest.mark.parametrize("order", list(MonomialOrder))
    def test_random_ideals(self, order):
        rng = random.Random(97 if order is MonomialOrder.LEX else 13)
        for _ in range(50):
            gens = [_random_poly(rng) for _ in range(rng.randint(2, 3))]
            basis = groebner(gens, order)
            assert set(basis) == _sympy_groebner(gens, order)
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    assert normal_form(s_polynomial(basis[i], basis[j], order), basis, order) == 0
            for g in gens:
                assert normal_form(g, basis, order) == 0


class TestQuotient:

    def test_finite_at_boundary_level(self):
        assert quotient_dim([P1, P2]) == QuotientDim.Finite(4)
        assert len(standard_monomials(groebner([P1, P2]))) == 4

    def test_c2_quotient(self):
        assert quotient_dim([Q1, Q2]) == QuotientDim.Finite(4)

    def test_level_half_data_has_two_generators(self, p0_half_displayed):
        assert len(p0_half_displayed) == 2
        assert all(p.total_degree() == 6 for p in p0_half_displayed)

    def test_infinite_at_level_half(self, p0_half_displayed):
        assert quotient_dim(p0_half_displayed) == QuotientDim.Infinite()

    def test_independent_of_order(self, p0_half_displayed):
        for gens in ([P1, P2], [Q1, Q2], p0_half_displayed):
            assert quotient_dim(gens, MonomialOrder.LEX) == quotient_dim(gens, MonomialOrder.DEGREVLEX)

    def test_unit_ideal_is_zero(self):
        assert quotient_dim([BiPoly.constant(3)]) == QuotientDim.Finite(0)

    def test_str(self):
        assert str(QuotientDim.Finite(4)) == "finite(4)"
        assert str(QuotientDim.Infinite()) == "infinite"


class TestSolve:

    def test_boundary_level(self):
        assert solve_factored([P1, P2]) == sorted([(0, 0), (-HALF, 0), (0, -HALF), (HALF, HALF)])

    def test_coordinate_axes(self):
        assert solve_factored([T1, T2]) == [(0, 0)]

    def test_c2_generators(self):
        assert solve_factored([Q1, Q2]) == [(0, 0)]

    def test_inconsistent(self):
        assert solve_factored([T1, T1 + BiPoly.constant(1)]) == []

    def test_common_line(self):
        with pytest.raises(UnsupportedSystemError):
            solve_factored([T1, T1 * T2])

    def test_irreducible_quadratic(self):
        with pytest.raises(UnsupportedSystemError):
            linear_factors(T1 * T1 + BiPoly.constant(1))


class TestVariety:

    def test_no_common_factor(self):
        variety = solve_variety([P1, P2])
        assert variety.lines == ()
        assert list(variety.points) == solve_factored([P1, P2])

    def test_common_line_and_point(self):
        line = T1 + T2 - BiPoly.constant(1)
        assert solve_variety([line * T1, line * T2]) == Variety(((1, 1, -1),), ((0, 0),))

    def test_points_on_a_line_are_dropped(self):
        line = T1 + T2 - BiPoly.constant(1)
        assert solve_variety([line * T1, line * (T2 - BiPoly.constant(1))]).points == ()

    def test_irrational_zeros(self):
        with pytest.raises(UnsupportedSystemError, match="irrational"):
            solve_variety([T1 * T1 - BiPoly.constant(2), T2])

    def test_level_half(self, p0_half_displayed):
        variety = solve_variety(p0_half_displayed)
        assert variety.lines == tuple((1, 1, -c) for c in (2, 1, HALF, -HALF))
        assert set(variety.points) == {(0, 0), (-THREE_HALVES, 0), (0, -THREE_HALVES), (THREE_HALVES, THREE_HALVES)}
        assert set(variety.points) == set(admissible_weights(Level.of("1/2")))


class TestOrdinary:

    @pytest.mark.parametrize("point, expected", [
        ((0, 0), True),
        ((HALF, HALF), True),
        ((THREE_HALVES, THREE_HALVES), True),
        ((-HALF, 0), False),
        ((HALF, 0), False),
        ((-1, 0), False),
    ])
    def test_points(self, point, expected):
        assert is_ordinary(point) is expected

    def test_lines(self):
        lines = [(1, 1, -c) for c in (2, 1, HALF, -HALF)] + [(1, 0, -1), (1, 1, 1)]
        assert ordinary_lines(lines) == [(1, 1, -2), (1, 1, -1)]

    def test_admissible_at_boundary_level(self):
        ordinary = [p for p in admissible_weights(Level.of("-1/2")) if is_ordinary(p)]
        assert ordinary == [(0, 0), (HALF, HALF)]


class TestLines:

    @pytest.mark.parametrize("shift", [Fraction(-1, 2), HALF, 1, 2])
    def test_families_at_level_half(self, p0_half_displayed, shift):
        for p in p0_half_displayed:
            assert verify_on_line(p, 0, 1, shift, -1)

    @pytest.mark.parametrize("point", [(0, 0), (-THREE_HALVES, 0), (0, -THREE_HALVES), (THREE_HALVES, THREE_HALVES)])
    def test_isolated_points_at_level_half(self, p0_half_displayed, point):
        for p in p0_half_displayed:
            assert verify_on_line(p, point[0], 0, point[1], 0)

    def test_nonzero_on_line(self):
        assert not verify_on_line(T1, 1, 0, 0, 1)

    def test_line_factor(self):
        p = (T1 + T2 - BiPoly.constant(1)) * T1 * T1
        assert verify_on_line(p, 0, 1, 1, -1)
        assert verify_on_line(p, 0, 0, 5, 1)
        assert not verify_on_line(p, 0, 1, 2, -1)


class TestAdmissible:

    def test_boundary_level(self):
        assert admissible_weights(Level.of("-1/2")) == sorted([(0, 0), (-HALF, 0), (0, -HALF), (HALF, HALF)])

    def test_level_zero(self):
        assert admissible_weights(Level.of(0)) == [(0, 0)]

    def test_level_half(self):
        assert admissible_weights(Level.of("1/2")) == sorted(
            [(0, 0), (-THREE_HALVES, 0), (0, -THREE_HALVES), (THREE_HALVES, THREE_HALVES)]
        )
