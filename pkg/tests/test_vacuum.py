import random
from fractions import Fraction

import pytest

from core.affine import Element, Level, Mode, mode_bracket
from core.errors import NonHomogeneousStateError, NonNegativeModeError
from core.superalgebra import Generator, hweight
from core.vacuum import (
    State, Weight, act, act_element, apply_to_vacuum, homogeneous_weight, vacuum, weight_of, weight_space_basis,
)


def M(name: str, n: int) -> Mode:
    return Mode(Generator(name), n)


def _pbw_counts(max_degree: int):
    """Coefficients of prod_n (1+q^n)^4 / (1-q^n)^4 up to q^max_degree."""
    series = [1] + [0] * max_degree
    for n in range(1, max_degree + 1):
        for _ in range(4):
            # odd modes: (1 + q^n)
            series = [series[d] + (series[d - n] if d >= n else 0) for d in range(max_degree + 1)]
            # even modes: 1 / (1 - q^n)
            for d in range(n, max_degree + 1):
                series[d] += series[d - n]
    return series


def _all_monomials(degree: int):
    out = []
    for w1 in range(-degree, degree + 1):
        for w2 in range(-degree, degree + 1):
            out.extend(weight_space_basis(None, Weight(Fraction(w1), Fraction(w2), degree)))
    return out


class TestAction:

    def test_raising_mode_kills_v1(self, v1):
        assert act(M("e1", 0), v1) == 0

    def test_cartan_zero_mode_is_diagonal(self, level_neg_half):
        s = State.from_terms({(M("e12", -1),): 1}, level_neg_half)
        assert act(M("h1", 0), s) == s

    def test_positive_mode_kills_vacuum(self, level_neg_half):
        assert act(M("f12", 1), vacuum(level_neg_half)) == 0

    def test_every_zero_mode_kills_vacuum(self, level_neg_half):
        for g in Generator:
            assert act(Mode(g, 0), vacuum(level_neg_half)) == 0

    def test_central_term_reaches_vacuum(self, level_neg_half):
        s = State.from_terms({(M("h2", -1),): 1}, level_neg_half)
        assert act(M("h1", 1), s) == vacuum(level_neg_half).scale(level_neg_half.k)

    def test_apply_to_vacuum_straightens(self, level_neg_half):
        s = apply_to_vacuum(Element.word(M("e1", 0), M("e2", -1)), level_neg_half)
        assert s == State.from_terms({(M("e12", -1),): 1}, level_neg_half)

    def test_states_hold_negative_modes_only(self, level_neg_half):
        with pytest.raises(NonNegativeModeError):
            State.from_terms({(M("e1", 0),): 1}, level_neg_half)

    def test_states_hold_canonical_monomials_only(self, level_neg_half):
        with pytest.raises(ValueError):
            State.from_terms({(M("e12", -1), M("f12", -1)): 1}, level_neg_half)

    def test_representation_property(self, level_half):
        rng = random.Random(7)
        modes = [Mode(g, n) for g in Generator for n in range(-2, 3)]
        pool = [mono for d in range(1, 4) for mono in _all_monomials(d)]
        for _ in range(100):
            a, b = rng.choice(modes), rng.choice(modes)
            s = State.from_terms({mono: rng.randint(-3, 3) for mono in rng.sample(pool, 2)}, level_half)
            swap = -1 if (a.odd and b.odd) else 1
            lhs = act(a, act(b, s)) - act(b, act(a, s)).scale(swap)
            assert lhs == act_element(mode_bracket(a, b, level_half), s), (a, b)


class TestWeights:

    def test_weight_of(self):
        assert weight_of((M("e12", -2),)) == Weight(1, 1, 2)
        assert weight_of(()) == Weight(0, 0, 0)
        assert weight_of((M("e1", -1), M("e2", -1))) == Weight(1, 1, 2)

    def test_homogeneous_weight(self, v1):
        assert homogeneous_weight(v1) == Weight(1, 1, 2)

    def test_mixed_weights(self, level_neg_half):
        s = State.from_terms({(M("e12", -1),): 1, (M("f12", -1),): 1}, level_neg_half)
        with pytest.raises(NonHomogeneousStateError):
            homogeneous_weight(s)

    def test_zero_state_has_no_weight(self, level_neg_half):
        with pytest.raises(NonHomogeneousStateError):
            homogeneous_weight(State(Element(), level_neg_half))

    def test_action_shifts_weight(self, level_half):
        for mono in _all_monomials(2):
            s = State.from_terms({mono: 1}, level_half)
            base = weight_of(mono)
            for g in Generator:
                for n in (-1, 0, 1):
                    image = act(Mode(g, n), s)
                    if not image:
                        continue
                    c1, c2 = hweight(g)
                    assert homogeneous_weight(image) == Weight(base.w1 + c1, base.w2 + c2, base.degree - n)

    def test_cartan_eigenvalues(self, level_half):
        for mono in _all_monomials(3):
            s = State.from_terms({mono: 1}, level_half)
            w = weight_of(mono)
            assert act(M("h1", 0), s) == s.scale(w.w1)
            assert act(M("h2", 0), s) == s.scale(w.w2)


class TestWeightSpaceBasis:

    def test_degree_two(self, level_neg_half):
        assert weight_space_basis(level_neg_half, Weight(1, 1, 2)) == [
            (M("e1", -1), M("e2", -1)),
            (M("h1", -1), M("e12", -1)),
            (M("h2", -1), M("e12", -1)),
            (M("e12", -2),),
        ]

    def test_degree_zero(self):
        assert weight_space_basis(Level.of(3), Weight(0, 0, 0)) == [()]

    def test_contains_singular_monomials(self, level_half):
        basis = weight_space_basis(level_half, Weight(3, 3, 6))
        assert (M("e12", -2),) * 3 in basis
        assert (M("e12", -4), M("e12", -1), M("e12", -1)) in basis
        assert (M("e1", -3), M("e2", -1), M("e12", -1), M("e12", -1)) in basis
        assert len(basis) == len(set(basis))

    def test_counts_match_generating_function(self):
        counts = _pbw_counts(4)
        for d in range(5):
            assert len(_all_monomials(d)) == counts[d]

    def test_odd_modes_never_repeat(self):
        for mono in _all_monomials(4):
            odd = [m for m in mono if m.odd]
            assert len(odd) == len(set(odd))

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            weight_space_basis(None, Weight(0, 0, -1))
