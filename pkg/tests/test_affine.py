import random
from fractions import Fraction

import pytest

from core.affine import (
    Element, Level, Mode, PbwOrder, degree_of, is_canonical, mode_bracket, multiply, normal_order, parity_of,
    supercommutator,
)
from core.errors import LevelRequiredError, NotAdmissibleError
from core.superalgebra import Generator

G = Generator


def M(name: str, n: int) -> Mode:
    return Mode(Generator(name), n)


def _reduce_by_random_swaps(x: Element, level: Level, order: PbwOrder, rng: random.Random) -> Element:
    """Straighten by repeatedly fixing a randomly chosen out-of-order adjacent pair."""
    work = dict(x.terms)
    done = {}
    while work:
        word, c = work.popitem()
        bad = []
        for i, (left, right) in enumerate(zip(word, word[1:])):
            kl, kr = order.key(left), order.key(right)
            if kl > kr or (kl == kr and left.odd):
                bad.append(i)
        if not bad:
            done[word] = done.get(word, 0) + c
            continue
        i = rng.choice(bad)
        a, b = word[i], word[i + 1]
        head, tail = word[:i], word[i + 2:]
        produced = {}
        if a == b:
            # odd square
            for mono, cb in mode_bracket(a, b, level).terms.items():
                produced[head + mono + tail] = Fraction(cb, 2)
        else:
            swap = -1 if (a.odd and b.odd) else 1
            produced[head + (b, a) + tail] = Fraction(swap)
            for mono, cb in mode_bracket(a, b, level).terms.items():
                produced[head + mono + tail] = produced.get(head + mono + tail, 0) + cb
        for w, cw in produced.items():
            value = work.get(w, 0) + c * cw
            if value:
                work[w] = value
            else:
                work.pop(w, None)
    return Element(done)


class TestLevel:

    def test_admissible_decomposition(self):
        assert Level.of("-1/2").admissible_decomposition() == (0, 2)
        assert Level.of("1/2").admissible_decomposition() == (2, 2)
        assert Level.of(0).admissible_decomposition() == (0, 1)

    @pytest.mark.parametrize("k", ["-1", "-2", "-3/2"])
    def test_non_admissible(self, k):
        with pytest.raises(NotAdmissibleError):
            Level.of(k).admissible_decomposition()

    def test_rejects_malformed_text(self):
        with pytest.raises(ValueError):
            Level.of("1/2/3")


class TestModeBracket:

    def test_f12_with_e12(self, level_neg_half):
        result = mode_bracket(M("f12", 1), M("e12", -2), level_neg_half)
        assert result == Element({(M("h1", -1),): -1, (M("h2", -1),): -1})

    def test_central_term(self, level_neg_half):
        assert mode_bracket(M("h1", 2), M("h2", -2), level_neg_half) == Element.scalar(-1)

    def test_central_term_scales_with_level(self):
        assert mode_bracket(M("h1", 2), M("h2", -2), Level.of("3/5")) == Element.scalar(Fraction(6, 5))

    def test_odd_zero_mode_square(self, level_neg_half):
        assert mode_bracket(M("e1", 0), M("e1", 0), level_neg_half) == 0

    def test_missing_level(self):
        with pytest.raises(LevelRequiredError):
            mode_bracket(M("h1", 1), M("h2", -1))

    def test_no_level_needed_without_central_term(self):
        assert mode_bracket(M("e1", 1), M("e2", -1)) == Element.word(M("e12", 0))


class TestNormalOrder:

    def test_odd_swap(self, level_neg_half):
        x = normal_order(Element.word(M("e2", -1), M("e1", -1)), level_neg_half)
        assert x == Element({(M("e1", -1), M("e2", -1)): -1, (M("e12", -2),): 1})

    def test_canonical_fixed_point(self, level_neg_half):
        word = Element.word(M("f12", -2), M("h1", -1), M("e12", -1))
        assert normal_order(word, level_neg_half) == word

    def test_odd_square_is_zero(self, level_neg_half):
        assert normal_order(Element.word(M("e1", -1), M("e1", -1)), level_neg_half) == 0

    def test_even_square_is_kept(self, level_neg_half):
        word = Element.word(M("e12", -1), M("e12", -1))
        assert normal_order(word, level_neg_half) == word

    def test_output_is_canonical(self, level_neg_half):
        x = Element.word(M("e12", 1), M("f1", -1), M("h2", 0), M("f12", -1))
        for order in PbwOrder:
            for mono in normal_order(x, level_neg_half, order).terms:
                assert is_canonical(mono, order)

    def test_central_term_without_level(self):
        with pytest.raises(LevelRequiredError):
            normal_order(Element.word(M("h1", 1), M("h2", -1)))

    def test_random_products_are_confluent(self, level_half):
        rng = random.Random(20240611)
        modes = [Mode(g, n) for g in Generator for n in range(-2, 2)]
        for _ in range(200):
            x = Element.word(*rng.choices(modes, k=rng.randint(2, 6)), coeff=rng.randint(1, 5))
            order = rng.choice(list(PbwOrder))
            assert normal_order(x, level_half, order) == _reduce_by_random_swaps(x, level_half, order, rng)

    def test_degree_and_parity_are_conserved(self, level_half):
        rng = random.Random(7)
        modes = [Mode(g, n) for g in Generator for n in range(-3, 3)]
        for _ in range(200):
            word = tuple(rng.choices(modes, k=rng.randint(1, 6)))
            for order in PbwOrder:
                for mono in normal_order(Element.word(*word), level_half, order).terms:
                    assert degree_of(mono) == degree_of(word), word
                    assert parity_of(mono) == parity_of(word), word

    def test_multiply_is_associative(self, level_half):
        a = Element.word(M("e1", -1), coeff=2)
        b = Element({(M("f1", 1),): 1, (M("h2", 0),): 3})
        c = Element.word(M("e2", -2), M("f12", 1))
        left = multiply(multiply(a, b, level_half), c, level_half)
        right = multiply(a, multiply(b, c, level_half), level_half)
        assert left == right


class TestHomomorphism:

    def test_supercommutator_is_the_bracket(self, level_neg_half):
        modes = [Mode(g, n) for g in Generator for n in range(-2, 3)]
        for a in modes:
            for b in modes:
                assert supercommutator(a, b, level_neg_half) == mode_bracket(a, b, level_neg_half), (a, b)

    def test_in_generator_order(self, level_half):
        a, b = M("f12", 2), M("e12", -2)
        assert supercommutator(a, b, level_half, PbwOrder.GENERATOR) == mode_bracket(a, b, level_half)
