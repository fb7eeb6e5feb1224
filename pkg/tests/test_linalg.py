import random
from fractions import Fraction
from math import gcd

import sympy

from core.linalg import echelon, nullspace, primitive_integer, rank, rref


def _sparse(matrix):
    return [{c: Fraction(v) for c, v in enumerate(row) if v} for row in matrix]


class TestElimination:

    def test_rref_unit_pivots(self):
        rows = _sparse([[2, 4, 6], [1, 3, 5]])
        assert rref(rows, 3) == [{0: 1, 2: -1}, {1: 1, 2: 2}]

    def test_echelon_rows_are_integral_and_primitive(self):
        rows = _sparse([[Fraction(1, 2), Fraction(1, 3), 0], [0, Fraction(2, 3), Fraction(4, 9)]])
        for col, row in echelon(rows, 3).items():
            assert all(isinstance(v, int) for v in row.values())
            assert gcd(*row.values()) == 1
            assert col == min(row)

    def test_nullspace_of_zero_rows(self):
        assert nullspace([], 2) == [[1, 0], [0, 1]]

    def test_nullspace_kills_rows(self):
        rows = _sparse([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 1]])
        kernel = nullspace(rows, 4)
        assert len(kernel) == 2
        for vector in kernel:
            assert all(sum(v * vector[c] for c, v in row.items()) == 0 for row in rows)

    def test_primitive_integer(self):
        assert primitive_integer([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]
        assert primitive_integer([0, 0]) == [0, 0]

    def test_rank_against_sympy(self):
        rng = random.Random(11)
        for _ in range(40):
            nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
            matrix = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6 else 0
                       for _ in range(ncols)] for _ in range(nrows)]
            expected = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) if v else 0 for v in row]
                                     for row in matrix]).rank()
            assert rank(_sparse(matrix), ncols) == expected
            assert len(nullspace(_sparse(matrix), ncols)) == ncols - expected
