import random
from fractions import Fraction

import pytest
from sympy import Matrix

from config.settings import RANDOM_SEED
from core.errors import InputError
from core.exactlin import (
    LinearCombination,
    QMatrix,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    row_space_basis,
    solve,
)


@pytest.mark.parametrize(
    "text, expected",
    [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (" 5 / 10 ", Fraction(1, 2)), ("+7", Fraction(7)), (4, Fraction(4))],
)
def test_parse_rational_accepts(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "0.5", "", "1/-2", "abc", 0.5, True, None])
def test_parse_rational_rejects(text):
    with pytest.raises(InputError):
        parse_rational(text, "coeffs")


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_linear_combination_drops_zeros_and_adds():
    x = LinearCombination({"a": 1, "b": 0, "c": Fraction(1, 2)})
    y = LinearCombination({"a": -1, "c": Fraction(1, 2)})
    assert set(x) == {"a", "c"}
    assert (x + y) == {"c": Fraction(1)}
    assert (x - x).is_zero()
    assert x.scale(0).is_zero()
    assert (2 * x).coefficient("a") == 2
    assert x.coefficient("missing") == 0


def test_linear_combination_keeps_subclass():
    class Tagged(LinearCombination):
        pass

    t = Tagged({"k": 1})
    assert type(t + t) is Tagged
    assert type(-t) is Tagged


def test_qmatrix_rejects_out_of_range():
    with pytest.raises(IndexError):
        QMatrix(2, 2, {(2, 0): 1})


def test_qmatrix_arithmetic():
    m = QMatrix.from_rows([[1, 2], [0, 1]])
    assert m @ QMatrix.identity(2) == m
    assert m.transpose()[(1, 0)] == 2
    assert (m @ m).to_lists() == [[1, 4], [0, 1]]
    assert m.apply([1, 1]) == [3, 1]
    assert QMatrix.zero(3, 2).is_zero()
    assert m.to_dense()[0, 1] == 2


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[1, 2], [2, 4]], 1),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ([[0, 0], [0, 0]], 0),
        ([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], 1),
        ([[0, 1, 2], [0, 2, 4], [1, 0, 0]], 2),
    ],
)
def test_rank_small(rows, expected):
    assert rank(QMatrix.from_rows(rows)) == expected


def test_rank_agrees_with_sympy_on_random_matrices():
    rng = random.Random(RANDOM_SEED)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6 else 0 for _ in range(c)] for _ in range(r)]
        assert rank(QMatrix.from_rows(rows)) == Matrix(rows).rank()


def test_kernel_basis_spans_null_space():
    m = QMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    kernel = kernel_basis(m)
    assert len(kernel) == m.cols - rank(m)
    for v in kernel:
        assert not any(m.apply(v))


def test_solve_consistent_and_inconsistent():
    m = QMatrix.from_rows([[1, 1], [1, -1]])
    x = solve(m, [3, 1])
    assert x == [2, 1]

    singular = QMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(singular, [1, 3]) is None
    assert singular.apply(solve(singular, [1, 2])) == [1, 2]


def test_row_space_basis_is_reduced():
    basis = row_space_basis([[2, 4], [1, 2], [0, 3]])
    assert basis == [[1, 0], [0, 1]]


def _random_rows(rng, max_size=6):
    r, c = rng.randint(1, max_size), rng.randint(1, max_size)
    return [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6 else 0 for _ in range(c)] for _ in range(r)]


def test_rank_ignores_row_order_and_row_scaling():
    rng = random.Random(RANDOM_SEED + 1)
    for _ in range(40):
        rows = _random_rows(rng)
        expected = rank(QMatrix.from_rows(rows))

        shuffled = list(rows)
        rng.shuffle(shuffled)
        assert rank(QMatrix.from_rows(shuffled)) == expected

        factors = [Fraction(rng.choice([-5, -2, 3, 7]), rng.randint(1, 4)) for _ in rows]
        scaled = [[f * x for x in row] for f, row in zip(factors, rows)]
        assert rank(QMatrix.from_rows(scaled)) == expected


def test_rank_nullity():
    rng = random.Random(RANDOM_SEED + 2)
    for _ in range(40):
        m = QMatrix.from_rows(_random_rows(rng))
        kernel = kernel_basis(m)
        assert rank(m) + len(kernel) == m.cols
        for v in kernel:
            assert not any(m.apply(v))
        if kernel:
            assert rank(QMatrix.from_rows(kernel)) == len(kernel)
