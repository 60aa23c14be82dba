"""Exact determinants: examples, oracle agreement, multilinearity."""

import random

import pytest

from phasetoda.algebra import MultiPoly, RingMatrix, det_cofactor, det_exact
from phasetoda.errors import NonSquare


def test_det_2x2():
    m = RingMatrix.from_rows([[1, 2], [3, 4]])
    assert det_exact(m) == MultiPoly.const(-2)


def test_det_empty_is_one():
    assert det_exact(RingMatrix(0, 0, [])) == MultiPoly.const(1)


def test_det_non_square():
    with pytest.raises(NonSquare):
        det_exact(RingMatrix(1, 2, [1, 2]))


def test_vandermonde_against_cofactor_oracle():
    a, b, c = (MultiPoly.var(ch) for ch in "abc")
    m = RingMatrix.from_rows([[1, a, a ** 2], [1, b, b ** 2], [1, c, c ** 2]])
    expanded = (b - a) * (c - a) * (c - b)
    assert det_exact(m) == expanded
    assert det_cofactor(m) == expanded


def _random_poly_matrix(rng, n):
    vars_ = [MultiPoly.var(ch) for ch in ("p", "q")]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            poly = MultiPoly.const(rng.randint(-3, 3))
            for v in vars_:
                if rng.random() < 0.5:
                    poly = poly + rng.randint(-2, 2) * v
            row.append(poly)
        rows.append(row)
    return rows


@pytest.mark.parametrize("n", [3, 4])
def test_det_alternating_and_swap(n):
    rng = random.Random(100 + n)
    for _ in range(5):
        rows = _random_poly_matrix(rng, n)
        d = det_exact(RingMatrix.from_rows(rows))
        swapped = [rows[1], rows[0]] + rows[2:]
        assert det_exact(RingMatrix.from_rows(swapped)) == -d
        repeated = [rows[0], rows[0]] + rows[2:]
        assert det_exact(RingMatrix.from_rows(repeated)).is_zero()


@pytest.mark.parametrize("n", [3, 4])
def test_det_row_multilinearity(n):
    rng = random.Random(200 + n)
    rows = _random_poly_matrix(rng, n)
    extra = _random_poly_matrix(rng, n)[0]
    summed = [
        [rows[0][j] + extra[j] for j in range(n)]
    ] + rows[1:]
    lhs = det_exact(RingMatrix.from_rows(summed))
    rhs = det_exact(RingMatrix.from_rows(rows)) + det_exact(
        RingMatrix.from_rows([extra] + rows[1:])
    )
    assert lhs == rhs


@pytest.mark.parametrize("n", [5, 6])
def test_bareiss_matches_cofactor(n):
    rng = random.Random(300 + n)
    rows = _random_poly_matrix(rng, n)
    m = RingMatrix.from_rows(rows)
    assert det_exact(m) == det_cofactor(m)


def test_bareiss_zero_pivot_swap():
    m = RingMatrix.from_rows(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 1, 0, 1],
            [2, 1, 0, 1, 2],
            [3, 0, 1, 0, 3],
            [4, 1, 2, 3, 0],
        ]
    )
    assert det_exact(m) == det_cofactor(m)


def test_matmul_and_identity():
    a = RingMatrix.from_rows([[1, 2], [3, 4]])
    assert a @ RingMatrix.identity(2) == a
    b = RingMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).row(0) == [MultiPoly.const(2), MultiPoly.const(1)]
