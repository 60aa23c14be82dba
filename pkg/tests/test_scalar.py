"""Three-way scalar product agreement and the degenerate guard."""

from fractions import Fraction

import pytest

from phasetoda.algebra import MultiPoly
from phasetoda.errors import DegenerateVandermonde
from phasetoda.phase import scalar_product


def names(prefix, count):
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def test_trivial_cases():
    for method in ("fock_pairing", "schur_sum", "determinant"):
        assert scalar_product(0, 2, [], [], method) == MultiPoly.const(1)


def test_desk_anchor():
    u, v = MultiPoly.var("u1"), MultiPoly.var("v1")
    want = v * u.monomial_inverse() + u * v.monomial_inverse()
    for method in ("fock_pairing", "schur_sum", "determinant"):
        assert scalar_product(1, 1, ["u1"], ["v1"], method) == want


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_three_way_symbolic(n, m):
    a = scalar_product(n, m, names("u", n), names("v", n), "fock_pairing")
    b = scalar_product(n, m, names("u", n), names("v", n), "schur_sum")
    c = scalar_product(n, m, names("u", n), names("v", n), "determinant")
    assert a == b == c


def test_three_way_numeric_spot():
    us = [Fraction(2), Fraction(3), Fraction(5, 2)]
    vs = [Fraction(1, 2), Fraction(4, 3), Fraction(7)]
    a = scalar_product(3, 2, us, vs, "fock_pairing")
    b = scalar_product(3, 2, us, vs, "schur_sum")
    c = scalar_product(3, 2, us, vs, "determinant")
    assert a == b == c


def test_degenerate_vandermonde():
    with pytest.raises(DegenerateVandermonde):
        scalar_product(2, 1, [Fraction(2), Fraction(2)], [Fraction(1), Fraction(3)], "determinant")
    with pytest.raises(DegenerateVandermonde):
        scalar_product(2, 1, [Fraction(2), Fraction(-2)], [Fraction(1), Fraction(3)], "determinant")
