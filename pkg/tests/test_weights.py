"""Weighted sums over the three pictures against their closed forms."""

import pytest

from phasetoda import symfunc as sf
from phasetoda.algebra import MultiPoly
from phasetoda.combinatorics import (
    Partition,
    SkewShape,
    column,
    hook,
    partitions_in_box,
    psi1_support,
    psi2_support,
    weighted_sum_f,
    weighted_sum_g,
    weighted_sum_psi1,
    weighted_sum_psi2,
)
from phasetoda.errors import ShapeViolation

PICTURES = ("paths", "pp", "tableaux")


def names(prefix, count, start=1):
    return [f"{prefix}{i}" for i in range(start, start + count)]


def closed_f(lam, n, m):
    gens = sf.alphabet(names("u", n), "squared")
    pref = MultiPoly.monomial(1, {nm: -m for nm in names("u", n)}) if n else MultiPoly.const(1)
    return pref * sf.schur(lam, gens)


def closed_g(lam, n, m):
    gens = sf.alphabet(names("v", n), "inverse-squared")
    pref = MultiPoly.monomial(1, {nm: m for nm in names("v", n)}) if n else MultiPoly.const(1)
    return pref * sf.schur(lam, gens)


def test_single_letter_examples():
    u = MultiPoly.var("u1")
    assert weighted_sum_f(Partition(()), 1, 1, ["u1"], "tableaux") == u.monomial_inverse()
    assert weighted_sum_f(Partition((1,)), 1, 1, ["u1"], "tableaux") == u
    v = MultiPoly.var("v1")
    assert weighted_sum_g(Partition(()), 1, 1, ["v1"], "paths") == v


@pytest.mark.parametrize("picture", PICTURES)
def test_triple_agreement_full(picture):
    for n in (1, 2, 3):
        for m in (0, 1, 2, 3):
            un, vn = names("u", n), names("v", n)
            for lam in partitions_in_box(n, m):
                assert weighted_sum_f(lam, n, m, un, picture) == closed_f(lam, n, m)
                assert weighted_sum_g(lam, n, m, vn, picture) == closed_g(lam, n, m)


def test_shape_violation():
    with pytest.raises(ShapeViolation):
        weighted_sum_f(Partition((4,)), 1, 2, ["u1"], "pp")


def test_psi1_example():
    # one annihilation letter, hole at row 1, top partition (1,1)
    val = weighted_sum_psi1(1, Partition((1, 1)), 2, 1, ["v2"], "tableaux")
    assert val == MultiPoly.var("v2", -1)


def test_psi1_trivial():
    assert weighted_sum_psi1(0, Partition(()), 1, 2, [], "tableaux") == MultiPoly.const(1)


@pytest.mark.parametrize("picture", PICTURES)
def test_psi1_closed_form(picture):
    for n in (2, 3):
        for m in (1, 2):
            vn = names("v", n - 1, start=2)
            for k in range(0, m + 1):
                for lam in psi1_support(k, n, m):
                    gens = sf.alphabet(vn, "inverse-squared")
                    pref = MultiPoly.monomial(1, {nm: m for nm in vn})
                    want = pref * sf.schur(SkewShape(lam, hook(k)), gens)
                    assert weighted_sum_psi1(k, lam, n, m, vn, picture) == want


def test_psi2_examples():
    # zero seeds reduce to the plain creation coefficient
    lam = Partition((1,))
    assert weighted_sum_psi2(0, lam, 1, 1, ["u1"], "tableaux") == closed_f(lam, 1, 1)
    # full seeding leaves the empty product
    assert weighted_sum_psi2(2, Partition((1, 1)), 2, 1, [], "pp") == MultiPoly.const(1)
    # one seed, one free letter
    val = weighted_sum_psi2(1, Partition((1, 1)), 2, 1, ["u1"], "tableaux")
    assert val == MultiPoly.var("u1")


@pytest.mark.parametrize("picture", PICTURES)
def test_psi2_closed_form(picture):
    for n in (2, 3):
        for m in (1, 2):
            for k in range(0, n + 1):
                un = names("u", n - k)
                for lam in psi2_support(k, n, m):
                    gens = sf.alphabet(un, "squared")
                    pref = (
                        MultiPoly.monomial(1, {nm: -m for nm in un})
                        if un
                        else MultiPoly.const(1)
                    )
                    want = pref * sf.schur(SkewShape(lam, column(k)), gens)
                    assert weighted_sum_psi2(k, lam, n, m, un, picture) == want


def test_psi_range_violations():
    with pytest.raises(ShapeViolation):
        weighted_sum_psi1(0, Partition((2, 2)), 2, 2, ["v2"], "tableaux")  # lam_N > k
    with pytest.raises(ShapeViolation):
        weighted_sum_psi2(1, Partition((2, 2)), 2, 2, ["u1"], "tableaux")  # tail row too big


def test_psi1_reassembles_annihilation_coefficient():
    # summing the hole coefficients with the removed letter's weights gives
    # back the full coefficient
    for n in (2, 3):
        for m in (1, 2):
            vn = names("v", n)
            v1 = MultiPoly.var("v1")
            for lam in partitions_in_box(n, m):
                total = MultiPoly.zero()
                for k in range(0, m + 1):
                    if not (lam.contains(hook(k)) and lam.get(n) <= k):
                        continue
                    part = weighted_sum_psi1(k, lam, n, m, vn[1:], "tableaux")
                    total = total + (v1 ** (m - 2 * k)) * part
                assert total == closed_g(lam, n, m), (n, m, lam)
