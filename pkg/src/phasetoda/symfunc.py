"""Symmetric-function bases and the power-sum change of variables.

Alphabets are lists of MultiPoly generators.  The three conventions used
throughout the package are:

  * plain            u_j
  * squared          u_j^2
  * inverse-squared  v_j^-2

``zeta`` is the one-row character polynomial: the coefficient of z^k in
exp(sum_j z^j t_j).  Under the change of variables that sends the k-th time
to p_k(alphabet)/k it becomes the complete homogeneous polynomial h_k of the
alphabet, which is what ties the hierarchy side to the lattice-model side.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import MultiPoly, RingMatrix, det_exact
from .combinatorics.partitions import Partition, SkewShape
from .errors import ShapeViolation

CONVENTIONS = ("plain", "squared", "inverse-squared")


def alphabet(names: Sequence[str], convention: str = "plain") -> list:
    """Generator list for the named variables under a power convention."""
    if convention == "plain":
        return [MultiPoly.var(n) for n in names]
    if convention == "squared":
        return [MultiPoly.var(n, 2) for n in names]
    if convention == "inverse-squared":
        return [MultiPoly.var(n, -2) for n in names]
    raise ValueError(f"unknown convention {convention!r}")


def hk(k: int, gens: Sequence[MultiPoly]) -> MultiPoly:
    """Complete homogeneous symmetric polynomial h_k of the generators.

    h with negative index is the zero polynomial (the determinant formulas
    below rely on this silently); h_0 = 1 even for the empty alphabet.
    """
    if k < 0:
        return MultiPoly.zero()
    if k == 0:
        return MultiPoly.const(1)
    if not gens:
        return MultiPoly.zero()
    # dynamic programming over the alphabet: h_k(x_1..x_j)
    row = [MultiPoly.const(1)] + [MultiPoly.zero()] * k
    for g in gens:
        for d in range(1, k + 1):
            row[d] = row[d] + g * row[d - 1]
    return row[k]


def pk(k: int, gens: Sequence[MultiPoly]) -> MultiPoly:
    """Power sum p_k = sum of k-th powers."""
    if k < 1:
        raise ValueError("power sums start at k = 1")
    total = MultiPoly.zero()
    for g in gens:
        total = total + g ** k
    return total


def zeta(k: int, times: Sequence[MultiPoly]) -> MultiPoly:
    """One-row character polynomial: [z^k] exp(sum_j z^j t_j).

    Computed by the exact recurrence k*zeta_k = sum_j j*t_j*zeta_{k-j};
    times beyond the supplied horizon are zero, so each zeta_k is a finite
    polynomial.
    """
    if k < 0:
        return MultiPoly.zero()
    zs = [MultiPoly.const(1)]
    for d in range(1, k + 1):
        acc = MultiPoly.zero()
        for j in range(1, min(d, len(times)) + 1):
            acc = acc + MultiPoly.const(j) * times[j - 1] * zs[d - j]
        zs.append(acc * MultiPoly.const(Fraction(1, d)))
    return zs[k]


def zeta_all(kmax: int, times: Sequence[MultiPoly]) -> list:
    """zeta_0 .. zeta_kmax in one pass."""
    zs = [MultiPoly.const(1)]
    for d in range(1, kmax + 1):
        acc = MultiPoly.zero()
        for j in range(1, min(d, len(times)) + 1):
            acc = acc + MultiPoly.const(j) * times[j - 1] * zs[d - j]
        zs.append(acc * MultiPoly.const(Fraction(1, d)))
    return zs


def zeta_diff_apply(
    k: int, p: MultiPoly, var_names: Sequence[str], sign: int
) -> MultiPoly:
    """Apply zeta_k(sign * scaled-gradient) to p.

    The scaled gradient has j-th component (1/j) d/d(var_names[j-1]); sign
    is +1 or -1.  Realized by expanding zeta_k over formal slots and turning
    each monomial into an iterated exact derivative.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if k == 0:
        return p
    slots = [MultiPoly.var(f"_t{j}") for j in range(1, k + 1)]
    zk = zeta(k, slots)
    result = MultiPoly.zero()
    for exps, coeff in zk.terms.items():
        factor = Fraction(coeff)
        term = p
        for name, e in zip(zk.vars, exps):
            j = int(name[2:])
            for _ in range(e):
                term = term.diff(var_names[j - 1])
                factor *= Fraction(sign, j)
            if term.is_zero():
                break
        if not term.is_zero():
            result = result + MultiPoly.const(factor) * term
    return result


def schur(shape, gens: Sequence[MultiPoly], method: str = "jacobi_trudi") -> MultiPoly:
    """(Skew) Schur polynomial of the shape in the given generators.

    ``shape`` is a Partition or SkewShape.  Both methods return identical
    polynomials; the tableau sum is the slower independent construction.
    """
    skew = shape if isinstance(shape, SkewShape) else SkewShape(shape, Partition(()))
    if method == "jacobi_trudi":
        n = len(skew.outer.parts)
        if n == 0:
            return MultiPoly.const(1)
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                row.append(hk(skew.outer.get(i) - skew.inner.get(j) + j - i, gens))
            rows.append(row)
        return det_exact(RingMatrix.from_rows(rows))
    if method == "tableau_sum":
        from .combinatorics.tableaux import enumerate_tableaux

        total = MultiPoly.zero()
        for tab in enumerate_tableaux(skew, len(gens), "ascending"):
            term = MultiPoly.const(1)
            for letter, mult in enumerate(tab.weight(len(gens)), start=1):
                if mult:
                    term = term * gens[letter - 1] ** mult
            total = total + term
        return total
    raise ValueError(f"unknown method {method!r}")


def char_poly(
    lam: Partition,
    times: Sequence[MultiPoly],
    rows: int,
    inner: Partition | None = None,
) -> MultiPoly:
    """Character polynomial det[zeta_{lam_i - mu_j + j - i}] of size ``rows``."""
    if len(lam.parts) > rows:
        raise ShapeViolation(f"{lam} needs more than {rows} rows")
    if inner is None:
        inner = Partition(())
    if len(inner.parts) > rows:
        raise ShapeViolation(f"inner {inner} needs more than {rows} rows")
    if rows == 0:
        return MultiPoly.const(1)
    kmax = max(lam.get(i) - inner.get(j) + j - i for i in range(1, rows + 1) for j in range(1, rows + 1))
    zs = zeta_all(max(kmax, 0), times)

    def z(idx):
        return zs[idx] if 0 <= idx <= len(zs) - 1 else MultiPoly.zero()

    mat = RingMatrix.from_rows(
        [
            [z(lam.get(i) - inner.get(j) + j - i) for j in range(1, rows + 1)]
            for i in range(1, rows + 1)
        ]
    )
    return det_exact(mat)


def negate_times(times: Sequence[MultiPoly]) -> list:
    return [-t for t in times]


def miwa_map(
    u_names: Sequence[str], v_names: Sequence[str], horizon: int
) -> tuple:
    """Time vectors from power sums of the squared / inverse-squared alphabets.

    Returns (x, y) with x_k = p_k(u^2)/k and y_k = -p_k(v^-2)/k for
    k = 1..horizon.  The y values store the signed quantity itself; callers
    apply further minus signs exactly where their formulas do.
    """
    ug = alphabet(u_names, "squared")
    vg = alphabet(v_names, "inverse-squared")
    x = [pk(k, ug) * MultiPoly.const(Fraction(1, k)) for k in range(1, horizon + 1)]
    y = [-(pk(k, vg) * MultiPoly.const(Fraction(1, k))) for k in range(1, horizon + 1)]
    return x, y


def hk_identity_check(p: int, base_names: Sequence[str], vj: str, vk: str) -> bool:
    """Row-reduction identity for complete homogeneous polynomials.

    Checks h_p({v^2}, vj^2) - h_p({v^2}, vk^2)
         == (vj^2 - vk^2) * h_{p-1}({v^2}, vj^2, vk^2)  exactly.
    """
    if vj in base_names or vk in base_names:
        raise ValueError("vj, vk must not belong to the base alphabet")
    base = alphabet(base_names, "squared")
    gj = MultiPoly.var(vj, 2)
    gk = MultiPoly.var(vk, 2)
    lhs = hk(p, base + [gj]) - hk(p, base + [gk])
    rhs = (gj - gk) * hk(p - 1, base + [gj, gk])
    return lhs == rhs
