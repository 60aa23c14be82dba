"""Verification batteries behind the CLI and the acceptance tests.

Each item is a dict {identity, parameters, pass, witness} where witness is
only present on failure and carries canonically serialized polynomials.
Items are generated deterministically (fixed iteration orders, seeded
randomness) so a report is byte-stable for a given (suite, seed).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import symfunc as sf
from .algebra import MultiPoly
from .bounds import BOUNDS
from .combinatorics import (
    SkewShape,
    column,
    enumerate_path_configs,
    enumerate_plane_partitions,
    hook,
    lower_diagonal,
    macmahon_count,
    partitions_in_box,
    path_to_pp,
    pp_half_to_tableau,
    pp_to_path,
    psi1_support,
    psi2_support,
    tableau_to_pp_half,
    upper_diagonal,
    weighted_sum_f,
    weighted_sum_g,
    weighted_sum_psi1,
    weighted_sum_psi2,
)
from .phase import (
    build_state,
    correlator_npoint,
    correlator_one_hole,
    limit_correspondence,
    npoint_det,
    one_hole_det,
    one_hole_stack_check,
    one_point_stack_check,
    recursion_expand_check,
    scalar_product,
    verify_rtt,
)
from .toda import (
    TauContext,
    WAVE_KINDS,
    bilinear_check,
    check_initial_value_relation,
    check_linear_flow,
    check_wave_inverses,
    check_zakharov_shabat,
    h20_expected_coefficients,
    power_sum_append_zeros_check,
    restrict_tau,
    schur_pair_sum,
    shifted_tau,
    tau,
    tau_schur_expand,
    verify_prop1,
)

SUITES = ("combinatorics", "phase", "toda", "correspondence", "all")


def _item(identity: str, parameters: dict, ok: bool, witness: str | None = None) -> dict:
    out = {"identity": identity, "parameters": parameters, "pass": bool(ok)}
    if not ok and witness:
        out["witness"] = witness
    return out


def _names(prefix: str, count: int) -> list:
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def _distinct_rationals(rng: random.Random, count: int) -> list:
    seen = set()
    out = []
    while len(out) < count:
        f = Fraction(rng.randint(1, 12), rng.randint(1, 6))
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def _closed_f(lam, n, m):
    gens = sf.alphabet(_names("u", n), "squared")
    pref = MultiPoly.monomial(1, {nm: -m for nm in _names("u", n)}) if n else MultiPoly.const(1)
    return pref * sf.schur(lam, gens)


def _closed_g(lam, n, m):
    gens = sf.alphabet(_names("v", n), "inverse-squared")
    pref = MultiPoly.monomial(1, {nm: m for nm in _names("v", n)}) if n else MultiPoly.const(1)
    return pref * sf.schur(lam, gens)


# -- combinatorics ----------------------------------------------------------


def suite_combinatorics(seed: int) -> list:
    items = []
    nmax, mmax = BOUNDS["combi_n"], BOUNDS["combi_m"]

    for n in range(0, nmax + 1):
        for m in range(0, mmax + 1):
            count = sum(1 for _ in enumerate_plane_partitions(n, m))
            items.append(
                _item(
                    "plane-partition-count-macmahon",
                    {"N": n, "M": m},
                    count == macmahon_count(n, m),
                    witness=f"enumerated {count}, formula {macmahon_count(n, m)}",
                )
            )

    for n in range(1, nmax + 1):
        for m in range(0, mmax + 1):
            round_trip = all(
                pp_to_path(path_to_pp(cfg)) == cfg and path_to_pp(cfg).diagonal() == cfg.diagonal()
                for cfg in enumerate_path_configs(n, m)
            )
            items.append(_item("path-pp-round-trip", {"N": n, "M": m}, round_trip))
            halves_ok = True
            for lam in partitions_in_box(n, m):
                for half in itertools.chain(
                    upper_diagonal(lam, n, m), lower_diagonal(lam, n, m)
                ):
                    tab = pp_half_to_tableau(half)
                    if tableau_to_pp_half(tab, n, m) != half:
                        halves_ok = False
            items.append(_item("half-tableau-round-trip", {"N": n, "M": m}, halves_ok))

    for n in range(1, nmax + 1):
        for m in range(0, mmax + 1):
            un, vn = _names("u", n), _names("v", n)
            for lam in partitions_in_box(n, m):
                want_f, want_g = _closed_f(lam, n, m), _closed_g(lam, n, m)
                ok = all(
                    weighted_sum_f(lam, n, m, un, pic) == want_f
                    and weighted_sum_g(lam, n, m, vn, pic) == want_g
                    for pic in ("paths", "pp", "tableaux")
                )
                items.append(
                    _item(
                        "state-coefficient-triple-agreement",
                        {"N": n, "M": m, "lambda": list(lam.parts)},
                        ok,
                    )
                )
            for k in range(0, m + 1):
                ok = True
                for lam in psi1_support(k, n, m):
                    gens = sf.alphabet(vn[1:], "inverse-squared")
                    pref = (
                        MultiPoly.monomial(1, {nm: m for nm in vn[1:]})
                        if n > 1
                        else MultiPoly.const(1)
                    )
                    want = pref * sf.schur(SkewShape(lam, hook(k)), gens)
                    if not all(
                        weighted_sum_psi1(k, lam, n, m, vn[1:], pic) == want
                        for pic in ("paths", "pp", "tableaux")
                    ):
                        ok = False
                items.append(_item("hole-coefficient-triple-agreement", {"N": n, "M": m, "k": k}, ok))
            for k in range(0, n + 1):
                ok = True
                for lam in psi2_support(k, n, m):
                    gens = sf.alphabet(un[: n - k], "squared")
                    pref = (
                        MultiPoly.monomial(1, {nm: -m for nm in un[: n - k]})
                        if n - k
                        else MultiPoly.const(1)
                    )
                    want = pref * sf.schur(SkewShape(lam, column(k)), gens)
                    if not all(
                        weighted_sum_psi2(k, lam, n, m, un[: n - k], pic) == want
                        for pic in ("paths", "pp", "tableaux")
                    ):
                        ok = False
                items.append(_item("seed-coefficient-triple-agreement", {"N": n, "M": m, "k": k}, ok))
    return items


# -- phase model -------------------------------------------------------------


def suite_phase(seed: int) -> list:
    items = []
    rng = random.Random(seed)

    for n in range(0, BOUNDS["scalar_symbolic_n"] + 1):
        for m in range(0, BOUNDS["scalar_symbolic_m"] + 1):
            un, vn = _names("u", n), _names("v", n)
            a = scalar_product(n, m, un, vn, "fock_pairing")
            b = scalar_product(n, m, un, vn, "schur_sum")
            c = scalar_product(n, m, un, vn, "determinant")
            items.append(
                _item(
                    "scalar-three-way-symbolic",
                    {"N": n, "M": m},
                    a == b == c,
                    witness=f"pairing={a.to_str()} schur={b.to_str()} det={c.to_str()}",
                )
            )

    for n in BOUNDS["scalar_numeric_n"]:
        for m in range(0, BOUNDS["scalar_numeric_m"] + 1):
            ok = True
            for _ in range(BOUNDS["scalar_numeric_points"]):
                vals = _distinct_rationals(rng, 2 * n)
                us, vs = vals[:n], vals[n:]
                a = scalar_product(n, m, us, vs, "fock_pairing")
                b = scalar_product(n, m, us, vs, "schur_sum")
                c = scalar_product(n, m, us, vs, "determinant")
                if not (a == b == c):
                    ok = False
            items.append(_item("scalar-three-way-numeric", {"N": n, "M": m}, ok))

    from .phase import build_conj_state

    for n in range(0, BOUNDS["state_coeff_n"] + 1):
        for m in range(0, BOUNDS["state_coeff_m"] + 1):
            un, vn = _names("u", n), _names("v", n)
            lams = partitions_in_box(n, m)
            coeffs = build_state(un, m).partition_coefficients()
            conj = build_conj_state(vn, m).partition_coefficients()
            ok = set(coeffs) == set(lams) == set(conj)
            ok = ok and all(coeffs[lam] == _closed_f(lam, n, m) for lam in lams)
            ok = ok and all(conj[lam] == _closed_g(lam, n, m) for lam in lams)
            items.append(_item("state-coefficients-schur-form", {"N": n, "M": m}, ok))

    for m in range(0, BOUNDS["rtt_m"] + 1):
        for cap in range(1, BOUNDS["rtt_cap"] + 1):
            ok = True
            for _ in range(BOUNDS["rtt_pairs"]):
                while True:
                    u = Fraction(rng.randint(1, 9), rng.randint(1, 3))
                    v = Fraction(rng.randint(1, 9), rng.randint(1, 3))
                    if u * u != v * v:
                        break
                if not verify_rtt(u, v, m, cap):
                    ok = False
            items.append(_item("monodromy-intertwining", {"M": m, "cap": cap}, ok))
    return items


# -- hierarchy ----------------------------------------------------------------


def suite_toda(seed: int) -> list:
    items = []
    rng = random.Random(seed)

    for size in range(1, BOUNDS["schur_expand_size"] + 1):
        ctx = TauContext.generic(0, size, seed=seed + size)
        ok = all(tau(ctx, s) == tau_schur_expand(ctx, s) for s in range(0, size + 1))
        items.append(_item("tau-character-expansion", {"size": size}, ok))

    for size in range(2, BOUNDS["prop1_size"] + 1):
        ctx = TauContext.generic(0, size, seed=seed + size)
        ok = True
        for s in range(1, size):
            for kind in WAVE_KINDS:
                kmax = s if kind in ("w_inf", "w_star_zero") else size - s - 1
                for k in range(0, kmax + 1):
                    if not verify_prop1(ctx, s, k, kind):
                        ok = False
        items.append(_item("wave-derivative-identities", {"size": size}, ok))

        ok = True
        for s in range(0, size + 1):
            for which in ("x_minus", "y_plus"):
                if s > size - 1:
                    continue
                st = shifted_tau(ctx, s, which)
                want = h20_expected_coefficients(ctx, s, which)
                if [st.coeff_of("lam", k) for k in range(len(want))] != want:
                    ok = False
                if st.degree_in("lam") > len(want) - 1:
                    ok = False
            for which in ("x_plus", "y_minus"):
                if s < 1:
                    continue
                st = shifted_tau(ctx, s, which)
                want = h20_expected_coefficients(ctx, s, which)
                if [st.coeff_of("lam", k) for k in range(len(want))] != want:
                    ok = False
        items.append(_item("shifted-tau-weighted-sums", {"size": size}, ok))

    size = BOUNDS["bilinear_size"]
    ctx = TauContext.generic(0, size, seed=seed)
    pairs = [(s, sp) for s in range(0, size) for sp in range(1, size + 1)]
    tuples = 0
    ok = True
    while tuples < BOUNDS["bilinear_tuples"]:
        h = size - 1
        draw = lambda: [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(h)]
        x, xp, y, yp = draw(), draw(), draw(), draw()
        for s, sp in pairs:
            if tuples >= BOUNDS["bilinear_tuples"]:
                break
            try:
                if not bilinear_check(ctx, s, sp, x, xp, y, yp):
                    ok = False
            except Exception:
                continue
            tuples += 1
    items.append(_item("bilinear-residue-identity", {"size": size, "tuples": tuples}, ok))

    size = BOUNDS["linear_size"]
    ctx = TauContext.generic(0, size, seed=seed + 1)
    items.append(_item("wave-inverse-identities", {"size": size}, check_wave_inverses(ctx)))
    items.append(
        _item("initial-value-relation", {"size": size}, check_initial_value_relation(ctx))
    )
    for j in range(1, min(BOUNDS["linear_flows"], size - 1) + 1):
        for flow in ("x", "y"):
            for kind in ("w_inf", "w_zero"):
                items.append(
                    _item(
                        "linear-flow-equation",
                        {"size": size, "j": j, "flow": flow, "wave": kind},
                        check_linear_flow(ctx, j, flow, kind),
                    )
                )
    for j in range(1, min(BOUNDS["linear_flows"], size - 1) + 1):
        for k in range(1, min(BOUNDS["linear_flows"], size - 1) + 1):
            items.append(
                _item(
                    "zakharov-shabat-identities",
                    {"size": size, "j": j, "k": k},
                    check_zakharov_shabat(ctx, j, k),
                )
            )

    items.append(
        _item(
            "power-sum-append-zeros",
            {"letters": 2, "zeros": 2, "horizon": 6},
            power_sum_append_zeros_check(_names("m", 2), 2, 6),
        )
    )
    return items


# -- correspondence -----------------------------------------------------------


def suite_correspondence(seed: int) -> list:
    items = []
    nmax, mmax = BOUNDS["correspondence_n"], BOUNDS["correspondence_m"]

    for n in range(0, nmax + 1):
        for m in range(0, mmax + 1):
            un, vn = _names("u", n), _names("v", n)
            lhs = restrict_tau(un, vn, m)
            mid = schur_pair_sum(un, vn, m)
            items.append(
                _item(
                    "restricted-tau-scalar-product",
                    {"N": n, "M": m},
                    lhs == mid and _prop2_ok(n, m, un, vn, lhs),
                )
            )

    for n in range(1, nmax + 1):
        for m in range(1, mmax + 1):
            un, vn = _names("u", n), _names("v", n)
            for k in range(0, m + 1):
                items.append(
                    _item(
                        "hole-limit-correspondence",
                        {"N": n, "M": m, "k": k},
                        limit_correspondence("v1_to_infinity", k, n, m, un, vn),
                    )
                )
            for k in range(0, min(n, m) + 1):
                items.append(
                    _item(
                        "seed-limit-correspondence",
                        {"N": n, "M": m, "k": k},
                        limit_correspondence("u_tail_to_zero", k, n, m, un, vn),
                    )
                )

    for n in range(1, nmax + 1):
        for m in range(1, mmax + 1):
            un, vn = _names("u", n), _names("v", n)
            ok = all(
                one_hole_det(q, n, m, un, vn) == correlator_one_hole(q, n, m, un, vn, "pairing")
                for q in range(0, m + 1)
            )
            items.append(_item("hole-determinant-form", {"N": n, "M": m}, ok))
            ok = True
            for order in range(1, min(n, BOUNDS["npoint_order"]) + 1):
                for r1 in range(0, m + 1):
                    for tail in itertools.product((0, 1), repeat=order - 1):
                        rs = (r1,) + tail
                        if any(rs[i] < rs[i + 1] for i in range(len(rs) - 1)):
                            continue
                        if npoint_det(rs, n, m, un, vn) != correlator_npoint(rs, n, m, un, vn):
                            ok = False
            items.append(_item("npoint-determinant-form", {"N": n, "M": m}, ok))
            items.append(
                _item("hole-stack-reassembly", {"N": n, "M": m}, one_hole_stack_check(n, m, un, vn))
            )
            items.append(
                _item("point-stack-reassembly", {"N": n, "M": m}, one_point_stack_check(n, m, un, vn))
            )
            ok = True
            for order in range(1, min(n - 1, BOUNDS["npoint_order"]) + 1):
                for q in range(0, order + 1):
                    rs = (1,) * (order - q) + (0,) * q
                    if not recursion_expand_check(rs, n, m, un, vn):
                        ok = False
            items.append(_item("expansion-recursions", {"N": n, "M": m}, ok))
    return items


def _prop2_ok(n, m, un, vn, restricted) -> bool:
    if n == 0:
        return restricted == MultiPoly.const(1)
    pref = MultiPoly.const(1)
    for a, b in zip(vn, un):
        pref = pref * MultiPoly.var(a) * MultiPoly.var(b, -1)
    return (pref ** m) * restricted == scalar_product(n, m, un, vn, "fock_pairing")


def run_suite(name: str, seed: int) -> list:
    if name == "combinatorics":
        return suite_combinatorics(seed)
    if name == "phase":
        return suite_phase(seed)
    if name == "toda":
        return suite_toda(seed)
    if name == "correspondence":
        return suite_correspondence(seed)
    if name == "all":
        items = []
        for part in ("combinatorics", "phase", "toda", "correspondence"):
            items.extend(run_suite(part, seed))
        return items
    raise ValueError(f"unknown suite {name!r}")
