"""Wave-matrix assembly and the Lax / compatibility checks.

The triangular factors are filled from the minor-ratio entries, with the
site argument indexing rows for the direct matrices and columns for their
inverses (the assembly convention is pinned by requiring the constant
initial-value relation W0 = Winf * A and the product-with-inverse tests to
hold; both are part of the verification battery).
"""

from __future__ import annotations

from ..algebra import RatioMatrix, RatioPoly, RingMatrix
from .context import TauContext, shift_exp, shift_matrix
from .waves import tau, wave_numerator


def _ratio(mat: RingMatrix) -> RatioMatrix:
    return RatioMatrix(mat.rows, [RatioPoly(e) for e in mat.entries])


def hat_wave_matrix(ctx: TauContext, kind: str) -> RatioMatrix:
    """Triangular wave factor ('w_inf' lower, 'w_zero' upper), rows = site."""
    m, n = ctx.m, ctx.n
    size = n - m
    out = []
    for i in range(m, n):
        for j in range(m, n):
            if kind == "w_inf":
                k = i - j
                if k < 0:
                    out.append(RatioPoly(0))
                    continue
                num = wave_numerator(ctx, i, "w_inf", k)
                out.append(RatioPoly(num, tau(ctx, i)))
            elif kind == "w_zero":
                k = j - i
                if k < 0:
                    out.append(RatioPoly(0))
                    continue
                num = wave_numerator(ctx, i, "w_zero", k)
                out.append(RatioPoly(num, tau(ctx, i)))
            else:
                raise ValueError(kind)
    return RatioMatrix(size, out)


def hat_wave_inverse(ctx: TauContext, kind: str) -> RatioMatrix:
    """Inverse factors from the starred entries, columns = site."""
    m, n = ctx.m, ctx.n
    size = n - m
    out = []
    for i in range(m, n):
        for j in range(m, n):
            if kind == "w_inf":
                k = i - j
                if k < 0:
                    out.append(RatioPoly(0))
                    continue
                num = wave_numerator(ctx, j, "w_star_inf", k)
                out.append(RatioPoly(num, tau(ctx, j + 1)))
            elif kind == "w_zero":
                k = j - i
                if k < 0:
                    out.append(RatioPoly(0))
                    continue
                num = wave_numerator(ctx, j, "w_star_zero", k)
                out.append(RatioPoly(num, tau(ctx, j + 1)))
            else:
                raise ValueError(kind)
    return RatioMatrix(size, out)


def full_wave_matrix(ctx: TauContext, kind: str) -> RatioMatrix:
    if kind == "w_inf":
        exp = shift_exp("raise", list(ctx.x), ctx.m, ctx.n)
    else:
        exp = shift_exp("lower", list(ctx.y), ctx.m, ctx.n)
    return hat_wave_matrix(ctx, kind) @ _ratio(exp)


def full_wave_inverse(ctx: TauContext, kind: str) -> RatioMatrix:
    if kind == "w_inf":
        exp = shift_exp("raise", [-t for t in ctx.x], ctx.m, ctx.n)
    else:
        exp = shift_exp("lower", [-t for t in ctx.y], ctx.m, ctx.n)
    return _ratio(exp) @ hat_wave_inverse(ctx, kind)


def lax_matrices(ctx: TauContext) -> tuple:
    """L and M conjugated from the two shift directions."""
    winf = full_wave_matrix(ctx, "w_inf")
    winf_inv = full_wave_inverse(ctx, "w_inf")
    wzero = full_wave_matrix(ctx, "w_zero")
    wzero_inv = full_wave_inverse(ctx, "w_zero")
    raise_mat = _ratio(shift_matrix("raise", ctx.m, ctx.n))
    lower_mat = _ratio(shift_matrix("lower", ctx.m, ctx.n))
    lax_l = winf @ raise_mat @ winf_inv
    lax_m = wzero @ lower_mat @ wzero_inv
    return lax_l, lax_m


def _power(mat: RatioMatrix, k: int) -> RatioMatrix:
    out = RatioMatrix.identity(mat.n)
    for _ in range(k):
        out = out @ mat
    return out


def flow_generators(ctx: TauContext, kmax: int) -> tuple:
    """B_k = (L^k)_+ and C_k = (M^k)_- for k = 1..kmax."""
    lax_l, lax_m = lax_matrices(ctx)
    bs = {}
    cs = {}
    lp = RatioMatrix.identity(lax_l.n)
    mp = RatioMatrix.identity(lax_m.n)
    for k in range(1, kmax + 1):
        lp = lp @ lax_l
        mp = mp @ lax_m
        bs[k] = lp.project("plus")
        cs[k] = mp.project("minus")
    return bs, cs


def check_initial_value_relation(ctx: TauContext) -> bool:
    """W0 == Winf * A with the constant matrix in the middle."""
    winf = full_wave_matrix(ctx, "w_inf")
    wzero = full_wave_matrix(ctx, "w_zero")
    return wzero == winf @ _ratio(ctx.a)


def check_wave_inverses(ctx: TauContext) -> bool:
    for kind in ("w_inf", "w_zero"):
        prod = hat_wave_matrix(ctx, kind) @ hat_wave_inverse(ctx, kind)
        if prod != RatioMatrix.identity(ctx.n - ctx.m):
            return False
    return True


def check_linear_flow(ctx: TauContext, j: int, flow: str, kind: str) -> bool:
    """d/dt_j W == (flow generator_j) W, exactly."""
    if flow not in ("x", "y"):
        raise ValueError(flow)
    bs, cs = flow_generators(ctx, j)
    gen = bs[j] if flow == "x" else cs[j]
    w = full_wave_matrix(ctx, kind)
    lhs = w.diff(f"{flow}{j}")
    rhs = gen @ w
    return lhs == rhs


def check_zakharov_shabat(ctx: TauContext, j: int, k: int) -> bool:
    """The three compatibility identities at orders (j, k)."""
    kmax = max(j, k)
    bs, cs = flow_generators(ctx, kmax)
    xj, xk = f"x{j}", f"x{k}"
    yj, yk = f"y{j}", f"y{k}"
    one = bs[k].diff(xj) - bs[j].diff(xk) + bs[k].commutator(bs[j])
    if not one.is_zero():
        return False
    two = cs[k].diff(yj) - cs[j].diff(yk) + cs[k].commutator(cs[j])
    if not two.is_zero():
        return False
    three = bs[k].diff(yj) - cs[j].diff(xk) + bs[k].commutator(cs[j])
    return three.is_zero()


def verify_linear_problem(ctx: TauContext, j: int, flow: str, kind: str) -> bool:
    """One flow equation plus the structural prerequisites.

    Checks the wave-factor inverses, the constant initial-value relation,
    and d_{t_j} W = G_j W for the requested flow and wave kind.
    """
    if not check_wave_inverses(ctx):
        return False
    if not check_initial_value_relation(ctx):
        return False
    return check_linear_flow(ctx, j, flow, kind)
