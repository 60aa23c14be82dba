"""Command-line front end: compute, verify, enumerate, suite.

Exit codes: 0 all checks passed, 1 at least one identity failed,
2 configuration or I/O error.  Reports are deterministic JSON for a fixed
(command, seed); timing goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from .algebra import RingMatrix, det_exact
from .combinatorics import (
    OccupationSequence,
    Partition,
    enumerate_path_configs,
    enumerate_plane_partitions,
    enumerate_tableaux,
    partitions_in_box,
    SkewShape,
)
from .errors import ConfigError, PhaseTodaError
from .phase import boundary_correlator, scalar_product
from .reports import build_report, emit_report
from .suites import SUITES, run_suite
from .toda import TauContext, generic_constant_matrix, tau, tau_schur_expand


def _names(prefix, count):
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def _parse_partition(text: str) -> Partition:
    if not text:
        return Partition(())
    return Partition(tuple(int(p) for p in text.split(",")))


def _load_matrix(path: str, size: int) -> RingMatrix:
    try:
        with open(path) as fh:
            rows = [[int(cell) for cell in row] for row in csv.reader(fh) if row]
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read matrix file: {exc}")
    if len(rows) != size or any(len(r) != size for r in rows):
        raise ConfigError(f"matrix file must be {size}x{size} integers")
    mat = RingMatrix.from_rows(rows)
    for s in range(1, size + 1):
        if det_exact(mat.submatrix(range(s), range(s))).is_zero():
            raise ConfigError(f"leading principal minor {s} vanishes")
    return mat


def _context(args) -> TauContext:
    size = args.n - args.m
    if size <= 0:
        raise ConfigError("need n > m")
    if args.matrix == "identity" or args.matrix == "delta":
        mat = RingMatrix.identity(size)
    elif args.matrix == "seeded-random":
        mat = generic_constant_matrix(size, args.seed)
    else:
        mat = _load_matrix(args.matrix, size)
    return TauContext.symbolic(args.m, args.n, mat)


def cmd_compute(args) -> int:
    t0 = time.time()
    items = []
    if args.object == "tau":
        ctx = _context(args)
        sites = range(args.m, args.n + 1) if args.s is None else [args.s]
        for s in sites:
            value = tau(ctx, s)
            ok = value == tau_schur_expand(ctx, s)
            items.append(
                {
                    "identity": "tau",
                    "parameters": {"s": s},
                    "pass": ok,
                    "value": value.to_str(),
                }
            )
    elif args.object == "scalar":
        un, vn = _names("u", args.N), _names("v", args.N)
        methods = ["fock_pairing", "schur_sum", "determinant"]
        values = {meth: scalar_product(args.N, args.M, un, vn, meth) for meth in methods}
        ok = len({v.to_str() for v in values.values()}) == 1
        items.append(
            {
                "identity": "scalar-product",
                "parameters": {"N": args.N, "M": args.M},
                "pass": ok,
                "value": values["fock_pairing"].to_str(),
            }
        )
    elif args.object == "correlator":
        un, vn = _names("u", args.N), _names("v", args.N)
        if args.kind == "n_point":
            rs = tuple(int(r) for r in args.r.split(","))
            value = boundary_correlator("n_point", args.N, args.M, un, vn, rs=rs)
        else:
            value = boundary_correlator(args.kind, args.N, args.M, un, vn, k=args.k)
        items.append(
            {
                "identity": f"correlator-{args.kind}",
                "parameters": {"N": args.N, "M": args.M, "k": args.k, "r": args.r},
                "pass": True,
                "value": value.to_str(),
            }
        )
    elif args.object == "state":
        from .phase import build_conj_state, build_state

        un, vn = _names("u", args.N), _names("v", args.N)
        sv = build_conj_state(vn, args.M) if args.dual else build_state(un, args.M)
        for occ, coeff in sorted(sv.terms.items()):
            items.append(
                {
                    "identity": "state-vector",
                    "parameters": {"occupation": list(occ)},
                    "pass": True,
                    "value": coeff.to_str(),
                }
            )
    else:
        raise ConfigError(f"unknown object {args.object!r}")
    report = build_report(f"compute {args.object}", vars_of(args), items, args.seed)
    emit_report(report, args.output, time.time() - t0)
    return 0 if report["failed"] == 0 else 1


def cmd_enumerate(args) -> int:
    t0 = time.time()
    items = []
    if args.object == "pp":
        contains = None
        if args.contains:
            contains = _parse_partition(args.contains)
        for pp in enumerate_plane_partitions(args.N, args.M):
            if contains is not None and pp.diagonal() != contains:
                continue
            items.append({"array": [list(r) for r in pp.array]})
        if args.svg:
            from .svg import pp_to_svg

            if not items:
                raise ConfigError("no plane partition to render")
            first = next(
                pp
                for pp in enumerate_plane_partitions(args.N, args.M)
                if contains is None or pp.diagonal() == contains
            )
            with open(args.svg, "w") as fh:
                fh.write(pp_to_svg(first))
    elif args.object == "partitions":
        for lam in partitions_in_box(args.N, args.M):
            items.append({"partition": list(lam.parts)})
    elif args.object == "paths":
        occupation = None
        if args.occupation:
            occupation = OccupationSequence(tuple(int(c) for c in args.occupation.split(",")))
        for cfg in enumerate_path_configs(args.N, args.M, occupation):
            items.append({"turning_rows": [list(t) for t in cfg.turns]})
    elif args.object == "tableaux":
        shape = SkewShape(_parse_partition(args.shape), _parse_partition(args.inner or ""))
        for tab in enumerate_tableaux(shape, args.entries, args.convention):
            items.append({"rows": [list(r) for r in tab.rows]})
    else:
        raise ConfigError(f"unknown object {args.object!r}")
    payload = {
        "schema": "1",
        "command": f"enumerate {args.object}",
        "parameters": vars_of(args),
        "count": len(items),
        "items": items,
    }
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"enumerate {args.object}: {len(items)} objects [{time.time()-t0:.2f}s]", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    t0 = time.time()
    name_to_suite = {
        "scalar-equivalence": ("phase", ("scalar-three-way-symbolic", "scalar-three-way-numeric")),
        "state-coefficients": ("phase", ("state-coefficients-schur-form",)),
        "rtt": ("phase", ("monodromy-intertwining",)),
        "triple-agreement": (
            "combinatorics",
            (
                "state-coefficient-triple-agreement",
                "hole-coefficient-triple-agreement",
                "seed-coefficient-triple-agreement",
            ),
        ),
        "bijections": ("combinatorics", ("path-pp-round-trip", "half-tableau-round-trip", "plane-partition-count-macmahon")),
        "prop1": ("toda", ("wave-derivative-identities", "shifted-tau-weighted-sums")),
        "tau-expansion": ("toda", ("tau-character-expansion",)),
        "bilinear": ("toda", ("bilinear-residue-identity",)),
        "linear": (
            "toda",
            (
                "wave-inverse-identities",
                "initial-value-relation",
                "linear-flow-equation",
                "zakharov-shabat-identities",
            ),
        ),
        "prop2": ("correspondence", ("restricted-tau-scalar-product",)),
        "limits": ("correspondence", ("hole-limit-correspondence", "seed-limit-correspondence")),
        "single-determinant": (
            "correspondence",
            (
                "hole-determinant-form",
                "npoint-determinant-form",
                "hole-stack-reassembly",
                "point-stack-reassembly",
            ),
        ),
        "recursions": ("correspondence", ("expansion-recursions",)),
    }
    if args.identity not in name_to_suite:
        raise ConfigError(
            f"unknown identity {args.identity!r}; choose from {sorted(name_to_suite)}"
        )
    suite_name, keep = name_to_suite[args.identity]
    items = [it for it in run_suite(suite_name, args.seed) if it["identity"] in keep]
    report = build_report(f"verify {args.identity}", vars_of(args), items, args.seed)
    emit_report(report, args.output, time.time() - t0)
    return 0 if report["failed"] == 0 else 1


def cmd_suite(args) -> int:
    t0 = time.time()
    items = run_suite(args.name, args.seed)
    report = build_report(f"suite {args.name}", vars_of(args), items, args.seed)
    emit_report(report, args.output, time.time() - t0)
    return 0 if report["failed"] == 0 else 1


def vars_of(args) -> dict:
    skip = {"func", "output"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasetoda",
        description="Exact verification of phase-model / finite 2-Toda identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute objects and print them")
    pc.add_argument("object", choices=["tau", "scalar", "correlator", "state"])
    pc.add_argument("--dual", action="store_true", help="conjugate state vector")
    pc.add_argument("--m", type=int, default=0)
    pc.add_argument("--n", type=int, default=3)
    pc.add_argument("--s", type=int, default=None, help="site (default: all)")
    pc.add_argument("--N", type=int, default=2)
    pc.add_argument("--M", type=int, default=2)
    pc.add_argument("--k", type=int, default=0)
    pc.add_argument("--r", type=str, default="0", help="n-point indices, comma separated")
    pc.add_argument("--kind", choices=["one_hole", "seeded", "n_point"], default="one_hole")
    pc.add_argument(
        "--matrix",
        default="identity",
        help="identity | delta | seeded-random | path to CSV of integers",
    )
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--output", default=None)
    pc.set_defaults(func=cmd_compute)

    pe = sub.add_parser("enumerate", help="enumerate combinatorial objects as JSON")
    pe.add_argument("object", choices=["pp", "partitions", "paths", "tableaux"])
    pe.add_argument("--N", type=int, required=True)
    pe.add_argument("--M", type=int, required=True)
    pe.add_argument("--contains", type=str, default=None, help="diagonal partition filter")
    pe.add_argument("--occupation", type=str, default=None, help="n_0,..,n_M")
    pe.add_argument("--shape", type=str, default="")
    pe.add_argument("--inner", type=str, default=None)
    pe.add_argument("--entries", type=int, default=1)
    pe.add_argument("--convention", choices=["ascending", "descending"], default="ascending")
    pe.add_argument("--svg", type=str, default=None)
    pe.add_argument("--seed", type=int, default=0)
    pe.add_argument("--output", default=None)
    pe.set_defaults(func=cmd_enumerate)

    pv = sub.add_parser("verify", help="run one identity family")
    pv.add_argument("identity")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--output", default=None)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("suite", help="run a verification battery")
    ps.add_argument("name", choices=list(SUITES))
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--output", default=None)
    ps.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except PhaseTodaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
