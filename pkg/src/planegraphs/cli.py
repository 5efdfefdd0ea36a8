"""Batch command-line front end.

Subcommands: validate, count, degrees, triangulations, charge-audit, verify,
gen, construction-report.  Exit status 0 on success, 1 when an applicable
verified claim is violated, 2 on usage or validation errors.  Reports are
byte-identical across runs and worker counts.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .constructions import (
    ConstructionSpec,
    fn_ratio_table,
    v0_trend_table,
    verify_product_law,
)
from .charging import charge_audit
from .enumeration import (
    DEFAULT_MAX_N,
    EnumerationLimitError,
    count_plane_graphs,
    enumerate_triangulations,
    expected_degree_vector,
    work_estimate,
)
from .geometry import GeneralPositionError, PointSet, PtsFormatError, load_pts
from .reports import dumps_csv, dumps_json, envelope
from .verify import ALL_CLAIMS, run_claims

ENV_MAX_N = "PLANEGRAPH_MAX_N"


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation; results never depend on `workers`."""

    subcommand: str
    pts: Path | None
    workers: int
    fmt: str
    out: Path | None
    max_n: int | None
    force: bool

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            subcommand=args.command,
            pts=Path(args.pts) if getattr(args, "pts", None) else None,
            workers=getattr(args, "workers", 1),
            fmt=getattr(args, "fmt", "json"),
            out=getattr(args, "out", None),
            max_n=getattr(args, "max_n", None),
            force=getattr(args, "force", False),
        )

    def cap(self, n: int) -> int:
        """The effective point cap, with a work estimate past n = 10."""
        cap = self.max_n
        if cap is None:
            env = os.environ.get(ENV_MAX_N)
            cap = int(env) if env else DEFAULT_MAX_N
        if self.force:
            cap = max(cap, n)
        if n > 10:
            print(f"note: n={n}; expect {work_estimate(n)}", file=sys.stderr)
        return cap


def _add_common(parser: argparse.ArgumentParser, pts_arg: bool = True) -> None:
    if pts_arg:
        parser.add_argument("pts", help="point-set file in .pts format")
    parser.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    parser.add_argument("--format", choices=("json", "csv"), default="json", dest="fmt")
    parser.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    parser.add_argument("--max-n", type=int, default=None, help="override the point-count cap")
    parser.add_argument("--force", action="store_true", help="proceed past the cap")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load(args) -> PointSet:
    return load_pts(args.pts)


def cmd_validate(args) -> int:
    try:
        ps = load_pts(args.pts)
    except GeneralPositionError as exc:
        for kind, labels in exc.violations:
            print(f"violation: {kind} {labels}")
        return 2
    print(f"ok: {ps.n} points in general position")
    return 0


def cmd_count(args) -> int:
    cfg = RunConfig.from_args(args)
    ps = _load(args)
    pg = count_plane_graphs(ps, max_n=cfg.cap(ps.n), workers=cfg.workers)
    print(pg)
    if cfg.out is not None:
        if cfg.fmt == "json":
            payload = envelope("count", ps) | {"n": ps.n, "pg": str(pg)}
            _emit(dumps_json(payload), cfg.out)
        else:
            _emit(dumps_csv("count", ps, ["n", "pg"], [[ps.n, pg]]), cfg.out)
    return 0


def cmd_degrees(args) -> int:
    cfg = RunConfig.from_args(args)
    ps = _load(args)
    dv = expected_degree_vector(ps, max_n=cfg.cap(ps.n), workers=cfg.workers)
    if cfg.fmt == "json":
        payload = envelope("degrees", ps) | {
            "n": ps.n,
            "pg": str(dv.pg),
            "ving_counts": [str(v) for v in dv.ving_counts],
            "vhat": list(dv.vhat),
        }
        _emit(dumps_json(payload), cfg.out)
    else:
        rows = [
            [i, dv.ving_counts[i], dv.vhat[i].numerator, dv.vhat[i].denominator]
            for i in range(ps.n)
        ]
        _emit(
            dumps_csv("degrees", ps, ["i", "ving_count", "vhat_numerator", "vhat_denominator"], rows),
            cfg.out,
        )
    return 0


def cmd_triangulations(args) -> int:
    cfg = RunConfig.from_args(args)
    ps = _load(args)
    stats = enumerate_triangulations(ps, max_n=cfg.cap(ps.n))
    if cfg.fmt == "json":
        payload = envelope("triangulations", ps) | {
            "count": str(stats.count),
            "records": [
                {
                    "graph": r.graph.to_hex(),
                    "v3": r.v3,
                    "v4": r.v4,
                    "histogram": list(r.histogram),
                }
                for r in stats.records
            ],
        }
        _emit(dumps_json(payload), cfg.out)
    else:
        rows = [
            [r.graph.to_hex(), r.v3, r.v4, " ".join(map(str, r.histogram))]
            for r in stats.records
        ]
        _emit(dumps_csv("triangulations", ps, ["graph", "v3", "v4", "histogram"], rows), cfg.out)
    return 0


def cmd_charge_audit(args) -> int:
    cfg = RunConfig.from_args(args)
    ps = _load(args)
    audit = charge_audit(ps, max_n=cfg.cap(ps.n))
    if cfg.fmt == "json":
        payload = envelope("charge-audit", ps) | {
            "pg": str(audit["pg"]),
            "zero_ving_count": str(audit["zero_ving_count"]),
            "total_charge": {
                "num": str(audit["total_charge_numerator"]),
                "exp": audit["total_charge_exponent"],
            },
            "per_graph_charges": [
                {
                    "graph": row["graph"],
                    "num": str(row["charge_numerator"]),
                    "exp": row["charge_exponent"],
                }
                for row in audit["per_graph_charges"]
            ],
            "family_census": audit["family_census"],
        }
        _emit(dumps_json(payload), cfg.out)
    else:
        rows = [
            [row["point"], row["visibility_j"], row["multiplicity"]]
            for row in audit["family_census"]
        ]
        _emit(
            dumps_csv("charge-audit", ps, ["point", "visibility_j", "multiplicity"], rows),
            cfg.out,
        )
    return 0


def cmd_verify(args) -> int:
    cfg = RunConfig.from_args(args)
    ps = _load(args)
    claims = args.claims.split(",") if args.claims else None
    reports = run_claims(ps, claims, max_n=cfg.cap(ps.n))
    payload = envelope("verify", ps) | {
        "reports": [
            {
                "claim": r.claim,
                "pointset": r.pointset,
                "status": r.status,
                "margin": r.margin,
                "witness": r.witness,
                "details": r.details,
            }
            for r in reports
        ]
    }
    _emit(dumps_json(payload), cfg.out)
    return 1 if any(r.status == "violated" for r in reports) else 0


def cmd_gen(args) -> int:
    spec = ConstructionSpec(kind=args.kind, n=args.n, seed=args.seed)
    ps = spec.build()
    if args.out is None:
        sys.stdout.write(ps.to_pts())
    else:
        args.out.write_text(ps.to_pts())
    return 0


def cmd_construction_report(args) -> int:
    cfg = RunConfig.from_args(args)
    n_max = args.n_max
    cap = cfg.cap(n_max)
    ratio_rows = fn_ratio_table(min(n_max, cap), max_n=cap)
    trend_rows = v0_trend_table(min(n_max, cap), max_n=cap)
    product = [verify_product_law(n, max_n=cap) for n in range(4, min(n_max, cap) + 1)]
    if cfg.fmt == "json":
        payload = envelope("construction-report", None) | {
            "fn_ratio": [
                {**row, "exact": str(row["exact"])} for row in ratio_rows
            ],
            "v0_trend": trend_rows,
            "product_law": [
                {"n": 4 + i, "status": r.status} for i, r in enumerate(product)
            ],
        }
        _emit(dumps_json(payload), cfg.out)
    else:
        rows = []
        for row in ratio_rows:
            rows.append(
                ["fn_ratio", row["m"], row["exact"], repr(row["ratio"]),
                 "" if row["growth_factor"] is None else repr(row["growth_factor"]), ""]
            )
        for row in trend_rows:
            rows.append(
                ["v0_trend", row["n"], row["vhat0"],
                 repr(row["scaled_23.31"]), repr(row["scaled_23.314"]),
                 repr(row["scaled_23.32"])]
            )
        _emit(
            dumps_csv(
                "construction-report", None,
                ["table", "size", "value", "x1", "x2", "x3"], rows,
            ),
            cfg.out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planegraphs",
        description="Exact enumeration, statistics and claim verification "
        "for plane graphs on small integer point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a .pts file for general position")
    p.add_argument("pts")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("count", help="print pg(P), the number of plane graphs")
    _add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("degrees", help="exact expected-degree statistics")
    _add_common(p)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("triangulations", help="enumerate maximal plane graphs")
    _add_common(p)
    p.set_defaults(func=cmd_triangulations)

    p = sub.add_parser("charge-audit", help="per-graph charges and family census")
    _add_common(p)
    p.set_defaults(func=cmd_charge_audit)

    p = sub.add_parser("verify", help="run claim verifiers against a point set")
    _add_common(p)
    p.add_argument(
        "--claims",
        default=None,
        help="comma-separated subset of: " + ", ".join(ALL_CLAIMS),
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a construction and write .pts")
    p.add_argument("kind", choices=("convex_chain", "cap_with_apex", "triangular_hull_random"))
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", type=Path, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construction-report", help="asymptotics ratio and trend tables")
    p.add_argument("n_max", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="csv", dest="fmt")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_construction_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PtsFormatError, GeneralPositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationLimitError as exc:
        print(f"error: {exc} (use --force or --max-n to override)", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
