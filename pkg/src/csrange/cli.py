"""Command-line interface.

Subcommands mirror the library surface: closed-form range sizing, ratio
curves, worst-case packings, Monte Carlo sweeps, the pairwise-model
counterexample, topology safety checks, and empirical bisection.

Exit codes: 0 success (and "safe" for check-safe), 1 unsafe verdict from
check-safe, 2 invalid input, 3 I/O failure. Randomized subcommands require an
explicit --seed and identical invocations produce byte-identical file output.
Human-readable tables go to stdout; machine formats are only written where
--out/--json point.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analytics, harness, packing
from .analytics import format_plain as fmt
from .carrier_sensing import CSConfig, is_safe_csrange
from .errors import CSRangeError
from .geometry import load_topology
from .harness import TopologyConfig
from .interference import RadioParams


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _radio_params(args: argparse.Namespace) -> RadioParams:
    return RadioParams(
        tx_power=args.power,
        sinr_threshold=args.gamma0,
        path_loss_exp=args.alpha,
        noise_power=getattr(args, "noise", 0.0),
    )


def _print_table(rows: list[tuple[str, str]]) -> None:
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name.ljust(width)}  {value}")


def cmd_ranges(args: argparse.Namespace) -> int:
    report = analytics.range_report(args.gamma0, args.alpha)
    pairwise = report.pairwise_range_over_dmax * args.dmax
    physical = report.physical_range_over_dmax * args.dmax
    limit = analytics.ratio_limit(args.alpha)
    _print_table(
        [
            ("gamma0", fmt(args.gamma0)),
            ("alpha", fmt(args.alpha)),
            ("d_max", fmt(args.dmax)),
            ("k_constant", fmt(report.k_constant)),
            ("pairwise_range", fmt(pairwise)),
            ("physical_range", fmt(physical)),
            ("ratio", fmt(report.ratio)),
            ("ratio_limit", fmt(limit)),
        ]
    )
    if args.json:
        _write_json(
            args.json,
            {
                "gamma0": args.gamma0,
                "alpha": args.alpha,
                "d_max": args.dmax,
                "k_constant": report.k_constant,
                "pairwise_range": pairwise,
                "physical_range": physical,
                "ratio": report.ratio,
                "ratio_limit": limit,
            },
        )
    return 0


def cmd_ratio_curve(args: argparse.Namespace) -> int:
    alphas = [float(a) for a in args.alpha_list.split(",") if a.strip()]
    if not alphas:
        raise ValueError("--alpha-list must name at least one exponent")
    grid = analytics.log_spaced(args.gamma0_min, args.gamma0_max, args.gamma0_points)
    points = analytics.ratio_curve(alphas, grid)
    _write_text(args.out, analytics.ratio_curve_csv(points))
    print(f"wrote {len(points)} rows ({len(alphas)} curves x {len(grid)} thresholds) to {args.out}")
    return 0


def cmd_pack(args: argparse.Namespace) -> int:
    hex_packing = packing.build_hex_packing(args.spacing, args.layers)
    census = packing.layer_census(hex_packing)
    print("ring  count  min_center_distance")
    for row in census:
        print(f"{str(row.ring).ljust(4)}  {str(row.count).ljust(5)}  {fmt(row.min_center_distance)}")
    if args.out:
        _write_json(args.out, packing.packing_to_json_dict(hex_packing))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    multipliers = [float(m) for m in args.multipliers.split(",") if m.strip()]
    if not multipliers:
        raise ValueError("--multipliers must name at least one range multiplier")
    cfg = TopologyConfig(
        area_side=args.area_side,
        num_links=args.num_links,
        max_link_len=args.max_link_len,
        rng_seed=args.seed,
    )
    result = harness.theorem1_sweep(
        cfg,
        _radio_params(args),
        multipliers,
        trials=args.trials,
        permutations_per_trial=args.perms,
        workers=args.threads,
    )
    print("cs_range_over_dmax  admitted  violating  violation_rate  violating_links")
    for row in result.rows:
        print(
            f"{fmt(row.cs_range_over_dmax).ljust(18)}  {str(row.admitted_sets).ljust(8)}  "
            f"{str(row.violating_sets).ljust(9)}  {fmt(row.violation_rate).ljust(14)}  "
            f"{row.violating_links}"
        )
    if args.out:
        _write_text(args.out, result.to_csv())
    return 0


def cmd_counterexample(args: argparse.Namespace) -> int:
    params = _radio_params(args)
    rings = args.rings
    if rings is None:
        rings = harness.minimal_violating_rings(params, d_max=args.dmax)
    ce = harness.build_pairwise_counterexample(params, rings=rings, d_max=args.dmax)
    report = harness.counterexample_report(ce, params)
    _print_table(
        [
            ("cs_range (pairwise)", fmt(ce.cs.cs_range)),
            ("rings", str(ce.rings)),
            ("links", str(len(ce.links))),
            ("victim_index", str(ce.victim_index)),
            ("sinr_threshold", fmt(params.sinr_threshold)),
            ("victim_data_sir", fmt(report["data_sir"])),
            ("victim_ack_sir", fmt(report["ack_sir"])),
        ]
    )
    if args.out:
        _write_json(args.out, report)
    return 0


def cmd_check_safe(args: argparse.Namespace) -> int:
    ls = load_topology(args.topology)
    verdict = is_safe_csrange(ls, CSConfig(args.cs_range), _radio_params(args))
    if verdict.safe:
        print(f"safe: all admissible concurrent sets clear SINR {fmt(args.gamma0)}")
        if args.json:
            _write_json(args.json, {"safe": True, "witness": None})
        return 0
    w = verdict.witness
    print("unsafe")
    _print_table(
        [
            ("concurrent_set", ",".join(str(i) for i in w.concurrent_set)),
            ("link_index", str(w.link_index)),
            ("frame", w.frame.value),
            ("sir", fmt(w.sir)),
            ("sinr_threshold", fmt(args.gamma0)),
        ]
    )
    if args.json:
        _write_json(
            args.json,
            {
                "safe": False,
                "witness": {
                    "concurrent_set": list(w.concurrent_set),
                    "link_index": w.link_index,
                    "frame": w.frame.value,
                    "sir": w.sir,
                },
            },
        )
    return 1


def cmd_bisect(args: argparse.Namespace) -> int:
    ls = load_topology(args.topology)
    threshold = harness.bisect_empirical_safe_range(
        ls, _radio_params(args), args.lo, args.hi, tol=args.tol
    )
    _print_table(
        [
            ("empirical_safe_range", fmt(threshold)),
            ("over_dmax", fmt(threshold / ls.max_link_length())),
        ]
    )
    if args.json:
        _write_json(
            args.json,
            {"empirical_safe_range": threshold, "over_dmax": threshold / ls.max_link_length()},
        )
    return 0


def _add_radio_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--gamma0", type=float, required=True, help="SINR threshold, linear")
    sub.add_argument("--alpha", type=float, required=True, help="path-loss exponent, > 2")
    sub.add_argument("--power", type=float, default=1.0, help="transmit power, watts")
    sub.add_argument("--noise", type=float, default=0.0, help="noise floor, watts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csrange",
        description="Safe carrier-sensing range analysis under cumulative interference.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ranges", help="closed-form pairwise and cumulative-model ranges")
    p.add_argument("--gamma0", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--dmax", type=float, default=1.0, help="longest link length, meters")
    p.add_argument("--json", help="also write the report as JSON to this path")
    p.set_defaults(func=cmd_ranges)

    p = sub.add_parser("ratio-curve", help="physical/pairwise ratio over a threshold grid")
    p.add_argument("--alpha-list", required=True, help="comma-separated exponents, e.g. 3,4,6")
    p.add_argument("--gamma0-min", type=float, required=True)
    p.add_argument("--gamma0-max", type=float, required=True)
    p.add_argument("--gamma0-points", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_ratio_curve)

    p = sub.add_parser("pack", help="worst-case hexagonal interferer packing")
    p.add_argument("--spacing", type=float, required=True)
    p.add_argument("--layers", type=int, required=True)
    p.add_argument("--out", help="JSON layout dump path")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("sweep", help="violation rate vs sensing-range multiplier")
    p.add_argument("--seed", type=int, required=True, help="master RNG seed")
    p.add_argument("--area-side", type=float, default=200.0)
    p.add_argument("--num-links", type=int, default=20)
    p.add_argument("--max-link-len", type=float, default=10.0)
    p.add_argument("--multipliers", required=True, help="comma-separated cs_range/d_max values")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--perms", type=int, default=1, help="admission orders per trial")
    p.add_argument("--threads", type=int, default=1, help="worker processes; output is identical for any value")
    _add_radio_arguments(p)
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("counterexample", help="admissible pairwise-range topology that fails cumulatively")
    _add_radio_arguments(p)
    p.add_argument("--rings", type=int, default=None, help="interferer rings (default: minimal violating)")
    p.add_argument("--dmax", type=float, default=1.0)
    p.add_argument("--out", help="JSON report path")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("check-safe", help="safety verdict for a topology file at one range")
    p.add_argument("--topology", required=True, help="topology JSON path")
    p.add_argument("--cs-range", type=float, required=True)
    _add_radio_arguments(p)
    p.add_argument("--json", help="verdict JSON path")
    p.set_defaults(func=cmd_check_safe)

    p = sub.add_parser("bisect", help="empirical safe-range threshold by bisection")
    p.add_argument("--topology", required=True, help="topology JSON path")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--tol", type=float, default=None, help="default: 1e-3 x longest link")
    _add_radio_arguments(p)
    p.add_argument("--json", help="result JSON path")
    p.set_defaults(func=cmd_bisect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except (CSRangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
