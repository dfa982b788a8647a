"""Command line entry point: ``hilprank validate|assess|sweep``.

Exit codes: 0 on success, 1 when the dataset fails validation, 2 on I/O or
parse failures.
"""
from __future__ import annotations

import argparse
import logging
import sys

from .damage import ROUNDING_POLICIES
from .scenario import (DatasetError, InvalidRange, ParseError, ScenarioConfig, bundled_dataset_path,
                       export_heatmap, export_ranking, load_dataset, load_observed_damage, run_assessment,
                       wind_sweep)
from .valuation import AGGREGATION_MODES

log = logging.getLogger("hilprank")

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


def _dataset_arg(value: str) -> str:
    return str(bundled_dataset_path()) if value == "bundled" else value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilprank", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="load and validate a dataset")
    p.add_argument("dataset", type=_dataset_arg, help="dataset JSON, or 'bundled' for the 33-bus case study")

    p = sub.add_parser("assess", help="run the damage and valuation pipeline and rank lines")
    p.add_argument("--dataset", required=True, type=_dataset_arg)
    p.add_argument("--wind", type=float, required=True, help="wind speed in m/s")
    p.add_argument("--rounding", choices=ROUNDING_POLICIES, default="nearest")
    p.add_argument("--mode", choices=AGGREGATION_MODES, default="literal")
    p.add_argument("--t-rep-av", type=float, default=4.0, help="average repair hours per pole")
    damage = p.add_mutually_exclusive_group()
    damage.add_argument("--damage", metavar="OBSERVED_JSON", help="observed per-line damage records")
    damage.add_argument("--observed", action="store_true", help="use the dataset's own observed damage")
    p.add_argument("--out-ranking", help="ranking output (.csv or .json)")
    p.add_argument("--out-dot", help="heat-map graph output (DOT)")

    p = sub.add_parser("sweep", help="damaged-pole counts over a range of wind speeds")
    p.add_argument("--dataset", required=True, type=_dataset_arg)
    p.add_argument("--v-min", type=float, required=True)
    p.add_argument("--v-max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--rounding", choices=ROUNDING_POLICIES, default="nearest")
    p.add_argument("--out", required=True)
    return parser


def _validate(args) -> int:
    ds = load_dataset(args.dataset)
    net = ds.network
    print(f"{args.dataset}: OK ({len(net.buses)} buses, {len(net.lines)} lines, "
          f"{len(net.feeders)} feeders, {ds.total_poles} poles, {len(ds.class_table)} lifetime classes)")
    return EXIT_OK


def _assess(args) -> int:
    ds = load_dataset(args.dataset)
    observed = None
    source = "estimate"
    if args.damage:
        observed = load_observed_damage(args.damage)
        source = "observed"
    elif args.observed:
        source = "observed"
    config = ScenarioConfig(args.wind, args.rounding, args.mode, args.t_rep_av, source)
    assessment = run_assessment(ds, config, observed)

    print(f"wind {config.v_real} m/s, rounding={config.rounding}, mode={config.mode}, damage={source}")
    for fv in assessment.feeders:
        damaged = sum(lv.damaged_poles for lv in assessment.lines if lv.feeder_id == fv.feeder_id)
        print(f"  feeder {fv.feeder_id}: rank {fv.rank}, w_f = {fv.w_f:.6g}, damaged poles = {damaged}")
    top = assessment.feeder_order[0]
    print(f"lines of feeder {top} by priority:")
    for lv in assessment.feeder_lines(top):
        print(f"  {lv.rank:>3}  line {lv.line_id:<6} {lv.tier:<6} t_rep = {lv.t_rep_h:<5g} h  value = {lv.v_line_dyn:.6g}")
    if args.out_ranking:
        export_ranking(assessment, args.out_ranking)
        log.info("ranking written to %s", args.out_ranking)
    if args.out_dot:
        export_heatmap(assessment, ds.network, args.out_dot)
        log.info("heat map written to %s", args.out_dot)
    return EXIT_OK


def _sweep(args) -> int:
    ds = load_dataset(args.dataset)
    table = wind_sweep(ds, args.v_min, args.v_max, args.step, args.rounding)
    table.to_csv(args.out)
    print(f"{len(table.rows)} wind speeds written to {args.out}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    handler = {"validate": _validate, "assess": _assess, "sweep": _sweep}[args.command]
    try:
        return handler(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DatasetError, InvalidRange, ValueError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
