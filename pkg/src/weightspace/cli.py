"""Command-line interface: ``weightspace {convert,wtest,untidy,divergence}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import odds
from .descriptive import Sample
from .config import load_settings, parse_thresholds, parse_transforms
from .divergence import BaseDataset, builtin_datasets, divergence_curve, log_scales
from .errors import DomainError, PipelineError
from .report import (divergence_rows, fmt, render_csv, render_json, render_svg, render_text,
                     untidy_document, wtest_document)
from .special import normal_sf
from .tables import read_table
from .untidy import run_pipeline, transform_by_name
from .wtest import to_weights, wtest_probabilities


def _global_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps flags given before the subcommand from being reset by the subparser
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit machine-readable JSON")
    p.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                   help="significant digits for scalar output (default 6)")
    p.add_argument("--ci-multiplier", type=float, default=argparse.SUPPRESS,
                   help="multiplier on the SE of the difference for the CI (default 1.96)")
    p.add_argument("--ci-mode", choices=("normal", "t"), default=argparse.SUPPRESS,
                   help="'normal' uses the fixed multiplier, 't' the 95%% t critical value")
    p.add_argument("--skew", choices=("adjusted", "mean-median"), default=argparse.SUPPRESS,
                   help="skewness statistic for transform selection")
    p.add_argument("--thresholds", type=str, default=argparse.SUPPRESS, metavar="C1,C2",
                   help="certainty cut points: Indeterminate above C1, Different below C2")
    p.add_argument("--welch", action="store_true", default=argparse.SUPPRESS,
                   help="use Welch's unequal-variance t-test instead of the pooled test")
    return p


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = argparse.ArgumentParser(
        prog="weightspace", parents=[flags],
        description="Two-group statistics in log10-odds (Weight) space.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[flags], help="convert a single value between representations")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--prob", type=float, help="probability in (0, 1)")
    g.add_argument("--percent", type=float, help="percentage in (0, 100)")
    g.add_argument("--weight", type=float, help="Weight (log10 odds)")
    g.add_argument("--pvalue", type=float, help="p-value in (0, 1)")
    g.add_argument("--certainty", type=float, help="Certainty (log10 odds of a p-value)")
    g.add_argument("--zscore", type=float, help="standard normal z-score")

    p = sub.add_parser("wtest", parents=[flags], help="compare two groups of probabilities")
    p.add_argument("table", help="group,value table of probabilities")
    p.add_argument("--percent", action="store_true", help="values are percentages (0-100)")

    p = sub.add_parser("untidy", parents=[flags], help="transform, linearize and test untidy data")
    p.add_argument("table", help="group,value table of raw measurements")
    p.add_argument("--transforms", type=str, default=argparse.SUPPRESS,
                   help="comma-separated candidates among identity, ln, exp (default all three)")

    p = sub.add_parser("divergence", parents=[flags],
                       help="mean/SD divergence between probability and Weight space")
    p.add_argument("--data", help="group,value table of percentages; groups become datasets")
    p.add_argument("--scales", default=None,
                   help="comma-separated scale factors, or log:LO:HI:N (default log:5e-5:1:60)")
    p.add_argument("--sd-convention", choices=("upper", "half-range"), default=argparse.SUPPRESS,
                   help="how a Weight-space SD is mapped back to probability units")
    p.add_argument("--svg", help="also write an SVG plot to this path")
    p.add_argument("--output", "-o", help="write CSV/JSON here instead of stdout")
    return parser


def parse_scales(spec: str | None) -> list[float]:
    if spec is None:
        return log_scales()
    spec = spec.strip()
    if spec.startswith("log:"):
        try:
            lo, hi, n = spec[4:].split(":")
            return log_scales(int(n), float(lo), float(hi))
        except ValueError:
            raise DomainError(f"scale grid must look like log:LO:HI:N (got {spec!r})") from None
    try:
        scales = [float(s) for s in spec.split(",") if s.strip()]
    except ValueError:
        raise DomainError(f"scales must be comma-separated numbers (got {spec!r})") from None
    if not scales:
        raise DomainError("no scales given")
    for s in scales:
        if not (0.0 < s <= 1.0):
            raise DomainError(f"scale must lie in (0, 1] (got {s!r})")
    return scales


def _settings(args) -> tuple:
    ns = vars(args)
    overrides = {
        "ci_multiplier": ns.get("ci_multiplier"),
        "ci_mode": ns.get("ci_mode"),
        "skew": ns.get("skew"),
        "precision": ns.get("precision"),
        "sd_convention": ns.get("sd_convention"),
        "welch": ns.get("welch"),
    }
    if "thresholds" in ns:
        overrides["thresholds"] = parse_thresholds(ns["thresholds"])
    if "transforms" in ns:
        overrides["transforms"] = parse_transforms(ns["transforms"])
    return load_settings(overrides), bool(ns.get("json", False))


def _emit(text: str, path: str | None = None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_convert(args, settings, as_json: bool) -> int:
    prec = settings.precision
    if args.prob is not None or args.percent is not None:
        p = args.prob if args.prob is not None else args.percent / 100.0
        if args.percent is not None and not (0.0 < args.percent < 100.0):
            raise DomainError(f"percentage must satisfy 0 < percent < 100 (got {args.percent!r})")
        out = {"probability": p, "percent": 100.0 * p, "odds": odds.odds_from_probability(p),
               "weight": odds.weight_from_probability(p)}
    elif args.weight is not None:
        w = args.weight
        p = odds.probability_from_weight(w)
        out = {"weight": w, "probability": p, "percent": 100.0 * p, "odds": 10.0 ** w}
    elif args.pvalue is not None:
        out = {"p": args.pvalue, "certainty": odds.certainty_from_p(args.pvalue)}
    elif args.certainty is not None:
        out = {"certainty": args.certainty, "p": odds.p_from_certainty(args.certainty)}
    else:
        z = args.zscore
        p = odds.probability_from_sd(z)
        out = {"z": z, "probability": p, "upper_tail": normal_sf(z),
               "two_tailed": min(1.0, 2.0 * normal_sf(abs(z))), "weight": odds.weight_from_sd(z)}
    if as_json:
        _emit(render_json(out))
    else:
        _emit("".join(f"{k}: {fmt(v, prec)}\n" for k, v in out.items()))
    return 0


def _config_echo(settings, keys) -> dict:
    d = settings.as_dict()
    return {k: d[k] for k in keys}


def cmd_wtest(args, settings, as_json: bool) -> int:
    (la, va), (lb, vb) = read_table(args.table).two_groups()
    if args.percent:
        va = [v / 100.0 for v in va]
        vb = [v / 100.0 for v in vb]
    rep = wtest_probabilities(va, vb, settings.wtest_config())
    wa, _ = to_weights(va, la)
    wb, _ = to_weights(vb, lb)
    config = _config_echo(settings, ("ci_multiplier", "ci_mode", "thresholds", "welch"))
    config["percent"] = bool(args.percent)
    doc = wtest_document(rep, (va, vb), (wa, wb), (la, lb), config)
    _emit(render_json(doc) if as_json else render_text(doc, settings.precision))
    return 0


def cmd_untidy(args, settings, as_json: bool) -> int:
    (la, va), (lb, vb) = read_table(args.table).two_groups()
    candidates = [transform_by_name(n) for n in settings.transforms]
    result = run_pipeline(Sample(la, va), Sample(lb, vb), candidates,
                          settings.wtest_config(), settings.skew)
    config = _config_echo(settings, ("ci_multiplier", "ci_mode", "skew", "thresholds", "transforms", "welch"))
    doc = untidy_document(result, (la, lb), config)
    _emit(render_json(doc) if as_json else render_text(doc, settings.precision))
    return 0


def cmd_divergence(args, settings, as_json: bool) -> int:
    scales = parse_scales(args.scales)
    if args.data:
        bases = [BaseDataset(name, tuple(vals)) for name, vals in read_table(args.data).groups().items()]
    else:
        bases = builtin_datasets()
    points = [pt for base in bases for pt in divergence_curve(base, scales, settings.sd_convention)]
    if as_json:
        _emit(render_json({"sd_convention": settings.sd_convention, "points": divergence_rows(points)}),
              args.output)
    else:
        _emit(render_csv(points, settings.precision), args.output)
    if args.svg:
        Path(args.svg).write_text(render_svg(points), encoding="utf-8")
    return 0


COMMANDS = {"convert": cmd_convert, "wtest": cmd_wtest, "untidy": cmd_untidy, "divergence": cmd_divergence}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings, as_json = _settings(args)
        return COMMANDS[args.command](args, settings, as_json)
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
