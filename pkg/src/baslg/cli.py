"""Command-line interface.

Subcommands:

    eval      tabulate pdf/cdf (optionally the symmetric component too)
    sample    draw random variates, one per line
    fit       maximum-likelihood fit of one family, key-value report
    compare   fit several families, tab-separated table sorted by AIC
    lrtest    likelihood-ratio test of logistic against baslg2
    plotdata  grid curves or histogram-plus-fitted-density overlays

Output conventions: UTF-8, LF line endings, tab-separated columns or
``key<TAB>value`` lines.  Floats are rendered with ``repr`` so re-parsing
the output recovers the exact binary value.  Exit status is 0 on success,
1 on domain or runtime errors, 2 on flag errors.  ``fit`` is the one
deliberate exception to "report or error, never both": on non-convergence
or degenerate data it still writes a report, then exits 1.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

import numpy as np

from .core import StandardBaslg, SymmetricComponent
from .data import Dataset, DatasetError, load_dataset
from .fit import DegenerateDataError, OptimizerConfig, compare_models, fit_mle, lr_test
from .models import FAMILIES, LocScaleModel
from .sampler import SamplerConfig

__all__ = ["main", "build_parser", "UsageError"]


class UsageError(Exception):
    """Bad or inconsistent flags; maps to exit status 2 like argparse errors."""

_FAMILY_CHOICES = ("n", "lg", "la", "sn", "aslg", "baslg2")

# argparse normally refuses option-like tokens such as "-4,-1,0,1,4" or
# "-15:15" as flag values; widen its negative-number detector so anything
# that starts with a minus and a digit is treated as a value.
_NUMBER_LIKE = re.compile(r"^-\d[\d.,:eE+\-]*$")


def _fmt(value) -> str:
    if isinstance(value, bool) or isinstance(value, np.bool_):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write(lines: list[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"{flag} expects a comma-separated number list, got {text!r}.") from exc
    if not values:
        raise UsageError(f"{flag} expects at least one value.")
    return values


def _parse_range(text: str) -> tuple[float, float]:
    lo_hi = text.rsplit(":", 1)
    if len(lo_hi) != 2:
        raise UsageError(f"--range expects lo:hi, got {text!r}.")
    try:
        lo, hi = float(lo_hi[0]), float(lo_hi[1])
    except ValueError as exc:
        raise UsageError(f"--range expects lo:hi numbers, got {text!r}.") from exc
    if not lo < hi:
        raise UsageError(f"--range needs lo < hi, got {text!r}.")
    return lo, hi


def _grid(args) -> np.ndarray:
    if args.at is not None:
        return np.asarray(_parse_float_list(args.at, "--at"))
    if args.range is not None:
        if args.points < 2:
            raise UsageError("--points must be >= 2 for a range grid.")
        lo, hi = _parse_range(args.range)
        return np.linspace(lo, hi, args.points)
    raise UsageError("provide either --at or --range.")


def _load(args) -> Dataset:
    if args.data is None:
        raise UsageError("--data is required here.")
    return load_dataset(args.data, column=args.column, delimiter=args.delimiter)


def _optimizer_config(args) -> OptimizerConfig:
    kwargs = {"seed": args.seed}
    if args.restarts is not None:
        kwargs["restarts"] = args.restarts
    return OptimizerConfig(**kwargs)


def _fitted_pdf(result, grid: np.ndarray) -> np.ndarray:
    params = result.param_tuple()
    return np.exp(FAMILIES[result.family].logpdf(params, grid))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_eval(args) -> int:
    grid = _grid(args)
    model = LocScaleModel(args.alpha, args.mu, args.beta)
    cols = [grid, model.pdf(grid), model.cdf(grid)]
    if args.sym:
        sym = SymmetricComponent(args.alpha)
        x = (grid - args.mu) / args.beta
        cols.append(sym.pdf(x) / args.beta)
        cols.append(sym.cdf(x))
    lines = ["\t".join(_fmt(col[i]) for col in cols) for i in range(grid.size)]
    _write(lines, args.out)
    return 0


def _cmd_sample(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1.")
    method = "inverse_cdf" if args.method == "inverse" else "rejection"
    cfg = SamplerConfig(method=method, seed=args.seed)
    draws = LocScaleModel(args.alpha, args.mu, args.beta).sample(args.n, cfg)
    _write([_fmt(v) for v in draws], args.out)
    return 0


def _fit_report(command: str, family: str, dataset: Dataset, result, error=None) -> list[str]:
    lines = [
        f"command\t{command}",
        f"family\t{family}",
        f"label\t{dataset.label}",
        f"n_obs\t{dataset.n}",
    ]
    if result is None:
        lines.append("converged\tfalse")
        lines.append("restarts_used\t0")
    else:
        lines.append(f"converged\t{_fmt(result.converged)}")
        lines.append(f"restarts_used\t{result.restarts_used}")
        lines.append(f"loglik\t{_fmt(result.log_l)}")
        lines.append(f"aic\t{_fmt(result.aic)}")
        lines.append(f"bic\t{_fmt(result.bic)}")
        for name in FAMILIES[family].param_names:
            lines.append(f"param.{name}\t{_fmt(result.params[name])}")
    if error is not None:
        lines.append(f"error\t{error}")
    return lines


def _cmd_fit(args) -> int:
    dataset = _load(args)
    try:
        result = fit_mle(args.dist, dataset.values, _optimizer_config(args))
    except DegenerateDataError as exc:
        _write(_fit_report("fit", args.dist, dataset, None, error=str(exc)), args.out)
        return 1
    _write(_fit_report("fit", args.dist, dataset, result), args.out)
    return 0 if result.converged else 1


def _cmd_compare(args) -> int:
    dataset = _load(args)
    families = args.dists.split(",") if args.dists else list(_FAMILY_CHOICES)
    for family in families:
        if family not in FAMILIES:
            raise UsageError(f"unknown family {family!r} in --dists.")
    rows = compare_models(dataset.values, families, _optimizer_config(args))
    lines = ["# family\tshape\tmu\tscale\tloglik\taic\tbic\terror"]
    for row in rows:
        if row.ok:
            names = FAMILIES[row.family].param_names
            shape = _fmt(row.params[names[0]]) if len(names) == 3 else "-"
            cells = [
                row.family,
                shape,
                _fmt(row.params["mu"]),
                _fmt(row.params[names[-1]]),
                _fmt(row.log_l),
                _fmt(row.aic),
                _fmt(row.bic),
                "-",
            ]
        else:
            message = row.error.replace("\t", " ").replace("\n", " ")
            cells = [row.family, "-", "-", "-", "-", "-", "-", message]
        lines.append("\t".join(cells))
    _write(lines, args.out)
    return 0 if any(row.ok for row in rows) else 1


def _cmd_lrtest(args) -> int:
    dataset = _load(args)
    res = lr_test(dataset.values, _optimizer_config(args))
    decision = (
        "reject logistic null in favor of baslg2"
        if res.reject_null
        else "fail to reject logistic null"
    )
    lines = [
        "command\tlrtest",
        f"label\t{dataset.label}",
        f"n_obs\t{dataset.n}",
        f"statistic\t{_fmt(res.statistic)}",
        f"critical_value\t{_fmt(res.critical_value)}",
        f"df\t{res.df}",
        f"reject_null\t{_fmt(res.reject_null)}",
        f"decision\t{decision}",
        f"loglik_null\t{_fmt(res.null_fit.log_l)}",
        f"loglik_full\t{_fmt(res.full_fit.log_l)}",
    ]
    _write(lines, args.out)
    return 0


def _curves(args) -> list[str]:
    if args.alphas is None:
        raise UsageError("--curves needs --alphas.")
    if args.range is None:
        raise UsageError("--curves needs --range.")
    alphas = _parse_float_list(args.alphas, "--alphas")
    lo, hi = _parse_range(args.range)
    grid = np.linspace(lo, hi, args.points)
    columns = [grid]
    for alpha in alphas:
        dist = StandardBaslg(alpha)
        scaled = (grid - args.mu) / args.beta
        if args.what == "pdf":
            columns.append(dist.pdf(scaled) / args.beta)
        else:
            columns.append(dist.cdf(scaled))
    header = "z\t" + "\t".join(f"alpha={_fmt(a)}" for a in alphas)
    lines = [header]
    for i in range(grid.size):
        lines.append("\t".join(_fmt(col[i]) for col in columns))
    return lines


def _overlay(args) -> list[str]:
    if args.data is None:
        raise UsageError("--overlay needs --data.")
    if args.dists is None:
        raise UsageError("--overlay needs --dists.")
    dataset = _load(args)
    families = args.dists.split(",")
    for family in families:
        if family not in FAMILIES:
            raise UsageError(f"unknown family {family!r} in --dists.")
    if args.bins < 1:
        raise UsageError("--bins must be >= 1.")
    density, edges = np.histogram(dataset.values, bins=args.bins, density=True)
    centers = 0.5 * (edges[:-1] + edges[1:])
    widths = np.diff(edges)
    config = _optimizer_config(args)
    fitted = {}
    for family in families:
        result = fit_mle(family, dataset.values, config)
        fitted[family] = _fitted_pdf(result, centers)
    lines = ["center\twidth\tdensity\t" + "\t".join(families)]
    for i in range(centers.size):
        cells = [_fmt(centers[i]), _fmt(widths[i]), _fmt(density[i])]
        cells.extend(_fmt(fitted[family][i]) for family in families)
        lines.append("\t".join(cells))
    return lines


def _cmd_plotdata(args) -> int:
    if args.curves == args.overlay:
        raise UsageError("choose exactly one of --curves or --overlay.")
    lines = _curves(args) if args.curves else _overlay(args)
    _write(lines, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def _allow_negative_values(parser: argparse.ArgumentParser) -> None:
    parser._negative_number_matcher = _NUMBER_LIKE  # noqa: SLF001


def _add_data_flags(sub, required=True):
    sub.add_argument("--data", required=required, help="path to a text data file")
    sub.add_argument("--column", type=int, default=1, help="1-based column selector")
    sub.add_argument("--delimiter", default=None, help="field delimiter (default: whitespace)")


def _add_fit_flags(sub):
    sub.add_argument("--seed", type=int, default=0, help="optimizer seed")
    sub.add_argument("--restarts", type=int, default=None, help="optimizer restarts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="baslg",
        description="Evaluate, sample, fit, and compare the BASLG2 distribution family.",
    )
    _allow_negative_values(parser)
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_eval = subparsers.add_parser("eval", help="tabulate pdf and cdf values")
    p_eval.add_argument("--alpha", type=float, required=True)
    p_eval.add_argument("--mu", type=float, default=0.0)
    p_eval.add_argument("--beta", type=float, default=1.0)
    p_eval.add_argument("--at", default=None, help="comma list of evaluation points")
    p_eval.add_argument("--range", default=None, help="lo:hi for an even grid")
    p_eval.add_argument("--points", type=int, default=200)
    p_eval.add_argument("--sym", action="store_true", help="append symmetric-component columns")
    p_eval.add_argument("--out", default=None)
    p_eval.set_defaults(func=_cmd_eval)

    p_sample = subparsers.add_parser("sample", help="draw random variates")
    p_sample.add_argument("--alpha", type=float, required=True)
    p_sample.add_argument("--mu", type=float, default=0.0)
    p_sample.add_argument("--beta", type=float, default=1.0)
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--method", choices=("inverse", "rejection"), default="inverse")
    p_sample.add_argument("--out", default=None)
    p_sample.set_defaults(func=_cmd_sample)

    p_fit = subparsers.add_parser("fit", help="maximum-likelihood fit of one family")
    p_fit.add_argument("--dist", choices=_FAMILY_CHOICES, required=True)
    _add_data_flags(p_fit)
    _add_fit_flags(p_fit)
    p_fit.add_argument("--out", default=None)
    p_fit.set_defaults(func=_cmd_fit)

    p_cmp = subparsers.add_parser("compare", help="fit several families, rank by AIC")
    _add_data_flags(p_cmp)
    p_cmp.add_argument("--dists", default=None, help="comma list of families (default: all)")
    _add_fit_flags(p_cmp)
    p_cmp.add_argument("--out", default=None)
    p_cmp.set_defaults(func=_cmd_compare)

    p_lr = subparsers.add_parser("lrtest", help="likelihood-ratio test: lg vs baslg2")
    _add_data_flags(p_lr)
    _add_fit_flags(p_lr)
    p_lr.add_argument("--out", default=None)
    p_lr.set_defaults(func=_cmd_lrtest)

    p_plot = subparsers.add_parser("plotdata", help="emit plot-ready tables")
    p_plot.add_argument("--curves", action="store_true", help="density/cdf curves on a grid")
    p_plot.add_argument("--overlay", action="store_true", help="histogram plus fitted densities")
    p_plot.add_argument("--alphas", default=None, help="comma list of shape values (curves)")
    p_plot.add_argument("--dists", default=None, help="comma list of families (overlay)")
    p_plot.add_argument("--what", choices=("pdf", "cdf"), default="pdf")
    p_plot.add_argument("--mu", type=float, default=0.0)
    p_plot.add_argument("--beta", type=float, default=1.0)
    p_plot.add_argument("--range", default=None)
    p_plot.add_argument("--points", type=int, default=200)
    p_plot.add_argument("--bins", type=int, default=20)
    _add_data_flags(p_plot, required=False)
    _add_fit_flags(p_plot)
    p_plot.add_argument("--out", default=None)
    p_plot.set_defaults(func=_cmd_plotdata)

    for sub in subparsers.choices.values():
        _allow_negative_values(sub)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DatasetError, DegenerateDataError, ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
