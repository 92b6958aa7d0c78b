"""Command-line front end: ``heavytail {simulate,cdf,theory,graph-stats}``."""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import estimators as est
from . import montecarlo as mc
from . import theory
from .graphs import EdgeListError, read_edgelist

SEED_ENV = "HEAVYTAIL_SEED"


def _positive_int(minimum):
    def parse(text):
        try:
            value = int(float(text)) if "e" in text.lower() else int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _real(text):
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}") from None


def _real_list(text):
    try:
        # fractions such as 1/3 are accepted so table rows can be given exactly
        return tuple(float(Fraction(v.strip())) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from None


def _seed(text):
    value = _positive_int(0)(text)
    if value >= 2**64:
        raise argparse.ArgumentTypeError("must fit in 64 bits")
    return value


def _add_model_flags(p):
    p.add_argument("--model", required=True, choices=mc.MODELS)
    p.add_argument("--n", type=_positive_int(2), required=True, help="sample size or number of vertices/blocks")
    p.add_argument("--reps", type=_positive_int(1), default=100, help="number of replications N")
    p.add_argument("--seed", type=_seed, default=None, help=f"master seed (fallback: ${SEED_ENV}, then 0)")
    p.add_argument("--gamma", type=_real, default=None, help="tail exponent of the base law or degree law")
    p.add_argument("--alpha", type=_real_list, default=mc.DEFAULT_ALPHA, help="linear-model X coefficients")
    p.add_argument("--beta", type=_real_list, default=mc.DEFAULT_BETA, help="linear-model Y coefficients")
    p.add_argument("--a", type=_real, default=2.0, help="bipartite model ratio a >= 1")
    p.add_argument("--b", type=_real, default=0.5, help="bipartite model scale b > 0")
    p.add_argument("--out", default=None, help="output file (default: none for simulate, stdout for cdf)")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.add_argument("--jobs", type=_positive_int(1), default=1, help="worker processes for replications")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heavytail", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="Monte Carlo mean and std of the estimators")
    _add_model_flags(p)
    p.add_argument("--estimator", choices=("pearson", "spearman", "both"), default="both")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("cdf", help="empirical CDF of an estimator over replications")
    _add_model_flags(p)
    p.add_argument("--estimator", choices=("pearson", "spearman"), default="pearson")
    p.add_argument("--grid-points", type=_positive_int(2), default=201, help="grid size on [-1, 1]")
    p.set_defaults(func=cmd_cdf)

    p = sub.add_parser("theory", help="evaluate a closed-form limit or bound")
    p.add_argument("--formula", required=True,
                   choices=("support-a", "mixture-limit", "intermediate-limit", "bipartite-interval", "pareto-moment"))
    p.add_argument("--alpha", type=_real_list)
    p.add_argument("--beta", type=_real_list)
    p.add_argument("--mean", type=_real)
    p.add_argument("--var", type=_real)
    p.add_argument("--mu1", type=_real)
    p.add_argument("--mu2", type=_real)
    p.add_argument("--mu3", type=_real)
    p.add_argument("--a", type=_real)
    p.add_argument("--gamma", type=_real)
    p.add_argument("--p", type=_positive_int(1))
    p.add_argument("--integer", action="store_true", help="moments of floor(U) instead of U")
    p.set_defaults(func=cmd_theory)

    p = sub.add_parser("graph-stats", help="assortativity, rank correlation and lower bound of an edge list")
    p.add_argument("--edges", required=True, help="edge-list file: 'u v' per line, 0-based, '#' comments")
    p.add_argument("--seed", type=_seed, default=None)
    p.set_defaults(func=cmd_graph_stats)
    return parser


def _resolve_seed(parser, value):
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return _seed(env)
    except argparse.ArgumentTypeError as exc:
        parser.error(f"argument --seed: ${SEED_ENV}: {exc}")


def _config(parser, args) -> mc.ModelConfig:
    if args.model == "pam" and args.gamma is not None:
        parser.error("argument --gamma: the pam model has no tail parameter")
    if args.gamma is not None and not args.gamma > 0:
        parser.error("argument --gamma: must be positive")
    if len(args.alpha) != len(args.beta):
        parser.error("argument --beta: must have as many entries as --alpha")
    if args.a < 1:
        parser.error("argument --a: must be >= 1")
    if not args.b > 0:
        parser.error("argument --b: must be positive")
    return mc.ModelConfig(model=args.model, n=args.n, reps=args.reps, seed=_resolve_seed(parser, args.seed),
                          gamma=args.gamma, alpha=args.alpha, beta=args.beta, a=args.a, b=args.b)


def _delimiter(args):
    return "\t" if args.format == "tsv" else ","


def cmd_simulate(parser, args) -> int:
    config = _config(parser, args)
    names = mc.ESTIMATORS if args.estimator == "both" else (args.estimator,)
    try:
        summaries = mc.run_estimators(config, names, jobs=args.jobs)
    except mc.AllUndefinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for name, s in summaries.items():
        print(f"{config.model} {name} n={config.n} N={config.reps} seed={config.seed} "
              f"mean={mc.fmt(s.mean)} std={mc.fmt(s.std)} undefined={s.n_undefined}")
    if args.out:
        mc.write_results_csv(args.out, config, summaries, _delimiter(args))
    return 0


def cmd_cdf(parser, args) -> int:
    config = _config(parser, args)
    try:
        summary = mc.run_replications(config, args.estimator, jobs=args.jobs)
    except mc.AllUndefinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    cdf = mc.empirical_cdf(summary.values, np.linspace(-1.0, 1.0, args.grid_points))
    if args.out:
        mc.write_cdf_csv(args.out, cdf, _delimiter(args))
    else:
        _print_cdf(cdf, args)
    return 0


def _print_cdf(cdf, args):
    sep = _delimiter(args)
    print(f"x{sep}F")
    for x, f in cdf:
        print(f"{mc.fmt(x)}{sep}{mc.fmt(f)}")


def _need(parser, args, *names):
    for name in names:
        if getattr(args, name) is None:
            parser.error(f"argument --{name}: required for --formula {args.formula}")


def cmd_theory(parser, args) -> int:
    f = args.formula
    try:
        if f == "support-a":
            _need(parser, args, "alpha", "beta")
            values = [theory.support_lower_bound(args.alpha, args.beta)]
        elif f == "mixture-limit":
            _need(parser, args, "mean", "var")
            values = [theory.mixture_rho_limit(args.mean, args.var)]
        elif f == "intermediate-limit":
            if args.gamma is not None:
                moments = theory.MomentTriple.of_pareto_degrees(args.gamma)
            else:
                _need(parser, args, "mu1", "mu2", "mu3")
                moments = theory.MomentTriple(args.mu1, args.mu2, args.mu3)
            values = [theory.intermediate_cm_rho_limit(moments)]
        elif f == "bipartite-interval":
            _need(parser, args, "a")
            low, high = theory.bipartite_limit_interval(args.a)
            print(f"{mc.fmt(low)} {mc.fmt(high)}")
            return 0
        else:
            _need(parser, args, "gamma", "p")
            values = [theory.pareto_moments(args.gamma, args.p, integer=args.integer)]
    except ValueError as exc:
        parser.error(f"--formula {f}: {exc}")
    for v in values:
        print("inf" if v is not None and math.isinf(v) else mc.fmt(v))
    return 0


def cmd_graph_stats(parser, args) -> int:
    try:
        graph = read_edgelist(args.edges)
    except EdgeListError as exc:
        parser.error(f"argument --edges: {exc}")
    except OSError as exc:
        parser.error(f"argument --edges: {exc}")
    if graph.n_edges == 0:
        parser.error("argument --edges: the file contains no edges")
    seed = _resolve_seed(parser, args.seed)
    rank = est.graph_spearman(graph, seed) if graph.n_edges >= 2 else None
    print(f"vertices {graph.n_vertices}")
    print(f"edges {graph.n_edges}")
    print(f"assortativity {mc.fmt(est.graph_assortativity(graph))}")
    print(f"spearman {mc.fmt(rank)}")
    print(f"lower_bound {mc.fmt(est.assortativity_lower_bound(graph))}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    sub = parser._subparsers._group_actions[0].choices[args.command]
    return args.func(sub, args)


if __name__ == "__main__":
    sys.exit(main())
