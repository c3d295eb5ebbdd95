"""Command-line front end.

Subcommands: ``compute``, ``distances``, ``build``, ``axioms``,
``alpha-bounds``, ``extremal``, ``counterexample``.  Reports are JSON by
default (``--format csv`` for tabular outputs) and embed the resolved
configuration, so identical invocations produce byte-identical files.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

from . import builders
from .alpha_bounds import admissible_interval
from .axioms import run_suite
from .errors import NetpolarError, SchemaError
from .extremal import counterexample_search, verify_bipolar_max
from .graph import Network, geodesic_distances, network_from_dict, network_to_dict
from .measures import MeasureParams, normalized_polarization, polarization


def parse_network_file(path: str | Path, allow_disconnected: bool = False) -> Network:
    """Load and validate a network JSON file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"{path}: {exc.strerror or exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc
    return network_from_dict(raw, allow_disconnected=allow_disconnected)


def _write_report(payload: dict, out: str | None, text: str | None = None) -> None:
    rendered = text if text is not None else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(rendered, encoding="utf-8")


def _config_echo(args: argparse.Namespace) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _cmd_compute(args) -> int:
    net = parse_network_file(args.network, args.allow_disconnected_longest_path)
    params = MeasureParams(K=args.K, alpha=args.alpha)
    dist = geodesic_distances(net)
    if args.normalize:
        result = normalized_polarization(net, params, dist)
        print(f"value={result.value:.12g} normalized={result.normalized:.12g}")
    else:
        result = polarization(net, params, dist)
        print(f"value={result.value:.12g}")
    _write_report({"config": _config_echo(args), "result": result.to_dict()}, args.out)
    return 0


def _cmd_distances(args) -> int:
    net = parse_network_file(args.network, args.allow_disconnected_longest_path)
    dist = geodesic_distances(net)
    print(f"diameter={dist.diameter:.12g} pair={dist.diameter_pair}")
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("," + ",".join(dist.ids) + "\n")
        for i, row in zip(dist.ids, dist.d):
            buf.write(i + "," + ",".join(f"{x:.12g}" for x in row) + "\n")
        _write_report({}, args.out, text=buf.getvalue())
    else:
        payload = {
            "config": _config_echo(args),
            "order": list(dist.ids),
            "d": [[float(x) for x in row] for row in dist.d],
            "diameter": dist.diameter,
            "diameter_pair": list(dist.diameter_pair) if dist.diameter_pair else None,
        }
        _write_report(payload, args.out)
    return 0


def _cmd_build(args) -> int:
    kind = args.kind
    if kind == "line":
        net = builders.build_line(builders.load_mass_points_csv(args.input))
    elif kind == "complete":
        points = builders.load_mass_points_csv(args.input)
        net = builders.build_complete_uniform([m for _, m in points.points])
    elif kind == "lattice":
        net = builders.build_lattice(builders.load_mass_points_csv(args.input), norm=args.norm)
    elif kind == "votes":
        net = builders.build_vote_hypercube(builders.load_votes_csv(args.input))
    elif kind == "reps":
        net = builders.build_representatives(builders.load_votes_csv(args.input))
    elif kind == "parties":
        net = builders.build_parties(builders.load_votes_csv(args.input), tie_rule=args.tie_rule)
    elif kind == "cosponsor":
        net = builders.build_cosponsorship(builders.load_votes_csv(args.input))
    elif kind == "prefs":
        net = builders.build_preference_kemeny(builders.load_preferences_csv(args.input))
    else:  # pragma: no cover - argparse restricts choices
        raise SchemaError(f"unknown builder {kind!r}")
    print(f"nodes={net.n} edges={len(net.edges)} total_mass={net.total_mass:.12g}")
    _write_report(network_to_dict(net), args.out)
    return 0


def _cmd_axioms(args) -> int:
    report = run_suite(
        args.suite, alpha=args.alpha, count=args.samples, seed=args.seed,
        c=args.c, K=args.K,
    )
    print(f"suite={report.axiom} samples={report.samples} failures={report.failures}")
    _write_report({}, args.out, text=report.to_json() + "\n")
    return 0


def _cmd_alpha_bounds(args) -> int:
    cs = args.c_list if args.c_list else [args.c]
    intervals = [admissible_interval(c, tol=args.tol) for c in cs]
    last = intervals[-1]
    lower = "none" if last.lower is None else f"{last.lower:.6g}"
    print(f"c={last.c:g} alpha_lower={lower} alpha_upper={last.upper:.6g}")
    if args.format == "csv":
        lines = ["c,alpha_lower,alpha_upper"]
        for iv in intervals:
            lo = "" if iv.lower is None else f"{iv.lower:.12g}"
            lines.append(f"{iv.c:g},{lo},{iv.upper:.12g}")
        _write_report({}, args.out, text="\n".join(lines) + "\n")
    else:
        payload = {"config": _config_echo(args),
                   "intervals": [iv.to_dict() for iv in intervals]}
        _write_report(payload, args.out)
    return 0


def _cmd_extremal(args) -> int:
    net = parse_network_file(args.network, args.allow_disconnected_longest_path)
    report = verify_bipolar_max(net, alpha=args.alpha, grid_step=args.step)
    print(f"is_bipolar_max={report.is_bipolar_max} "
          f"bipolar={report.bipolar_value:.12g} best={report.best_value:.12g}")
    _write_report({}, args.out, text=report.to_json() + "\n")
    return 0


def _cmd_counterexample(args) -> int:
    witness = counterexample_search(args.alpha)
    if witness is None:
        print("witness=none")
    else:
        print(f"witness eps={witness['eps']:g} value={witness['value']:.12g} "
              f"bipolar={witness['bipolar_value']:.12g}")
    _write_report({"config": _config_echo(args), "witness": witness}, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netpolar",
                                     description="Polarization measures on weighted networks")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, network=True):
        if network:
            p.add_argument("--network", required=True, help="network JSON file")
            p.add_argument("--allow-disconnected-longest-path", action="store_true",
                           dest="allow_disconnected_longest_path")
        p.add_argument("--alpha", type=float, default=1.0)
        p.add_argument("--K", type=float, default=1.0)
        p.add_argument("--out", default=None, help="report file path")
        p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("compute", help="evaluate P_alpha on a network")
    common(p)
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("distances", help="all-pairs geodesic distances")
    common(p)
    p.set_defaults(func=_cmd_distances)

    p = sub.add_parser("build", help="construct a network from data files")
    p.add_argument("kind", choices=["line", "complete", "votes", "reps", "prefs",
                                    "lattice", "cosponsor", "parties"])
    p.add_argument("--input", required=True, help="CSV input file")
    p.add_argument("--norm", choices=["manhattan", "euclidean", "chebyshev"],
                   default="manhattan")
    p.add_argument("--tie-rule", choices=["strict-majority", "exclude-bill"],
                   default="strict-majority", dest="tie_rule")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("axioms", help="run a randomized axiom suite")
    p.add_argument("--suite", required=True, choices=["A1", "A2", "A3", "A3c"])
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--K", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--c", type=float, default=None, help="threshold for A3c")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("alpha-bounds", help="admissible exponent interval(s)")
    p.add_argument("--c", type=float, default=2.0)
    p.add_argument("--c-list", type=float, nargs="*", default=None, dest="c_list")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_alpha_bounds)

    p = sub.add_parser("extremal", help="exhaustive bipolar maximality check")
    common(p)
    p.add_argument("--step", type=float, default=1.0 / 6.0)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("counterexample", help="search for bipolar-beating distributions")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_counterexample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NetpolarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
