"""Command line interface: ``avg``, ``verify``, ``sample`` and ``show``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource bound exceeded. All numbers are printed as exact rationals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .kerov import growth_kernel, kerov_coords
from .measures import SOURCES, average, empirical_frequencies, measure, sample_trajectory
from .observables import ObservableParseError, parse_observable
from .partitions import enumerate_partitions, format_partition, parse_partition, size
from .polycheck import check_polynomiality
from .suites import SUITES
from .symfunc import DegreeBoundError, format_rat, jack_table, parse_rat, partition_sort_key

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

# Largest level the CLI will enumerate.
MAX_LEVEL = 30


class UsageError(Exception):
    pass


class BoundError(Exception):
    pass


def _theta(text: str) -> Fraction:
    try:
        theta = parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --theta {text!r}: use an integer or p/q") from exc
    if theta <= 0:
        raise UsageError("--theta must be positive")
    return theta


def _n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError as exc:
        raise UsageError(f"bad --n {text!r}: use N or A..B") from exc
    if not values or min(values) < 0:
        raise UsageError(f"bad --n {text!r}")
    if max(values) > MAX_LEVEL:
        raise BoundError(f"n = {max(values)} exceeds the enumeration bound {MAX_LEVEL}")
    return values


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_avg(args) -> tuple[int, str]:
    theta = _theta(args.theta)
    try:
        obs = parse_observable(args.obs)
    except ObservableParseError as exc:
        raise UsageError(f"observable: {exc}") from exc
    if args.poly:
        n_max = None if args.n is None else max(_n_range(args.n))
        report = check_polynomiality(obs, theta, n_max, source=args.source)
        if args.emit_table:
            with open(args.emit_table, "w", newline="") as fh:
                fh.write(_csv([["n", "average"]] + [[n, format_rat(v)] for n, v in enumerate(report.values)]))
        text = _dump(report.to_dict()) if args.format == "json" else _csv(
            [["n", "average"]] + [[n, format_rat(v)] for n, v in enumerate(report.values)]
        )
        return (EXIT_OK if report.verdict else EXIT_FAIL), text
    if args.n is None:
        raise UsageError("avg needs --n N or --n A..B")
    values = [(n, average(obs, n, theta, args.source)) for n in _n_range(args.n)]
    if args.format == "json":
        text = _dump(
            {
                "observable": obs.spec(),
                "theta": format_rat(theta),
                "degree_bound": obs.degree_bound,
                "averages": [[n, format_rat(v)] for n, v in values],
            }
        )
    else:
        text = _csv([["n", "average"]] + [[n, format_rat(v)] for n, v in values])
    return EXIT_OK, text


def cmd_verify(args) -> tuple[int, str]:
    thetas = [_theta(args.theta)] if args.theta is not None else None
    lines = []
    failed = None
    count = 0
    for case in SUITES[args.suite](thetas, args.n_max):
        count += 1
        status = "PASS" if case.ok else "FAIL"
        lines.append(f"{status} {case.name}" + (f" -- {case.detail}" if case.detail else ""))
        if not case.ok and failed is None:
            failed = case
    if failed is not None:
        lines.append(f"first counterexample: {failed.name}: {failed.detail}")
    lines.append(f"{args.suite}: {'FAIL' if failed else 'PASS'} ({count} cases)")
    return (EXIT_FAIL if failed else EXIT_OK), "\n".join(lines) + "\n"


def cmd_sample(args) -> tuple[int, str]:
    theta = _theta(args.theta)
    if args.trajectories < 1:
        raise UsageError("--trajectories must be at least 1")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.n > MAX_LEVEL:
        raise BoundError(f"n = {args.n} exceeds the bound {MAX_LEVEL}")
    paths = [sample_trajectory(args.n, theta, args.seed, k) for k in range(args.trajectories)]
    finals = [p[-1] for p in paths]
    freqs = empirical_frequencies(finals)
    exact = measure(args.n, theta).weights
    table = sorted(freqs.items(), key=lambda kv: partition_sort_key(kv[0]))
    if args.format == "json":
        payload = {
            "n": args.n,
            "theta": format_rat(theta),
            "seed": args.seed,
            "trajectories": args.trajectories,
            "samples": [format_partition(lam) for lam in finals],
            "frequencies": [
                [format_partition(lam), format_rat(f), format_rat(exact[lam])] for lam, f in table
            ],
        }
        if args.paths:
            payload["paths"] = [[format_partition(lam) for lam in p] for p in paths]
        return EXIT_OK, _dump(payload)
    rows = [["trajectory", "diagram"] + (["path"] if args.paths else [])]
    for k, p in enumerate(paths):
        rows.append([k, format_partition(p[-1])] + ([" ".join(format_partition(l) or "0" for l in p)] if args.paths else []))
    freq_rows = [["diagram", "frequency", "exact"]]
    freq_rows += [[format_partition(lam), format_rat(f), format_rat(exact[lam])] for lam, f in table]
    return EXIT_OK, _csv(rows) + "\n" + _csv(freq_rows)


def _rat_list(xs) -> list[str]:
    return [format_rat(x) for x in xs]


def cmd_show(args) -> tuple[int, str]:
    theta = _theta(args.theta)
    if args.object in ("coords", "kernel") and args.lam is None:
        raise UsageError(f"show {args.object} needs --lambda")
    if args.object == "coords":
        lam = _partition(args.lam)
        kc = kerov_coords(lam, theta)
        payload = {"lambda": format_partition(lam), "theta": format_rat(theta), "X": _rat_list(kc.X), "Y": _rat_list(kc.Y)}
        rows = [["coord", "index", "value"]]
        rows += [["x", i, format_rat(x)] for i, x in enumerate(kc.X, 1)]
        rows += [["y", j, format_rat(y)] for j, y in enumerate(kc.Y, 1)]
    elif args.object == "kernel":
        lam = _partition(args.lam)
        kernel = growth_kernel(lam, theta)
        payload = {
            "lambda": format_partition(lam),
            "theta": format_rat(theta),
            "targets": [[format_partition(nu), format_rat(p)] for nu, p in kernel.targets],
        }
        rows = [["target", "probability"]] + [[format_partition(nu), format_rat(p)] for nu, p in kernel.targets]
    elif args.object == "measure":
        if args.n is None:
            raise UsageError("show measure needs --n")
        n = max(_n_range(args.n))
        table = measure(n, theta, args.source)
        payload = table.to_dict()
        return EXIT_OK, _dump(payload) if args.format == "json" else table.to_csv()
    else:
        if args.lam is not None:
            lams = [_partition(args.lam)]
        elif args.n is not None:
            lams = list(enumerate_partitions(max(_n_range(args.n))))
        else:
            raise UsageError("show jack needs --lambda or --n")
        table = jack_table(theta, max(size(l) for l in lams))
        payload = {"theta": format_rat(theta), "jack": []}
        rows = [["lambda", "norm", "dim", "dim_prime", "P_monomial"]]
        for lam in lams:
            P = table.P[lam]
            terms = [[format_partition(k), format_rat(v)] for k, v in sorted(P.terms.items(), key=lambda kv: partition_sort_key(kv[0]))]
            entry = {
                "lambda": format_partition(lam),
                "norm": format_rat(table.norms[lam]),
                "dim": format_rat(table.dim(lam)),
                "dim_prime": format_rat(table.dim_prime(lam)),
                "P": {"basis": "monomial", "terms": terms},
            }
            payload["jack"].append(entry)
            rows.append([entry["lambda"], entry["norm"], entry["dim"], entry["dim_prime"], " ".join(f"{c}*m[{k}]" for k, c in terms)])
    return EXIT_OK, _dump(payload) if args.format == "json" else _csv(rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theta", default=None, help="Jack parameter, integer or p/q (default 1)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="plancherel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avg", parents=[common], help="exact averages of an observable")
    p.add_argument("--obs", required=True, help="observable spec, e.g. 'content:p(2)*fmu:1'")
    p.add_argument("--n", default=None, help="level N or range A..B")
    p.add_argument("--source", choices=SOURCES, default=None)
    p.add_argument("--poly", action="store_true", help="certify polynomiality and print the report")
    p.add_argument("--emit-table", default=None, metavar="PATH", help="with --poly, write the averages as CSV")
    p.set_defaults(func=cmd_avg)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", parents=[common], help="sample growth trajectories")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trajectories", type=int, default=1)
    p.add_argument("--paths", action="store_true", help="include the full paths")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("show", parents=[common], help="print an exact object")
    p.add_argument("object", choices=("coords", "kernel", "measure", "jack"))
    p.add_argument("--lambda", dest="lam", default=None, help="partition like 3,3,1; empty string for the empty diagram")
    p.add_argument("--n", default=None)
    p.add_argument("--source", choices=SOURCES, default=None)
    p.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command != "verify" and args.theta is None:
        args.theta = "1"
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BoundError, DegreeBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
