"""Command-line front end.

Exit status: 0 when every check came out as expected, 1 when a check that
should hold produced witnesses (or the corollary was not reproduced), 2 on
input errors.
"""
import argparse
import sys

from .errors import QVoteError
from .reproduce import reproduce_theorems
from .scenario import CHECK_NAMES, parse_scenario, run_scenario, serialize_scenario


def _common(p):
    p.add_argument("--delta", type=float, help="minority-shot weight (overrides scenario)")
    p.add_argument("--tolerance", type=float, help="validation tolerance (overrides scenario)")
    p.add_argument("--seed", type=int, help="random seed (overrides scenario)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--output", help="write the report to this path")


def build_parser():
    parser = argparse.ArgumentParser(prog="qvote", description="Quantum Condorcet voting.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("run", help="evaluate a scenario and its listed checks")
    p.add_argument("scenario")
    _common(p)
    p = sub.add_parser("check", help="run named axiom checks on a scenario")
    p.add_argument("scenario")
    p.add_argument("--axiom", action="append", required=True, choices=CHECK_NAMES)
    _common(p)
    p = sub.add_parser("sample", help="measure the output state repeatedly")
    p.add_argument("scenario")
    p.add_argument("--shots", type=int, required=True)
    _common(p)
    p = sub.add_parser("reproduce", help="re-run every axiom verdict and the corollary")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=3, help="largest voter count")
    p.add_argument("--delta", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--random-profiles", type=int, default=500)
    p.add_argument("--matched-pairs", type=int, default=200)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    return parser


def _load(args):
    with open(args.scenario, encoding="utf-8") as fh:
        s = parse_scenario(fh.read())
    if args.delta is not None:
        s.delta = args.delta
    if args.tolerance is not None:
        s.tolerance = args.tolerance
    if args.seed is not None:
        s.seed = args.seed
    # overrides go back through the parser so they are validated too
    return parse_scenario(serialize_scenario(s))


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "reproduce":
            if args.n < 2 or args.m < 2:
                raise QVoteError("need --m >= 2 and --n >= 2")
            bundle = reproduce_theorems(args.n, args.m, args.delta, args.seed,
                                        random_profiles=args.random_profiles,
                                        matched_pairs=args.matched_pairs)
            _emit(bundle.render_json() if args.json else bundle.render_text(), args.output)
            return 0 if bundle.reproduced else 1
        s = _load(args)
        if args.command == "run":
            report = run_scenario(s)
        elif args.command == "check":
            report = run_scenario(s, checks=args.axiom)
        else:
            if args.shots < 1:
                raise QVoteError("--shots must be positive")
            report = run_scenario(s, checks=[], shots=args.shots)
    except (OSError, QVoteError) as e:
        print(f"qvote: error: {e}", file=sys.stderr)
        return 2
    _emit(report.render_json() if args.json else report.render_text(), args.output)
    return 1 if report.failed() else 0


if __name__ == "__main__":
    sys.exit(main())
