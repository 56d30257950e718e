"""Command-line front end.

Exit codes: 0 success, 2 usage, 3 sequence/input resolution, 4 not
admissible, 5 enumeration cap exceeded where blocks/chains were required.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import errors
from .chains import DEFAULT_CAP, enumerate_max_chains, verify_partition_theorem
from .fnomial import (
    DEFAULT_ADMISSIBILITY_BOUND,
    fnomial_table,
    is_admissible_upto,
    table_to_csv,
    table_to_json,
    table_to_text,
)
from .operators import PolySpec, check_graves_identity
from .poset import build_cobweb, to_dot
from .sequences import FSequence, permute_prefix

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_NOT_ADMISSIBLE, EXIT_CAP = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    sequence: FSequence
    args: argparse.Namespace
    cap: int
    output: str | None = None


def resolve_sequence(args) -> FSequence:
    """Turn --seq/--q/--file/--values into an FSequence, raising CobwebError or OSError."""
    seq = args.seq
    if seq == "natural":
        return FSequence.natural()
    if seq == "fibonacci":
        return FSequence.fibonacci()
    if seq == "constant_one":
        return FSequence.constant_one()
    if seq == "gaussian":
        if args.q is None:
            raise errors.InvalidSequence("--seq gaussian needs --q")
        return FSequence.gaussian(args.q)
    if args.file:
        return FSequence.load(args.file)
    if args.values:
        try:
            values = [int(t) for t in args.values.split(",")]
        except ValueError:
            raise errors.InvalidSequence(f"bad --values list {args.values!r}")
        return FSequence.custom(values, f0=args.f0)
    raise errors.InvalidSequence("--seq custom needs --file or --values")


def resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("COBWEB_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"COBWEB_CAP={env!r} is not an integer")
    return DEFAULT_CAP


def _parse_sigma(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed permutation {text!r}")


def cmd_table(cfg: RunConfig) -> int:
    a = cfg.args
    table = fnomial_table(cfg.sequence, a.n)
    fmt = a.format or "text"
    if fmt == "csv":
        emit(cfg, table_to_csv(table))
    elif fmt == "json":
        emit(cfg, table_to_json(cfg.sequence, table))
    elif fmt == "text":
        emit(cfg, table_to_text(table))
    else:
        raise UsageError(f"table does not support --format {fmt}")
    return EXIT_OK


def cmd_admissible(cfg: RunConfig) -> int:
    report = is_admissible_upto(cfg.sequence, cfg.args.n)
    emit(cfg, json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if report.admissible_upto_N else EXIT_NOT_ADMISSIBLE


def cmd_verify(cfg: RunConfig) -> int:
    a = cfg.args
    cert = verify_partition_theorem(cfg.sequence, a.n, a.k, materialize=a.materialize or a.require_blocks, cap=cfg.cap)
    emit(cfg, cert.to_json())
    if cert.cap_exceeded and a.require_blocks:
        print(f"error: {cert.chain_count} chains exceed the enumeration cap {cfg.cap}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK if cert.verified else EXIT_FAIL


def cmd_chains(cfg: RunConfig) -> int:
    a = cfg.args
    P = build_cobweb(cfg.sequence, a.to)
    L = P.layer(a.lo, a.to)
    lines = (c.label() + "\n" for c in enumerate_max_chains(L, cfg.cap))
    emit(cfg, "".join(lines))
    return EXIT_OK


def cmd_dot(cfg: RunConfig) -> int:
    a = cfg.args
    F = cfg.sequence
    if a.sigma:
        sigma = _parse_sigma(a.sigma)
        F = permute_prefix(F, sigma)
    P = build_cobweb(F, a.to)
    emit(cfg, to_dot(P.layer(a.lo, a.to), name=F.name))
    return EXIT_OK


def cmd_ghw(cfg: RunConfig) -> int:
    a = cfg.args
    try:
        f = PolySpec.parse(a.poly)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed polynomial {a.poly!r}")
    report = check_graves_identity(f, cfg.sequence, a.trunc)
    emit(cfg, report.to_json())
    return EXIT_OK if report.holds else EXIT_FAIL


def emit(cfg: RunConfig, text: str):
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


COMMANDS = {
    "table": cmd_table,
    "admissible": cmd_admissible,
    "verify": cmd_verify,
    "chains": cmd_chains,
    "dot": cmd_dot,
    "ghw": cmd_ghw,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("sequence")
    g.add_argument("--seq", required=True, choices=["natural", "fibonacci", "gaussian", "constant_one", "custom"])
    g.add_argument("--q", type=int, help="base of the gaussian sequence")
    g.add_argument("--file", help="custom sequence JSON {name, f0, values}")
    g.add_argument("--values", help="custom sequence F_1,F_2,... inline")
    g.add_argument("--f0", type=int, default=1, help="F_0 for --values (default 1)")
    common.add_argument("--cap", type=int, help="enumeration cap (default $COBWEB_CAP or 10^7)")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = argparse.ArgumentParser(prog="cobweb", description="Cobweb posets, F-nomials and GHW identities.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table", parents=[common], help="F-nomial triangle")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["csv", "json", "text"])

    s = sub.add_parser("admissible", parents=[common], help="bounded admissibility check")
    s.add_argument("--n", type=int, default=DEFAULT_ADMISSIBILITY_BOUND)

    s = sub.add_parser("verify", parents=[common], help="certify the chain-partition count")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--materialize", action="store_true")
    s.add_argument("--require-blocks", action="store_true", help="exit 5 if blocks cannot be materialized")

    s = sub.add_parser("chains", parents=[common], help="list maximal chains of a layer")
    s.add_argument("--from", dest="lo", type=int, required=True)
    s.add_argument("--to", type=int, required=True)

    s = sub.add_parser("dot", parents=[common], help="DOT diagram of a layer")
    s.add_argument("--from", dest="lo", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--sigma", help="permutation images sigma(1),...,sigma(N)")

    s = sub.add_parser("ghw", parents=[common], help="check [f(d_F), x_F] = f'(d_F)")
    s.add_argument("action", nargs="?", choices=["check"], default="check")
    s.add_argument("--poly", required=True, help="coefficients low-to-high, e.g. 0,0,1")
    s.add_argument("--trunc", type=int, required=True, help="truncation degree N")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        F = resolve_sequence(args)
    except (errors.CobwebError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        cfg = RunConfig(args.command, F, args, resolve_cap(args), args.output)
        return COMMANDS[args.command](cfg)
    except (UsageError, errors.InvalidRange, errors.InvalidPermutation, errors.TruncationTooSmall) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except errors.NotAdmissible as e:
        if e.failure is not None:
            n, k, v = e.failure
            print(f"error: {e}; F-nomial({n},{k}) = {v}", file=sys.stderr)
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except errors.EnumerationCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (errors.IndexOutOfRange, errors.ZeroLevel, errors.InvalidSequence, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def ghw_main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    return main(["ghw", *argv])


def run():
    sys.exit(main())


def run_ghw():
    sys.exit(ghw_main())
