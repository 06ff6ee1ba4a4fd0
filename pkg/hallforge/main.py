"""
Command-line front end.

    python -m hallforge.main verify rlhp --N 3 --format json
    python -m hallforge.main enumerate --set rl --N 3
    python -m hallforge.main map --N 7 --parts "1^4 3^2 7^3 9 11" --trace
    python -m hallforge.main table --N 3

Exit codes: 0 pass, 1 an identity failed, 2 usage error.
"""

import argparse
import logging
import sys
from collections import Counter

from .bijection import phi, phi_inverse, trace
from .config import load_config, Settings
from .errors import HallforgeError, InternalError
from .families import (
    check_size,
    check_width,
    enumerate_family,
    enumerate_lh_up_to,
    enumerate_op_up_to,
    enumerate_reduced_lh,
    enumerate_reduced_odd,
    max_reduced_size,
)
from .partition import parse_partition
from .protocol import Family, Identity
from .render import OutputFormat, render_bundle, render_map, render_partitions, render_tables
from .verifiers import create_verifier, list_identities


logger = logging.getLogger("hallforge")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

TABLE_MAX_WIDTH = 7


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def table(n_max: int, max_size: int | None = None) -> list[dict]:
    """Per width N <= n_max: counts of RL_N and ROP_N by size, plus truncated L_N and OP_N."""
    check_width(n_max, limit=TABLE_MAX_WIDTH)
    if max_size is not None:
        check_size(max_size)
    tables = []
    for N in range(1, n_max + 1):
        columns = {
            "rl": Counter(mu.size for mu in enumerate_reduced_lh(N)),
            "rop": Counter(lam.size for lam in enumerate_reduced_odd(N)),
        }
        top = max_reduced_size(N)
        if max_size is not None:
            columns["l"] = Counter(mu.size for mu in enumerate_lh_up_to(N, max_size))
            columns["op"] = Counter(lam.size for lam in enumerate_op_up_to(N, max_size))
            top = max(top, max_size)

        rows = []
        for n in range(top + 1):
            row = {"size": n, "rl": columns["rl"][n], "rop": columns["rop"][n]}
            if max_size is not None and n <= max_size:
                row["l"] = columns["l"][n]
                row["op"] = columns["op"][n]
            rows.append(row)
        tables.append({
            "N": N,
            "rows": rows,
            "totals": {name: sum(counts.values()) for name, counts in columns.items()},
            "balanced": all(row["rl"] == row["rop"] and row.get("l") == row.get("op") for row in rows),
        })
    return tables


# Subcommands

def cmd_verify(args, settings: Settings) -> tuple[str, int]:
    kwargs = {}
    if args.identity == Identity.LEMMAS.value:
        kwargs = {"samples": settings.sample_count, "seed": settings.seed}
    verifier = create_verifier(args.identity, **kwargs)

    if args.N is not None:
        values = [args.N]
    else:
        n_max = args.n_max if args.n_max is not None else settings.default_n_max(args.identity)
        values = list(range(1, n_max + 1))
    qmax = args.qmax if args.qmax is not None else settings.default_qmax(args.identity)
    threads = args.threads if args.threads is not None else settings.threads

    logger.info("verify %s over %s=%s (qmax=%s, threads=%d)",
                args.identity, verifier.parameter, values, qmax, threads)
    bundle = verifier.run(values, qmax=qmax, threads=threads)
    return render_bundle(bundle, args.format), EXIT_PASS if bundle.passed else EXIT_FAIL


def cmd_enumerate(args, settings: Settings) -> tuple[str, int]:
    items = enumerate_family(args.set, args.N, args.max_size)
    logger.info("%s_%d: %d partitions", args.set.upper(), args.N, len(items))
    return render_partitions(items, args.format), EXIT_PASS


def cmd_map(args, settings: Settings) -> tuple[str, int]:
    source = parse_partition(args.parts)
    if args.inverse:
        image = phi_inverse(args.N, source)
        steps = trace(args.N, image, check=True) if args.trace else None
    else:
        image = phi(args.N, source, check=True)
        steps = trace(args.N, source, check=True) if args.trace else None
    return render_map(args.N, source, image, args.inverse, steps, args.format), EXIT_PASS


def cmd_table(args, settings: Settings) -> tuple[str, int]:
    tables = table(args.n_max, args.max_size)
    code = EXIT_PASS if all(t["balanced"] for t in tables) else EXIT_FAIL
    return render_tables(tables, args.format), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hallforge",
        description="Lecture hall partitions: the growth bijection and its identities",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debug output (stderr)")
    parser.add_argument("--config", default=None, help="Config file (default: config.yaml)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, formats):
        p.add_argument("--format", default=OutputFormat.TEXT.value, choices=formats)
        p.add_argument("--output", default=None, help="Write to this file instead of stdout")

    verify = sub.add_parser("verify", help="Check an identity over a parameter grid")
    verify.add_argument("identity", choices=list_identities())
    grid = verify.add_mutually_exclusive_group()
    grid.add_argument("--N", type=int, default=None, help="Single parameter point")
    grid.add_argument("--n-max", type=int, default=None, help="Check every point 1..n-max")
    verify.add_argument("--qmax", type=int, default=None, help="Truncation order in q")
    verify.add_argument("--threads", type=int, default=None, help="Worker threads")
    add_output(verify, ["text", "json"])
    verify.set_defaults(handler=cmd_verify)

    enum = sub.add_parser("enumerate", help="List a partition family")
    enum.add_argument("--set", required=True, choices=[f.value for f in Family])
    enum.add_argument("--N", type=int, required=True)
    enum.add_argument("--max-size", type=int, default=None, help="Size bound (required for l and op)")
    add_output(enum, ["text", "json", "csv"])
    enum.set_defaults(handler=cmd_enumerate)

    mapping = sub.add_parser("map", help="Apply the growth map or its inverse")
    mapping.add_argument("--N", type=int, required=True)
    mapping.add_argument("--parts", required=True, help='"11,9,7" or "1^4 3^2 7^3 9 11"')
    mapping.add_argument("--inverse", action="store_true", help="Map a lecture hall partition back")
    mapping.add_argument("--trace", action="store_true", help="Show every growth step")
    add_output(mapping, ["text", "json"])
    mapping.set_defaults(handler=cmd_map)

    counts = sub.add_parser("table", help="Counts by size for every width up to N")
    counts.add_argument("--N", "--n-max", dest="n_max", type=int, required=True)
    counts.add_argument("--max-size", type=int, default=None, help="Add truncated l and op columns")
    add_output(counts, ["text", "json", "csv"])
    counts.set_defaults(handler=cmd_table)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.verbose)
    try:
        settings = load_config(args.config)
        if getattr(args, "threads", None) is not None and args.threads < 1:
            raise HallforgeError(f"--threads={args.threads} must be positive")
        output, code = args.handler(args, settings)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(output)
            logger.info("wrote %s", args.output)
        else:
            sys.stdout.write(output)
    except InternalError as e:
        logger.debug("internal error", exc_info=True)
        print(f"hallforge: internal error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (HallforgeError, OSError, ValueError) as e:
        print(f"hallforge: {e}", file=sys.stderr)
        return EXIT_USAGE
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
