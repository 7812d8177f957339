"""
Command line front end.

    pydseq generate --prime 7 --radix 3
    pydseq map --prime 7
    pydseq autocorr --prime 509 --mode binary-balanced
    pydseq scan --from 500 --to 1000
    pydseq table --primes 509,593 --compare
    pydseq key --prime 7 --bits 8

Results go to stdout; logging and diagnostics go to stderr.  Exit status is
0 on success, 1 when the library rejects a value and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from contextlib import redirect_stdout
from typing import Optional, TextIO

from . import __version__
from .analysis import (
    MODES,
    autocorrelation,
    build_table,
    compare_published,
    scan_twos,
    sequence_length,
    sequence_values,
)
from .common import DSequenceError, LagOutOfRange
from .dseq import generate_digits, to_balanced
from .expand import b_sequence, to_balanced_bits
from .keygen import KeySpec, derive_key

log = logging.getLogger(__name__)

__all__ = ("run", "main")

PROG = "pydseq"

# -v count to logging level; library errors stay quiet unless asked for
_LOG_LEVELS = {0: logging.CRITICAL, 1: logging.INFO}


class UsageError(Exception):
    def __init__(self, usage: str, message: str) -> None:
        super().__init__(message)
        self.usage = usage
        self.message = message


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(self.format_usage(), message)


def _positive_int(text: str) -> int:
    value = _integer(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative_int(text: str) -> int:
    value = _integer(text)
    if value < 0:
        raise argparse.ArgumentTypeError(
            f"expected a nonnegative integer, got {text!r}"
        )
    return value


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def _prime_list(text: str) -> list[int]:
    items = [item.strip() for item in text.split(",")]
    if not all(items):
        raise argparse.ArgumentTypeError(f"empty entry in prime list {text!r}")
    return [_integer(item) for item in items]


def _add_prime(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--prime", type=_integer, required=True, help="prime q")


def _add_prev_bit(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--initial-prev-bit",
        type=int,
        choices=(0, 1),
        default=0,
        help="bit assumed to precede a leading 2 (default 0)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog=PROG, description="Ternary D-sequences and their binary mapping."
    )
    version = ".".join(str(part) for part in __version__)
    parser.add_argument("--version", action="version", version=f"{PROG} {version}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log to stderr; repeat for debug output",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("generate", help="one period of a D-sequence")
    _add_prime(p)
    p.add_argument("--radix", type=_integer, required=True, help="radix r")
    p.add_argument("--balanced", action="store_true", help="write 2 as -1")

    p = commands.add_parser("map", help="mapped bit sequence of a ternary prime")
    _add_prime(p)
    p.add_argument("--balanced", action="store_true", help="write 0 as -1")
    _add_prev_bit(p)

    p = commands.add_parser("autocorr", help="correlogram as CSV")
    _add_prime(p)
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument(
        "--max-lag",
        type=_nonnegative_int,
        default=None,
        help="last lag (default: sequence length - 1)",
    )

    p = commands.add_parser("scan", help="count of 2s for every prime in a range")
    p.add_argument("--from", dest="start", type=_integer, required=True)
    p.add_argument("--to", dest="stop", type=_integer, required=True)
    p.add_argument("--workers", type=_positive_int, default=1)

    p = commands.add_parser("table", help="period and mapped length as JSON lines")
    p.add_argument("--primes", type=_prime_list, required=True, help="e.g. 509,593")
    p.add_argument(
        "--compare",
        action="store_true",
        help="report differences from the published table on stderr",
    )
    p.add_argument("--workers", type=_positive_int, default=1)

    p = commands.add_parser("key", help="hex key cut from the mapped sequence")
    _add_prime(p)
    p.add_argument("--bits", type=_positive_int, required=True)
    p.add_argument("--offset", type=_nonnegative_int, default=0)
    _add_prev_bit(p)

    return parser


def _spaced(values) -> str:
    return " ".join(str(v) for v in values) + "\n"


def _cmd_generate(args, out: TextIO, err: TextIO) -> None:
    seq = generate_digits(args.prime, args.radix)
    if args.balanced:
        out.write(_spaced(to_balanced(seq).values))
    else:
        out.write(_spaced(seq.digits))


def _cmd_map(args, out: TextIO, err: TextIO) -> None:
    seq = b_sequence(args.prime, args.initial_prev_bit)
    if args.balanced:
        out.write(_spaced(to_balanced_bits(seq).values))
    else:
        out.write(_spaced(seq.bits))


def _cmd_autocorr(args, out: TextIO, err: TextIO) -> None:
    if args.max_lag is not None:
        n = sequence_length(args.prime, args.mode)
        if args.max_lag >= n:
            log.error("max_lag %d outside [0, %d)", args.max_lag, n)
            raise LagOutOfRange(f"max_lag must be in [0, {n}), got {args.max_lag}")
    values = sequence_values(args.prime, args.mode)
    correlogram = autocorrelation(values, args.max_lag)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("lag", "value"))
    writer.writerows((k, f"{v:.6f}") for k, v in correlogram.rows())


def _cmd_scan(args, out: TextIO, err: TextIO) -> None:
    records = scan_twos(args.start, args.stop, args.workers)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("prime", "twos"))
    writer.writerows(records)


def _cmd_table(args, out: TextIO, err: TextIO) -> None:
    rows = build_table(args.primes, args.workers)
    for row in rows:
        out.write(json.dumps(row._asdict(), separators=(",", ":")) + "\n")
    if args.compare:
        for d in compare_published(rows):
            err.write(
                f"{PROG}: q={d.prime} {d.field} computed {d.computed},"
                f" published {d.published}\n"
            )


def _cmd_key(args, out: TextIO, err: TextIO) -> None:
    spec = KeySpec(
        q=args.prime,
        n_bits=args.bits,
        offset=args.offset,
        initial_prev_bit=args.initial_prev_bit,
    )
    out.write(derive_key(spec).hex + "\n")


_COMMANDS = {
    "generate": _cmd_generate,
    "map": _cmd_map,
    "autocorr": _cmd_autocorr,
    "scan": _cmd_scan,
    "table": _cmd_table,
    "key": _cmd_key,
}


def run(
    argv: Optional[list[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Parse argv, run one command and return the exit status.

    Args:
        argv: arguments without the program name, defaults to sys.argv[1:]
        stdout: stream for results
        stderr: stream for logging and diagnostics

    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else argv

    parser = build_parser()
    try:
        # --help and --version print to stdout and exit
        with redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except UsageError as e:
        stderr.write(e.usage)
        stderr.write(f"{PROG}: error: {e.message}\n")
        return 2
    except SystemExit as e:
        return e.code or 0

    logger = logging.getLogger("pydseq")
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(levelname)s: %(message)s"))
    previous_level = logger.level
    logger.addHandler(handler)
    logger.setLevel(_LOG_LEVELS.get(args.verbose, logging.DEBUG))
    try:
        log.debug("running %s", args.command)
        _COMMANDS[args.command](args, stdout, stderr)
    except DSequenceError as e:
        stderr.write(f"{PROG}: error: {e}\n")
        return 1
    finally:
        logger.removeHandler(handler)
        logger.setLevel(previous_level)
    return 0


def main() -> None:
    sys.exit(run())
