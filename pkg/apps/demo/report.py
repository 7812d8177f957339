"""
Reproduce the enhanced length table and the 500-1000 scan of 2s.

Rows are printed as they are computed; differences from the published table
are logged.  Pass a different upper bound for the scan as the first argument.

    python apps/demo/report.py 1500
"""
import logging
import sys

from pydseq.analysis import (
    PUBLISHED_TABLE,
    autocorrelation,
    build_table,
    compare_published,
    scan_twos,
    sequence_values,
)

logger = logging.getLogger(__name__)
ch = logging.StreamHandler()
ch.setLevel(logging.INFO)
logger.addHandler(ch)
logger.setLevel(logging.INFO)
logging.getLogger("pydseq").addHandler(ch)


def print_table() -> None:
    rows = build_table(sorted(PUBLISHED_TABLE))
    print(f"{'prime':>6} {'period':>6} {'twos':>5} {'length':>6}  max")
    for row in rows:
        print(
            f"{row.prime:>6} {row.period:>6} {row.twos:>5} "
            f"{row.enhanced_length:>6}  {'yes' if row.max_length else 'no'}"
        )
    found = compare_published(rows)
    logger.info("%d values differ from the published table", len(found))


def print_peaks(q: int) -> None:
    for mode in ("ternary", "ternary-balanced", "binary", "binary-balanced"):
        correlogram = autocorrelation(sequence_values(q, mode))
        print(
            f"q={q} {mode:<16} peak {correlogram.peak:.3f}"
            f"  largest off-peak {correlogram.max_off_peak():.3f}"
        )


def print_scan(stop: int) -> None:
    for record in scan_twos(500, stop, workers=2):
        print(f"{record.prime},{record.twos}")


if __name__ == "__main__":
    try:
        stop = int(sys.argv[1])
    except IndexError:
        logger.info("no upper bound given, using 1000")
        stop = 1000

    print_table()
    print_peaks(509)
    print_scan(stop)
