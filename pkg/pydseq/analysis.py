"""
Statistics for D-sequences and mapped bit sequences.

Autocorrelation is cyclic: c(k) = 1/n * sum(a[j] * a[(j + k) % n]) over
j = 0 .. n - 1, so c(0) is the mean square of the sequence.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple, Optional

import numpy as np

from .common import (
    DEFAULT_PREV_BIT,
    Digits,
    EmptySequence,
    InvalidRange,
    LagOutOfRange,
    OddLength,
    Real,
    UnknownMode,
    check_digits,
)
from .dseq import generate_digits, make_params, to_balanced
from .expand import count_twos, enhanced_length, expand_twos, to_balanced_bits
from .modmath import primes_between

log = logging.getLogger(__name__)

__all__ = (
    "MODES",
    "PUBLISHED_TABLE",
    "Correlogram",
    "TableRow",
    "ScanRecord",
    "Discrepancy",
    "autocorrelation",
    "ideal_peak",
    "sequence_values",
    "sequence_length",
    "digit_frequencies",
    "half_period_complement_holds",
    "table_row",
    "build_table",
    "scan_twos",
    "compare_published",
)

MODES = ("ternary", "ternary-balanced", "binary", "binary-balanced")

# prime: (number of 2s, mapped length) as printed in the reference table
PUBLISHED_TABLE = {
    509: (168, 676),
    593: (194, 786),
    599: (190, 788),
    643: (226, 868),
    719: (199, 917),
    769: (199, 967),
    797: (232, 1028),
    827: (228, 1054),
    883: (236, 1118),
    907: (221, 1127),
    991: (236, 1226),
    1021: (221, 1241),
    1171: (236, 1406),
}


class Correlogram(NamedTuple):
    """
    Cyclic autocorrelation values c(0) .. c(max_lag).

    """

    n: int
    values: tuple[float, ...]

    @property
    def peak(self) -> float:
        return self.values[0]

    def max_off_peak(self) -> float:
        """
        Largest |c(k)| for k >= 1, or 0.0 when only the peak was computed.

        """
        return max((abs(v) for v in self.values[1:]), default=0.0)

    def rows(self) -> list[tuple[int, float]]:
        return list(enumerate(self.values))


class TableRow(NamedTuple):
    prime: int
    period: int
    twos: int
    enhanced_length: int
    max_length: bool


class ScanRecord(NamedTuple):
    prime: int
    twos: int


class Discrepancy(NamedTuple):
    prime: int
    field: str
    computed: int
    published: int


def autocorrelation(
    values: Sequence[Real], max_lag: Optional[int] = None
) -> Correlogram:
    """
    Normalized cyclic autocorrelation.

    Args:
        values: real valued sequence, one period
        max_lag: last lag to compute, defaults to len(values) - 1

    """
    arr = np.asarray(values, dtype=np.float64)
    n = arr.size
    if n == 0:
        log.error("autocorrelation of an empty sequence")
        raise EmptySequence("cannot correlate an empty sequence")
    if max_lag is None:
        max_lag = n - 1
    if not 0 <= max_lag < n:
        log.error("max_lag %d outside [0, %d)", max_lag, n)
        raise LagOutOfRange(f"max_lag must be in [0, {n}), got {max_lag}")

    # np.roll(arr, -k)[j] == arr[(j + k) % n]
    result = tuple(
        float(arr @ np.roll(arr, -k)) / n + 0.0 for k in range(max_lag + 1)
    )
    return Correlogram(n, result)


def ideal_peak(symbols: Iterable[Real]) -> float:
    """
    c(0) expected when every symbol of the alphabet is equally likely.

    """
    symbols = list(symbols)
    return sum(s * s for s in symbols) / len(symbols)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        log.error("unknown sequence mode %r", mode)
        raise UnknownMode(f"mode must be one of {', '.join(MODES)}, got {mode!r}")


def sequence_length(q: int, mode: str) -> int:
    """
    Period of the sequence sequence_values would return for q and mode.

    The ternary modes only need the order of 3 mod q; the binary modes count
    the 2s of one ternary period.

    """
    _check_mode(mode)
    if mode.startswith("ternary"):
        return make_params(q, 3).period
    return enhanced_length(q)


def sequence_values(
    q: int, mode: str, initial_prev_bit: int = DEFAULT_PREV_BIT
) -> tuple[int, ...]:
    """
    One period of the ternary or mapped sequence of q in the requested form.

    Args:
        q: prime coprime to 3
        mode: one of MODES
        initial_prev_bit: passed to the mapping for the binary modes

    """
    _check_mode(mode)
    seq = generate_digits(q, 3)
    if mode == "ternary":
        return seq.digits
    if mode == "ternary-balanced":
        return to_balanced(seq).values
    bits = expand_twos(seq, initial_prev_bit)
    if mode == "binary":
        return bits.bits
    return to_balanced_bits(bits).values


def digit_frequencies(digits: Digits, radix: int) -> tuple[int, ...]:
    """
    Occurrence count of every digit 0 .. radix - 1.

    """
    check_digits(digits, radix)
    counts = np.bincount(np.asarray(digits, dtype=np.int64), minlength=radix)
    return tuple(int(c) for c in counts)


def half_period_complement_holds(digits: Digits) -> bool:
    """
    True when the second half of a binary period complements the first.

    """
    check_digits(digits, 2)
    n = len(digits)
    if n % 2:
        log.error("half period check needs an even length, got %d", n)
        raise OddLength(f"sequence length must be even, got {n}")
    arr = np.asarray(digits, dtype=np.int64)
    half = n // 2
    return bool(np.all(arr[:half] + arr[half:] == 1))


def table_row(q: int) -> TableRow:
    seq = generate_digits(q, 3)
    twos = count_twos(seq)
    period = seq.params.period
    return TableRow(q, period, twos, period + twos, seq.params.max_length)


def _scan_record(q: int) -> ScanRecord:
    return ScanRecord(q, count_twos(generate_digits(q, 3)))


def _ordered_map(func, items: list[int], workers: int) -> list:
    # executor.map yields in submission order
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(func, items))
    return [func(item) for item in items]


def build_table(primes: Iterable[int], workers: int = 1) -> list[TableRow]:
    """
    One row of period and mapped length statistics per prime, in input order.

    Args:
        primes: primes coprime to 3
        workers: number of worker processes, 1 computes inline

    """
    rows = _ordered_map(table_row, list(primes), workers)
    for row in rows:
        if not row.max_length:
            log.info("q=%d is not maximum length (period %d)", row.prime, row.period)
    return rows


def scan_twos(start: int, stop: int, workers: int = 1) -> list[ScanRecord]:
    """
    Count the 2s in one period for every prime in [start, stop].

    Primes 2 and 3 are skipped since radix 3 needs q > 3.

    Args:
        start: first candidate, at least 2
        stop: last candidate, inclusive
        workers: number of worker processes, 1 computes inline

    """
    if start < 2 or start > stop:
        log.error("invalid scan range %d..%d", start, stop)
        raise InvalidRange(f"need 2 <= start <= stop, got start={start} stop={stop}")
    primes = [p for p in primes_between(start, stop) if p > 3]
    log.debug("scanning %d primes in %d..%d", len(primes), start, stop)
    return _ordered_map(_scan_record, primes, workers)


def compare_published(rows: Iterable[TableRow]) -> list[Discrepancy]:
    """
    Check rows against PUBLISHED_TABLE.

    Computed values are kept as they are; each mismatch is logged as a
    warning and returned.  Primes missing from the table are ignored.

    """
    found = []
    for row in rows:
        try:
            twos, length = PUBLISHED_TABLE[row.prime]
        except KeyError:
            continue
        for field, computed, published in (
            ("twos", row.twos, twos),
            ("enhanced_length", row.enhanced_length, length),
        ):
            if computed != published:
                log.warning(
                    "q=%d %s: computed %d, published %d",
                    row.prime,
                    field,
                    computed,
                    published,
                )
                found.append(Discrepancy(row.prime, field, computed, published))
    return found
