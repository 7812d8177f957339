from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import cycle, islice
from typing import Union

log = logging.getLogger(__name__)

Digits = Sequence[int]
Real = Union[int, float]

# arithmetic limits; products of two residues must fit in 64 bits
MODULUS_LIMIT = 2**32
OPERAND_LIMIT = 2**64

# multiplicative_order will not fall back to a linear scan above this
ORDER_SCAN_LIMIT = 10**4

# bit assumed to precede a leading 2 when nothing was emitted yet
DEFAULT_PREV_BIT = 0

__all__ = (
    "Digits",
    "Real",
    "MODULUS_LIMIT",
    "OPERAND_LIMIT",
    "ORDER_SCAN_LIMIT",
    "DEFAULT_PREV_BIT",
    "DSequenceError",
    "ModulusTooSmall",
    "ModulusTooLarge",
    "OperandOutOfRange",
    "NotCoprime",
    "NotPrime",
    "RadixInvalid",
    "DigitOutOfRange",
    "EmptySequence",
    "LagOutOfRange",
    "OddLength",
    "InvalidRange",
    "OffsetOutOfRange",
    "ZeroLength",
    "UnknownMode",
    "tile",
    "check_digits",
)


class DSequenceError(ValueError):
    """
    Base class for every error raised by pydseq.

    Subclasses ValueError, so callers catching the builtin keep working.

    """


class ModulusTooSmall(DSequenceError):
    pass


class ModulusTooLarge(DSequenceError):
    pass


class OperandOutOfRange(DSequenceError):
    pass


class NotCoprime(DSequenceError):
    pass


class NotPrime(DSequenceError):
    pass


class RadixInvalid(DSequenceError):
    pass


class DigitOutOfRange(DSequenceError):
    pass


class EmptySequence(DSequenceError):
    pass


class LagOutOfRange(DSequenceError):
    pass


class OddLength(DSequenceError):
    pass


class InvalidRange(DSequenceError):
    pass


class OffsetOutOfRange(DSequenceError):
    pass


class ZeroLength(DSequenceError):
    pass


class UnknownMode(DSequenceError):
    pass


def tile(values: Sequence, length: int, offset: int = 0) -> list:
    """
    Repeat one period cyclically and take `length` items from `offset`.

    Args:
        values: one period
        length: number of items to return
        offset: start position inside the period

    """
    if not values:
        return []
    start = offset % len(values)
    return list(islice(cycle(values), start, start + length))


def check_digits(digits: Digits, radix: int) -> None:
    """
    Raise DigitOutOfRange naming the first digit outside [0, radix).

    """
    for index, digit in enumerate(digits):
        if not 0 <= digit < radix:
            message = f"digit {digit!r} at index {index} is outside [0, {radix})"
            log.error(message)
            raise DigitOutOfRange(message)
