"""
Mapping of ternary digits onto bits.

Each 2 is replaced by "01" when the last bit written was 0 and by "10" when
it was 1.  0 and 1 are copied.  The last bit written is always the bit of the
output stream, so a run of 2s alternates 01, 10, 01, ...
"""
from __future__ import annotations

import logging
from typing import NamedTuple, Optional, Union

from .common import DEFAULT_PREV_BIT, Digits, DigitOutOfRange, check_digits
from .dseq import DigitSequence, DSeqParams, generate_digits

log = logging.getLogger(__name__)

__all__ = (
    "BitSequence",
    "BalancedBitSequence",
    "expand_twos",
    "expand_twos_recursive",
    "reduce_leftmost_two",
    "b_sequence",
    "to_balanced_bits",
    "from_balanced_bits",
    "count_twos",
    "enhanced_length",
)

# replacement pair for a 2, keyed by the preceding bit
_PAIRS = {0: (0, 1), 1: (1, 0)}


class BitSequence(NamedTuple):
    """
    Output of the 2 -> 01/10 mapping.

    len(bits) is always the input length plus `twos_expanded`.  `source` is
    None when the input was a bare digit list.

    """

    bits: tuple[int, ...]
    source: Optional[DSeqParams]
    twos_expanded: int


class BalancedBitSequence(NamedTuple):
    values: tuple[int, ...]


def _check_prev_bit(bit: int) -> None:
    if bit not in _PAIRS:
        log.error("initial_prev_bit must be 0 or 1, got %r", bit)
        raise DigitOutOfRange(f"initial_prev_bit must be 0 or 1, got {bit!r}")


def expand_twos(
    digits: Union[DigitSequence, Digits],
    initial_prev_bit: int = DEFAULT_PREV_BIT,
) -> BitSequence:
    """
    Map ternary digits to bits in a single left to right pass.

    Args:
        digits: a ternary DigitSequence or a list of digits in {0, 1, 2}
        initial_prev_bit: bit assumed to precede the first digit

    """
    source = None
    if isinstance(digits, DigitSequence):
        source = digits.params
        digits = digits.digits
    check_digits(digits, 3)
    _check_prev_bit(initial_prev_bit)

    bits = []
    append = bits.append
    last = initial_prev_bit
    twos = 0
    for digit in digits:
        if digit == 2:
            first, last = _PAIRS[last]
            append(first)
            append(last)
            twos += 1
        else:
            append(digit)
            last = digit
    return BitSequence(tuple(bits), source, twos)


def reduce_leftmost_two(
    values: Digits, initial_prev_bit: int = DEFAULT_PREV_BIT
) -> list[int]:
    """
    Replace only the leftmost 2, judged by the value just before it.

    Returns a copy of the input when there is no 2 left.

    """
    values = list(values)
    try:
        index = values.index(2)
    except ValueError:
        return values
    prev = values[index - 1] if index else initial_prev_bit
    values[index : index + 1] = _PAIRS[prev]
    return values


def expand_twos_recursive(
    digits: Digits, initial_prev_bit: int = DEFAULT_PREV_BIT
) -> list[int]:
    """
    Reference form of the mapping: reduce the leftmost 2 until none remain.

    Quadratic; use expand_twos for real work.

    """
    check_digits(digits, 3)
    _check_prev_bit(initial_prev_bit)
    values = list(digits)
    while 2 in values:
        values = reduce_leftmost_two(values, initial_prev_bit)
    return values


def b_sequence(q: int, initial_prev_bit: int = DEFAULT_PREV_BIT) -> BitSequence:
    """
    Generate the ternary D-sequence of q and map it to bits.

    """
    return expand_twos(generate_digits(q, 3), initial_prev_bit)


def to_balanced_bits(seq: BitSequence) -> BalancedBitSequence:
    return BalancedBitSequence(tuple(1 if bit else -1 for bit in seq.bits))


def from_balanced_bits(seq: BalancedBitSequence) -> list[int]:
    return [0 if value == -1 else 1 for value in seq.values]


def count_twos(digits: Union[DigitSequence, Digits]) -> int:
    if isinstance(digits, DigitSequence):
        digits = digits.digits
    check_digits(digits, 3)
    return sum(1 for digit in digits if digit == 2)


def enhanced_length(q: int) -> int:
    """
    Length of the mapped sequence for q: period plus the number of 2s.

    Args:
        q: prime coprime to 3

    """
    seq = generate_digits(q, 3)
    return seq.params.period + count_twos(seq)
