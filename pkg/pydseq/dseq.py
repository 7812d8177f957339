"""
D-sequence generation.

A D-sequence for the prime q in radix r is a_i = (r**i mod q) mod r for
i = 1, 2, ...  It repeats after ord_q(r) digits; when r is a primitive root
of q the period is q - 1 and the sequence is called maximum length.

Digits are stored 0-based in python, so `digits[0]` holds a_1.
"""
from __future__ import annotations

import logging
from typing import NamedTuple

from .common import NotPrime, RadixInvalid
from .modmath import is_prime, multiplicative_order

log = logging.getLogger(__name__)

__all__ = (
    "DSeqParams",
    "DigitSequence",
    "BalancedDigitSequence",
    "make_params",
    "generate_digits",
    "long_division_digits",
    "to_balanced",
)


class DSeqParams(NamedTuple):
    q: int
    r: int
    period: int

    @property
    def max_length(self) -> bool:
        return self.period == self.q - 1


class DigitSequence(NamedTuple):
    """
    One period of a D-sequence.

    """

    params: DSeqParams
    digits: tuple[int, ...]

    def digit(self, i: int) -> int:
        """
        Return a_i using the 1-based index, wrapping around the period.

        """
        return self.digits[(i - 1) % len(self.digits)]


class BalancedDigitSequence(NamedTuple):
    """
    Ternary D-sequence with every 2 written as -1.

    """

    params: DSeqParams
    values: tuple[int, ...]


def make_params(q: int, r: int) -> DSeqParams:
    """
    Validate q and r and compute the period.

    Args:
        q: prime modulus
        r: radix, 2 <= r < q

    """
    if q < 2 or not is_prime(q):
        log.error("q=%d is not prime", q)
        raise NotPrime(f"q={q} is not prime")
    if r < 2 or r >= q or r % q == 0:
        log.error("radix %d is not usable with q=%d", r, q)
        raise RadixInvalid(f"radix r={r} must satisfy 2 <= r < q={q}")
    period = multiplicative_order(r, q)
    if period != q - 1:
        log.debug("q=%d is not maximum length in radix %d (period %d)", q, r, period)
    return DSeqParams(q, r, period)


def generate_digits(q: int, r: int) -> DigitSequence:
    """
    Generate one period of a_i = (r**i mod q) mod r, starting at i = 1.

    The remainder r**i mod q is carried from one digit to the next instead of
    being recomputed.

    Args:
        q: prime modulus
        r: radix, 2 <= r < q

    """
    params = make_params(q, r)
    digits = []
    append = digits.append
    remainder = 1
    for _ in range(params.period):
        remainder = remainder * r % q
        append(remainder % r)
    return DigitSequence(params, tuple(digits))


def long_division_digits(q: int, r: int) -> tuple[int, ...]:
    """
    One period of the base-r long division of 1/q.

    These are the "inverse prime" digits.  For the same q and r,
    generate_digits returns ((-q mod r) * d) mod r for each digit d here.

    Args:
        q: prime modulus
        r: radix, 2 <= r < q

    """
    params = make_params(q, r)
    digits = []
    remainder = 1
    for _ in range(params.period):
        digit, remainder = divmod(r * remainder, q)
        digits.append(digit)
    return tuple(digits)


def to_balanced(seq: DigitSequence) -> BalancedDigitSequence:
    """
    Replace each 2 of a ternary sequence with -1.

    Args:
        seq: ternary digit sequence

    """
    if seq.params.r != 3:
        log.error("balanced form needs radix 3, got %d", seq.params.r)
        raise RadixInvalid(f"balanced form needs radix 3, got r={seq.params.r}")
    return BalancedDigitSequence(
        seq.params, tuple(-1 if digit == 2 else digit for digit in seq.digits)
    )
