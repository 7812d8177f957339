"""
Integer number theory used by the sequence generators.

Everything here works on plain python ints.  Moduli are capped at 2**32 so
that the product of two residues always fits in 64 bits; the primes used for
D-sequences are far below that.
"""
from __future__ import annotations

import logging
from collections.abc import Iterator
from math import isqrt
from typing import NamedTuple

from .common import (
    MODULUS_LIMIT,
    OPERAND_LIMIT,
    ORDER_SCAN_LIMIT,
    InvalidRange,
    ModulusTooLarge,
    ModulusTooSmall,
    NotCoprime,
    NotPrime,
    OperandOutOfRange,
    UnknownMode,
)

log = logging.getLogger(__name__)

__all__ = (
    "Residue",
    "mod_pow",
    "is_prime",
    "factorize",
    "multiplicative_order",
    "is_primitive_root",
    "primes_between",
)


class Residue(NamedTuple):
    """
    An integer reduced modulo `modulus`, 0 <= value < modulus.

    """

    value: int
    modulus: int

    def __int__(self) -> int:
        return self.value


def _check_modulus(modulus: int) -> None:
    if modulus < 2:
        log.error("modulus %d is smaller than 2", modulus)
        raise ModulusTooSmall(f"modulus must be >= 2, got {modulus}")
    if modulus >= MODULUS_LIMIT:
        log.error("modulus %d is not below 2**32", modulus)
        raise ModulusTooLarge(f"modulus must be < 2**32, got {modulus}")


def _check_operand(name: str, value: int) -> None:
    if not 0 <= value < OPERAND_LIMIT:
        log.error("%s %d outside the unsigned 64 bit range", name, value)
        raise OperandOutOfRange(f"{name} must be in [0, 2**64), got {value}")


def mod_pow(base: int, exponent: int, modulus: int) -> Residue:
    """
    Compute base ** exponent mod modulus by repeated squaring.

    Args:
        base: nonnegative base
        exponent: nonnegative exponent
        modulus: integer in [2, 2**32)

    """
    _check_modulus(modulus)
    _check_operand("base", base)
    _check_operand("exponent", exponent)
    return Residue(pow(base, exponent, modulus), modulus)


def is_prime(n: int) -> bool:
    """
    Deterministic primality by trial division up to isqrt(n).

    Args:
        n: integer in [0, 2**32)

    """
    if not 0 <= n < MODULUS_LIMIT:
        log.error("primality test refused for %d", n)
        raise OperandOutOfRange(f"n must be in [0, 2**32), got {n}")
    if n < 4:
        return n >= 2
    if n % 2 == 0:
        return False
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def factorize(n: int) -> tuple[int, ...]:
    """
    Distinct prime factors of n, ascending.

    """
    if n < 1:
        log.error("cannot factor %d", n)
        raise OperandOutOfRange(f"cannot factor {n}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return tuple(factors)


def _check_order_args(r: int, q: int) -> None:
    if r < 2:
        log.error("radix %d is smaller than 2", r)
        raise OperandOutOfRange(f"r must be >= 2, got {r}")
    if q >= MODULUS_LIMIT:
        log.error("prime %d is not below 2**32", q)
        raise ModulusTooLarge(f"q must be < 2**32, got {q}")
    if q < 2 or not is_prime(q):
        log.error("%d is not prime", q)
        raise NotPrime(f"q={q} is not prime")
    if r % q == 0:
        log.error("%d divides %d", q, r)
        raise NotCoprime(f"r={r} is not coprime to q={q}")


def multiplicative_order(r: int, q: int, method: str = "factor") -> int:
    """
    Smallest t > 0 with r ** t == 1 (mod q).

    The default method starts from q - 1 and divides out each prime factor
    while the power stays 1.  "scan" walks the powers one at a time and is only
    allowed for small q; it is kept as an independent check.

    Args:
        r: base, at least 2 and not a multiple of q
        q: prime modulus
        method: "factor" or "scan"

    """
    _check_order_args(r, q)
    if method == "factor":
        t = q - 1
        for p in factorize(q - 1):
            while t % p == 0 and pow(r, t // p, q) == 1:
                t //= p
        return t
    elif method == "scan":
        if q >= ORDER_SCAN_LIMIT:
            log.error("linear order scan refused for q=%d", q)
            raise InvalidRange(f"scan method needs q < {ORDER_SCAN_LIMIT}, got {q}")
        x = r % q
        t = 1
        while x != 1:
            x = x * r % q
            t += 1
        return t
    log.error("unknown order method %r", method)
    raise UnknownMode(f'method must be "factor" or "scan", got {method!r}')


def is_primitive_root(r: int, q: int) -> bool:
    """
    True when the powers of r generate every nonzero residue mod q.

    """
    return multiplicative_order(r, q) == q - 1


def primes_between(start: int, stop: int) -> Iterator[int]:
    """
    Yield the primes p with start <= p <= stop, ascending.

    """
    for n in range(max(start, 2), stop + 1):
        if is_prime(n):
            yield n
