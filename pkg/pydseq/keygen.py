"""
Key material cut from the mapped bit sequence of a prime.

The bits are pseudorandom and fully determined by the KeySpec.  Nothing here
has been vetted as a cryptographic generator; treat the output as test or
teaching material, not as a secret.
"""
from __future__ import annotations

import logging
from typing import NamedTuple

from .common import (
    DEFAULT_PREV_BIT,
    DigitOutOfRange,
    OffsetOutOfRange,
    ZeroLength,
    tile,
)
from .expand import b_sequence

log = logging.getLogger(__name__)

__all__ = ("KeySpec", "KeyMaterial", "derive_key", "bits_to_hex", "hex_to_bits")


class KeySpec(NamedTuple):
    """
    Where to cut a key from the mapped sequence of q.

    offset must be smaller than the mapped period length of q.

    """

    q: int
    offset: int
    n_bits: int
    initial_prev_bit: int = DEFAULT_PREV_BIT


class KeyMaterial(NamedTuple):
    bits: tuple[int, ...]
    hex: str

    @classmethod
    def from_hex(cls, text: str, n_bits: int) -> KeyMaterial:
        return cls(tuple(hex_to_bits(text, n_bits)), text.upper())


def bits_to_hex(bits) -> str:
    """
    Render bits MSB first, one nibble per hex digit.

    A partial trailing nibble is padded with zero bits on the right.

    """
    if not bits:
        return ""
    nibbles = -(-len(bits) // 4)
    padded = "".join(str(bit) for bit in bits).ljust(nibbles * 4, "0")
    return format(int(padded, 2), f"0{nibbles}X")


def hex_to_bits(text: str, n_bits: int) -> list[int]:
    """
    Inverse of bits_to_hex: the first n_bits of the hex string, MSB first.

    """
    if n_bits > len(text) * 4:
        raise DigitOutOfRange(f"{text!r} holds fewer than {n_bits} bits")
    width = len(text) * 4
    rendered = format(int(text, 16), f"0{width}b") if text else ""
    return [int(c) for c in rendered[:n_bits]]


def derive_key(spec: KeySpec) -> KeyMaterial:
    """
    Take spec.n_bits bits of the mapped sequence of q, starting at offset.

    The period is repeated cyclically when the key is longer than what
    remains after the offset.

    Args:
        spec: prime, length, offset and initial bit for the mapping

    """
    if spec.n_bits <= 0:
        log.error("key length must be positive, got %d", spec.n_bits)
        raise ZeroLength(f"n_bits must be positive, got {spec.n_bits}")
    seq = b_sequence(spec.q, spec.initial_prev_bit)
    length = len(seq.bits)
    if not 0 <= spec.offset < length:
        log.error("offset %d outside the period of %d bits", spec.offset, length)
        raise OffsetOutOfRange(
            f"offset must be in [0, {length}) for q={spec.q}, got {spec.offset}"
        )
    bits = tuple(tile(seq.bits, spec.n_bits, spec.offset))
    log.debug("derived %d bits for q=%d at %d", spec.n_bits, spec.q, spec.offset)
    return KeyMaterial(bits, bits_to_hex(bits))
