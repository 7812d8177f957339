import random
import unittest

from pydseq.analysis import digit_frequencies
from pydseq.common import NotPrime, OffsetOutOfRange, ZeroLength
from pydseq.dseq import generate_digits
from pydseq.expand import enhanced_length
from pydseq.keygen import KeyMaterial, KeySpec, bits_to_hex, derive_key, hex_to_bits


class TestDeriveKey(unittest.TestCase):
    def test_examples(self) -> None:
        key = derive_key(KeySpec(q=7, offset=0, n_bits=8))
        self.assertEqual(key, KeyMaterial((0, 0, 1, 0, 1, 1, 0, 1), "2D"))
        key = derive_key(KeySpec(q=7, offset=2, n_bits=4))
        self.assertEqual(key, KeyMaterial((1, 0, 1, 1), "B"))
        key = derive_key(KeySpec(q=7, offset=0, n_bits=10))
        self.assertEqual(key.bits, (0, 0, 1, 0, 1, 1, 0, 1, 0, 0))
        self.assertEqual(key.hex, "2D0")

    def test_positional_fields(self) -> None:
        self.assertEqual(derive_key(KeySpec(7, 0, 8)).hex, "2D")
        self.assertEqual(derive_key(KeySpec(7, 2, 4)).hex, "B")
        self.assertEqual(KeySpec(7, 2, 4), KeySpec(q=7, offset=2, n_bits=4))

    def test_deterministic(self) -> None:
        spec = KeySpec(q=1171, n_bits=256, offset=17, initial_prev_bit=1)
        self.assertEqual(derive_key(spec), derive_key(spec))

    def test_wrap_concatenation(self) -> None:
        rng = random.Random(42)
        primes = (7, 13, 17, 509, 593, 643)
        for _ in range(100):
            q = rng.choice(primes)
            length = enhanced_length(q)
            offset = rng.randrange(length)
            n = rng.randint(1, 3 * length)
            m = rng.randint(1, 3 * length)
            with self.subTest(q=q, offset=offset, n=n, m=m):
                head = derive_key(KeySpec(q=q, offset=offset, n_bits=n))
                tail = derive_key(KeySpec(q=q, offset=(offset + n) % length, n_bits=m))
                whole = derive_key(KeySpec(q=q, offset=offset, n_bits=n + m))
                self.assertEqual(head.bits + tail.bits, whole.bits)

    def test_full_period_bit_balance(self) -> None:
        for q in (7, 509, 643):
            _, ones, twos = digit_frequencies(generate_digits(q, 3).digits, 3)
            key = derive_key(KeySpec(q=q, offset=0, n_bits=enhanced_length(q)))
            self.assertEqual(sum(key.bits), ones + twos)

    def test_hex_reparses(self) -> None:
        for n_bits in (1, 4, 7, 8, 61):
            key = derive_key(KeySpec(q=509, n_bits=n_bits, offset=3))
            self.assertEqual(len(key.hex), -(-n_bits // 4))
            self.assertEqual(KeyMaterial.from_hex(key.hex, n_bits), key)

    def test_errors(self) -> None:
        with self.assertRaises(ZeroLength):
            derive_key(KeySpec(q=7, offset=0, n_bits=0))
        with self.assertRaises(OffsetOutOfRange):
            derive_key(KeySpec(q=7, n_bits=4, offset=8))
        with self.assertRaises(NotPrime):
            derive_key(KeySpec(q=9, offset=0, n_bits=4))


class TestHex(unittest.TestCase):
    def test_bits_to_hex(self) -> None:
        self.assertEqual(bits_to_hex([1]), "8")
        self.assertEqual(bits_to_hex([0, 0, 0, 0, 1]), "08")
        self.assertEqual(bits_to_hex([]), "")

    def test_hex_to_bits(self) -> None:
        self.assertEqual(hex_to_bits("2D", 8), [0, 0, 1, 0, 1, 1, 0, 1])
        self.assertEqual(hex_to_bits("08", 5), [0, 0, 0, 0, 1])
