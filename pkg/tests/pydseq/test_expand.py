import random
import unittest

from pydseq.analysis import digit_frequencies
from pydseq.common import DigitOutOfRange
from pydseq.dseq import generate_digits
from pydseq.expand import (
    BitSequence,
    b_sequence,
    count_twos,
    enhanced_length,
    expand_twos,
    expand_twos_recursive,
    from_balanced_bits,
    reduce_leftmost_two,
    to_balanced_bits,
)
from pydseq.modmath import primes_between


class TestExpandTwos(unittest.TestCase):
    def test_examples(self) -> None:
        self.assertEqual(
            expand_twos([0, 2, 0, 1, 2, 1]).bits, (0, 0, 1, 0, 1, 1, 0, 1)
        )
        self.assertEqual(
            expand_twos([1, 0, 2, 2, 1, 1, 0]).bits, (1, 0, 0, 1, 1, 0, 1, 1, 0)
        )
        self.assertEqual(expand_twos([2], 0).bits, (0, 1))
        self.assertEqual(expand_twos([0, 1, 1, 0]).bits, (0, 1, 1, 0))

    def test_leading_two_uses_initial_bit(self) -> None:
        self.assertEqual(expand_twos([2]).bits, (0, 1))
        self.assertEqual(expand_twos([2], 1).bits, (1, 0))
        self.assertEqual(expand_twos([2, 0], 1).bits, (1, 0, 0))

    def test_runs_of_twos_alternate(self) -> None:
        self.assertEqual(expand_twos([2, 2, 2, 2]).bits, (0, 1, 1, 0, 0, 1, 1, 0))
        self.assertEqual(expand_twos([2, 2, 2], 1).bits, (1, 0, 0, 1, 1, 0))

    def test_source_and_count(self) -> None:
        seq = generate_digits(7, 3)
        result = expand_twos(seq)
        self.assertEqual(result, BitSequence((0, 0, 1, 0, 1, 1, 0, 1), seq.params, 2))
        self.assertIsNone(expand_twos([0, 2]).source)

    def test_errors(self) -> None:
        with self.assertRaises(DigitOutOfRange):
            expand_twos([0, 3])
        with self.assertRaises(DigitOutOfRange):
            expand_twos([-1])
        with self.assertRaises(DigitOutOfRange):
            expand_twos([0], 2)


class TestRecursiveReduction(unittest.TestCase):
    def test_intermediate_step(self) -> None:
        step = reduce_leftmost_two([1, 0, 2, 2, 1, 1, 0])
        self.assertEqual(step, [1, 0, 0, 1, 2, 1, 1, 0])
        self.assertEqual(reduce_leftmost_two(step), [1, 0, 0, 1, 1, 0, 1, 1, 0])
        self.assertEqual(reduce_leftmost_two([0, 1]), [0, 1])

    def test_matches_single_pass(self) -> None:
        rng = random.Random(20240101)
        for _ in range(1000):
            digits = [rng.randrange(3) for _ in range(rng.randint(0, 50))]
            for bit in (0, 1):
                with self.subTest(digits=digits, bit=bit):
                    self.assertEqual(
                        list(expand_twos(digits, bit).bits),
                        expand_twos_recursive(digits, bit),
                    )


class TestProperties(unittest.TestCase):
    def test_length_and_frequency_conservation(self) -> None:
        rng = random.Random(7)
        primes = [p for p in primes_between(5, 4999)]
        for q in rng.sample(primes, 100):
            with self.subTest(q=q):
                seq = generate_digits(q, 3)
                bits = expand_twos(seq)
                zeros, ones, twos = digit_frequencies(seq.digits, 3)
                bit_zeros, bit_ones = digit_frequencies(bits.bits, 2)
                self.assertEqual(len(bits.bits), len(seq.digits) + twos)
                self.assertEqual(bits.twos_expanded, twos)
                self.assertEqual(bit_zeros, zeros + twos)
                self.assertEqual(bit_ones, ones + twos)


class TestBalancedBits(unittest.TestCase):
    def test_examples(self) -> None:
        seq = expand_twos([0, 2, 0, 1, 2, 1])
        self.assertEqual(
            to_balanced_bits(seq).values, (-1, -1, 1, -1, 1, 1, -1, 1)
        )
        self.assertEqual(to_balanced_bits(expand_twos([1, 1])).values, (1, 1))
        self.assertEqual(to_balanced_bits(expand_twos([0])).values, (-1,))

    def test_inverse(self) -> None:
        seq = b_sequence(509)
        self.assertEqual(tuple(from_balanced_bits(to_balanced_bits(seq))), seq.bits)


class TestLengths(unittest.TestCase):
    def test_count_twos(self) -> None:
        self.assertEqual(count_twos([0, 2, 0, 1, 2, 1]), 2)
        self.assertEqual(count_twos([]), 0)
        # every residue 1..508 occurs once, so the 2s are the residues 2 mod 3
        self.assertEqual(count_twos(generate_digits(509, 3)), 169)

    def test_enhanced_length(self) -> None:
        self.assertEqual(enhanced_length(7), 8)
        self.assertEqual(enhanced_length(509), 677)
        self.assertEqual(enhanced_length(593), 789)

    def test_enhanced_length_is_mapped_length(self) -> None:
        for q in (509, 599, 643, 1171):
            self.assertEqual(len(b_sequence(q).bits), enhanced_length(q))
