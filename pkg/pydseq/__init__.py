from .analysis import autocorrelation, build_table, digit_frequencies, scan_twos
from .dseq import DigitSequence, DSeqParams, generate_digits, to_balanced
from .expand import BitSequence, b_sequence, enhanced_length, expand_twos
from .keygen import KeyMaterial, KeySpec, derive_key

__version__ = 0, 1
__author__ = "pydseq contributors"
__description__ = "Ternary D-sequences mapped to binary"
