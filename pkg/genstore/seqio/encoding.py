# Copyright 2022 The GenStore Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

r"""
Two-bit nucleotide encoding.

Bases are coded ``A=0, C=1, G=2, T=3`` and packed four per byte, first base
in the two most significant bits, so that byte-wise comparison of two packed
sequences of equal length follows the lexicographic order of the bases.

>>> packed = pack(encode(b"ACGT")[0])
>>> bin(packed[0])
'0b11011'
>>> decode(unpack(revcomp(pack(encode(b"AAAA")[0]), 4), 4))
'TTTT'
"""

from enum import IntEnum

import numpy as np

AMBIGUOUS = 4
ALPHABET = b"ACGT"

_ENCODE = np.full(256, AMBIGUOUS, dtype=np.uint8)
for _code, _symbol in enumerate(ALPHABET):
    _ENCODE[_symbol] = _code
    _ENCODE[ord(chr(_symbol).lower())] = _code

_DECODE = np.frombuffer(ALPHABET, dtype=np.uint8)
_SHIFTS = np.array([6, 4, 2, 0], dtype=np.uint8)


class Base(IntEnum):
    """A nucleotide as its 2-bit code."""

    A = 0
    C = 1
    G = 2
    T = 3

    def complement(self):
        """Watson-Crick partner: A-T, C-G."""
        return Base(3 - self)


def packed_size(length):
    """Number of bytes holding ``length`` packed bases."""
    return (length + 3) // 4


def encode(text):
    """
    Map raw sequence bytes to 2-bit codes.

    Symbols outside ``ACGTacgt`` become ``A`` and their offsets are returned,
    so the caller can flag or mask them.

    Args:
        text (bytes): The sequence as read from a FASTA/FASTQ file.

    Returns:
        (:py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`): ``uint8`` codes and
        the sorted positions of ambiguous symbols.

    """
    codes = _ENCODE[np.frombuffer(bytes(text), dtype=np.uint8)]
    ambiguous = np.flatnonzero(codes == AMBIGUOUS)
    codes[ambiguous] = Base.A
    return codes, ambiguous


def decode(codes, ambiguous=()):
    """Turn 2-bit codes back into an uppercase string, restoring ``N`` at ``ambiguous``."""
    symbols = _DECODE[np.asarray(codes, dtype=np.uint8)]
    if len(ambiguous):
        symbols = symbols.copy()
        symbols[np.asarray(ambiguous, dtype=np.int64)] = ord("N")
    return symbols.tobytes().decode("ascii")


def pack(codes):
    """Pack 2-bit codes, four per byte, into :py:class:`bytes`."""
    codes = np.asarray(codes, dtype=np.uint8)
    padding = (-len(codes)) % 4
    if padding:
        codes = np.concatenate([codes, np.zeros(padding, dtype=np.uint8)])
    quads = codes.reshape(-1, 4)
    packed = (quads[:, 0] << 6) | (quads[:, 1] << 4) | (quads[:, 2] << 2) | quads[:, 3]
    return packed.astype(np.uint8).tobytes()


def unpack(packed, length):
    """Inverse of :py:func:`pack`: ``length`` codes as a ``uint8`` array."""
    raw = np.frombuffer(bytes(packed), dtype=np.uint8)
    if len(raw) < packed_size(length):
        raise ValueError(f"{len(raw)} bytes cannot hold {length} bases")
    codes = (raw[:, None] >> _SHIFTS) & 3
    return codes.reshape(-1)[:length].astype(np.uint8)


def revcomp_codes(codes):
    """Reverse complement of an array of codes."""
    return (3 - np.asarray(codes, dtype=np.uint8)[::-1]).astype(np.uint8)


def revcomp(packed, length):
    """
    Reverse complement of a packed sequence.

    Args:
        packed (bytes): Packed bases.
        length (int): Number of bases stored in ``packed``.

    Returns:
        :py:class:`bytes`: The packed reverse complement, same length.

    """
    return pack(revcomp_codes(unpack(packed, length)))
