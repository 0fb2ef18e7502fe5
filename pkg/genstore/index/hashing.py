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
Hash functions shared by every index.

* :py:func:`fingerprint` is the 128-bit MurmurHash3 (x64 variant) of a packed
  sequence, seeded with its length so that sequences differing only by
  trailing ``A`` padding never collide.
* :py:func:`hash64` is Thomas Wang's invertible 64-bit integer mix, used to
  order k-mers when picking minimizers.

>>> hash64(0)
8633297058295171728
>>> fingerprint(b"\x1b", 4) == fingerprint(b"\x1b", 4)
True
"""

import mmh3
import numpy as np

from genstore.seqio.encoding import revcomp_codes

MASK64 = (1 << 64) - 1
MASK32 = (1 << 32) - 1
MAX_PACKED_K = 31

_U2 = np.uint64(2)
_U3 = np.uint64(3)


def hash64(key):
    """
    Wang's 64-bit integer mix on a Python integer.

    Args:
        key (int): A value in ``[0, 2**64)``.

    Returns:
        int: The mixed value, a bijection of ``key``.

    """
    key &= MASK64
    key = (~key + (key << 21)) & MASK64
    key ^= key >> 24
    key = (key + (key << 3) + (key << 8)) & MASK64
    key ^= key >> 14
    key = (key + (key << 2) + (key << 4)) & MASK64
    key ^= key >> 28
    key = (key + (key << 31)) & MASK64
    return key


def hash64_array(keys):
    """Vectorised :py:func:`hash64` over a ``uint64`` array."""
    key = np.array(keys, dtype=np.uint64, copy=True)
    with np.errstate(over="ignore"):
        key = ~key + (key << np.uint64(21))
        key ^= key >> np.uint64(24)
        key = key + (key << np.uint64(3)) + (key << np.uint64(8))
        key ^= key >> np.uint64(14)
        key = key + (key << np.uint64(2)) + (key << np.uint64(4))
        key ^= key >> np.uint64(28)
        key = key + (key << np.uint64(31))
    return key


def fingerprint(packed, length):
    """
    128-bit fingerprint of a packed sequence.

    Args:
        packed (bytes): The 2-bit packed bases (see :py:func:`genstore.seqio.pack`).
        length (int): Number of bases in ``packed``.

    Returns:
        int: An unsigned 128-bit integer; fingerprints are totally ordered by value.

    """
    return mmh3.hash128(bytes(packed), seed=length & MASK32, signed=False)


def split_fingerprint(value):
    """``(hi, lo)`` 64-bit halves of a fingerprint."""
    return value >> 64, value & MASK64


def join_fingerprint(hi, lo):
    return (int(hi) << 64) | int(lo)


def kmer_values(codes, k):
    """
    Forward and reverse-complement 2-bit values of every k-mer.

    Args:
        codes (:py:class:`numpy.ndarray`): 2-bit codes of a sequence.
        k (int): The k-mer length, at most 31.

    Returns:
        (:py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`): ``uint64`` arrays
        of length ``max(0, len(codes) - k + 1)``, the first base in the high bits.

    """
    if not 1 <= k <= MAX_PACKED_K:
        raise ValueError(f"k must be in [1, {MAX_PACKED_K}], got {k}")
    count = len(codes) - k + 1
    if count <= 0:
        empty = np.zeros(0, dtype=np.uint64)
        return empty, empty.copy()
    values = np.asarray(codes, dtype=np.uint64)
    forward = np.zeros(count, dtype=np.uint64)
    reverse = np.zeros(count, dtype=np.uint64)
    for j in range(k):
        window = values[j : j + count]
        forward = (forward << _U2) | window
        reverse |= (_U3 - window) << np.uint64(2 * j)
    return forward, reverse


def canonical_kmers(codes, k):
    """
    Canonical k-mer values and the strand they were taken from.

    Returns:
        (:py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`): the smaller of the
        forward and reverse-complement values, and ``1`` where the reverse
        complement was smaller.

    """
    forward, reverse = kmer_values(codes, k)
    strand = (reverse < forward).astype(np.uint8)
    return np.minimum(forward, reverse), strand


def _packed_windows(codes, starts, k):
    """Rows of packed bytes, one per window ``codes[start:start + k]``."""
    nbytes = (k + 3) // 4
    rows = np.zeros((len(starts), nbytes * 4), dtype=np.uint8)
    rows[:, :k] = np.lib.stride_tricks.sliding_window_view(codes, k)[starts]
    quads = rows.reshape(len(starts), nbytes, 4)
    return (
        (quads[:, :, 0] << 6) | (quads[:, :, 1] << 4) | (quads[:, :, 2] << 2) | quads[:, :, 3]
    ).astype(np.uint8)


def _rows_less(left, right):
    """Row-wise lexicographic ``left < right`` on equal-width ``uint8`` matrices."""
    differ = left != right
    first = np.argmax(differ, axis=1)
    rows = np.arange(len(left))
    return differ.any(axis=1) & (left[rows, first] < right[rows, first])


def window_fingerprints(codes, starts, k, canonical=False, chunk=1 << 14):
    """
    Fingerprints of the windows ``codes[p:p + k]`` for every ``p`` in ``starts``.

    Equivalent to ``fingerprint(pack(codes[p:p + k]), k)``; with ``canonical``
    the lexicographically smaller of the window and its reverse complement is
    hashed instead.

    Args:
        codes (:py:class:`numpy.ndarray`): 2-bit codes of the whole sequence.
        starts (:py:class:`numpy.ndarray`): Window start offsets.
        k (int): Window length.
        canonical (bool): Hash the strand-independent form.
        chunk (int): Windows packed at once.

    Returns:
        (:py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`): ``uint64`` high and
        low fingerprint halves, aligned with ``starts``.

    """
    starts = np.asarray(starts, dtype=np.int64)
    hi = np.zeros(len(starts), dtype=np.uint64)
    lo = np.zeros(len(starts), dtype=np.uint64)
    codes = np.asarray(codes, dtype=np.uint8)
    reverse = revcomp_codes(codes) if canonical else None
    seed = k & MASK32
    for begin in range(0, len(starts), chunk):
        block = starts[begin : begin + chunk]
        rows = _packed_windows(codes, block, k)
        if canonical:
            rc_rows = _packed_windows(reverse, len(codes) - block - k, k)
            swap = _rows_less(rc_rows, rows)
            rows[swap] = rc_rows[swap]
        width = rows.shape[1]
        blob = rows.tobytes()
        for i in range(len(block)):
            value = mmh3.hash128(blob[i * width : (i + 1) * width], seed=seed, signed=False)
            hi[begin + i] = value >> 64
            lo[begin + i] = value & MASK64
    return hi, lo
