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
Fingerprint-sorted tables: the sorted read table and its common base.

Fingerprints are kept as two ``uint64`` columns, ``fp_hi`` and ``fp_lo``, so
that ordering by ``(fp_hi, fp_lo)`` is ordering by the 128-bit value.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from genstore.errors import ReadLengthError
from genstore.index.hashing import fingerprint, join_fingerprint, split_fingerprint
from genstore.seqio.encoding import packed_size, revcomp

logger = logging.getLogger(__name__)

FINGERPRINT_BYTES = 16


def _empty_u64():
    return np.zeros(0, dtype=np.uint64)


@dataclass(frozen=True, eq=False)
class FingerprintTable:
    """Columns and order checks shared by :py:class:`SrTable` and the reference k-mer index."""

    fp_hi: np.ndarray = field(default_factory=_empty_u64)
    fp_lo: np.ndarray = field(default_factory=_empty_u64)

    def __len__(self):
        return len(self.fp_hi)

    def fingerprint(self, i):
        """The 128-bit fingerprint of entry ``i``."""
        return join_fingerprint(self.fp_hi[i], self.fp_lo[i])

    def fingerprints(self):
        return [self.fingerprint(i) for i in range(len(self))]

    def first_unsorted(self, strict=False):
        """
        Index of the first entry out of order, or :py:obj:`None`.

        Args:
            strict (bool): Also reject equal neighbours.

        """
        hi, lo = self.fp_hi, self.fp_lo
        descending = (hi[1:] < hi[:-1]) | ((hi[1:] == hi[:-1]) & (lo[1:] < lo[:-1]))
        if strict:
            descending |= (hi[1:] == hi[:-1]) & (lo[1:] == lo[:-1])
        wrong = np.flatnonzero(descending)
        return int(wrong[0]) + 1 if len(wrong) else None

    def lower_bound(self, value):
        """First entry whose fingerprint is not smaller than ``value``."""
        hi, lo = split_fingerprint(value)
        left = int(np.searchsorted(self.fp_hi, np.uint64(hi), side="left"))
        right = int(np.searchsorted(self.fp_hi, np.uint64(hi), side="right"))
        return left + int(np.searchsorted(self.fp_lo[left:right], np.uint64(lo), side="left"))


@dataclass(frozen=True, eq=False)
class SrTable(FingerprintTable):
    """
    Reads sorted by fingerprint, ties by read id.

    ``raw`` holds the packed bases of each entry, one row per read.
    """

    read_len: int = 0
    canonical: bool = False
    read_ids: np.ndarray = field(default_factory=_empty_u64)
    raw: np.ndarray = field(default_factory=lambda: np.zeros((0, 0), dtype=np.uint8))

    @property
    def entry_bytes(self):
        """Size of one entry: fingerprint, read id and packed read."""
        return FINGERPRINT_BYTES + 8 + packed_size(self.read_len)

    @property
    def nbytes(self):
        return len(self) * self.entry_bytes

    def slice(self, start, stop):
        """Entries ``[start, stop)`` as a new table."""
        return SrTable(
            fp_hi=self.fp_hi[start:stop],
            fp_lo=self.fp_lo[start:stop],
            read_len=self.read_len,
            canonical=self.canonical,
            read_ids=self.read_ids[start:stop],
            raw=self.raw[start:stop],
        )

    def __eq__(self, other):
        if not isinstance(other, SrTable):
            return NotImplemented
        return (
            self.read_len == other.read_len
            and self.canonical == other.canonical
            and np.array_equal(self.fp_hi, other.fp_hi)
            and np.array_equal(self.fp_lo, other.fp_lo)
            and np.array_equal(self.read_ids, other.read_ids)
            and np.array_equal(self.raw, other.raw)
        )


def strand_packed(packed, length, canonical):
    """The packed form that gets fingerprinted: as stored, or the smaller of both strands."""
    if not canonical:
        return packed
    return min(packed, revcomp(packed, length))


def build_srtable(reads, canonical=False):
    """
    Build the sorted read table.

    Reads with ambiguous bases are skipped; the caller forwards them.

    Args:
        reads (:py:class:`genstore.seqio.ReadSet`): Fixed-length reads.
        canonical (bool): Fingerprint the smaller of each read and its reverse complement.

    Returns:
        :py:class:`SrTable`

    Raises:
        :py:class:`genstore.errors.ReadLengthError`: On a read of a different length.

    """
    usable = [read for read in reads if not read.has_ambiguous]
    if not usable:
        return SrTable(read_len=reads.read_length or 0, canonical=canonical)

    read_len = usable[0].length
    for read in usable:
        if read.length != read_len:
            raise ReadLengthError(read.id, read.length, read_len)

    count = len(usable)
    hi = np.zeros(count, dtype=np.uint64)
    lo = np.zeros(count, dtype=np.uint64)
    for i, read in enumerate(usable):
        value = fingerprint(strand_packed(read.packed, read_len, canonical), read_len)
        hi[i], lo[i] = split_fingerprint(value)
    ids = np.array([read.id for read in usable], dtype=np.uint64)
    raw = np.frombuffer(b"".join(read.packed for read in usable), dtype=np.uint8)

    order = np.lexsort((ids, lo, hi))
    logger.debug("sorted %d reads of length %d by fingerprint", count, read_len)
    return SrTable(
        fp_hi=hi[order],
        fp_lo=lo[order],
        read_len=read_len,
        canonical=canonical,
        read_ids=ids[order],
        raw=raw.reshape(count, packed_size(read_len))[order],
    )
