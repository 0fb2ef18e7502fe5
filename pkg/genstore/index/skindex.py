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
Index of the read-sized k-mers of a reference.

Only fingerprints and locations are stored, never the k-mers themselves.

.. testcode::

    from genstore.index import build_skindex
    from genstore.seqio import ReferenceGenome

    index = build_skindex(ReferenceGenome.from_records([("r", "AAAA")]), 2)
    print(len(index), index.locations_of(0).tolist())

.. testoutput::

    1 [0, 1, 2]
"""

import logging
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from genstore.index.hashing import window_fingerprints
from genstore.index.srtable import FINGERPRINT_BYTES, FingerprintTable, _empty_u64

logger = logging.getLogger(__name__)

# bytes per entry and per location in the projected on-SSD layout
PROJECTED_FINGERPRINT_BYTES = 8
PROJECTED_LOCATION_BYTES = 4
# non-N bases of the GRCh38 primary assembly
HUMAN_REFERENCE_BASES = 2_937_639_113


@dataclass(frozen=True, eq=False)
class SkIndex(FingerprintTable):
    """
    Distinct reference k-mer fingerprints in increasing order with their locations.

    ``locations[offsets[i]:offsets[i + 1]]`` are the 0-based start positions
    of entry ``i``, in increasing order.
    """

    k: int = 0
    canonical: bool = False
    offsets: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=np.uint64))
    locations: np.ndarray = field(default_factory=_empty_u64)

    def locations_of(self, i):
        return self.locations[int(self.offsets[i]) : int(self.offsets[i + 1])]

    @property
    def location_count(self):
        return len(self.locations)

    @property
    def nbytes(self):
        """Bytes streamed when scanning the index: fingerprints, offsets and locations."""
        return len(self) * (FINGERPRINT_BYTES + 8) + 8 * self.location_count

    def slice(self, start, stop):
        """Entries ``[start, stop)`` as a new index."""
        begin, end = int(self.offsets[start]), int(self.offsets[stop])
        return SkIndex(
            fp_hi=self.fp_hi[start:stop],
            fp_lo=self.fp_lo[start:stop],
            k=self.k,
            canonical=self.canonical,
            offsets=self.offsets[start : stop + 1] - np.uint64(begin),
            locations=self.locations[begin:end],
        )

    def __eq__(self, other):
        if not isinstance(other, SkIndex):
            return NotImplemented
        return (
            self.k == other.k
            and self.canonical == other.canonical
            and np.array_equal(self.fp_hi, other.fp_hi)
            and np.array_equal(self.fp_lo, other.fp_lo)
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.locations, other.locations)
        )


_WORKER = {}


def _init_worker(codes, k, canonical):
    _WORKER.update(codes=codes, k=k, canonical=canonical)


def _fingerprint_part(starts):
    return window_fingerprints(
        _WORKER["codes"], starts, _WORKER["k"], canonical=_WORKER["canonical"]
    )


def build_skindex(ref, read_len, canonical=False, threads=1):
    """
    Build the read-sized k-mer index of a reference.

    Positions whose k-mer crosses a record boundary or an ambiguous base are
    skipped. Equal fingerprints are merged into one entry.

    Args:
        ref (:py:class:`genstore.seqio.ReferenceGenome`): The reference.
        read_len (int): The k-mer length, equal to the read length.
        canonical (bool): Fingerprint the smaller of each k-mer and its reverse complement.
        threads (int): Worker processes; the reference is split in contiguous parts
            whose results are concatenated in order.

    Returns:
        :py:class:`SkIndex`

    Raises:
        :py:class:`ValueError`: When ``read_len`` exceeds the reference length.

    """
    if read_len < 1 or read_len > ref.length:
        raise ValueError(
            f"read length {read_len} does not fit a reference of {ref.length} bases"
        )
    starts = np.flatnonzero(ref.kmer_mask(read_len)).astype(np.int64)
    codes = ref.codes

    if threads > 1 and len(starts) > threads:
        parts = np.array_split(starts, threads)
        with Pool(threads, initializer=_init_worker, initargs=(codes, read_len, canonical)) as pool:
            results = pool.map(_fingerprint_part, parts)
        hi = np.concatenate([part[0] for part in results])
        lo = np.concatenate([part[1] for part in results])
    else:
        hi, lo = window_fingerprints(codes, starts, read_len, canonical=canonical)

    order = np.lexsort((starts, lo, hi))
    hi, lo, positions = hi[order], lo[order], starts[order].astype(np.uint64)
    first = np.ones(len(hi), dtype=bool)
    first[1:] = (hi[1:] != hi[:-1]) | (lo[1:] != lo[:-1])
    heads = np.flatnonzero(first)
    offsets = np.append(heads, len(hi)).astype(np.uint64)

    logger.info(
        "SKIndex k=%d: %d positions, %d distinct fingerprints", read_len, len(hi), len(heads)
    )
    return SkIndex(
        fp_hi=hi[heads],
        fp_lo=lo[heads],
        k=read_len,
        canonical=canonical,
        offsets=offsets,
        locations=positions,
    )


@dataclass(frozen=True)
class SkIndexSize:
    """Projected size of an exact-match index and of the same index storing raw k-mers."""

    entries: int
    fingerprint_bytes: int
    raw_kmer_bytes: int

    @property
    def reduction(self):
        return self.raw_kmer_bytes / self.fingerprint_bytes


def skindex_size_estimate(
    reference_bases=HUMAN_REFERENCE_BASES,
    read_len=150,
    distinct_fraction=1.0,
    fingerprint_bytes=PROJECTED_FINGERPRINT_BYTES,
    location_bytes=PROJECTED_LOCATION_BYTES,
):
    """
    Project the on-SSD size of the exact-match index of a large reference.

    Each distinct k-mer costs a comparator-width fingerprint, each position a
    location. The raw-k-mer figure replaces the fingerprint with the packed
    k-mer itself.

    Args:
        reference_bases (int): Usable reference positions.
        read_len (int): k-mer length.
        distinct_fraction (float): Share of positions holding a distinct k-mer.
        fingerprint_bytes (int): Stored fingerprint width.
        location_bytes (int): Stored location width.

    Returns:
        :py:class:`SkIndexSize`

    """
    if not 0.0 < distinct_fraction <= 1.0:
        raise ValueError("distinct_fraction must be in (0, 1]")
    positions = max(0, reference_bases - read_len + 1)
    entries = int(round(positions * distinct_fraction))
    locations = positions * location_bytes
    return SkIndexSize(
        entries=entries,
        fingerprint_bytes=entries * fingerprint_bytes + locations,
        raw_kmer_bytes=entries * ((read_len + 3) // 4) + locations,
    )
