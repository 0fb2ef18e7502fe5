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
Minimizer hash table used for seed finding.

Every bucket holds at most one minimizer: the table is open addressed with
linear probing and its capacity is the next power of two not smaller than
twice the number of stored minimizers. Keys are compared exactly, so a
lookup never returns the locations of another minimizer.

A location packs the reference offset of the last base of the k-mer and the
strand its canonical form was taken from: ``(end << 1) | strand``.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from genstore.index.hashing import canonical_kmers, hash64_array
from genstore.index.minimizer import window_minimizers

logger = logging.getLogger(__name__)


def table_capacity(distinct):
    """Next power of two not smaller than ``2 * distinct``."""
    capacity = 1
    while capacity < 2 * distinct:
        capacity <<= 1
    return capacity


def unpack_location(location):
    """``(end, strand)`` of a packed location."""
    location = int(location)
    return location >> 1, location & 1


@dataclass(frozen=True, eq=False)
class KmerIndex:
    """
    Minimizer to reference locations table.

    ``locations[offsets[s]:offsets[s + 1]]`` belong to the minimizer in slot
    ``s``; empty slots own empty ranges.
    """

    k: int
    w: int
    max_locations: int
    keys: np.ndarray
    occupied: np.ndarray
    offsets: np.ndarray
    locations: np.ndarray

    @property
    def capacity(self):
        return len(self.keys)

    def __len__(self):
        return int(np.count_nonzero(self.occupied))

    @cached_property
    def _probe_keys(self):
        return [
            int(key) if used else None
            for key, used in zip(self.keys.tolist(), self.occupied.tolist())
        ]

    def slot(self, minimizer_hash):
        """Bucket holding ``minimizer_hash``, or :py:obj:`None`."""
        keys = self._probe_keys
        mask = len(keys) - 1
        slot = int(minimizer_hash) & mask
        while keys[slot] is not None:
            if keys[slot] == minimizer_hash:
                return slot
            slot = (slot + 1) & mask
        return None

    def __contains__(self, minimizer_hash):
        return self.slot(minimizer_hash) is not None

    def lookup(self, minimizer_hash):
        """
        Packed locations of a minimizer.

        Args:
            minimizer_hash (int): The minimizer's hash.

        Returns:
            :py:class:`numpy.ndarray`: ``uint64`` packed locations, empty when absent.

        """
        slot = self.slot(minimizer_hash)
        if slot is None:
            return self.locations[:0]
        return self.locations[int(self.offsets[slot]) : int(self.offsets[slot + 1])]

    def minimizer_hashes(self):
        """Stored minimizers in increasing order."""
        return np.sort(self.keys[self.occupied])

    @property
    def nbytes(self):
        """Resident size: keys, occupancy, offsets and locations."""
        return self.capacity * (8 + 1 + 8) + 8 + 8 * len(self.locations)

    def __eq__(self, other):
        if not isinstance(other, KmerIndex):
            return NotImplemented
        return (self.k, self.w, self.max_locations) == (
            other.k,
            other.w,
            other.max_locations,
        ) and all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ("keys", "occupied", "offsets", "locations")
        )


def reference_minimizers(ref, k, w):
    """
    Minimizers of every record of a reference long enough to hold a full window.

    Returns:
        (:py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`):
        hashes, reference end offsets and strands.

    """
    span = k + w - 1
    mask = ref.kmer_mask(k)
    values, strands = canonical_kmers(ref.codes, k)
    hashes = hash64_array(values)
    found = []
    for _, start, end in ref.records():
        if end - start < span:
            continue
        stop = end - k + 1
        picks = start + window_minimizers(hashes[start:stop], mask[start:stop], w)
        found.append(picks)
    if not found:
        empty = np.zeros(0, dtype=np.int64)
        return hashes[empty], empty, strands[empty]
    picks = np.concatenate(found)
    return hashes[picks], picks + (k - 1), strands[picks]


def build_kmer_index(ref, params):
    """
    Build the minimizer index of a reference.

    Minimizers found at more than ``params.max_locations`` positions are left out
    altogether. The reference sequence itself is not kept.

    Args:
        ref (:py:class:`genstore.seqio.ReferenceGenome`): The reference.
        params (:py:class:`genstore.index.IndexParams`): ``k``, ``w`` and ``max_locations``.

    Returns:
        :py:class:`KmerIndex`

    """
    hashes, ends, strands = reference_minimizers(ref, params.k, params.w)
    order = np.lexsort((ends, hashes))
    hashes = hashes[order]
    packed = (ends[order].astype(np.uint64) << np.uint64(1)) | strands[order].astype(np.uint64)

    distinct, heads, counts = np.unique(hashes, return_index=True, return_counts=True)
    keep = counts <= params.max_locations
    dropped = int(np.count_nonzero(~keep))
    distinct, heads, counts = distinct[keep], heads[keep], counts[keep]

    capacity = table_capacity(len(distinct))
    mask = capacity - 1
    used = [False] * capacity
    slots = np.zeros(len(distinct), dtype=np.int64)
    for i, key in enumerate(distinct.tolist()):
        slot = key & mask
        while used[slot]:
            slot = (slot + 1) & mask
        used[slot] = True
        slots[i] = slot

    keys = np.zeros(capacity, dtype=np.uint64)
    keys[slots] = distinct
    occupied = np.array(used, dtype=bool)
    sizes = np.zeros(capacity, dtype=np.int64)
    sizes[slots] = counts
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(np.uint64)
    by_slot = np.argsort(slots, kind="stable")
    locations = (
        np.concatenate([packed[heads[i] : heads[i] + counts[i]] for i in by_slot])
        if len(by_slot)
        else np.zeros(0, dtype=np.uint64)
    )

    if len(distinct) == 0:
        logger.warning(
            "KmerIndex is empty (k=%d, w=%d, max_locations=%d)",
            params.k,
            params.w,
            params.max_locations,
        )
    logger.info(
        "KmerIndex: %d minimizers in %d buckets, %d dropped above %d locations",
        len(distinct),
        capacity,
        dropped,
        params.max_locations,
    )
    return KmerIndex(
        k=params.k,
        w=params.w,
        max_locations=params.max_locations,
        keys=keys,
        occupied=occupied,
        offsets=offsets,
        locations=locations.astype(np.uint64),
    )
