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
Exact-match filtering as a merge-join of two fingerprint-sorted streams.

A single scanner owns one cursor on the sorted read table and one on the
reference k-mer index. Each comparison advances exactly one cursor, so the
scan is linear in the size of both inputs.

.. testcode::

    from genstore.emfilter import em_filter
    from genstore.index import build_skindex, build_srtable
    from genstore.seqio import ReadSet, ReferenceGenome

    ref = ReferenceGenome.from_records([("r", "ACGTACGTAC")])
    reads = ReadSet.from_sequences(["ACGT", "TTTT"])
    decisions, stats = em_filter(
        build_srtable(reads), build_skindex(ref, 4), emit_locations=True
    )
    for decision in sorted(decisions, key=lambda d: d.read_id):
        print(decision.read_id, decision.verdict.name, decision.locations)

.. testoutput::

    0 EXACT_MATCH (0, 4)
    1 FORWARD ()
"""

import logging
from dataclasses import dataclass
from multiprocessing.pool import ThreadPool
from typing import Tuple

from genstore.errors import IndexMismatchError, UnsortedInputError
from genstore.modes import EmVerdict

logger = logging.getLogger(__name__)

DEFAULT_PARTITIONS = 16


@dataclass(frozen=True)
class EmDecision:
    """Verdict for one read; ``locations`` only filled when requested."""

    read_id: int
    verdict: EmVerdict
    locations: Tuple[int, ...] = ()

    @property
    def forwarded(self):
        return self.verdict == EmVerdict.FORWARD


@dataclass(frozen=True)
class EmStats:
    """Counters of one exact-match scan."""

    reads_total: int = 0
    reads_filtered: int = 0
    reads_forwarded: int = 0
    comparator_steps: int = 0

    def __add__(self, other):
        return EmStats(
            reads_total=self.reads_total + other.reads_total,
            reads_filtered=self.reads_filtered + other.reads_filtered,
            reads_forwarded=self.reads_forwarded + other.reads_forwarded,
            comparator_steps=self.comparator_steps + other.comparator_steps,
        )


def _entries(table, batch_entries, name):
    """Yield ``(index, (hi, lo))`` one batch at a time, checking the order on the way."""
    size = len(table)
    step = batch_entries or max(size, 1)
    previous = None
    strict = name == "SKIndex"
    for start in range(0, size, step):
        his = table.fp_hi[start : start + step].tolist()
        los = table.fp_lo[start : start + step].tolist()
        for offset, current in enumerate(zip(his, los)):
            if previous is not None and (
                current < previous or (strict and current == previous)
            ):
                raise UnsortedInputError(name, start + offset)
            previous = current
            yield start + offset, current


def check_compatible(srtable, skindex):
    """Raise :py:class:`genstore.errors.IndexMismatchError` unless both were built for each other."""
    if len(srtable) and srtable.read_len != skindex.k:
        raise IndexMismatchError(
            f"reads of length {srtable.read_len} against an index of {skindex.k}-mers"
        )
    if srtable.canonical != skindex.canonical:
        raise IndexMismatchError("read table and index disagree on strand handling")


def em_filter(srtable, skindex, emit_locations=False, batch_entries=None):
    """
    Classify every read of the table as an exact match or a read to forward.

    Args:
        srtable (:py:class:`genstore.index.SrTable`): Reads sorted by fingerprint.
        skindex (:py:class:`genstore.index.SkIndex`): Reference k-mers sorted by fingerprint.
        emit_locations (bool): Attach the reference locations of exact matches.
        batch_entries (int): Entries fetched per batch from each structure;
            :py:obj:`None` fetches everything at once. It never changes the result.

    Returns:
        (list, :py:class:`EmStats`): decisions in table order and the scan counters.

    Raises:
        :py:class:`genstore.errors.UnsortedInputError`: On an out-of-order entry.
        :py:class:`genstore.errors.IndexMismatchError`: When read and k-mer lengths differ.

    """
    check_compatible(srtable, skindex)
    read_ids = srtable.read_ids.tolist()
    kmers = _entries(skindex, batch_entries, "SKIndex")
    kmer = next(kmers, None)
    decisions = []
    steps = filtered = 0

    for i, fp in _entries(srtable, batch_entries, "SRTable"):
        while kmer is not None and kmer[1] < fp:
            steps += 1
            kmer = next(kmers, None)
        if kmer is not None:
            steps += 1
            if kmer[1] == fp:
                filtered += 1
                locations = (
                    tuple(skindex.locations_of(kmer[0]).tolist()) if emit_locations else ()
                )
                decisions.append(EmDecision(read_ids[i], EmVerdict.EXACT_MATCH, locations))
                continue
        decisions.append(EmDecision(read_ids[i], EmVerdict.FORWARD))

    stats = EmStats(
        reads_total=len(decisions),
        reads_filtered=filtered,
        reads_forwarded=len(decisions) - filtered,
        comparator_steps=steps,
    )
    return decisions, stats


def partition_bounds(srtable, skindex, partitions):
    """
    Split both structures at the same fingerprints.

    Cut points are fingerprints of evenly spaced read table entries, so equal
    fingerprints always land in the same part.

    Returns:
        list: ``(read_start, read_stop, kmer_start, kmer_stop)`` per non-empty part.

    """
    size = len(srtable)
    cuts = sorted(
        {srtable.fingerprint(size * p // partitions) for p in range(1, partitions) if size}
    )
    read_cuts = [0] + [srtable.lower_bound(cut) for cut in cuts] + [size]
    kmer_cuts = [0] + [skindex.lower_bound(cut) for cut in cuts] + [len(skindex)]
    return [
        (read_cuts[p], read_cuts[p + 1], kmer_cuts[p], kmer_cuts[p + 1])
        for p in range(len(read_cuts) - 1)
    ]


def em_filter_partitioned(
    srtable,
    skindex,
    partitions=DEFAULT_PARTITIONS,
    threads=1,
    emit_locations=False,
    batch_entries=None,
):
    """
    :py:func:`em_filter` over fingerprint-range partitions.

    The decisions equal those of the sequential scan for any ``threads``; the
    partition count alone fixes ``comparator_steps``.

    Args:
        srtable (:py:class:`genstore.index.SrTable`): Reads sorted by fingerprint.
        skindex (:py:class:`genstore.index.SkIndex`): Reference k-mers sorted by fingerprint.
        partitions (int): Number of fingerprint ranges.
        threads (int): Workers scanning ranges concurrently.
        emit_locations (bool): Attach the locations of exact matches.
        batch_entries (int): Entries fetched per batch inside each range.

    Returns:
        (list, :py:class:`EmStats`)

    """
    if partitions < 1:
        raise ValueError("partitions must be positive")
    check_compatible(srtable, skindex)
    for table, name, strict in ((srtable, "SRTable", False), (skindex, "SKIndex", True)):
        wrong = table.first_unsorted(strict=strict)
        if wrong is not None:
            raise UnsortedInputError(name, wrong)

    def scan(bounds):
        read_start, read_stop, kmer_start, kmer_stop = bounds
        return em_filter(
            srtable.slice(read_start, read_stop),
            skindex.slice(kmer_start, kmer_stop),
            emit_locations=emit_locations,
            batch_entries=batch_entries,
        )

    parts = partition_bounds(srtable, skindex, partitions)
    if threads > 1 and len(parts) > 1:
        with ThreadPool(threads) as pool:
            results = pool.map(scan, parts)
    else:
        results = [scan(bounds) for bounds in parts]

    decisions, stats = [], EmStats()
    for part_decisions, part_stats in results:
        decisions.extend(part_decisions)
        stats = stats + part_stats
    logger.debug("exact-match scan over %d partitions: %s", len(parts), stats)
    return decisions, stats
