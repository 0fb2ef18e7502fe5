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

"""Exact-match filtering of a whole read set, and the decision stream codec."""

import struct

from genstore.emfilter.merge import (
    DEFAULT_PARTITIONS,
    EmDecision,
    EmStats,
    em_filter_partitioned,
)
from genstore.errors import ParseError
from genstore.index.srtable import build_srtable
from genstore.modes import EmVerdict

_RECORD = struct.Struct("<QBI")
_LOCATION = struct.Struct("<Q")


def em_filter_reads(
    reads,
    skindex,
    srtable=None,
    emit_locations=False,
    partitions=DEFAULT_PARTITIONS,
    threads=1,
    batch_entries=None,
):
    """
    Run the exact-match filter on a read set.

    Reads holding ambiguous bases skip the scan and are forwarded.

    Args:
        reads (:py:class:`genstore.seqio.ReadSet`): The reads, all of one length.
        skindex (:py:class:`genstore.index.SkIndex`): The reference k-mer index.
        srtable (:py:class:`genstore.index.SrTable`): A table prebuilt from ``reads``;
            built on the fly, with the strand mode of ``skindex``, when omitted.
        emit_locations (bool): Attach exact-match locations.
        partitions (int): Fingerprint ranges scanned independently.
        threads (int): Concurrent range scanners.
        batch_entries (int): Entries per fetched batch.

    Returns:
        (list, :py:class:`genstore.emfilter.EmStats`): decisions in read id order
        and the counters, ambiguous reads included.

    """
    if srtable is None:
        srtable = build_srtable(reads, canonical=skindex.canonical)
    decisions, stats = em_filter_partitioned(
        srtable,
        skindex,
        partitions=partitions,
        threads=threads,
        emit_locations=emit_locations,
        batch_entries=batch_entries,
    )
    bypassed = [
        EmDecision(read.id, EmVerdict.FORWARD) for read in reads if read.has_ambiguous
    ]
    stats = stats + EmStats(reads_total=len(bypassed), reads_forwarded=len(bypassed))
    return sorted(decisions + bypassed, key=lambda decision: decision.read_id), stats


def write_em_decisions(decisions, stream):
    """Write one binary record per decision: id, verdict, location count, locations."""
    for decision in decisions:
        stream.write(
            _RECORD.pack(decision.read_id, int(decision.verdict), len(decision.locations))
        )
        for location in decision.locations:
            stream.write(_LOCATION.pack(location))


def read_em_decisions(stream):
    """Inverse of :py:func:`write_em_decisions`."""
    data = stream.read()
    decisions, offset = [], 0
    while offset < len(data):
        if offset + _RECORD.size > len(data):
            raise ParseError("truncated decision record", len(decisions))
        read_id, verdict, count = _RECORD.unpack_from(data, offset)
        offset += _RECORD.size
        end = offset + count * _LOCATION.size
        if end > len(data):
            raise ParseError("truncated location list", len(decisions))
        locations = struct.unpack_from(f"<{count}Q", data, offset)
        offset = end
        decisions.append(EmDecision(read_id, EmVerdict(verdict), tuple(locations)))
    return decisions
