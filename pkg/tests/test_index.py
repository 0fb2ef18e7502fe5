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

"""Tests for :py:mod:`genstore.index`."""

import numpy as np
import pytest

from genstore.errors import (
    BadMagicError,
    ChecksumError,
    CorruptIndexError,
    IndexFormatError,
    IndexKindError,
    TruncatedIndexError,
    VersionMismatchError,
)
from genstore.index import (
    HUMAN_REFERENCE_BASES,
    IndexParams,
    build_kmer_index,
    build_skindex,
    build_srtable,
    dumps,
    fingerprint,
    hash64,
    load_index,
    loads,
    save_index,
    skindex_size_estimate,
    unpack_location,
)
from genstore.index.hashing import join_fingerprint, split_fingerprint
from genstore.modes import IndexKind
from genstore.refkit import naive_exact_match, naive_reference_minimizers
from genstore.seqio import Read, ReadSet, ReferenceGenome
from genstore.synth import gen_reference


def test_hash64_known_values():
    assert hash64(0) == 8633297058295171728
    assert hash64(1) == 6614235796240398542


def test_fingerprint_known_values():
    read = Read.from_text(0, "ACGT" * 37)
    assert fingerprint(read.packed, read.length) == 196150762556333637289537661621232593078
    assert fingerprint(b"\x1b", 4) == 114407063630836746751790585606073790601


def test_fingerprint_is_seeded_with_length():
    # "A" and "AAAA" pack to the same byte
    assert fingerprint(b"\x00", 1) != fingerprint(b"\x00", 4)


def test_fingerprint_halves():
    value = fingerprint(b"\x1b", 4)
    assert join_fingerprint(*split_fingerprint(value)) == value


def test_skindex_locations_match_brute_force():
    ref = gen_reference(5000, seed=3)
    index = build_skindex(ref, 20)
    assert index.first_unsorted(strict=True) is None
    assert index.location_count == ref.length - 20 + 1
    text = ref.sequence
    for i in range(0, len(index), 97):
        locations = index.locations_of(i).tolist()
        kmer = text[locations[0] : locations[0] + 20]
        assert list(naive_exact_match(kmer, text)) == locations


def test_skindex_skips_boundaries_and_ambiguous_bases():
    ref = ReferenceGenome.from_records([("a", "ACGTAC"), ("b", "GGNTTT")])
    index = build_skindex(ref, 3)
    starts = sorted(
        loc for i in range(len(index)) for loc in index.locations_of(i).tolist()
    )
    assert starts == [0, 1, 2, 3, 9]


def test_skindex_threads_do_not_change_result():
    ref = gen_reference(20_000, seed=5)
    assert build_skindex(ref, 50, threads=1) == build_skindex(ref, 50, threads=3)


def test_skindex_rejects_too_long_reads():
    with pytest.raises(ValueError):
        build_skindex(gen_reference(10, seed=0), 11)


def test_srtable_sorted_and_skips_ambiguous_reads():
    reads = ReadSet.from_sequences(["ACGTAC", "ACGNAC", "TTTTTT", "ACGTAC"])
    table = build_srtable(reads)
    assert len(table) == 3
    assert table.first_unsorted() is None
    assert sorted(table.read_ids.tolist()) == [0, 2, 3]


def test_kmer_index_matches_naive_table():
    ref = gen_reference(20_000, seed=9)
    params = IndexParams(k=15, w=10, max_locations=495)
    index = build_kmer_index(ref, params)
    table = naive_reference_minimizers(ref, 15, 10, 495)
    assert len(index) == len(table)
    for value, locations in list(table.items())[::50]:
        found = [unpack_location(loc) for loc in index.lookup(value).tolist()]
        assert [tuple(loc) for loc in found] == locations


def test_kmer_index_drops_frequent_minimizers():
    ref = ReferenceGenome.from_records([("rep", "ACGTTGCAAC" * 200)])
    index = build_kmer_index(ref, IndexParams(k=15, w=10, max_locations=5))
    assert len(index) == 0
    assert index.lookup(hash64(0)).size == 0


def test_skindex_size_projection():
    size = skindex_size_estimate()
    assert size.entries == HUMAN_REFERENCE_BASES - 149
    assert size.raw_kmer_bytes > size.fingerprint_bytes
    assert size.reduction > 2


@pytest.fixture
def serialized(small_reference):
    return dumps(build_skindex(small_reference, 150))


def test_serialization_is_stable(tmp_path, small_reference, kmer_index):
    for structure in (build_skindex(small_reference, 150), kmer_index):
        path = tmp_path / "index.gsi"
        save_index(structure, path)
        assert load_index(path) == structure
        assert dumps(load_index(path)) == dumps(structure)


def test_serialization_of_read_table(short_reads):
    table = build_srtable(short_reads)
    assert loads(dumps(table), kind=IndexKind.SRTABLE) == table


def test_bad_magic(serialized):
    with pytest.raises(BadMagicError) as error:
        loads(b"XX" + serialized[2:])
    assert error.value.code == 11


def test_version_mismatch(serialized):
    data = bytearray(serialized)
    data[6] = 9
    with pytest.raises(VersionMismatchError):
        loads(bytes(data))


def test_checksum_mismatch(serialized):
    data = bytearray(serialized)
    data[-1] ^= 0xFF
    with pytest.raises(ChecksumError):
        loads(bytes(data))


def _small_structures():
    ref = gen_reference(400, seed=3)
    return [
        build_srtable(ReadSet.from_sequences(["ACGTA", "CCGTA", "GGGTA"])),
        build_skindex(ref, 20),
        build_kmer_index(ref, IndexParams(k=11, w=5)),
    ]


def test_header_layout():
    table = build_srtable(ReadSet.from_sequences(["ACGTA", "CCGTA", "GGGTA"]))
    data = dumps(table)
    assert data[:33] == (
        b"GSIDX\x00\x02\x00"
        + b"\x01"
        + b"\x05\x00\x00\x00"
        + b"\x00\x00\x00\x00"
        + b"\x00\x00\x00\x00"
        + b"\x05\x00\x00\x00"
        + b"\x03\x00\x00\x00\x00\x00\x00\x00"
    )
    # first section length: three u64 fingerprint halves
    assert data[33:41] == b"\x18\x00\x00\x00\x00\x00\x00\x00"


def test_truncated_file():
    for structure in _small_structures():
        data = dumps(structure)
        for cut in sorted({1, 2, 5, 7, 8, 9, 16, 40, len(data) - 34, len(data) - 8}):
            with pytest.raises(TruncatedIndexError):
                loads(data[:-cut])
        with pytest.raises(TruncatedIndexError):
            loads(data[:20])


def test_trailing_bytes(serialized):
    with pytest.raises(ChecksumError):
        loads(serialized + b"\0" * 8)


def test_header_count_must_match_sections():
    for structure in _small_structures():
        data = bytearray(dumps(structure))
        count = int.from_bytes(data[25:33], "little")
        data[25:33] = (count + 1).to_bytes(8, "little")
        with pytest.raises(CorruptIndexError):
            loads(bytes(data))


def test_wrong_kind(serialized):
    with pytest.raises(IndexKindError) as error:
        loads(serialized, kind=IndexKind.KMER_INDEX)
    assert isinstance(error.value, ValueError)


def test_distinct_error_codes():
    codes = {cls.code for cls in IndexFormatError.__subclasses__()}
    assert len(codes) == len(IndexFormatError.__subclasses__())
    assert np.all(np.array(sorted(codes)) > IndexFormatError.code)
