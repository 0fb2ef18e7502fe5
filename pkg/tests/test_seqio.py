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

"""Tests for :py:mod:`genstore.seqio`."""

import gzip
import io

import numpy as np
import pytest

from genstore.errors import ParseError
from genstore.seqio import (
    Read,
    ReadSet,
    ReferenceGenome,
    decode,
    encode,
    pack,
    parse_fasta,
    parse_fastq,
    revcomp,
    unpack,
    write_fasta,
    write_fastq,
)

FASTQ = b"@r0 first\nACGTNACGT\n+\nIIIIIIIII\n@r1\nTTTTGGGG\n+\nIIIIIIII\n"


def test_pack_unpack_keeps_codes():
    codes = np.array([0, 1, 2, 3, 3, 2, 1], dtype=np.uint8)
    packed = pack(codes)
    assert len(packed) == 2
    assert np.array_equal(unpack(packed, len(codes)), codes)


def test_encode_flags_ambiguous_symbols():
    codes, ambiguous = encode(b"ACNGT")
    assert ambiguous.tolist() == [2]
    assert decode(codes, ambiguous) == "ACNGT"


def test_revcomp_of_packed_sequence():
    read = Read.from_text(0, "AACGT")
    rc = revcomp(read.packed, read.length)
    assert decode(unpack(rc, 5)) == "ACGTT"


def test_parse_fastq_numbers_reads_in_file_order():
    reads = parse_fastq(io.BytesIO(FASTQ))
    assert [read.id for read in reads] == [0, 1]
    assert reads[0].header == "r0 first"
    assert reads[0].has_ambiguous
    assert reads[0].sequence == "ACGTNACGT"
    assert reads[1].sequence == "TTTTGGGG"


def test_parse_fastq_small_chunks_and_gzip():
    expected = parse_fastq(io.BytesIO(FASTQ))
    assert parse_fastq(io.BytesIO(FASTQ), chunk_size=3) == expected
    assert parse_fastq(io.BytesIO(gzip.compress(FASTQ))) == expected


def test_parse_fastq_empty_file():
    assert len(parse_fastq(io.BytesIO(b""))) == 0


@pytest.mark.parametrize(
    "data",
    [
        b"r0\nACGT\n+\nIIII\n",
        b"@r0\nACGT\n-\nIIII\n",
        b"@r0\nACGT\n+\nIII\n",
        b"@r0\nACGT\n+\n",
    ],
)
def test_parse_fastq_rejects_malformed_records(data):
    with pytest.raises(ParseError) as error:
        parse_fastq(io.BytesIO(data))
    assert error.value.record_index == 0


def test_parse_fasta_concatenates_records():
    ref = parse_fasta(io.BytesIO(b">chr1 desc\nACGT\nAC\n>chr2\nGGNN\n"))
    assert ref.length == 10
    assert ref.boundaries == (6,)
    assert ref.record_names == ("chr1", "chr2")
    assert ref.record_sequences() == ["ACGTAC", "GGNN"]
    assert not ref.kmer_mask(3)[5]


def test_parse_fasta_requires_header():
    with pytest.raises(ParseError):
        parse_fasta(io.BytesIO(b"ACGT\n"))


def test_fastq_written_back_keeps_headers_and_ambiguity():
    reads = parse_fastq(io.BytesIO(FASTQ))
    out = io.BytesIO()
    write_fastq(reads, out)
    assert out.getvalue() == FASTQ


def test_fasta_written_back_wraps_lines():
    ref = ReferenceGenome.from_records([("chr", "ACGTACGTAC")])
    out = io.BytesIO()
    write_fasta(ref, out, width=4, header_suffix="v1")
    assert out.getvalue() == b">chr v1\nACGT\nACGT\nAC\n"


@pytest.mark.parametrize(
    "data",
    [
        b"@r1 x\nACGT\n+\nIIII\n",
        "@réad1 lane=2\nACGT\n+\nIIII\n".encode(),
        b"@r\xff\xfe raw\nACGT\n+\nIIII\n",
    ],
)
def test_fastq_headers_written_back_byte_for_byte(data):
    reads = parse_fastq(io.BytesIO(data))
    out = io.BytesIO()
    write_fastq(reads, out)
    assert out.getvalue() == data


def test_fastq_non_ascii_header_is_text():
    reads = parse_fastq(io.BytesIO("@réad1\nACGT\n+\nIIII\n".encode()))
    assert reads[0].header == "réad1"


@pytest.mark.parametrize(
    "data, name, written",
    [
        (">chré desc\nACGT\n".encode(), "chré", ">chré\nACGT\n".encode()),
        (b">c\xff\nACGT\n", "c\udcff", b">c\xff\nACGT\n"),
    ],
)
def test_fasta_header_bytes_survive(data, name, written):
    ref = parse_fasta(io.BytesIO(data))
    assert ref.record_names == (name,)
    out = io.BytesIO()
    write_fasta(ref, out)
    assert out.getvalue() == written


def test_read_set_sizes():
    reads = ReadSet.from_sequences(["ACGTACGT", "ACG"])
    assert reads.read_length is None
    assert reads.nbytes == (2 + 8) + (1 + 8)
    assert [read.header for read in reads.subset([1])] == ["read1"]
