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
FASTA and FASTQ reading and writing.

Parsers consume any binary stream in fixed-size chunks, so the result never
depends on how the bytes are split, and transparently decompress gzip input
(detected by its magic bytes).

.. testcode::

    import io
    from genstore.seqio import parse_fastq

    reads = parse_fastq(io.BytesIO(b"@r0\nACGN\n+\nIIII\n"))
    print(len(reads), reads[0].length, reads[0].has_ambiguous)

.. testoutput::

    1 4 True
"""

import gzip
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from genstore.errors import ParseError
from genstore.seqio.encoding import decode, encode, pack, packed_size, unpack

logger = logging.getLogger(__name__)

GZIP_MAGIC = b"\x1f\x8b"
# header bytes round-trip through text unchanged, whatever their encoding
HEADER_ENCODING = "utf-8"
HEADER_ERRORS = "surrogateescape"
DEFAULT_CHUNK_SIZE = 1 << 16
# bytes of read identifier carried next to every packed read
READ_ID_BYTES = 8


def decode_header(raw):
    """Header bytes as text; :py:func:`encode_header` restores the exact bytes."""
    return raw.decode(HEADER_ENCODING, HEADER_ERRORS)


def encode_header(text):
    return text.encode(HEADER_ENCODING, HEADER_ERRORS)


def kmer_mask(length, k, ambiguous=(), boundaries=()):
    """
    Valid k-mer start positions of a sequence.

    Args:
        length (int): Sequence length.
        k (int): The k-mer length.
        ambiguous: Offsets of ambiguous bases.
        boundaries: Offsets where a new record starts.

    Returns:
        :py:class:`numpy.ndarray`: Boolean array of length ``max(0, length - k + 1)``,
        ``True`` where ``[p, p + k)`` lies in one record and holds no ambiguous base.

    """
    count = length - k + 1
    if k <= 0 or count <= 0:
        return np.zeros(0, dtype=bool)
    flags = np.zeros(length, dtype=np.int64)
    flags[np.asarray(ambiguous, dtype=np.int64)] = 1
    prefix = np.concatenate([[0], np.cumsum(flags)])
    mask = (prefix[k:] - prefix[:count]) == 0
    for boundary in boundaries:
        mask[max(0, boundary - k + 1) : boundary] = False
    return mask


@dataclass(frozen=True)
class Read:
    """A sequenced fragment, 2-bit packed, with its position in the input file."""

    id: int
    packed: bytes
    length: int
    ambiguous: Tuple[int, ...] = ()
    header: str = ""
    quality: Optional[bytes] = field(default=None, repr=False)

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError(f"read {self.id} is empty")
        if len(self.packed) != packed_size(self.length):
            raise ValueError(
                f"read {self.id}: {len(self.packed)} packed bytes for {self.length} bases"
            )

    @classmethod
    def from_text(cls, read_id, text, header="", quality=None):
        """
        Build a read from its raw sequence.

        Args:
            read_id (int): The identifier, unique within its :py:class:`ReadSet`.
            text (bytes | str): The bases. Symbols outside ``ACGT`` are stored as ``A``
                and remembered.
            header (str): The original header, without its leading marker.
            quality (bytes): The quality string, only kept for re-emission.

        Returns:
            :py:class:`Read`

        """
        if isinstance(text, str):
            text = text.encode("ascii")
        codes, ambiguous = encode(text)
        return cls(
            id=read_id,
            packed=pack(codes),
            length=len(codes),
            ambiguous=tuple(int(p) for p in ambiguous),
            header=header,
            quality=quality,
        )

    @property
    def has_ambiguous(self):
        """True when the original record held any non-ACGT symbol."""
        return bool(self.ambiguous)

    @property
    def codes(self):
        """The bases as a ``uint8`` array of 2-bit codes."""
        return unpack(self.packed, self.length)

    @property
    def sequence(self):
        """The bases as text, with ``N`` restored at ambiguous positions."""
        return decode(self.codes, self.ambiguous)

    def kmer_mask(self, k):
        """Valid k-mer starts: those not overlapping an ambiguous base."""
        return kmer_mask(self.length, k, self.ambiguous)

    @property
    def nbytes(self):
        """Bytes this read occupies when moved: packed bases plus identifier."""
        return len(self.packed) + READ_ID_BYTES


@dataclass(frozen=True)
class ReadSet:
    """An ordered, immutable collection of reads."""

    reads: Tuple[Read, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "reads", tuple(self.reads))

    @classmethod
    def from_sequences(cls, sequences):
        """Build a set from plain strings, numbering reads from 0."""
        return cls(
            tuple(
                Read.from_text(i, seq, header=f"read{i}")
                for i, seq in enumerate(sequences)
            )
        )

    def __len__(self):
        return len(self.reads)

    def __iter__(self):
        return iter(self.reads)

    def __getitem__(self, item):
        return self.reads[item]

    @property
    def read_length(self):
        """The shared read length, or :py:obj:`None` for empty or mixed sets."""
        lengths = {read.length for read in self.reads}
        return lengths.pop() if len(lengths) == 1 else None

    @property
    def total_bases(self):
        return sum(read.length for read in self.reads)

    @property
    def nbytes(self):
        """Bytes of the whole set as moved over a link (see :py:attr:`Read.nbytes`)."""
        return sum(read.nbytes for read in self.reads)

    def subset(self, read_ids):
        """The reads whose id is in ``read_ids``, in input order."""
        wanted = set(read_ids)
        return ReadSet(tuple(read for read in self.reads if read.id in wanted))


@dataclass(frozen=True, eq=False)
class ReferenceGenome:
    """
    A reference genome, all records concatenated.

    ``boundaries`` holds the start offset of every record but the first and
    ``ambiguous`` the offsets of symbols that were replaced by ``A``; k-mers
    spanning either are excluded from every index.
    """

    name: str
    packed: bytes
    length: int
    boundaries: Tuple[int, ...] = ()
    record_names: Tuple[str, ...] = ()
    ambiguous: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))

    @classmethod
    def from_records(cls, records):
        """
        Concatenate ``(name, sequence)`` records into one reference.

        Args:
            records: Iterable of ``(str, bytes | str)`` pairs.

        Returns:
            :py:class:`ReferenceGenome`

        """
        names, all_codes, all_ambiguous, boundaries = [], [], [], []
        offset = 0
        for name, text in records:
            if isinstance(text, str):
                text = text.encode("ascii")
            codes, ambiguous = encode(text)
            if names:
                boundaries.append(offset)
            names.append(name)
            all_codes.append(codes)
            all_ambiguous.append(ambiguous + offset)
            offset += len(codes)
        if not names:
            raise ValueError("a reference needs at least one record")
        codes = np.concatenate(all_codes) if all_codes else np.zeros(0, np.uint8)
        return cls(
            name=names[0],
            packed=pack(codes),
            length=int(offset),
            boundaries=tuple(int(b) for b in boundaries),
            record_names=tuple(names),
            ambiguous=np.concatenate(all_ambiguous).astype(np.int64),
        )

    @cached_property
    def codes(self):
        """The bases as a ``uint8`` array of 2-bit codes."""
        return unpack(self.packed, self.length)

    @property
    def nbytes(self):
        return len(self.packed)

    @property
    def sequence(self):
        return decode(self.codes, self.ambiguous)

    def records(self):
        """Yield ``(name, start, end)`` for every record."""
        starts = (0,) + self.boundaries
        ends = self.boundaries + (self.length,)
        names = self.record_names or (self.name,)
        yield from zip(names, starts, ends)

    def record_sequences(self):
        """The text of every record, ``N`` restored."""
        text = self.sequence
        return [text[start:end] for _, start, end in self.records()]

    def kmer_mask(self, k):
        """Valid k-mer starts: inside one record and free of ambiguous bases."""
        return kmer_mask(self.length, k, self.ambiguous, self.boundaries)


class _PrefixedReader:
    """Replays bytes already consumed from a stream, then reads the stream."""

    def __init__(self, prefix, stream):
        self._prefix = prefix
        self._stream = stream

    def read(self, size=-1):
        if self._prefix:
            if size is None or size < 0:
                data, self._prefix = self._prefix + self._stream.read(), b""
                return data
            data, self._prefix = self._prefix[:size], self._prefix[size:]
            if len(data) < size:
                data += self._stream.read(size - len(data))
            return data
        return self._stream.read(size)


def _decompressing(stream):
    head = b""
    while len(head) < len(GZIP_MAGIC):
        more = stream.read(len(GZIP_MAGIC) - len(head))
        if not more:
            break
        head += more
    reader = _PrefixedReader(head, stream)
    if head == GZIP_MAGIC:
        return gzip.GzipFile(fileobj=reader, mode="rb")
    return reader


def open_stream(source):
    """
    Open a path for parsing.

    Args:
        source (str | os.PathLike): A plain or gzip-compressed file.

    Returns:
        A binary file object. Missing files raise :py:class:`FileNotFoundError`.

    """
    return open(os.fspath(source), "rb")


def iter_lines(stream, chunk_size=DEFAULT_CHUNK_SIZE):
    """Yield lines of a binary stream without line terminators, reading ``chunk_size`` at a time."""
    if chunk_size <= 0:
        raise ValueError("chunk_size must be positive")
    source = _decompressing(stream)
    pending = b""
    while True:
        chunk = source.read(chunk_size)
        if not chunk:
            break
        pending += chunk
        lines = pending.split(b"\n")
        pending = lines.pop()
        for line in lines:
            yield line.rstrip(b"\r")
    if pending:
        yield pending.rstrip(b"\r")


def parse_fastq(stream, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    Parse 4-line FASTQ records.

    Args:
        stream: Binary stream, plain or gzip-compressed.
        chunk_size (int): Bytes read per call to ``stream.read``.

    Returns:
        :py:class:`ReadSet`: One read per record, ids in file order from 0.

    Raises:
        :py:class:`genstore.errors.ParseError`: On a malformed record.

    """
    reads = []
    lines = iter_lines(stream, chunk_size)
    for header in lines:
        index = len(reads)
        if not header.strip():
            continue
        if not header.startswith(b"@"):
            raise ParseError("header line must start with '@'", index)
        sequence = next(lines, None)
        separator = next(lines, None)
        quality = next(lines, None)
        if quality is None:
            raise ParseError("truncated record, expected 4 lines", index)
        if not separator.startswith(b"+"):
            raise ParseError("third line must start with '+'", index)
        if len(sequence) != len(quality):
            raise ParseError(
                f"sequence has {len(sequence)} bases but quality has {len(quality)}",
                index,
            )
        if not sequence:
            raise ParseError("empty sequence", index)
        reads.append(
            Read.from_text(
                index,
                sequence,
                header=decode_header(header[1:]),
                quality=quality,
            )
        )
    logger.debug("parsed %d FASTQ records", len(reads))
    return ReadSet(tuple(reads))


def parse_fasta(stream, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    Parse a single- or multi-record FASTA reference.

    Args:
        stream: Binary stream, plain or gzip-compressed.
        chunk_size (int): Bytes read per call to ``stream.read``.

    Returns:
        :py:class:`ReferenceGenome`

    Raises:
        :py:class:`genstore.errors.ParseError`: When there is no header line.

    """
    records = []
    for line in iter_lines(stream, chunk_size):
        if line.startswith(b">"):
            name = line[1:].split(maxsplit=1)
            records.append((decode_header(name[0]) if name else "", []))
        elif line.strip():
            if not records:
                raise ParseError("sequence before the first '>' header", 0)
            records[-1][1].append(line.strip())
    if not records:
        raise ParseError("no FASTA header line")
    reference = ReferenceGenome.from_records(
        (name, b"".join(pieces)) for name, pieces in records
    )
    logger.debug(
        "parsed reference %s: %d records, %d bases",
        reference.name,
        len(records),
        reference.length,
    )
    return reference


def write_fastq(reads, stream):
    """
    Write reads as FASTQ, keeping original headers and qualities when known.

    Args:
        reads: Iterable of :py:class:`Read`.
        stream: Binary output stream.

    """
    for read in reads:
        header = read.header or f"read{read.id}"
        quality = read.quality if read.quality is not None else b"I" * read.length
        stream.write(b"@" + encode_header(header) + b"\n")
        stream.write(read.sequence.encode("ascii") + b"\n+\n" + quality + b"\n")


def write_fasta(reference, stream, width=60, header_suffix=""):
    """Write every record of ``reference`` wrapped at ``width`` columns."""
    for (name, _, _), text in zip(reference.records(), reference.record_sequences()):
        title = f"{name} {header_suffix}".rstrip()
        stream.write(b">" + encode_header(title) + b"\n")
        for start in range(0, len(text), width):
            stream.write(text[start : start + width].encode("ascii") + b"\n")
