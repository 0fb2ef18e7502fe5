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
Binary index files.

Layout, all integers little-endian::

    0   magic      b"GSIDX\0" + u16 format version
    8   kind       u8 (1 SRTable, 2 SKIndex, 3 KmerIndex)
    9   params     u32 k, u32 w, u32 max_locations, u32 read_len
    25  count      u64 number of entries
    33  body       four sections: u64 byte length, payload, zero padding to 8 bytes
    -8  checksum   u64 MurmurHash3 of the body

Sections start on 8-byte boundaries of the body. Their length prefixes make
the variable-sized location arrays self-describing; on load every length is
checked against ``count`` and the parameters.

For the exact-match kinds the ``w`` slot records the strand mode
(0 as stored, 1 canonical). Identical structures always serialize to
identical bytes.

>>> _HEADER.size
33
"""

import os
import struct

import mmh3
import numpy as np

from genstore.errors import (
    BadMagicError,
    ChecksumError,
    CorruptIndexError,
    IndexKindError,
    TruncatedIndexError,
    VersionMismatchError,
)
from genstore.index.kmer_index import KmerIndex
from genstore.index.skindex import SkIndex
from genstore.index.srtable import SrTable
from genstore.modes import IndexKind

MAGIC = b"GSIDX\0"
FORMAT_VERSION = 2

_HEADER = struct.Struct("<6sHBIIIIQ")
_U64 = struct.Struct("<Q")


def _checksum(body):
    return mmh3.hash64(body, signed=False)[0]


def _section(array):
    payload = np.ascontiguousarray(array).tobytes()
    padding = (-len(payload)) % 8
    return _U64.pack(len(payload)) + payload + b"\0" * padding


def _kind_of(structure):
    if isinstance(structure, SrTable):
        return IndexKind.SRTABLE
    if isinstance(structure, SkIndex):
        return IndexKind.SKINDEX
    if isinstance(structure, KmerIndex):
        return IndexKind.KMER_INDEX
    raise TypeError(f"cannot serialize {type(structure).__name__}")


def dumps(structure):
    """
    Serialize an index structure.

    Args:
        structure: A :py:class:`SrTable`, :py:class:`SkIndex` or :py:class:`KmerIndex`.

    Returns:
        :py:class:`bytes`

    """
    kind = _kind_of(structure)
    if kind == IndexKind.SRTABLE:
        params = (structure.read_len, int(structure.canonical), 0, structure.read_len)
        count = len(structure)
        arrays = [structure.fp_hi, structure.fp_lo, structure.read_ids, structure.raw]
    elif kind == IndexKind.SKINDEX:
        params = (structure.k, int(structure.canonical), 0, structure.k)
        count = len(structure)
        arrays = [structure.fp_hi, structure.fp_lo, structure.offsets, structure.locations]
    else:
        params = (structure.k, structure.w, structure.max_locations, 0)
        count = len(structure)
        arrays = [
            structure.keys,
            structure.occupied.astype(np.uint8),
            structure.offsets,
            structure.locations,
        ]
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, int(kind), *params, count)
    body = b"".join(_section(array) for array in arrays)
    return header + body + _U64.pack(_checksum(body))


def _sections(body, count):
    arrays, offset = [], 0
    for _ in range(count):
        if offset + 8 > len(body):
            raise TruncatedIndexError("index body ends inside a section header")
        (size,) = _U64.unpack_from(body, offset)
        offset += 8
        end = offset + size + (-size) % 8
        if end > len(body):
            raise TruncatedIndexError(
                f"section of {size} bytes runs past the end of the file"
            )
        arrays.append(body[offset : offset + size])
        offset = end
    if offset != len(body):
        raise ChecksumError("unexpected bytes after the last section")
    return arrays


def _expect_size(name, payload, nbytes):
    if len(payload) != nbytes:
        raise CorruptIndexError(
            f"{name} section holds {len(payload)} bytes, the header implies {nbytes}"
        )


def _u64(name, payload, count):
    _expect_size(name, payload, 8 * count)
    return np.frombuffer(payload, dtype=np.uint64)


def _offsets(payload, slots):
    offsets = _u64("offsets", payload, slots + 1)
    if offsets[0] != 0 or np.any(np.diff(offsets.astype(np.int64)) < 0):
        raise CorruptIndexError("location offsets must start at 0 and never decrease")
    return offsets


def loads(data, kind=None):
    """
    Decode an index structure.

    Args:
        data (bytes): The serialized index.
        kind (:py:class:`genstore.modes.IndexKind`): Expected kind, or :py:obj:`None`
            to accept any.

    Returns:
        The decoded :py:class:`SrTable`, :py:class:`SkIndex` or :py:class:`KmerIndex`.

    Raises:
        :py:class:`genstore.errors.IndexFormatError`: A subclass naming the defect.

    """
    data = bytes(data)
    if data[: len(MAGIC)] != MAGIC[: len(data)]:
        raise BadMagicError("not a GenStore index file")
    if len(data) < _HEADER.size + _U64.size:
        raise TruncatedIndexError(f"index file too short ({len(data)} bytes)")
    _, version, raw_kind, k, w, max_locations, read_len, count = _HEADER.unpack_from(data)
    if version != FORMAT_VERSION:
        raise VersionMismatchError(
            f"index format version {version}, expected {FORMAT_VERSION}"
        )
    try:
        found = IndexKind(raw_kind)
    except ValueError:
        raise IndexKindError(f"unknown index kind {raw_kind}") from None
    if kind is not None and found != kind:
        raise IndexKindError(f"expected {IndexKind(kind).name}, found {found.name}")

    body = data[_HEADER.size : -_U64.size]
    payloads = _sections(body, 4)
    (expected,) = _U64.unpack_from(data, len(data) - _U64.size)
    if _checksum(body) != expected:
        raise ChecksumError("index body checksum mismatch")

    if found == IndexKind.SRTABLE:
        hi, lo, ids, raw = payloads
        width = (read_len + 3) // 4
        _expect_size("raw", raw, count * width)
        return SrTable(
            fp_hi=_u64("fp_hi", hi, count),
            fp_lo=_u64("fp_lo", lo, count),
            read_len=read_len,
            canonical=bool(w),
            read_ids=_u64("read_ids", ids, count),
            raw=np.frombuffer(raw, dtype=np.uint8).reshape(count, width),
        )
    if found == IndexKind.SKINDEX:
        hi, lo, offsets, locations = payloads
        offsets = _offsets(offsets, count)
        return SkIndex(
            fp_hi=_u64("fp_hi", hi, count),
            fp_lo=_u64("fp_lo", lo, count),
            k=k,
            canonical=bool(w),
            offsets=offsets,
            locations=_u64("locations", locations, int(offsets[-1])),
        )
    keys, occupied, offsets, locations = payloads
    capacity = len(occupied)
    occupied = np.frombuffer(occupied, dtype=np.uint8).astype(bool)
    if int(np.count_nonzero(occupied)) != count:
        raise CorruptIndexError(
            f"{np.count_nonzero(occupied)} occupied slots, the header declares {count}"
        )
    offsets = _offsets(offsets, capacity)
    return KmerIndex(
        k=k,
        w=w,
        max_locations=max_locations,
        keys=_u64("keys", keys, capacity),
        occupied=occupied,
        offsets=offsets,
        locations=_u64("locations", locations, int(offsets[-1])),
    )


def save_index(structure, path):
    """Write ``structure`` to ``path``."""
    with open(os.fspath(path), "wb") as stream:
        stream.write(dumps(structure))


def load_index(path, kind=None):
    """Read an index file written by :py:func:`save_index`."""
    with open(os.fspath(path), "rb") as stream:
        return loads(stream.read(), kind=kind)
