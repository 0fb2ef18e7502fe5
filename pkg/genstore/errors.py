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

"""
Errors raised by GenStore.

Every concrete error is also a :py:class:`ValueError`, so callers catching
``ValueError`` around parameter validation keep working.
"""


class GenStoreError(Exception):
    """Root of every error raised by the package."""


class ParseError(GenStoreError, ValueError):
    """A FASTA/FASTQ record could not be parsed."""

    def __init__(self, message, record_index=None):
        """
        Args:
            message (str): What went wrong.
            record_index (int): 0-based index of the offending record, if known.
        """
        if record_index is not None:
            message = f"record {record_index}: {message}"
        super().__init__(message)
        self.record_index = record_index


class ReadLengthError(GenStoreError, ValueError):
    """A read does not share the length of the first read of its set."""

    def __init__(self, read_id, length, expected):
        super().__init__(
            f"read {read_id} has length {length}, expected {expected} "
            "(exact-match filtering needs fixed-length reads)"
        )
        self.read_id = read_id


class UnsortedInputError(GenStoreError, ValueError):
    """A stream that must be sorted was found out of order."""

    def __init__(self, what, index):
        super().__init__(f"{what} is not sorted at index {index}")
        self.index = index


class IndexMismatchError(GenStoreError, ValueError):
    """The structures handed to a filter were not built for each other."""


class CapacityError(GenStoreError, ValueError):
    """A structure does not fit the modelled SSD DRAM."""


class ConfigError(GenStoreError, ValueError):
    """An unknown preset name or a malformed configuration file."""


class OracleLimitError(GenStoreError, ValueError):
    """A brute-force oracle was asked for more than it is allowed to do."""


class IndexFormatError(GenStoreError, ValueError):
    """Base class of binary index decoding errors. ``code`` identifies the subclass."""

    code = 10


class BadMagicError(IndexFormatError):
    """The file does not start with the index magic."""

    code = 11


class VersionMismatchError(IndexFormatError):
    """The file was written by an incompatible format version."""

    code = 12


class TruncatedIndexError(IndexFormatError):
    """The file ends before its declared contents."""

    code = 13


class ChecksumError(IndexFormatError):
    """The body checksum does not match the trailer."""

    code = 14


class IndexKindError(IndexFormatError):
    """The file holds a different index kind than requested, or an unknown one."""

    code = 15


class CorruptIndexError(IndexFormatError):
    """Header fields and section sizes disagree."""

    code = 16
