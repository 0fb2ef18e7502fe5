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

"""Various modalities used to configure and report GenStore behaviours."""

from enum import Enum, IntEnum


class FilterMode(Enum):
    """Which in-storage filter a pipeline runs.

    ``EM`` removes reads that occur verbatim in the reference, ``NM`` removes
    reads that would not align at all."""

    EM = "em"
    NM = "nm"


class IndexKind(IntEnum):
    """Kind byte written in the header of every binary index file."""

    SRTABLE = 1
    SKINDEX = 2
    KMER_INDEX = 3


class EmVerdict(IntEnum):
    """Outcome of the exact-match filter for a single read."""

    FORWARD = 0
    EXACT_MATCH = 1


class GateVerdict(IntEnum):
    """Outcome of the seed-count gate."""

    FILTER_LOW_SEEDS = 0
    CHAIN = 1
    FORWARD_MANY_SEEDS = 2


class NmVerdict(IntEnum):
    """Outcome of the non-matching filter for a single read."""

    FILTER_LOW_SEEDS = 0
    FILTER_LOW_CHAIN = 1
    FORWARD_MANY_SEEDS = 2
    FORWARD_CHAINED = 3

    @property
    def forwarded(self):
        """Whether the read leaves the SSD."""
        return self in (NmVerdict.FORWARD_MANY_SEEDS, NmVerdict.FORWARD_CHAINED)


class IoPath(Enum):
    """Where a byte stream travels: inside the SSD or over the host link."""

    INTERNAL = "internal"
    EXTERNAL = "external"


class HostKind(Enum):
    """The read mapper running on the host, modelled as a throughput."""

    SOFTWARE = "software"
    HW_SHORT = "hw-short"
    HW_LONG = "hw-long"
