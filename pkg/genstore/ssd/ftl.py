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
Flash translation accounting for the read-only filter structures.

The filter structures are written once and read sequentially, so they are
placed in block sets: one block from every plane of a die, filled die after
die in round-robin order. Mapping a structure only needs one physical
address per block set instead of one entry per logical page.

>>> from genstore.ssd import SsdConfig
>>> config = SsdConfig(channels=16, dies_per_channel=8, external_bw_gbps=7.0)
>>> placement = placement_metadata(30e9, config, block_mb=12)
>>> placement.mapping_entries, placement.metadata_bytes
(1250, 5000)
>>> page_mapping_bytes(30e9)
29296876
"""

import math
from dataclasses import dataclass
from typing import Tuple

from genstore.ssd.config import MB

MAPPING_ENTRY_BYTES = 4
MAPPED_PAGE_BYTES = 4096


@dataclass(frozen=True)
class BlockSetPlacement:
    """
    Where a structure lives and how much mapping metadata it needs.

    Attributes:
        structure_bytes (int): Size of the placed structure.
        block_bytes (int): NAND block size.
        dies_total (int): Dies the structure is spread over.
        set_bytes (int): One block on every plane of a die.
        mapping_entries (int): Block sets used, one mapping entry each.
        metadata_bytes (int): ``mapping_entries`` times the entry size.
        sets_per_die (tuple): Block sets placed on each die.
    """

    structure_bytes: int
    block_bytes: int
    dies_total: int
    set_bytes: int
    mapping_entries: int
    metadata_bytes: int
    sets_per_die: Tuple[int, ...]

    def die_of(self, set_index):
        """Die holding the ``set_index``-th block set of the structure."""
        if not 0 <= set_index < self.mapping_entries:
            raise IndexError(f"block set {set_index} out of range")
        return set_index % self.dies_total


def spread_evenly(count, bins):
    """Round-robin ``count`` items over ``bins``; counts differ by at most one."""
    base, extra = divmod(count, bins)
    return tuple(base + (1 if i < extra else 0) for i in range(bins))


def placement_metadata(structure_bytes, config, block_mb=None):
    """
    Place a structure in block sets and account for its mapping metadata.

    Args:
        structure_bytes (int): Structure size.
        config (:py:class:`genstore.ssd.SsdConfig`): The SSD.
        block_mb (float): NAND block size in MB, ``config.block_mb`` by default.

    Returns:
        :py:class:`BlockSetPlacement`

    """
    if structure_bytes <= 0:
        raise ValueError("structure size must be positive")
    block_bytes = int(round((config.block_mb if block_mb is None else block_mb) * MB))
    if block_bytes <= 0:
        raise ValueError("block size must be positive")
    set_bytes = block_bytes * config.planes_per_die
    entries = math.ceil(structure_bytes / set_bytes)
    return BlockSetPlacement(
        structure_bytes=int(structure_bytes),
        block_bytes=block_bytes,
        dies_total=config.dies_total,
        set_bytes=set_bytes,
        mapping_entries=entries,
        metadata_bytes=entries * MAPPING_ENTRY_BYTES,
        sets_per_die=spread_evenly(entries, config.dies_total),
    )


def page_mapping_bytes(structure_bytes, page_bytes=MAPPED_PAGE_BYTES):
    """Mapping metadata of a conventional page-level FTL: 4 bytes per mapped page."""
    return math.ceil(structure_bytes / page_bytes) * MAPPING_ENTRY_BYTES


def accelerator_entry_time(config):
    """Time to flush the regular FTL metadata before filtering starts."""
    return config.metadata_flush_s


def management_time(nbytes):
    """
    Garbage collection and wear levelling cost while filtering.

    Filtering only reads, so no write-related management task runs.
    """
    return 0.0
