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
SSD geometry, bandwidths and the batch plan of the in-storage filters.

Sizes are bytes and bandwidths are decimal GB/s (``1 GB = 1e9 bytes``) unless
a name says otherwise.

.. testcode::

    from genstore.ssd import preset

    for name in ("SSD-L", "SSD-M", "SSD-H"):
        config = preset(name)
        print(name, config.channels, f"{config.ratio:.3f}")

.. testoutput::

    SSD-L 8 19.200
    SSD-M 16 5.486
    SSD-H 16 2.743

"""

import json
import os
from dataclasses import asdict, dataclass, fields, replace

from genstore.errors import ConfigError

GB = 1e9
KIB = 1024
MIB = 1024 * 1024
GIB = 1024 * 1024 * 1024
MB = 1e6

CHANNEL_BW_GBPS = 1.2


@dataclass(frozen=True)
class BatchPlan:
    """
    How much flash one fetch step reads and how much DRAM buffering it needs.

    A batch is one multi-plane page read on every die. Each of the two
    streamed structures owns two batch buffers so the next batch is fetched
    while the current one is processed.
    """

    batch_bytes: int
    buffer_bytes: int

    STRUCTURES = 2
    BUFFERS_PER_STRUCTURE = 2
    # Buffer size published for the accelerator, kept next to the computed one.
    REPORTED_BUFFER_BYTES = 8 * MIB

    @classmethod
    def from_config(cls, config):
        batch = (
            config.channels
            * config.dies_per_channel
            * config.planes_per_die
            * config.page_kib
            * KIB
        )
        return cls(batch, cls.STRUCTURES * cls.BUFFERS_PER_STRUCTURE * batch)

    def batches(self, nbytes):
        """Number of batches needed to stream ``nbytes``."""
        return -(-int(nbytes) // self.batch_bytes)


@dataclass(frozen=True)
class SsdConfig:
    """
    A modelled SSD.

    Args:
        channels (int): Flash channels.
        external_bw_gbps (float): Host link sequential read bandwidth.
        dies_per_channel (int): Dies behind each channel.
        planes_per_die (int): Planes read together by a multi-plane read.
        page_kib (int): Flash page size.
        channel_bw_gbps (float): Bus bandwidth of one channel.
        nand_read_us (float): Latency of a multi-plane page array read.
        dram_gib (float): Internal DRAM capacity.
        block_mb (float): NAND block size, used by the block-set placement.
        metadata_flush_s (float): Cost of flushing the regular FTL metadata
            when the SSD switches to filtering.
        name (str): Label used in reports.
    """

    channels: int
    external_bw_gbps: float
    dies_per_channel: int = 4
    planes_per_die: int = 2
    page_kib: int = 16
    channel_bw_gbps: float = CHANNEL_BW_GBPS
    nand_read_us: float = 45.0
    dram_gib: float = 4.0
    block_mb: float = 12.0
    metadata_flush_s: float = 0.0
    name: str = "custom"

    def __post_init__(self):
        for field in fields(self):
            if field.name in ("name", "metadata_flush_s"):
                continue
            if getattr(self, field.name) <= 0:
                raise ConfigError(f"{field.name} must be positive")
        if self.metadata_flush_s < 0:
            raise ConfigError("metadata_flush_s cannot be negative")

    @property
    def internal_bw_gbps(self):
        """Aggregate NAND-to-controller bandwidth."""
        return self.channel_bw_gbps * self.channels

    @property
    def internal_bw(self):
        """Internal bandwidth in bytes per second."""
        return self.internal_bw_gbps * GB

    @property
    def external_bw(self):
        """Host link bandwidth in bytes per second."""
        return self.external_bw_gbps * GB

    @property
    def ratio(self):
        """Internal over external bandwidth."""
        return self.internal_bw_gbps / self.external_bw_gbps

    @property
    def dies_total(self):
        return self.channels * self.dies_per_channel

    @property
    def page_bytes(self):
        return self.page_kib * KIB

    @property
    def dram_bytes(self):
        return int(self.dram_gib * GIB)

    @property
    def batch_plan(self):
        """:py:class:`BatchPlan` of this geometry."""
        return BatchPlan.from_config(self)

    def to_dict(self):
        return asdict(self)


PRESETS = {
    "SSD-L": SsdConfig(channels=8, external_bw_gbps=0.5, name="SSD-L"),
    "SSD-M": SsdConfig(channels=16, external_bw_gbps=3.5, name="SSD-M"),
    "SSD-H": SsdConfig(channels=16, external_bw_gbps=7.0, name="SSD-H"),
}


def preset(name):
    """
    Return one of the published SSD configurations.

    Args:
        name (str): ``SSD-L``, ``SSD-M`` or ``SSD-H``.

    Returns:
        :py:class:`SsdConfig`

    Raises:
        :py:class:`genstore.errors.ConfigError`: On an unknown name.

    """
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown SSD preset {name!r}, expected one of {', '.join(PRESETS)}"
        ) from None


def config_from_dict(values):
    """
    Build a :py:class:`SsdConfig` from a mapping of field values.

    The optional ``"base"`` key names a preset whose values the others
    override. Unknown keys are rejected.
    """
    values = dict(values)
    base = values.pop("base", None)
    known = {field.name for field in fields(SsdConfig)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise ConfigError(f"unknown SSD config keys: {', '.join(unknown)}")
    if base is not None:
        return replace(preset(base), **values)
    try:
        return SsdConfig(**values)
    except TypeError as error:
        raise ConfigError(f"incomplete SSD config: {error}") from None


def load_config(source):
    """
    Resolve a preset name or a JSON config file into a :py:class:`SsdConfig`.

    Args:
        source (str): A preset name or a path to a JSON object.

    Returns:
        :py:class:`SsdConfig`

    """
    if source in PRESETS:
        return PRESETS[source]
    if not os.path.exists(source):
        raise ConfigError(
            f"{source!r} is neither an SSD preset ({', '.join(PRESETS)}) nor a file"
        )
    with open(source, "r") as fp:
        try:
            values = json.load(fp)
        except json.JSONDecodeError as error:
            raise ConfigError(f"{source}: {error}") from None
    if not isinstance(values, dict):
        raise ConfigError(f"{source}: expected a JSON object")
    values.setdefault("name", os.path.splitext(os.path.basename(source))[0])
    return config_from_dict(values)
