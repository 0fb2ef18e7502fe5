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
Power figures of the modelled system.

>>> round(accelerator_power_w(8) * 1e3, 2)
26.6
>>> round(accelerator_power_w(16) * 1e3, 2)
53.09
"""

import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from genstore.errors import ConfigError


@dataclass(frozen=True)
class AcceleratorUnit:
    """
    One kind of filter logic unit.

    Exactly one of ``per_channel`` and ``channels_per_instance`` is set for
    units that scale with the channel count; neither for fixed units.
    """

    name: str
    power_mw: float
    per_channel: Optional[int] = None
    channels_per_instance: Optional[int] = None

    def instances(self, channels):
        if self.per_channel is not None:
            return self.per_channel * channels
        if self.channels_per_instance is not None:
            return math.ceil(channels / self.channels_per_instance)
        return 1

    def power_w(self, channels):
        return self.instances(channels) * self.power_mw * 1e-3


ACCELERATOR_UNITS = (
    AcceleratorUnit("comparator", 0.14, channels_per_instance=12),
    AcceleratorUnit("kmer_window", 0.27, per_channel=2),
    AcceleratorUnit("hash64", 1.8, channels_per_instance=4),
    AcceleratorUnit("location_buffer", 0.37375, per_channel=1),
    AcceleratorUnit("chaining_buffer", 0.95, per_channel=1),
    AcceleratorUnit("chaining_pe", 0.98, per_channel=1),
    AcceleratorUnit("control", 0.11),
)


def accelerator_power_w(channels, units=ACCELERATOR_UNITS):
    """Total power of the filter logic of an SSD with ``channels`` channels."""
    return sum(unit.power_w(channels) for unit in units)


@dataclass(frozen=True)
class PowerComponent:
    """A component drawing ``active_w`` while busy and ``idle_w`` otherwise."""

    name: str
    active_w: float
    idle_w: float = 0.0

    def __post_init__(self):
        if self.active_w < 0 or self.idle_w < 0:
            raise ConfigError(f"{self.name}: power cannot be negative")


HOST_CPU = "host_cpu"
HOST_DRAM = "host_dram"
SSD = "ssd"
SSD_DRAM = "ssd_dram"
LINK = "link"
ACCELERATOR = "accelerator"


@dataclass(frozen=True)
class PowerTable:
    """The power-drawing components of the system, by name."""

    components: Tuple[PowerComponent, ...]

    def __post_init__(self):
        names = [component.name for component in self.components]
        if len(set(names)) != len(names):
            raise ConfigError("duplicate power component names")

    @classmethod
    def default(cls, channels=8):
        """Host server, SSD and filter logic sized for ``channels``."""
        return cls(
            (
                PowerComponent(HOST_CPU, 225.0, 90.0),
                PowerComponent(HOST_DRAM, 24.0, 8.0),
                PowerComponent(SSD, 6.0, 0.05),
                PowerComponent(SSD_DRAM, 0.4, 0.1),
                PowerComponent(LINK, 1.5, 0.0),
                PowerComponent(ACCELERATOR, accelerator_power_w(channels), 0.0),
            )
        )

    def __getitem__(self, name):
        for component in self.components:
            if component.name == name:
                return component
        raise KeyError(name)

    def with_component(self, component):
        """Copy of the table with ``component`` replacing the one of the same name."""
        others = tuple(c for c in self.components if c.name != component.name)
        return replace(self, components=others + (component,))

    def to_dict(self):
        return {
            c.name: {"active_w": c.active_w, "idle_w": c.idle_w} for c in self.components
        }
