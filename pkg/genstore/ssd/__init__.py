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
SSD model: geometry, bandwidth, batch fetching and block-set placement.

.. currentmodule:: genstore.ssd

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: ssd

    config.SsdConfig
    config.BatchPlan
    ftl.BlockSetPlacement
    timing.StreamTime
    timing.Timeline

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: ssd

    config.preset
    config.load_config
    timing.stream_time
    timing.external_transfer_times
    timing.double_buffer_schedule
    events.simulate_stream
    ftl.placement_metadata
    ftl.page_mapping_bytes

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: ssd
    :template: autosummary/submodule.rst

    config
    timing
    events
    ftl

"""

from genstore.ssd.config import (
    PRESETS,
    BatchPlan,
    SsdConfig,
    config_from_dict,
    load_config,
    preset,
)
from genstore.ssd.timing import (
    BatchEvent,
    StreamTime,
    Timeline,
    TransferTimes,
    double_buffer_schedule,
    external_transfer_times,
    stream_time,
)
from genstore.ssd.events import simulate_stream, write_events_csv
from genstore.ssd.ftl import (
    BlockSetPlacement,
    accelerator_entry_time,
    management_time,
    page_mapping_bytes,
    placement_metadata,
)

__ALL__ = [
    "PRESETS",
    "BatchPlan",
    "SsdConfig",
    "config_from_dict",
    "load_config",
    "preset",
    "BatchEvent",
    "StreamTime",
    "Timeline",
    "TransferTimes",
    "double_buffer_schedule",
    "external_transfer_times",
    "stream_time",
    "simulate_stream",
    "write_events_csv",
    "BlockSetPlacement",
    "accelerator_entry_time",
    "management_time",
    "page_mapping_bytes",
    "placement_metadata",
]
