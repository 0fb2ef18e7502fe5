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
Discrete-event rendition of a double-buffered internal stream.

Every die reads its multi-plane pages one after the other and queues on its
channel bus to move them to the controller. A batch is complete once every
die has delivered its share; the compute process consumes complete batches
in order and frees their buffer for the batch two positions later.
"""

import csv
import logging

import simpy

from genstore.ssd.timing import BatchEvent, Timeline

logger = logging.getLogger(__name__)

CSV_FIELDS = (
    "batch",
    "bytes",
    "fetch_start_s",
    "fetch_end_s",
    "compute_start_s",
    "compute_end_s",
)


def _batch_units(total_bytes, unit_bytes, dies):
    """Split a stream into batches of per-die unit sizes."""
    batches = []
    remaining = int(total_bytes)
    while remaining > 0:
        units = []
        for _ in range(dies):
            if remaining <= 0:
                break
            size = min(unit_bytes, remaining)
            units.append(size)
            remaining -= size
        batches.append(units)
    return batches


class _StreamModel:
    def __init__(self, env, config, batches, compute_time_per_batch):
        self.env = env
        self.config = config
        self.batches = batches
        self.compute_time_per_batch = compute_time_per_batch
        self.batch_bytes = config.batch_plan.batch_bytes
        self.buses = [simpy.Resource(env, capacity=1) for _ in range(config.channels)]
        self.fetched = [env.event() for _ in batches]
        self.computed = [env.event() for _ in batches]
        self.pending = [len(units) for units in batches]
        self.fetch_start = [None] * len(batches)
        self.fetch_end = [0.0] * len(batches)
        self.compute_start = [0.0] * len(batches)
        self.compute_end = [0.0] * len(batches)
        for die in range(config.dies_total):
            env.process(self.die(die))
        env.process(self.compute())

    def die(self, die):
        bus = self.buses[die % self.config.channels]
        byte_rate = self.config.channel_bw_gbps * 1e9
        for index, units in enumerate(self.batches):
            if die >= len(units):
                continue
            if index >= 2:
                yield self.computed[index - 2]
            if self.fetch_start[index] is None:
                self.fetch_start[index] = self.env.now
            yield self.env.timeout(self.config.nand_read_us * 1e-6)
            with bus.request() as request:
                yield request
                yield self.env.timeout(units[die] / byte_rate)
            self.pending[index] -= 1
            if not self.pending[index]:
                self.fetch_end[index] = self.env.now
                self.fetched[index].succeed()

    def compute(self):
        for index, units in enumerate(self.batches):
            yield self.fetched[index]
            self.compute_start[index] = self.env.now
            share = sum(units) / self.batch_bytes
            yield self.env.timeout(self.compute_time_per_batch * share)
            self.compute_end[index] = self.env.now
            self.computed[index].succeed()

    def timeline(self):
        return Timeline(
            tuple(
                BatchEvent(
                    index,
                    sum(units),
                    self.fetch_start[index],
                    self.fetch_end[index],
                    self.compute_start[index],
                    self.compute_end[index],
                )
                for index, units in enumerate(self.batches)
            )
        )


def simulate_stream(total_bytes, config, compute_time_per_batch=0.0):
    """
    Simulate streaming ``total_bytes`` through the SSD with simpy.

    Args:
        total_bytes (int): Stream size.
        config (:py:class:`genstore.ssd.SsdConfig`): The SSD.
        compute_time_per_batch (float): Processing time of a full batch.

    Returns:
        :py:class:`genstore.ssd.Timeline`: Per-batch fetch and compute intervals,
        directly comparable with :py:func:`genstore.ssd.double_buffer_schedule`.

    """
    if total_bytes < 0 or compute_time_per_batch < 0:
        raise ValueError("byte count and compute time cannot be negative")
    unit_bytes = config.planes_per_die * config.page_bytes
    batches = _batch_units(total_bytes, unit_bytes, config.dies_total)
    env = simpy.Environment()
    model = _StreamModel(env, config, batches, compute_time_per_batch)
    env.run()
    timeline = model.timeline()
    logger.debug(
        "simulated %d batches on %s in %.6f s", len(batches), config.name, timeline.total_s
    )
    return timeline


def write_events_csv(timeline, stream):
    """Write one CSV row per batch of ``timeline``."""
    writer = csv.writer(stream)
    writer.writerow(CSV_FIELDS)
    for event in timeline.events:
        writer.writerow(
            (
                event.index,
                event.nbytes,
                f"{event.fetch_start:.9f}",
                f"{event.fetch_end:.9f}",
                f"{event.compute_start:.9f}",
                f"{event.compute_end:.9f}",
            )
        )
