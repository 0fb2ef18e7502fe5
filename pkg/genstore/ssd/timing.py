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
Analytic streaming times and the double-buffered fetch schedule.

>>> from genstore.ssd import preset
>>> stream_time(19.2e9, preset("SSD-L")).seconds
2.0
>>> round(stream_time(19.6e9, preset("SSD-H"), IoPath.EXTERNAL).seconds, 6)
2.8
"""

from dataclasses import dataclass
from typing import NamedTuple, Tuple

from genstore.modes import IoPath

BASE_BITS = 8
ENCODED_BASE_BITS = 2


class StreamTime(NamedTuple):
    """Time to stream a byte count and the resource that bounds it."""

    seconds: float
    bound: str
    batches: int = 0


def stream_time(nbytes, config, path=IoPath.INTERNAL):
    """
    Time to read ``nbytes`` sequentially.

    Internally the read is bounded either by the aggregate channel bandwidth
    or by one page-array read per batch; externally by the host link.

    Args:
        nbytes (int): Bytes to read.
        config (:py:class:`genstore.ssd.SsdConfig`): The SSD.
        path (:py:class:`genstore.modes.IoPath`): Inside the SSD or over the link.

    Returns:
        :py:class:`StreamTime`: ``bound`` is ``"bandwidth"``, ``"flash"``,
        ``"link"`` or ``"none"`` for an empty read.

    """
    if nbytes < 0:
        raise ValueError("cannot stream a negative byte count")
    if nbytes == 0:
        return StreamTime(0.0, "none", 0)
    if IoPath(path) == IoPath.EXTERNAL:
        return StreamTime(nbytes / config.external_bw, "link", 0)
    batches = config.batch_plan.batches(nbytes)
    bandwidth = nbytes / config.internal_bw
    flash = batches * config.nand_read_us * 1e-6
    if flash > bandwidth:
        return StreamTime(flash, "flash", batches)
    return StreamTime(bandwidth, "bandwidth", batches)


class TransferTimes(NamedTuple):
    """Host link time of a read set stored as text and stored 2-bit packed."""

    raw_s: float
    encoded_s: float


def external_transfer_times(raw_bytes, config):
    """Report both the one-byte-per-base and the packed transfer time."""
    raw = stream_time(raw_bytes, config, IoPath.EXTERNAL).seconds
    return TransferTimes(raw, raw * ENCODED_BASE_BITS / BASE_BITS)


@dataclass(frozen=True)
class BatchEvent:
    """Fetch and compute interval of one batch."""

    index: int
    nbytes: int
    fetch_start: float
    fetch_end: float
    compute_start: float
    compute_end: float


@dataclass(frozen=True)
class Timeline:
    """A double-buffered schedule."""

    events: Tuple[BatchEvent, ...]

    @property
    def total_s(self):
        return max((event.compute_end for event in self.events), default=0.0)

    @property
    def fetch_s(self):
        return sum(event.fetch_end - event.fetch_start for event in self.events)

    @property
    def compute_s(self):
        return sum(event.compute_end - event.compute_start for event in self.events)

    @property
    def flash_utilization(self):
        return self.fetch_s / self.total_s if self.total_s else 0.0

    @property
    def compute_utilization(self):
        return self.compute_s / self.total_s if self.total_s else 0.0

    def idle_intervals(self):
        """
        Intervals where neither a fetch nor a compute step is running.

        Returns:
            list: ``(start, end)`` pairs inside ``(0, total_s)``.

        """
        busy = sorted(
            [(e.fetch_start, e.fetch_end) for e in self.events if e.fetch_end > e.fetch_start]
            + [
                (e.compute_start, e.compute_end)
                for e in self.events
                if e.compute_end > e.compute_start
            ]
        )
        gaps, reach = [], 0.0
        for start, end in busy:
            if start > reach:
                gaps.append((reach, start))
            reach = max(reach, end)
        return gaps


def double_buffer_schedule(total_bytes, compute_time_per_batch, config, fetch_time=None):
    """
    Schedule fetching and processing of a stream through two batch buffers.

    Batch ``i`` is fetched once batch ``i - 1`` is fetched and its buffer,
    last used by batch ``i - 2``, has been processed. It is processed once it
    is fetched and batch ``i - 1`` has been processed.

    Args:
        total_bytes (int): Stream size.
        compute_time_per_batch (float): Processing time of a full batch; partial
            batches take a proportional share.
        config (:py:class:`genstore.ssd.SsdConfig`): The SSD.
        fetch_time (callable): ``fetch_time(nbytes)`` of one batch. Defaults to
            :py:func:`stream_time` over the internal path.

    Returns:
        :py:class:`Timeline`

    """
    if compute_time_per_batch < 0:
        raise ValueError("compute time cannot be negative")
    plan = config.batch_plan
    if fetch_time is None:

        def fetch_time(nbytes):
            return stream_time(nbytes, config).seconds

    events = []
    remaining = int(total_bytes)
    index = 0
    while remaining > 0:
        nbytes = min(plan.batch_bytes, remaining)
        remaining -= nbytes
        fetch_start = events[-1].fetch_end if events else 0.0
        if index >= 2:
            fetch_start = max(fetch_start, events[-2].compute_end)
        fetch_end = fetch_start + fetch_time(nbytes)
        compute_start = max(fetch_end, events[-1].compute_end if events else 0.0)
        compute_end = compute_start + compute_time_per_batch * nbytes / plan.batch_bytes
        events.append(
            BatchEvent(index, nbytes, fetch_start, fetch_end, compute_start, compute_end)
        )
        index += 1
    return Timeline(tuple(events))
