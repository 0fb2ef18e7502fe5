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
Timing, traffic and energy model of a filtered read mapping run.

Filtering inside the SSD overlaps with moving the surviving reads and with
mapping them on the host, after the reference has reached the host:

``t_total = t_flush + t_io_ref + max(t_filter_internal, t_io_unfiltered, t_rm_unfiltered)``

Filtering outside storage streams the filter structures over the host link
instead, and the surviving reads are already on the host.

.. testcode::

    from genstore.pipeline import Workload, host_model, model_workload
    from genstore.ssd import preset

    workload = Workload.from_ratio(7e9, 22e9, 0.8, index_bytes=32e9)
    report = model_workload(workload, preset("SSD-H"), host_model("software"))
    print(round(report.dm_saving, 3), report.critical_path)

.. testoutput::

    2.544 mapping

"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, Optional

from genstore.energy import PowerTable, energy_estimate
from genstore.pipeline.analytic import (
    TimingInputs,
    t_ideal_isf,
    t_ideal_osf,
    t_preloaded,
)
from genstore.pipeline.report import PipelineReport
from genstore.modes import IoPath
from genstore.ssd import accelerator_entry_time, stream_time

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Workload:
    """
    What a filter run moves, in bytes, and what it decided.

    Args:
        ref_bytes (float): Reference data the host mapper needs.
        read_bytes (float): The read set.
        forwarded_bytes (float): Reads left after filtering.
        index_bytes (float): Reference-side filter structure streamed from flash.
        read_structure_bytes (float): Read-side filter structure streamed from
            flash; the read set itself by default.
        reads_total (int): Reads filtered.
        reads_filtered (int): Reads kept in the SSD.
        verdicts (dict): Reads per verdict name.
        mode (str): Filter that ran.
    """

    ref_bytes: float
    read_bytes: float
    forwarded_bytes: float
    index_bytes: float = 0.0
    read_structure_bytes: Optional[float] = None
    reads_total: int = 0
    reads_filtered: int = 0
    verdicts: Dict[str, int] = field(default_factory=dict)
    mode: str = "em"

    def __post_init__(self):
        if self.read_structure_bytes is None:
            object.__setattr__(self, "read_structure_bytes", self.read_bytes)
        for name in ("ref_bytes", "read_bytes", "forwarded_bytes", "index_bytes"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} cannot be negative")
        if self.forwarded_bytes > self.read_bytes:
            raise ValueError("cannot forward more bytes than the read set holds")
        if not 0 <= self.reads_filtered <= self.reads_total:
            raise ValueError("filtered reads must be between 0 and the read count")

    @classmethod
    def from_ratio(
        cls, ref_bytes, read_bytes, ratio, index_bytes=0.0, read_structure_bytes=None, mode="em"
    ):
        """A workload known only by its sizes and the fraction of read bytes filtered."""
        if not 0 <= ratio <= 1:
            raise ValueError("filter ratio must be in [0, 1]")
        return cls(
            ref_bytes=ref_bytes,
            read_bytes=read_bytes,
            forwarded_bytes=read_bytes * (1 - ratio),
            index_bytes=index_bytes,
            read_structure_bytes=read_structure_bytes,
            mode=mode,
        )

    @property
    def ratio(self):
        """Fraction of read bytes filtered."""
        return 1 - self.forwarded_bytes / self.read_bytes if self.read_bytes else 0.0

    def scaled(self, factor):
        """The same workload with a read set ``factor`` times larger."""
        if factor <= 0:
            raise ValueError("scale must be positive")
        if factor == 1:
            return self
        return replace(
            self,
            read_bytes=self.read_bytes * factor,
            forwarded_bytes=self.forwarded_bytes * factor,
            read_structure_bytes=self.read_structure_bytes * factor,
            reads_total=int(round(self.reads_total * factor)),
            reads_filtered=int(round(self.reads_filtered * factor)),
            verdicts={k: int(round(v * factor)) for k, v in self.verdicts.items()},
        )


def _critical_path(t_filter, t_io_unfiltered, t_rm_unfiltered):
    terms = (("filter", t_filter), ("io", t_io_unfiltered), ("mapping", t_rm_unfiltered))
    return max(terms, key=lambda term: term[1])[0]


def model_workload(
    workload,
    ssd,
    host,
    power_table=None,
    in_storage=True,
    ideal=False,
    parameters=None,
):
    """
    Model the run of a filter over ``workload`` next to a host mapper.

    Args:
        workload (:py:class:`Workload`): Sizes and filter outcome.
        ssd (:py:class:`genstore.ssd.SsdConfig`): The SSD.
        host (:py:class:`genstore.pipeline.HostMapperModel`): The mapper.
        power_table (:py:class:`genstore.energy.PowerTable`): Defaults to
            :py:meth:`genstore.energy.PowerTable.default` for the SSD channel count.
        in_storage (bool): Filter inside the SSD, or on the host side of the link.
        ideal (bool): Give the filter zero cost of its own.
        parameters (dict): Provenance copied into the report.

    Returns:
        :py:class:`genstore.pipeline.PipelineReport`

    """
    if power_table is None:
        power_table = PowerTable.default(ssd.channels)
    t_io_ref = stream_time(workload.ref_bytes, ssd, IoPath.EXTERNAL).seconds
    t_io_all = stream_time(workload.read_bytes, ssd, IoPath.EXTERNAL).seconds
    t_rm_all = host.mapping_time(workload.read_bytes)
    t_rm_unfiltered = host.mapping_time(workload.forwarded_bytes)
    structures = workload.index_bytes + workload.read_structure_bytes

    if in_storage:
        t_flush = accelerator_entry_time(ssd)
        t_io_unfiltered = stream_time(workload.forwarded_bytes, ssd, IoPath.EXTERNAL).seconds
        t_filter = 0.0 if ideal else stream_time(structures, ssd).seconds
        bytes_internal = workload.ref_bytes + structures
        bytes_external = workload.ref_bytes + workload.forwarded_bytes
    else:
        t_flush = 0.0
        t_io_unfiltered = 0.0
        link_bytes = workload.read_bytes if ideal else max(structures, workload.read_bytes)
        t_filter = stream_time(link_bytes, ssd, IoPath.EXTERNAL).seconds
        bytes_internal = workload.ref_bytes + link_bytes
        bytes_external = bytes_internal

    t_total = t_flush + t_io_ref + max(t_filter, t_io_unfiltered, t_rm_unfiltered)
    inputs = TimingInputs(
        t_io_ref=t_io_ref,
        t_io_unfiltered=stream_time(workload.forwarded_bytes, ssd, IoPath.EXTERNAL).seconds,
        t_io_all=t_io_all,
        t_rm_unfiltered=t_rm_unfiltered,
        t_rm_all=t_rm_all,
    )
    baseline_total = t_io_ref + max(t_io_all, t_rm_all)
    moved = workload.ref_bytes + workload.read_bytes
    if bytes_external:
        saving = moved / bytes_external
    else:
        saving = 1.0 if not moved else float("inf")

    reads_forwarded = workload.reads_total - workload.reads_filtered
    report = PipelineReport(
        mode=workload.mode,
        ssd=ssd.name,
        host=host.kind.value,
        in_storage=bool(in_storage),
        ideal=bool(ideal),
        t_total=t_total,
        t_io_ref=t_io_ref,
        t_io_unfiltered=t_io_unfiltered,
        t_filter_internal=t_filter,
        t_rm_unfiltered=t_rm_unfiltered,
        t_metadata_flush=t_flush,
        critical_path=_critical_path(t_filter, t_io_unfiltered, t_rm_unfiltered),
        bytes_ref=workload.ref_bytes,
        bytes_reads=workload.read_bytes,
        bytes_forwarded=workload.forwarded_bytes,
        bytes_internal=bytes_internal,
        bytes_external=bytes_external,
        dm_saving=saving,
        energy_j=0.0,
        reads_total=workload.reads_total,
        reads_filtered=workload.reads_filtered,
        reads_forwarded=reads_forwarded,
        filter_ratio=(
            workload.reads_filtered / workload.reads_total
            if workload.reads_total
            else workload.ratio
        ),
        t_ideal_isf=t_ideal_isf(inputs),
        t_ideal_osf=t_ideal_osf(inputs),
        t_preloaded=t_preloaded(inputs),
        baseline_t_total=baseline_total,
        baseline_t_io_all=t_io_all,
        baseline_t_rm_all=t_rm_all,
        baseline_energy_j=0.0,
        speedup=baseline_total / t_total if t_total else 1.0,
        verdicts=dict(workload.verdicts),
        parameters={
            **(parameters or {}),
            "ssd": ssd.to_dict(),
            "host": host.to_dict(),
            "power": power_table.to_dict(),
        },
    )
    report = replace(
        report,
        energy_j=energy_estimate(report, power_table),
        baseline_energy_j=energy_estimate(report.baseline_activity(), power_table),
    )
    logger.info(
        "%s on %s: %.6f s (baseline %.6f s), critical path %s",
        workload.mode,
        ssd.name,
        report.t_total,
        report.baseline_t_total,
        report.critical_path,
    )
    return report
