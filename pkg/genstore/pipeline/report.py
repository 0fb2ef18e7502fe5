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
Host mapper model and the pipeline report.

A report is written as one JSON object whose keys are the fields of
:py:class:`PipelineReport`; :py:data:`REPORT_SCHEMA` maps each key to its
JSON type. ``schema_version`` changes whenever a key is renamed or removed.
"""

import json
from dataclasses import asdict, dataclass, field, fields
from typing import Dict

from genstore.energy import (
    ACCELERATOR,
    HOST_CPU,
    HOST_DRAM,
    LINK,
    SSD,
    SSD_DRAM,
    Activity,
)
from genstore.errors import ConfigError, ParseError
from genstore.modes import HostKind
from genstore.ssd.config import GB

SCHEMA_VERSION = 1

BASELINE_DESCRIPTION = (
    "reference and full read set read over the host link, "
    "every read mapped at host throughput"
)

HOST_THROUGHPUT_GBPS = {
    HostKind.SOFTWARE: 1.0,
    HostKind.HW_SHORT: 30.0,
    HostKind.HW_LONG: 20.0,
}


@dataclass(frozen=True)
class HostMapperModel:
    """
    A read mapper reduced to the rate at which it consumes read bytes.

    The defaults make a software mapper compute-bound and a hardware mapper
    I/O-bound on the fastest SSD preset.
    """

    kind: HostKind
    throughput_gbps: float

    def __post_init__(self):
        object.__setattr__(self, "kind", HostKind(self.kind))
        if self.throughput_gbps <= 0:
            raise ConfigError("host throughput must be positive")

    def mapping_time(self, nbytes):
        return nbytes / (self.throughput_gbps * GB)

    def to_dict(self):
        return {"kind": self.kind.value, "throughput_gbps": self.throughput_gbps}


def host_model(kind, throughput_gbps=None):
    """
    Build the host model of ``kind`` with its default or a given throughput.

    >>> host_model("hw-short").throughput_gbps
    30.0
    """
    try:
        kind = HostKind(kind)
    except ValueError:
        raise ConfigError(
            f"unknown host {kind!r}, expected one of "
            + ", ".join(k.value for k in HostKind)
        ) from None
    if throughput_gbps is None:
        throughput_gbps = HOST_THROUGHPUT_GBPS[kind]
    return HostMapperModel(kind, float(throughput_gbps))


@dataclass(frozen=True)
class PipelineReport:
    """
    Timeline, traffic, energy and filter counts of one modelled run.

    Times are seconds, sizes bytes and energies joules. ``baseline_*`` fields
    describe the same workload without any filter, see
    :py:data:`BASELINE_DESCRIPTION`.
    """

    mode: str
    ssd: str
    host: str
    in_storage: bool
    ideal: bool
    t_total: float
    t_io_ref: float
    t_io_unfiltered: float
    t_filter_internal: float
    t_rm_unfiltered: float
    t_metadata_flush: float
    critical_path: str
    bytes_ref: float
    bytes_reads: float
    bytes_forwarded: float
    bytes_internal: float
    bytes_external: float
    dm_saving: float
    energy_j: float
    reads_total: int
    reads_filtered: int
    reads_forwarded: int
    filter_ratio: float
    t_ideal_isf: float
    t_ideal_osf: float
    t_preloaded: float
    baseline_t_total: float
    baseline_t_io_all: float
    baseline_t_rm_all: float
    baseline_energy_j: float
    speedup: float
    verdicts: Dict[str, int] = field(default_factory=dict)
    parameters: Dict[str, object] = field(default_factory=dict)
    baseline: str = BASELINE_DESCRIPTION
    schema_version: int = SCHEMA_VERSION

    def activity(self):
        """Busy time of every power component during the filtered run."""
        if self.in_storage:
            link = self.t_io_ref + self.t_io_unfiltered
        else:
            link = self.t_io_ref + self.t_filter_internal
        return Activity(
            self.t_total,
            {
                HOST_CPU: self.t_rm_unfiltered,
                HOST_DRAM: self.t_rm_unfiltered,
                SSD: self.t_io_ref + max(self.t_filter_internal, self.t_io_unfiltered),
                SSD_DRAM: self.t_filter_internal if self.in_storage else 0.0,
                LINK: link,
                ACCELERATOR: self.t_filter_internal,
            },
        )

    def baseline_activity(self):
        """Busy time of every power component when nothing is filtered."""
        io = self.t_io_ref + self.baseline_t_io_all
        return Activity(
            self.baseline_t_total,
            {
                HOST_CPU: self.baseline_t_rm_all,
                HOST_DRAM: self.baseline_t_rm_all,
                SSD: io,
                LINK: io,
            },
        )

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        validate_report(data)
        return cls(**data)


_JSON_TYPES = {bool: "boolean", int: "integer", float: "number", str: "string"}

REPORT_SCHEMA = {
    f.name: _JSON_TYPES.get(f.type, "object") for f in fields(PipelineReport)
}


def _matches(value, kind):
    if kind == "boolean":
        return isinstance(value, bool)
    if kind == "integer":
        return isinstance(value, int) and not isinstance(value, bool)
    if kind == "number":
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    if kind == "string":
        return isinstance(value, str)
    return isinstance(value, dict)


def validate_report(data):
    """
    Check a decoded report against :py:data:`REPORT_SCHEMA`.

    Raises:
        :py:class:`genstore.errors.ParseError`: On a missing, unknown or mistyped key.

    """
    if not isinstance(data, dict):
        raise ParseError("a report must be a JSON object")
    missing = sorted(set(REPORT_SCHEMA) - set(data))
    unknown = sorted(set(data) - set(REPORT_SCHEMA))
    if missing or unknown:
        raise ParseError(f"report keys missing: {missing}, unknown: {unknown}")
    for key, kind in REPORT_SCHEMA.items():
        if not _matches(data[key], kind):
            raise ParseError(f"report key {key!r} should be a JSON {kind}")
    if data["schema_version"] != SCHEMA_VERSION:
        raise ParseError(
            f"report schema version {data['schema_version']}, expected {SCHEMA_VERSION}"
        )


def write_report(report, stream):
    """Write ``report`` as sorted, indented JSON; equal reports give equal bytes."""
    json.dump(report.to_dict(), stream, indent=4, sort_keys=True)
    stream.write("\n")


def read_report(stream):
    """Read and validate a report written by :py:func:`write_report`."""
    try:
        data = json.load(stream)
    except json.JSONDecodeError as error:
        raise ParseError(f"not a JSON report: {error}") from None
    return PipelineReport.from_dict(data)
