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

"""Primitive Pipeline Interface."""

import logging
from abc import ABC, abstractmethod
from typing import List, NamedTuple

from genstore.contexts import FilterContext
from genstore.metrics import (
    ForwardedBytes,
    ReadsFiltered,
    ReadsTotal,
    VerdictHistogram,
)
from genstore.pipeline.model import Workload, model_workload
from genstore.pipeline.report import PipelineReport
from genstore.seqio import ReadSet

logger = logging.getLogger(__name__)


class PipelineResult(NamedTuple):
    """Everything a pipeline run produces."""

    report: PipelineReport
    forwarded: ReadSet
    decisions: List


class BasePipeline(ABC):
    r""":py:class:`BasePipeline` provide an interface for all pipelines to inherit from."""

    mode = None

    def __init__(
        self,
        ssd,
        host,
        ref_bytes,
        power_table=None,
        in_storage=True,
        ideal=False,
        scale=1.0,
        threads=1,
    ):
        r"""
        Primitive pipeline interface. Runs a filter for real and models its timeline.

        Args:
            ssd (:py:class:`genstore.ssd.SsdConfig`): The SSD.
            host (:py:class:`genstore.pipeline.HostMapperModel`): The host mapper.
            ref_bytes (int): Reference data the host mapper needs.
            power_table (:py:class:`genstore.energy.PowerTable`): Component powers.
            in_storage (bool): Filter inside the SSD or outside it.
            ideal (bool): Model the filter as free.
            scale (float): Model a read set this many times larger than the one filtered.
            threads (int): Filter workers; never changes any output.
        """
        if threads < 1:
            raise ValueError("threads must be at least 1")
        self._ssd = ssd
        self._host = host
        self._ref_bytes = ref_bytes
        self._power_table = power_table
        self._in_storage = in_storage
        self._ideal = ideal
        self._scale = scale
        self._threads = threads

    @property
    def ssd(self):
        return self._ssd

    @property
    def host(self):
        return self._host

    @property
    def threads(self):
        return self._threads

    @abstractmethod
    def filter(self, reads):
        """
        Run the filter.

        Args:
            reads (:py:class:`genstore.seqio.ReadSet`): The reads.

        Returns:
            list: One decision per read, in read id order.

        """

    @abstractmethod
    def structure_bytes(self, reads):
        """
        Sizes of the structures the filter streams from flash.

        Returns:
            (int, int): The reference-side and the read-side structure.

        """

    def check(self):
        """Validate the configuration before anything runs."""

    def parameters(self):
        """Filter parameters recorded in the report."""
        return {}

    def metrics(self):
        """The metrics measured on every run."""
        return [ReadsTotal(), ReadsFiltered(), ForwardedBytes(), VerdictHistogram()]

    def call(self, reads):
        """
        Filter ``reads`` and model the run.

        Returns:
            :py:class:`PipelineResult`: Forwarded reads keep their input order.

        """
        self.check()
        decisions = self.filter(reads)
        context = FilterContext(self.mode, reads, decisions, metrics=self.metrics())
        context.measure_metrics()
        results = context.results()
        index_bytes, read_structure_bytes = self.structure_bytes(reads)
        workload = Workload(
            ref_bytes=self._ref_bytes,
            read_bytes=reads.nbytes,
            forwarded_bytes=results["forwarded_bytes"],
            index_bytes=index_bytes,
            read_structure_bytes=read_structure_bytes,
            reads_total=results["reads_total"],
            reads_filtered=results["reads_filtered"],
            verdicts=results["verdicts"],
            mode=self.mode.value,
        ).scaled(self._scale)
        logger.debug("workload: %s", workload)
        report = model_workload(
            workload,
            self._ssd,
            self._host,
            power_table=self._power_table,
            in_storage=self._in_storage,
            ideal=self._ideal,
            parameters={**self.parameters(), "scale": self._scale},
        )
        return PipelineResult(report, context.forwarded_reads(), decisions)

    def __call__(self, reads):
        """Invoke :py:meth:`call`."""
        return self.call(reads)
