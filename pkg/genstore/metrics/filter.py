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
Metrics measured on the outcome of a filter run.

They accumulate over every :py:class:`genstore.contexts.FilterContext` they
are updated with, so a read set filtered in chunks reports its totals.

.. testcode::

    from genstore.contexts import FilterContext
    from genstore.emfilter import em_filter_reads
    from genstore.index import build_skindex
    from genstore.metrics import FilterRatio, ReadsFiltered
    from genstore.modes import FilterMode
    from genstore.seqio import ReadSet, ReferenceGenome

    ref = ReferenceGenome.from_records([("chr", "ACGTACGTAC")])
    reads = ReadSet.from_sequences(["ACGT", "TTTT"])
    decisions, _ = em_filter_reads(reads, build_skindex(ref, 4))
    metrics = [ReadsFiltered(), FilterRatio()]
    FilterContext(FilterMode.EM, reads, decisions, metrics=metrics).measure_metrics()
    print([metric.result() for metric in metrics])

.. testoutput::

    [1, 0.5]

"""

from genstore.metrics.metric import Metric


class ReadsTotal(Metric):
    """Reads that went through the filter."""

    def __init__(self, name="reads_total"):
        super().__init__(name)
        self._count = 0

    def update_state(self, context):
        self._count += len(context.decisions)

    def result(self):
        return self._count

    def reset_states(self):
        self._count = 0


class ReadsFiltered(Metric):
    """Reads kept inside the SSD."""

    def __init__(self, name="reads_filtered"):
        super().__init__(name)
        self._count = 0

    def update_state(self, context):
        self._count += sum(not forwarded for forwarded in context.forwarded_mask)

    def result(self):
        return self._count

    def reset_states(self):
        self._count = 0


class ReadsForwarded(Metric):
    """Reads sent to the host mapper."""

    def __init__(self, name="reads_forwarded"):
        super().__init__(name)
        self._count = 0

    def update_state(self, context):
        self._count += sum(context.forwarded_mask)

    def result(self):
        return self._count

    def reset_states(self):
        self._count = 0


class FilterRatio(Metric):
    """Fraction of reads filtered; 0 for an empty read set."""

    def __init__(self, name="filter_ratio"):
        super().__init__(name)
        self._filtered = 0
        self._total = 0

    def update_state(self, context):
        mask = context.forwarded_mask
        self._total += len(mask)
        self._filtered += sum(not forwarded for forwarded in mask)

    def result(self):
        return self._filtered / self._total if self._total else 0.0

    def reset_states(self):
        self._filtered = 0
        self._total = 0


class ForwardedBytes(Metric):
    """Packed bytes of the forwarded reads, as they cross the host link."""

    def __init__(self, name="forwarded_bytes"):
        super().__init__(name)
        self._bytes = 0

    def update_state(self, context):
        self._bytes += sum(
            read.nbytes
            for read, forwarded in zip(context.reads, context.forwarded_mask)
            if forwarded
        )

    def result(self):
        return self._bytes

    def reset_states(self):
        self._bytes = 0


class VerdictHistogram(Metric):
    """Reads per verdict name."""

    def __init__(self, name="verdicts"):
        super().__init__(name)
        self._counts = {}

    def update_state(self, context):
        for decision in context.decisions:
            key = decision.verdict.name
            self._counts[key] = self._counts.get(key, 0) + 1

    def result(self):
        return dict(sorted(self._counts.items()))

    def reset_states(self):
        self._counts = {}
