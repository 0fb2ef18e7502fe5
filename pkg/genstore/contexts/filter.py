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

"""Filter Context."""

from genstore.contexts.base_context import BaseContext
from genstore.errors import IndexMismatchError
from genstore.modes import FilterMode
from genstore.seqio import ReadSet


class FilterContext(BaseContext):
    r""":py:class:`genstore.contexts.filter.FilterContext` pairs a read set with the verdicts a filter gave it."""

    def __init__(self, mode, reads, decisions, metrics=None):
        r"""
        Instantiate the :py:class:`genstore.contexts.filter.FilterContext` context.

        Args:
            mode (:py:class:`genstore.modes.FilterMode`): The filter that ran.
            reads (:py:class:`genstore.seqio.ReadSet`): The filtered reads.
            decisions (list): One :py:class:`genstore.emfilter.EmDecision` or
                :py:class:`genstore.nmfilter.NmDecision` per read, in any order.
            metrics: List of :py:class:`genstore.metrics.Metric` to measure.

        Raises:
            :py:class:`genstore.errors.IndexMismatchError`: When decisions and
                reads do not cover the same read ids.

        """
        super().__init__(metrics=metrics, reads=reads)
        self._mode = FilterMode(mode)
        self._decisions = list(decisions)
        by_id = {decision.read_id: decision for decision in self._decisions}
        if len(by_id) != len(self._decisions) or set(by_id) != {
            read.id for read in reads
        }:
            raise IndexMismatchError("decisions do not match the read set")
        self._forwarded_mask = tuple(by_id[read.id].forwarded for read in reads)

    @property
    def mode(self):
        return self._mode

    @property
    def decisions(self):
        return self._decisions

    @property
    def forwarded_mask(self):
        """For every read, in input order, whether it leaves the SSD."""
        return self._forwarded_mask

    def forwarded_reads(self):
        """
        The forwarded reads, in input order.

        Returns:
            :py:class:`genstore.seqio.ReadSet`

        """
        return ReadSet(
            tuple(read for read, keep in zip(self.reads, self._forwarded_mask) if keep)
        )
