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

"""Exact-match filtering pipeline."""

from genstore.emfilter import em_filter_reads
from genstore.emfilter.merge import DEFAULT_PARTITIONS
from genstore.errors import IndexMismatchError
from genstore.index import SkIndex, build_srtable
from genstore.modes import FilterMode
from genstore.pipeline.base_pipeline import BasePipeline


class EmPipeline(BasePipeline):
    """Streams the read table and the reference k-mer index through the merge filter."""

    mode = FilterMode.EM

    def __init__(self, skindex, ssd, host, ref_bytes, partitions=DEFAULT_PARTITIONS, **kwargs):
        """
        Args:
            skindex (:py:class:`genstore.index.SkIndex`): The reference k-mer index.
            ssd (:py:class:`genstore.ssd.SsdConfig`): The SSD.
            host (:py:class:`genstore.pipeline.HostMapperModel`): The host mapper.
            ref_bytes (int): Reference data the host mapper needs.
            partitions (int): Fingerprint ranges scanned independently.
            kwargs: Forwarded to :py:class:`genstore.pipeline.BasePipeline`.
        """
        super().__init__(ssd, host, ref_bytes, **kwargs)
        self._skindex = skindex
        self._partitions = partitions
        self._srtable = None

    def check(self):
        if not isinstance(self._skindex, SkIndex):
            raise IndexMismatchError(
                f"exact-match filtering needs an SKIndex, got {type(self._skindex).__name__}"
            )

    def filter(self, reads):
        self._srtable = build_srtable(reads, canonical=self._skindex.canonical)
        decisions, _ = em_filter_reads(
            reads,
            self._skindex,
            srtable=self._srtable,
            partitions=self._partitions,
            threads=self.threads,
        )
        return decisions

    def structure_bytes(self, reads):
        bypassed = sum(read.nbytes for read in reads if read.has_ambiguous)
        return self._skindex.nbytes, self._srtable.nbytes + bypassed

    def parameters(self):
        return {
            "read_len": self._skindex.k,
            "canonical": self._skindex.canonical,
            "partitions": self._partitions,
        }
