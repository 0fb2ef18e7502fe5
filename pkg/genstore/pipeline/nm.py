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

"""Non-matching filtering pipeline."""

from genstore.errors import CapacityError, IndexMismatchError
from genstore.index import KmerIndex
from genstore.modes import FilterMode
from genstore.nmfilter import NmParams, nm_filter_reads
from genstore.pipeline.base_pipeline import BasePipeline


class NmPipeline(BasePipeline):
    """Streams the read set past a minimizer index held in the SSD DRAM."""

    mode = FilterMode.NM

    def __init__(self, kmer_index, ssd, host, ref_bytes, params=None, **kwargs):
        """
        Args:
            kmer_index (:py:class:`genstore.index.KmerIndex`): The reference minimizer index.
            ssd (:py:class:`genstore.ssd.SsdConfig`): The SSD.
            host (:py:class:`genstore.pipeline.HostMapperModel`): The host mapper.
            ref_bytes (int): Reference data the host mapper needs.
            params (:py:class:`genstore.nmfilter.NmParams`): Defaults to
                :py:class:`genstore.nmfilter.NmParams` with the ``k`` and ``w`` of the index.
            kwargs: Forwarded to :py:class:`genstore.pipeline.BasePipeline`.
        """
        super().__init__(ssd, host, ref_bytes, **kwargs)
        self._kmer_index = kmer_index
        if params is None and isinstance(kmer_index, KmerIndex):
            params = NmParams(k=kmer_index.k, w=kmer_index.w)
        self._params = params

    def check(self):
        if not isinstance(self._kmer_index, KmerIndex):
            raise IndexMismatchError(
                "non-matching filtering needs a KmerIndex, "
                f"got {type(self._kmer_index).__name__}"
            )
        if (self._kmer_index.k, self._kmer_index.w) != (self._params.k, self._params.w):
            raise IndexMismatchError(
                f"index built with k={self._kmer_index.k}, w={self._kmer_index.w}; "
                f"filter uses k={self._params.k}, w={self._params.w}"
            )
        if self._kmer_index.nbytes > self.ssd.dram_bytes:
            raise CapacityError(
                f"KmerIndex needs {self._kmer_index.nbytes} bytes, "
                f"{self.ssd.name} has {self.ssd.dram_bytes} bytes of DRAM"
            )

    def filter(self, reads):
        decisions, _ = nm_filter_reads(
            reads, self._kmer_index, self._params, threads=self.threads
        )
        return decisions

    def structure_bytes(self, reads):
        return 0, reads.nbytes

    def parameters(self):
        return {**self._params.to_dict(), "max_locations": self._kmer_index.max_locations}
