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

"""Single entry point over both filtering pipelines."""

from genstore.errors import IndexMismatchError
from genstore.modes import FilterMode
from genstore.pipeline.em import EmPipeline
from genstore.pipeline.nm import NmPipeline

PIPELINES = {FilterMode.EM: EmPipeline, FilterMode.NM: NmPipeline}


def run_pipeline(reads, index, filter_mode, ssd, host, ref_bytes, **kwargs):
    """
    Filter ``reads`` with the filter of ``filter_mode`` and model the run.

    Args:
        reads (:py:class:`genstore.seqio.ReadSet`): The reads.
        index: An :py:class:`genstore.index.SkIndex` for ``EM`` or a
            :py:class:`genstore.index.KmerIndex` for ``NM``.
        filter_mode (:py:class:`genstore.modes.FilterMode`): Which filter.
        ssd (:py:class:`genstore.ssd.SsdConfig`): The SSD.
        host (:py:class:`genstore.pipeline.HostMapperModel`): The host mapper.
        ref_bytes (int): Reference data the host mapper needs.
        kwargs: Pipeline options, see :py:class:`genstore.pipeline.BasePipeline`.

    Returns:
        :py:class:`genstore.pipeline.PipelineResult`

    Raises:
        :py:class:`genstore.errors.IndexMismatchError`: When the index does not suit the mode.
        :py:class:`genstore.errors.CapacityError`: When a KmerIndex exceeds the SSD DRAM.

    """
    try:
        pipeline_cls = PIPELINES[FilterMode(filter_mode)]
    except ValueError:
        raise IndexMismatchError(f"unknown filter mode {filter_mode!r}") from None
    return pipeline_cls(index, ssd, host, ref_bytes, **kwargs)(reads)
