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
End-to-end pipelines: real filtering under the SSD and host models.

.. currentmodule:: genstore.pipeline

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: pipeline

    analytic.TimingInputs
    analytic.DmInputs
    report.HostMapperModel
    report.PipelineReport
    model.Workload
    base_pipeline.BasePipeline
    em.EmPipeline
    nm.NmPipeline

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: pipeline

    analytic.t_ideal_isf
    analytic.t_ideal_osf
    analytic.dm_saving
    model.model_workload
    run.run_pipeline

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: pipeline
    :template: autosummary/submodule.rst

    analytic
    report
    model
    base_pipeline
    em
    nm
    run

"""

from genstore.pipeline.analytic import (
    DmInputs,
    TimingInputs,
    dm_saving,
    t_ideal_isf,
    t_ideal_osf,
    t_preloaded,
)
from genstore.pipeline.report import (
    HOST_THROUGHPUT_GBPS,
    REPORT_SCHEMA,
    HostMapperModel,
    PipelineReport,
    host_model,
    read_report,
    validate_report,
    write_report,
)
from genstore.pipeline.model import Workload, model_workload
from genstore.pipeline.base_pipeline import BasePipeline, PipelineResult
from genstore.pipeline.em import EmPipeline
from genstore.pipeline.nm import NmPipeline
from genstore.pipeline.run import run_pipeline

__ALL__ = [
    "DmInputs",
    "TimingInputs",
    "dm_saving",
    "t_ideal_isf",
    "t_ideal_osf",
    "t_preloaded",
    "HOST_THROUGHPUT_GBPS",
    "REPORT_SCHEMA",
    "HostMapperModel",
    "PipelineReport",
    "host_model",
    "read_report",
    "validate_report",
    "write_report",
    "Workload",
    "model_workload",
    "BasePipeline",
    "PipelineResult",
    "EmPipeline",
    "NmPipeline",
    "run_pipeline",
]
