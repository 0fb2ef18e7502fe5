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
Collection of Metrics.

.. currentmodule:: genstore.metrics

.. rubric:: Metric

.. autosummary::
    :nosignatures:
    :toctree: metric

    metric.Metric

----

.. rubric:: Filter

.. autosummary::
    :nosignatures:
    :toctree: filter

    filter.ReadsTotal
    filter.ReadsFiltered
    filter.ReadsForwarded
    filter.FilterRatio
    filter.ForwardedBytes
    filter.VerdictHistogram

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: metrics
    :template: autosummary/submodule.rst

    filter
    metric

"""
from genstore.metrics.metric import Metric
from genstore.metrics.filter import (
    FilterRatio,
    ForwardedBytes,
    ReadsFiltered,
    ReadsForwarded,
    ReadsTotal,
    VerdictHistogram,
)

__ALL__ = [
    "Metric",
    "FilterRatio",
    "ForwardedBytes",
    "ReadsFiltered",
    "ReadsForwarded",
    "ReadsTotal",
    "VerdictHistogram",
]
