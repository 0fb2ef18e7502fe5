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
Exact-match filter.

.. currentmodule:: genstore.emfilter

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: emfilter

    merge.EmDecision
    merge.EmStats

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: emfilter

    merge.em_filter
    merge.em_filter_partitioned
    reads.em_filter_reads
    reads.write_em_decisions
    reads.read_em_decisions

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: emfilter
    :template: autosummary/submodule.rst

    merge
    reads

"""

from genstore.emfilter.merge import (
    EmDecision,
    EmStats,
    em_filter,
    em_filter_partitioned,
    partition_bounds,
)
from genstore.emfilter.reads import em_filter_reads, read_em_decisions, write_em_decisions

__ALL__ = [
    "EmDecision",
    "EmStats",
    "em_filter",
    "em_filter_partitioned",
    "partition_bounds",
    "em_filter_reads",
    "read_em_decisions",
    "write_em_decisions",
]
