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
Non-matching read filter.

.. currentmodule:: genstore.nmfilter

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: nmfilter

    params.NmParams
    seeding.Seed
    chaining.ChainState
    filter.NmDecision
    filter.NmStats

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: nmfilter

    seeding.minimizers
    seeding.seed_find
    seeding.seed_count_gate
    chaining.chain_score_exact
    chaining.chain_score_approx
    filter.nm_filter
    filter.baseline_filter
    filter.nm_filter_reads

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: nmfilter
    :template: autosummary/submodule.rst

    params
    seeding
    chaining
    filter

"""

from genstore.nmfilter.params import NmParams
from genstore.nmfilter.seeding import Seed, minimizers, seed_count_gate, seed_find
from genstore.nmfilter.chaining import (
    ChainState,
    chain_score_approx,
    chain_score_exact,
    chain_state,
    gap_cost_approx,
    gap_cost_exact,
)
from genstore.nmfilter.filter import (
    NmDecision,
    NmStats,
    baseline_filter,
    nm_filter,
    nm_filter_reads,
    read_nm_decisions,
    write_nm_decisions,
)

__ALL__ = [
    "NmParams",
    "Seed",
    "minimizers",
    "seed_count_gate",
    "seed_find",
    "ChainState",
    "chain_score_approx",
    "chain_score_exact",
    "chain_state",
    "gap_cost_approx",
    "gap_cost_exact",
    "NmDecision",
    "NmStats",
    "baseline_filter",
    "nm_filter",
    "nm_filter_reads",
    "read_nm_decisions",
    "write_nm_decisions",
]
