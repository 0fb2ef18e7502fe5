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
Slow, independent oracles used to check the filters.

.. currentmodule:: genstore.refkit

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: refkit

    oracles.naive_exact_match
    oracles.naive_minimizers
    oracles.naive_reference_minimizers
    oracles.naive_seeds
    oracles.naive_chain
    oracles.naive_chain_score
    oracles.oracle_result

"""

from genstore.refkit.oracles import (
    MAX_REFERENCE_BASES,
    MAX_SEEDS,
    OracleResult,
    naive_chain,
    naive_chain_score,
    naive_exact_match,
    naive_minimizers,
    naive_reference_minimizers,
    naive_seeds,
    oracle_result,
    reverse_complement,
)

__ALL__ = [
    "MAX_REFERENCE_BASES",
    "MAX_SEEDS",
    "OracleResult",
    "naive_chain",
    "naive_chain_score",
    "naive_exact_match",
    "naive_minimizers",
    "naive_reference_minimizers",
    "naive_seeds",
    "oracle_result",
    "reverse_complement",
]
