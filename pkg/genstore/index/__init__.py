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
Offline index structures and their binary files.

.. currentmodule:: genstore.index

.. rubric:: Structures

.. autosummary::
    :nosignatures:
    :toctree: index

    params.IndexParams
    srtable.SrTable
    skindex.SkIndex
    kmer_index.KmerIndex
    minimizer.Minimizer

----

.. rubric:: Builders

.. autosummary::
    :nosignatures:
    :toctree: index

    srtable.build_srtable
    skindex.build_skindex
    skindex.skindex_size_estimate
    kmer_index.build_kmer_index

----

.. rubric:: Hashing

.. autosummary::
    :nosignatures:
    :toctree: index

    hashing.fingerprint
    hashing.hash64
    hashing.hash64_array

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: index
    :template: autosummary/submodule.rst

    hashing
    minimizer
    params
    srtable
    skindex
    kmer_index
    serialization

"""

from genstore.index.hashing import (
    canonical_kmers,
    fingerprint,
    hash64,
    hash64_array,
    join_fingerprint,
    split_fingerprint,
)
from genstore.index.kmer_index import (
    KmerIndex,
    build_kmer_index,
    reference_minimizers,
    unpack_location,
)
from genstore.index.minimizer import Minimizer, scan_minimizers, window_minimizers
from genstore.index.params import IndexParams
from genstore.index.serialization import dumps, load_index, loads, save_index
from genstore.index.skindex import (
    HUMAN_REFERENCE_BASES,
    SkIndex,
    build_skindex,
    skindex_size_estimate,
)
from genstore.index.srtable import SrTable, build_srtable

__ALL__ = [
    "canonical_kmers",
    "fingerprint",
    "hash64",
    "hash64_array",
    "join_fingerprint",
    "split_fingerprint",
    "KmerIndex",
    "build_kmer_index",
    "reference_minimizers",
    "unpack_location",
    "Minimizer",
    "scan_minimizers",
    "window_minimizers",
    "IndexParams",
    "dumps",
    "load_index",
    "loads",
    "save_index",
    "HUMAN_REFERENCE_BASES",
    "SkIndex",
    "build_skindex",
    "skindex_size_estimate",
    "SrTable",
    "build_srtable",
]
