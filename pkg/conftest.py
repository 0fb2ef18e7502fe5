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

"""pytest configuration."""

import numpy
import pytest

import genstore
from genstore.index import IndexParams, build_kmer_index, build_skindex
from genstore.synth import gen_longreads, gen_reads, gen_reference

collect_ignore = ["examples", "setup.py"]


@pytest.fixture(autouse=True)
def add_common_namespaces(doctest_namespace):
    """Adds the common namespace to all tests."""

    doctest_namespace["np"] = numpy
    doctest_namespace["seqio"] = genstore.seqio
    doctest_namespace["index"] = genstore.index
    doctest_namespace["ssd"] = genstore.ssd
    doctest_namespace["pipeline"] = genstore.pipeline


@pytest.fixture(scope="session")
def small_reference():
    """A 200 kbp random reference."""
    return gen_reference(200_000, seed=7)


@pytest.fixture(scope="session")
def short_reads(small_reference):
    """2000 reads of 150 bp, 80% of them exact."""
    return gen_reads(small_reference, read_len=150, count=2000, exact_fraction=0.8, seed=11)


@pytest.fixture(scope="session")
def long_reads(small_reference):
    """200 noisy long reads, half of them from the reference."""
    return gen_longreads(
        small_reference, mean_len=2000, count=200, align_fraction=0.5, error_rate=0.05, seed=13
    )


@pytest.fixture(scope="session")
def skindex(small_reference):
    return build_skindex(small_reference, 150)


@pytest.fixture(scope="session")
def kmer_index(small_reference):
    return build_kmer_index(small_reference, IndexParams())
