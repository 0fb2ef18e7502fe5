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

"""Tests for :py:mod:`genstore.nmfilter`."""

import io
import random

import pytest

from genstore.errors import IndexMismatchError, UnsortedInputError
from genstore.modes import GateVerdict, NmVerdict
from genstore.nmfilter import (
    NmParams,
    NmStats,
    Seed,
    baseline_filter,
    chain_score_approx,
    chain_score_exact,
    chain_state,
    gap_cost_approx,
    gap_cost_exact,
    minimizers,
    nm_filter,
    nm_filter_reads,
    read_nm_decisions,
    seed_count_gate,
    seed_find,
    write_nm_decisions,
)
from genstore.refkit import naive_chain, naive_minimizers, naive_reference_minimizers, naive_seeds
from genstore.seqio import Read, ReadSet
from genstore.synth import gen_longreads


def _random_read(rng, read_id, length):
    return Read.from_text(read_id, "".join(rng.choice("ACGT") for _ in range(length)))


@pytest.mark.parametrize("k,w", [(15, 10), (19, 10), (21, 11)])
def test_minimizers_match_direct_scan(k, w):
    rng = random.Random(k * 100 + w)
    for i in range(300):
        read = _random_read(rng, i, rng.randint(k, 400))
        assert minimizers(read, k, w) == naive_minimizers(read.sequence, k, w)


def test_minimizers_skip_ambiguous_kmers():
    read = Read.from_text(0, "ACGTTGCATGCAAGTCNACGTTGCATGCAAGTCA")
    assert minimizers(read, 15, 3) == naive_minimizers(read.sequence, 15, 3)


def test_seeds_match_brute_force(small_reference, kmer_index, long_reads):
    params = NmParams()
    table = naive_reference_minimizers(small_reference, 15, 10, 495)
    for read in list(long_reads)[:20]:
        seeds = sorted(seed_find(read, kmer_index, params, cap=False))
        assert seeds == naive_seeds(read, table, 15, 10)


def test_seed_cap(long_reads, kmer_index):
    params = NmParams(max_seeds=8)
    for read in long_reads:
        assert len(seed_find(read, kmer_index, params)) <= 8


def test_seed_count_gate():
    params = NmParams(min_seeds=3, max_seeds=64)
    assert seed_count_gate(0, params) == GateVerdict.FILTER_LOW_SEEDS
    assert seed_count_gate(2, params) == GateVerdict.FILTER_LOW_SEEDS
    assert seed_count_gate(3, params) == GateVerdict.CHAIN
    assert seed_count_gate(63, params) == GateVerdict.CHAIN
    assert seed_count_gate(64, params) == GateVerdict.FORWARD_MANY_SEEDS
    with pytest.raises(ValueError):
        seed_count_gate(65, params)


def test_approximate_gap_cost_never_exceeds_exact():
    for gap in list(range(1, 5001)) + [-1, -77, -4999]:
        assert gap_cost_approx(gap, 15) <= gap_cost_exact(gap, 15)


def _random_seeds(rng):
    count = rng.randint(3, 63)
    points = set()
    while len(points) < count:
        x = rng.randint(0, 3000)
        points.add((x, max(0, x + rng.randint(-200, 200))))
    return [Seed(x, y, 15) for x, y in sorted(points)]


def test_approximate_chaining_over_estimates():
    rng = random.Random(2)
    params = NmParams()
    for _ in range(2000):
        seeds = _random_seeds(rng)
        assert chain_score_approx(seeds, params) >= chain_score_exact(seeds, params)


def test_exact_chaining_equals_full_recurrence_with_long_lookback():
    rng = random.Random(3)
    params = NmParams()
    for _ in range(500):
        seeds = _random_seeds(rng)
        state = chain_state(seeds, params, lookback=len(seeds))
        assert state.best == naive_chain(seeds, 15, params.max_gap)


def test_chain_of_colinear_seeds():
    seeds = [Seed(100 + 15 * i, 15 * i, 15) for i in range(4)]
    state = chain_state(seeds, NmParams())
    assert state.best == 60
    assert state.predecessors == (-1, 0, 1, 2)


def test_chaining_rejects_unsorted_seeds():
    with pytest.raises(UnsortedInputError):
        chain_score_exact([Seed(10, 5, 15), Seed(3, 1, 15)], NmParams())


def test_no_read_is_lost_relative_to_baseline_filter(kmer_index, small_reference):
    params = NmParams()
    reads = gen_longreads(
        small_reference, mean_len=600, count=300, align_fraction=0.5, error_rate=0.15, seed=5
    )
    for read in reads:
        if baseline_filter(read, kmer_index, params).forwarded:
            assert nm_filter(read, kmer_index, params).forwarded


def test_random_reads_are_filtered(kmer_index, small_reference):
    reads = gen_longreads(small_reference, 2000, 200, align_fraction=0.0, seed=8)
    _, stats = nm_filter_reads(reads, kmer_index, NmParams())
    assert stats.reads_forwarded / stats.reads_total <= 0.02


def test_error_free_long_reads_skip_chaining(kmer_index, small_reference):
    reads = gen_longreads(
        small_reference, 4000, 100, align_fraction=1.0, error_rate=0.0, seed=9
    )
    decisions, _ = nm_filter_reads(reads, kmer_index, NmParams())
    for decision, read in zip(decisions, reads):
        if read.length >= 1000:
            assert decision.verdict == NmVerdict.FORWARD_MANY_SEEDS


def test_verdict_histogram(long_reads, kmer_index):
    decisions, stats = nm_filter_reads(long_reads, kmer_index, NmParams())
    assert stats == NmStats.from_decisions(decisions)
    assert stats.reads_total == len(long_reads)
    assert stats.forwarded_many_seeds > 0
    assert stats.reads_filtered > 0


def test_worker_count_never_changes_decisions(long_reads, kmer_index):
    params = NmParams()
    streams = []
    for threads in (1, 2):
        decisions, _ = nm_filter_reads(long_reads, kmer_index, params, threads, chunksize=16)
        out = io.BytesIO()
        write_nm_decisions(decisions, out)
        streams.append(out.getvalue())
    assert streams[0] == streams[1]


def test_decision_stream_is_read_back(long_reads, kmer_index):
    decisions, _ = nm_filter_reads(long_reads, kmer_index, NmParams())
    out = io.BytesIO()
    write_nm_decisions(decisions, out)
    out.seek(0)
    restored = read_nm_decisions(out)
    assert [(d.read_id, d.verdict, d.best_score) for d in restored] == [
        (d.read_id, d.verdict, d.best_score) for d in decisions
    ]


def test_index_parameters_must_match(long_reads, kmer_index):
    with pytest.raises(IndexMismatchError):
        nm_filter(long_reads[0], kmer_index, NmParams(k=17))


def test_params_validation():
    with pytest.raises(ValueError):
        NmParams(min_seeds=10, max_seeds=5)
    with pytest.raises(ValueError):
        NmParams(lookback=0)


def test_empty_read_set(kmer_index):
    decisions, stats = nm_filter_reads(ReadSet(), kmer_index, NmParams())
    assert decisions == []
    assert stats.reads_total == 0
