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

"""Per-read non-matching filter: seeding, seed-count gate, selective chaining."""

import logging
import struct
from dataclasses import dataclass
from multiprocessing import Pool

from genstore.errors import ParseError
from genstore.modes import GateVerdict, NmVerdict
from genstore.nmfilter.chaining import chain_score_approx, chain_score_exact
from genstore.nmfilter.seeding import seed_count_gate, seed_find

logger = logging.getLogger(__name__)

_RECORD = struct.Struct("<QBi")
NO_SCORE = -1


@dataclass(frozen=True)
class NmDecision:
    """Verdict for one read. ``best_score`` is ``-1`` when chaining was skipped."""

    read_id: int
    verdict: NmVerdict
    best_score: int = NO_SCORE
    seed_count: int = 0

    @property
    def forwarded(self):
        return self.verdict.forwarded


@dataclass(frozen=True)
class NmStats:
    """Verdict histogram of a read set."""

    filtered_low_seeds: int = 0
    filtered_low_chain: int = 0
    forwarded_many_seeds: int = 0
    forwarded_chained: int = 0
    seeds_total: int = 0

    @classmethod
    def from_decisions(cls, decisions):
        counts = {verdict: 0 for verdict in NmVerdict}
        seeds = 0
        for decision in decisions:
            counts[decision.verdict] += 1
            seeds += decision.seed_count
        return cls(
            filtered_low_seeds=counts[NmVerdict.FILTER_LOW_SEEDS],
            filtered_low_chain=counts[NmVerdict.FILTER_LOW_CHAIN],
            forwarded_many_seeds=counts[NmVerdict.FORWARD_MANY_SEEDS],
            forwarded_chained=counts[NmVerdict.FORWARD_CHAINED],
            seeds_total=seeds,
        )

    @property
    def reads_filtered(self):
        return self.filtered_low_seeds + self.filtered_low_chain

    @property
    def reads_forwarded(self):
        return self.forwarded_many_seeds + self.forwarded_chained

    @property
    def reads_total(self):
        return self.reads_filtered + self.reads_forwarded


def best_strand_score(seeds, params, scorer):
    """Chain forward-strand and reverse-strand seeds apart and keep the better score."""
    groups = {}
    for seed in seeds:
        groups.setdefault(seed.rev, []).append(seed)
    return max((scorer(sorted(group), params) for group in groups.values()), default=0)


def _chain_verdict(score, params):
    if score >= params.min_chain_score:
        return NmVerdict.FORWARD_CHAINED
    return NmVerdict.FILTER_LOW_CHAIN


def nm_filter(read, index, params, scorer=chain_score_approx):
    """
    Decide whether a read can be dropped because it would not align.

    Args:
        read (:py:class:`genstore.seqio.Read`): The read.
        index (:py:class:`genstore.index.KmerIndex`): The reference minimizer index.
        params (:py:class:`genstore.nmfilter.NmParams`): Filter parameters.
        scorer (callable): Chain scorer run on reads that pass the gate.

    Returns:
        :py:class:`NmDecision`

    """
    seeds = seed_find(read, index, params)
    gate = seed_count_gate(len(seeds), params)
    if gate == GateVerdict.FILTER_LOW_SEEDS:
        return NmDecision(read.id, NmVerdict.FILTER_LOW_SEEDS, seed_count=len(seeds))
    if gate == GateVerdict.FORWARD_MANY_SEEDS:
        return NmDecision(read.id, NmVerdict.FORWARD_MANY_SEEDS, seed_count=len(seeds))
    score = best_strand_score(seeds, params, scorer)
    return NmDecision(read.id, _chain_verdict(score, params), score, len(seeds))


def baseline_filter(read, index, params):
    """
    The filter a conventional mapper applies after chaining every seed.

    All seeds are collected, reads with fewer than ``params.min_seeds`` are
    dropped and the rest are chained with the exact gap cost.

    Returns:
        :py:class:`NmDecision`: Either ``FILTER_LOW_SEEDS``, ``FILTER_LOW_CHAIN``
        or ``FORWARD_CHAINED``.

    """
    seeds = seed_find(read, index, params, cap=False)
    if len(seeds) < params.min_seeds:
        return NmDecision(read.id, NmVerdict.FILTER_LOW_SEEDS, seed_count=len(seeds))
    score = best_strand_score(seeds, params, chain_score_exact)
    return NmDecision(read.id, _chain_verdict(score, params), score, len(seeds))


_WORKER = {}


def _init_worker(index, params):
    _WORKER.update(index=index, params=params)


def _filter_one(read):
    return nm_filter(read, _WORKER["index"], _WORKER["params"])


def nm_filter_reads(reads, index, params, threads=1, chunksize=64):
    """
    Run :py:func:`nm_filter` on every read.

    Args:
        reads (:py:class:`genstore.seqio.ReadSet`): The reads.
        index (:py:class:`genstore.index.KmerIndex`): The reference minimizer index.
        params (:py:class:`genstore.nmfilter.NmParams`): Filter parameters.
        threads (int): Worker processes. Results keep the input order.
        chunksize (int): Reads handed to a worker at a time.

    Returns:
        (list, :py:class:`NmStats`)

    """
    if threads > 1 and len(reads) > chunksize:
        with Pool(threads, initializer=_init_worker, initargs=(index, params)) as pool:
            decisions = pool.map(_filter_one, list(reads), chunksize=chunksize)
    else:
        decisions = [nm_filter(read, index, params) for read in reads]
    stats = NmStats.from_decisions(decisions)
    logger.debug("non-matching filter: %s", stats)
    return decisions, stats


def write_nm_decisions(decisions, stream):
    """Write one binary record per decision: id, verdict, best score."""
    for decision in decisions:
        stream.write(
            _RECORD.pack(decision.read_id, int(decision.verdict), decision.best_score)
        )


def read_nm_decisions(stream):
    """Inverse of :py:func:`write_nm_decisions`; seed counts are not stored."""
    data = stream.read()
    if len(data) % _RECORD.size:
        raise ParseError("truncated decision record", len(data) // _RECORD.size)
    return [
        NmDecision(read_id, NmVerdict(verdict), score)
        for read_id, verdict, score in _RECORD.iter_unpack(data)
    ]
