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

r"""
Minimizer seeding and the seed-count gate.

A seed records where a read minimizer ends in the reference (``x``) and in
the read (``y``). When the read and the reference carry the minimizer on
opposite strands the seed is marked ``rev`` and ``y`` is measured on the
reverse complement of the read, so that colinear seeds of either strand
have increasing ``x`` and ``y``.

>>> from genstore.nmfilter import NmParams
>>> [seed_count_gate(n, NmParams()).name for n in (2, 10, 64)]
['FILTER_LOW_SEEDS', 'CHAIN', 'FORWARD_MANY_SEEDS']
"""

from typing import NamedTuple

from genstore.errors import IndexMismatchError
from genstore.index.minimizer import Minimizer, scan_minimizers
from genstore.modes import GateVerdict


class Seed(NamedTuple):
    """An exact minimizer match, ordered by ``(x, y)``."""

    x: int
    y: int
    w: int
    rev: bool = False


def minimizers(read, k, w):
    """
    Minimizers of a read.

    k-mers overlapping an ambiguous base are skipped. Reads holding fewer
    than ``w`` k-mers yield their single smallest one.

    Args:
        read (:py:class:`genstore.seqio.Read`): The read.
        k (int): k-mer length.
        w (int): Window size.

    Returns:
        list: :py:class:`genstore.index.Minimizer` in read order.

    """
    hashes, ends, strands = scan_minimizers(read.codes, k, w, read.kmer_mask(k))
    return [
        Minimizer(h, e, s)
        for h, e, s in zip(hashes.tolist(), ends.tolist(), strands.tolist())
    ]


def seed_find(read, index, params, cap=True, read_minimizers=None):
    """
    Look the minimizers of a read up in the index, in read order.

    Every stored location of a hit yields one seed. Lookups stop as soon as
    ``params.max_seeds`` seeds are collected.

    Args:
        read (:py:class:`genstore.seqio.Read`): The read.
        index (:py:class:`genstore.index.KmerIndex`): Built with ``params.k`` and ``params.w``.
        params (:py:class:`genstore.nmfilter.NmParams`): Filter parameters.
        cap (bool): Stop at ``params.max_seeds``.
        read_minimizers (list): Precomputed :py:func:`minimizers` of ``read``.

    Returns:
        list: :py:class:`Seed` in discovery order.

    Raises:
        :py:class:`genstore.errors.IndexMismatchError`: When the index uses another k or w.

    """
    if (index.k, index.w) != (params.k, params.w):
        raise IndexMismatchError(
            f"index built with k={index.k}, w={index.w}; filter uses k={params.k}, w={params.w}"
        )
    if read_minimizers is None:
        read_minimizers = minimizers(read, params.k, params.w)
    limit = params.max_seeds if cap else None
    k = params.k
    seeds = []
    for minimizer in read_minimizers:
        for location in index.lookup(minimizer.hash).tolist():
            rev = (location & 1) != minimizer.strand
            y = read.length - minimizer.end + k - 2 if rev else minimizer.end
            seeds.append(Seed(location >> 1, y, k, rev))
            if len(seeds) == limit:
                return seeds
    return seeds


def seed_count_gate(seed_count, params):
    """
    Decide from the seed count alone whether chaining is needed.

    Args:
        seed_count (int): Seeds found, at most ``params.max_seeds``.
        params (:py:class:`genstore.nmfilter.NmParams`): Filter parameters.

    Returns:
        :py:class:`genstore.modes.GateVerdict`

    """
    if not 0 <= seed_count <= params.max_seeds:
        raise ValueError(f"seed count {seed_count} outside [0, {params.max_seeds}]")
    if seed_count < params.min_seeds:
        return GateVerdict.FILTER_LOW_SEEDS
    if seed_count == params.max_seeds:
        return GateVerdict.FORWARD_MANY_SEEDS
    return GateVerdict.CHAIN
