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

"""Window minimizer selection, shared by the reference index and the read scanner."""

from typing import NamedTuple

import numpy as np

from genstore.index.hashing import canonical_kmers, hash64_array

_NO_KMER = np.iinfo(np.uint64).max


class Minimizer(NamedTuple):
    """A selected k-mer: its hash, the offset of its last base, and its strand."""

    hash: int
    end: int
    strand: int


def window_minimizers(hashes, valid, w):
    """
    Start offsets of the window minimizers.

    Every window of ``w`` consecutive k-mers contributes its valid k-mer with
    the smallest hash, the leftmost one on ties. Offsets picked by overlapping
    windows are reported once. Sequences with fewer than ``w`` k-mers
    contribute their single smallest valid k-mer.

    Args:
        hashes (:py:class:`numpy.ndarray`): ``uint64`` hash of every k-mer.
        valid (:py:class:`numpy.ndarray`): Boolean mask of usable k-mers.
        w (int): Window size, in k-mers.

    Returns:
        :py:class:`numpy.ndarray`: Sorted ``int64`` k-mer start offsets.

    """
    if w < 1:
        raise ValueError("w must be at least 1")
    hashes = np.asarray(hashes, dtype=np.uint64)
    valid = np.asarray(valid, dtype=bool)
    count = len(hashes)
    usable = np.flatnonzero(valid)
    if count == 0 or len(usable) == 0:
        return np.zeros(0, dtype=np.int64)
    if count < w:
        best = usable[np.argmin(hashes[usable])]
        return np.array([best], dtype=np.int64)

    keyed = np.where(valid, hashes, _NO_KMER)
    windows = np.lib.stride_tricks.sliding_window_view(keyed, w)
    picks = np.argmin(windows, axis=1).astype(np.int64) + np.arange(count - w + 1)

    # a window whose pick is masked is either empty or holds a valid k-mer
    # hashing to the sentinel itself
    for start in np.flatnonzero(~valid[picks]):
        inside = np.flatnonzero(valid[start : start + w])
        if len(inside) == 0:
            picks[start] = -1
        else:
            picks[start] = start + inside[np.argmin(hashes[start + inside])]
    return np.unique(picks[picks >= 0])


def scan_minimizers(codes, k, w, valid=None):
    """
    Minimizers of a sequence over canonical k-mers.

    Args:
        codes (:py:class:`numpy.ndarray`): 2-bit codes.
        k (int): k-mer length, at most 31.
        w (int): Window size.
        valid (:py:class:`numpy.ndarray`): Optional mask of usable k-mer starts.

    Returns:
        (:py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`, :py:class:`numpy.ndarray`):
        hashes, end offsets and strands of the minimizers, in sequence order.

    """
    values, strands = canonical_kmers(codes, k)
    hashes = hash64_array(values)
    if valid is None:
        valid = np.ones(len(values), dtype=bool)
    picks = window_minimizers(hashes, valid, w)
    return hashes[picks], picks + (k - 1), strands[picks]
