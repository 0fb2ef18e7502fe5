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
Brute-force ground truth for the filters.

Everything here works on plain text with Python loops and shares no code
with the index or filter packages, so the two can be checked against each
other. Inputs are capped to keep the quadratic work bounded.

>>> naive_exact_match("ACGT", "ACGTACGTAC")
(0, 4)
>>> naive_exact_match("GGGG", "ACGTACGTAC")
()
>>> naive_chain([(100, 15, 15), (115, 30, 15)])
30
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from genstore.errors import OracleLimitError, UnsortedInputError

MAX_REFERENCE_BASES = 10_000_000
MAX_SEEDS = 4096

_CODE = {"A": 0, "C": 1, "G": 2, "T": 3}
_COMPLEMENT = str.maketrans("ACGTN", "TGCAN")
_MASK64 = (1 << 64) - 1


def _text(sequence):
    if isinstance(sequence, bytes):
        return sequence.decode("ascii").upper()
    if isinstance(sequence, str):
        return sequence.upper()
    return sequence.sequence


def _check_reference(text):
    if len(text) > MAX_REFERENCE_BASES:
        raise OracleLimitError(
            f"reference of {len(text)} bases exceeds the oracle limit of {MAX_REFERENCE_BASES}"
        )


def reverse_complement(text):
    return text.translate(_COMPLEMENT)[::-1]


def naive_exact_match(read, ref, canonical=False):
    """
    Every offset where the read occurs verbatim in the reference.

    Args:
        read: Text, or any object with a ``sequence`` attribute.
        ref: Text, or any object with a ``sequence`` attribute.
        canonical (bool): Also report offsets of the reverse complement.

    Returns:
        tuple: Sorted start offsets.

    """
    read, ref = _text(read), _text(ref)
    _check_reference(ref)
    if not read or len(read) > len(ref):
        return ()
    patterns = {read, reverse_complement(read)} if canonical else {read}
    found = set()
    for pattern in patterns:
        start = ref.find(pattern)
        while start >= 0:
            found.add(start)
            start = ref.find(pattern, start + 1)
    return tuple(sorted(found))


def _mix64(key):
    key &= _MASK64
    key = (~key + (key << 21)) & _MASK64
    key ^= key >> 24
    key = (key + (key << 3) + (key << 8)) & _MASK64
    key ^= key >> 14
    key = (key + (key << 2) + (key << 4)) & _MASK64
    key ^= key >> 28
    key = (key + (key << 31)) & _MASK64
    return key


def _kmer(text, start, k):
    """``(hash, strand)`` of the canonical k-mer at ``start``, or None when ambiguous."""
    forward = reverse = 0
    for j, base in enumerate(text[start : start + k]):
        code = _CODE.get(base)
        if code is None:
            return None
        forward = (forward << 2) | code
        reverse |= (3 - code) << (2 * j)
    if reverse < forward:
        return _mix64(reverse), 1
    return _mix64(forward), 0


def naive_minimizers(seq, k, w):
    """
    Window minimizers by direct scan.

    Every window of ``w`` consecutive k-mers picks the unambiguous k-mer with
    the smallest canonical hash, leftmost on ties; a sequence shorter than
    one window picks its single smallest k-mer.

    Returns:
        list: ``(hash, end, strand)`` in sequence order, each offset once.

    """
    text = _text(seq)
    count = len(text) - k + 1
    if count <= 0:
        return []
    kmers = [_kmer(text, i, k) for i in range(count)]

    def smallest(lo, hi):
        best = None
        for i in range(lo, hi):
            if kmers[i] is not None and (best is None or kmers[i][0] < kmers[best][0]):
                best = i
        return best

    if count < w:
        picks = {smallest(0, count)}
    else:
        picks = {smallest(s, s + w) for s in range(count - w + 1)}
    picks.discard(None)
    return [(kmers[i][0], i + k - 1, kmers[i][1]) for i in sorted(picks)]


def naive_reference_minimizers(ref, k, w, max_locations=None):
    """
    Minimizer hash to ``[(end, strand), ...]`` over every record of ``ref``.

    Records shorter than one window are skipped; minimizers seen more than
    ``max_locations`` times are dropped.
    """
    table = {}
    if isinstance(ref, (str, bytes)):
        records = [(0, _text(ref))]
    else:
        sequence = ref.sequence
        records = [(start, sequence[start:end]) for _, start, end in ref.records()]
    _check_reference("".join(text for _, text in records))
    for offset, text in records:
        if len(text) < k + w - 1:
            continue
        for value, end, strand in naive_minimizers(text, k, w):
            table.setdefault(value, []).append((offset + end, strand))
    if max_locations is not None:
        table = {h: locs for h, locs in table.items() if len(locs) <= max_locations}
    return table


def naive_seeds(read, ref_table, k, w):
    """
    Every seed of ``read`` against a table from :py:func:`naive_reference_minimizers`.

    Returns:
        list: ``(x, y, k, rev)`` tuples sorted by ``(x, y)``.

    """
    text = _text(read)
    seeds = []
    for value, end, strand in naive_minimizers(text, k, w):
        for ref_end, ref_strand in ref_table.get(value, ()):
            rev = ref_strand != strand
            y = len(text) - end + k - 2 if rev else end
            seeds.append((ref_end, y, k, rev))
    return sorted(seeds)


def _gap_cost(gap, k):
    gap = abs(gap)
    return int(0.01 * k * gap + 0.5 * math.log2(gap))


def naive_chain(seeds, k=15, max_gap=5000):
    """
    Best chain score over every predecessor of every seed.

    Args:
        seeds: ``(x, y, w, ...)`` sequences sorted by ``(x, y)``.
        k (int): k-mer length used by the gap cost.
        max_gap (int): Larger diagonal gaps cannot be chained.

    Returns:
        int: 0 for no seeds.

    """
    if len(seeds) > MAX_SEEDS:
        raise OracleLimitError(f"{len(seeds)} seeds exceed the oracle limit of {MAX_SEEDS}")
    for i in range(1, len(seeds)):
        if tuple(seeds[i][:2]) < tuple(seeds[i - 1][:2]):
            raise UnsortedInputError("seed list", i)
    f = []
    for i, (x, y, width) in enumerate(seed[:3] for seed in seeds):
        best = width
        for j in range(i):
            dx = x - seeds[j][0]
            dy = y - seeds[j][1]
            if dx <= 0 or dy <= 0 or abs(dy - dx) > max_gap:
                continue
            gap = dy - dx
            score = f[j] + min(dx, dy, width) - (_gap_cost(gap, k) if gap else 0)
            best = max(best, score)
        f.append(best)
    return max(f, default=0)


def naive_chain_score(read, ref_table, k, w, max_gap=5000):
    """Best score over both strands of the uncapped seeds of ``read``."""
    seeds = naive_seeds(read, ref_table, k, w)
    by_strand = {}
    for seed in seeds:
        by_strand.setdefault(seed[3], []).append(seed)
    return max(
        (naive_chain(group, k, max_gap) for group in by_strand.values()), default=0
    )


@dataclass(frozen=True)
class OracleResult:
    """Ground truth for one read."""

    read_id: int
    exact_locations: Tuple[int, ...]
    minimizers: Tuple[Tuple[int, int, int], ...]
    chain_score: Optional[int] = None


def oracle_result(read, ref, k=15, w=10, ref_table=None, max_gap=5000):
    """
    Collect every oracle verdict for ``read``.

    ``chain_score`` is only computed when ``ref_table`` is given, as the
    table is the expensive part and is shared between reads.
    """
    score = None
    if ref_table is not None:
        score = naive_chain_score(read, ref_table, k, w, max_gap)
    return OracleResult(
        read_id=getattr(read, "id", 0),
        exact_locations=naive_exact_match(read, ref),
        minimizers=tuple(naive_minimizers(read, k, w)),
        chain_score=score,
    )
