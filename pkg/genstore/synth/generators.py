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
Seeded workload generators.

Every generator draws from its own :py:func:`numpy.random.default_rng`, so the
same arguments always give the same bases, headers and read order.

.. testcode::

    from genstore.synth import gen_reference, gen_reads

    ref = gen_reference(1000, seed=1)
    reads = gen_reads(ref, read_len=50, count=10, exact_fraction=1.0, seed=2)
    print(len(reads), reads.read_length)
    print(all(read.sequence in ref.sequence for read in reads))

.. testoutput::

    10 50
    True

"""

import logging

import numpy as np

from genstore.seqio import Read, ReadSet, ReferenceGenome, decode, pack, revcomp_codes

GENERATOR_VERSION = "genstore-synth/1"

logger = logging.getLogger(__name__)


def _check_fraction(name, value):
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value}")


def _make_read(read_id, codes, header):
    codes = np.asarray(codes, dtype=np.uint8)
    return Read(id=read_id, packed=pack(codes), length=len(codes), header=header)


def _pick(rng, count, fraction):
    """A boolean mask with exactly ``round(count * fraction)`` set entries."""
    mask = np.zeros(count, dtype=bool)
    mask[rng.permutation(count)[: int(round(count * fraction))]] = True
    return mask


def gen_reference(length, seed=0, name="synthetic"):
    """
    A single-record reference of uniformly random bases.

    Args:
        length (int): Number of bases, at least 1.
        seed (int): Seed of the generator.
        name (str): Record name.

    Returns:
        :py:class:`genstore.seqio.ReferenceGenome`

    """
    if length < 1:
        raise ValueError(f"reference length must be positive, got {length}")
    rng = np.random.default_rng(seed)
    codes = rng.integers(0, 4, size=length, dtype=np.uint8)
    logger.debug("generated reference of %d bases (seed %d)", length, seed)
    return ReferenceGenome.from_records([(name, decode(codes))])


def gen_reads(ref, read_len, count, exact_fraction, subst_rate=0.01, seed=0):
    """
    Fixed-length reads sampled uniformly from ``ref``.

    Exactly ``round(count * exact_fraction)`` reads are verbatim substrings of
    the reference. Every other read receives ``Binomial(read_len, subst_rate)``
    substitutions at uniform positions, and at least one. Only substitutions
    are applied.

    Args:
        ref (:py:class:`genstore.seqio.ReferenceGenome`): Source of the reads.
        read_len (int): Read length, at most the reference length.
        count (int): Number of reads.
        exact_fraction (float): Share of error-free reads.
        subst_rate (float): Per-base substitution probability of mutated reads.
        seed (int): Seed of the generator.

    Returns:
        :py:class:`genstore.seqio.ReadSet`: Reads numbered from 0, headers
        recording the source offset, whether the read is exact and the
        generator version.

    """
    _check_fraction("exact_fraction", exact_fraction)
    _check_fraction("subst_rate", subst_rate)
    if not 1 <= read_len <= ref.length:
        raise ValueError(f"read length {read_len} must lie in [1, {ref.length}]")
    rng = np.random.default_rng(seed)
    starts = rng.integers(0, ref.length - read_len + 1, size=count)
    exact = _pick(rng, count, exact_fraction)
    windows = ref.codes[starts[:, None] + np.arange(read_len)]

    reads = []
    for i in range(count):
        codes = windows[i].copy()
        if not exact[i]:
            n_subst = max(1, int(rng.binomial(read_len, subst_rate)))
            positions = rng.choice(read_len, size=min(n_subst, read_len), replace=False)
            shift = rng.integers(1, 4, size=len(positions), dtype=np.uint8)
            codes[positions] = (codes[positions] + shift) % 4
        header = f"read{i} src={int(starts[i])} exact={int(exact[i])} {GENERATOR_VERSION}"
        reads.append(_make_read(i, codes, header))
    logger.info(
        "generated %d reads of %d bases, %d exact (seed %d)",
        count,
        read_len,
        int(exact.sum()),
        seed,
    )
    return ReadSet(tuple(reads))


def _apply_errors(rng, codes, error_rate, indel_fraction):
    """Substitutions, insertions and deletions at ``error_rate`` per base."""
    hits = np.flatnonzero(rng.random(len(codes)) < error_rate)
    if not len(hits):
        return codes
    kinds = rng.random(len(hits))
    out = []
    previous = 0
    for position, kind in zip(hits, kinds):
        out.append(codes[previous:position])
        base = codes[position]
        if kind >= indel_fraction:
            out.append([(base + rng.integers(1, 4)) % 4])
        elif kind < indel_fraction / 2:
            out.append([base, rng.integers(0, 4)])
        # otherwise the base is deleted
        previous = position + 1
    out.append(codes[previous:])
    mutated = np.concatenate([np.asarray(part, dtype=np.uint8) for part in out])
    return mutated if len(mutated) else codes[:1]


def gen_longreads(
    ref,
    mean_len,
    count,
    align_fraction,
    error_rate=0.10,
    seed=0,
    indel_fraction=0.05,
    reverse_fraction=0.5,
):
    """
    Variable-length reads, a fixed share of which come from ``ref``.

    Lengths follow a gamma distribution with mean ``mean_len``, capped at the
    reference length. Exactly ``round(count * align_fraction)`` reads are
    sampled from the reference, taken from the reverse strand with
    probability ``reverse_fraction`` and then hit by errors at
    ``error_rate`` per base, ``indel_fraction`` of which are insertions or
    deletions. The remaining reads are random sequence.

    Args:
        ref (:py:class:`genstore.seqio.ReferenceGenome`): Source of the aligning reads.
        mean_len (int): Mean read length.
        count (int): Number of reads.
        align_fraction (float): Share of reads sampled from the reference.
        error_rate (float): Per-base error probability of aligning reads.
        seed (int): Seed of the generator.
        indel_fraction (float): Share of errors that are indels.
        reverse_fraction (float): Share of aligning reads taken from the reverse strand.

    Returns:
        :py:class:`genstore.seqio.ReadSet`

    """
    for name, value in (
        ("align_fraction", align_fraction),
        ("error_rate", error_rate),
        ("indel_fraction", indel_fraction),
        ("reverse_fraction", reverse_fraction),
    ):
        _check_fraction(name, value)
    if mean_len < 1:
        raise ValueError(f"mean read length must be positive, got {mean_len}")
    rng = np.random.default_rng(seed)
    lengths = np.clip(np.rint(rng.gamma(4.0, mean_len / 4.0, size=count)), 1, ref.length)
    lengths = lengths.astype(np.int64)
    aligning = _pick(rng, count, align_fraction)
    reverse = rng.random(count) < reverse_fraction

    reads = []
    for i in range(count):
        length = int(lengths[i])
        if aligning[i]:
            start = int(rng.integers(0, ref.length - length + 1))
            codes = ref.codes[start : start + length]
            if reverse[i]:
                codes = revcomp_codes(codes)
            codes = _apply_errors(rng, codes, error_rate, indel_fraction)
            origin = f"src={start} strand={'-' if reverse[i] else '+'}"
        else:
            codes = rng.integers(0, 4, size=length, dtype=np.uint8)
            origin = "src=none"
        header = f"read{i} {origin} aligns={int(aligning[i])} {GENERATOR_VERSION}"
        reads.append(_make_read(i, codes, header))
    logger.info(
        "generated %d long reads (mean %d bases), %d aligning (seed %d)",
        count,
        mean_len,
        int(aligning.sum()),
        seed,
    )
    return ReadSet(tuple(reads))
