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

"""Tests for :py:mod:`genstore.synth`."""

import numpy as np
import pytest

from genstore.errors import ConfigError
from genstore.refkit import reverse_complement
from genstore.synth import (
    GENERATOR_VERSION,
    PRESETS,
    LongReadPreset,
    ShortReadPreset,
    gen_longreads,
    gen_reads,
    gen_reference,
    get_preset,
)


def _header_fields(read):
    return dict(field.split("=") for field in read.header.split() if "=" in field)


def test_reference_is_deterministic_and_uniform():
    ref = gen_reference(100_000, seed=5)
    assert ref.length == 100_000
    assert ref.packed == gen_reference(100_000, seed=5).packed
    assert ref.sequence != gen_reference(100_000, seed=6).sequence
    counts = np.bincount(ref.codes, minlength=4) / ref.length
    assert np.allclose(counts, 0.25, atol=0.01)
    with pytest.raises(ValueError):
        gen_reference(0)


def test_reads_are_deterministic(small_reference):
    first = gen_reads(small_reference, 100, 50, 0.5, seed=3)
    assert first == gen_reads(small_reference, 100, 50, 0.5, seed=3)
    assert first != gen_reads(small_reference, 100, 50, 0.5, seed=4)


def test_exact_fraction_and_headers(small_reference):
    reads = gen_reads(small_reference, 150, 400, 0.75, seed=9)
    assert [read.id for read in reads] == list(range(400))
    text = small_reference.sequence
    exact = 0
    for read in reads:
        fields = _header_fields(read)
        start = int(fields["src"])
        window = text[start : start + 150]
        assert read.header.endswith(GENERATOR_VERSION)
        if fields["exact"] == "1":
            exact += 1
            assert read.sequence == window
        else:
            assert 1 <= sum(a != b for a, b in zip(read.sequence, window)) < 150
    assert exact == 300


def test_read_arguments_are_checked(small_reference):
    with pytest.raises(ValueError):
        gen_reads(small_reference, 150, 10, 1.5)
    with pytest.raises(ValueError):
        gen_reads(small_reference, 150, 10, 0.5, subst_rate=-0.1)
    with pytest.raises(ValueError):
        gen_reads(small_reference, small_reference.length + 1, 10, 0.5)
    with pytest.raises(ValueError):
        gen_longreads(small_reference, 1000, 10, 0.5, error_rate=2.0)
    with pytest.raises(ValueError):
        gen_longreads(small_reference, 0, 10, 0.5)


def test_long_reads(small_reference):
    reads = gen_longreads(small_reference, 3000, 300, 0.4, error_rate=0.0, seed=21)
    assert reads == gen_longreads(small_reference, 3000, 300, 0.4, error_rate=0.0, seed=21)
    lengths = np.array([read.length for read in reads])
    assert lengths.min() >= 1
    assert lengths.max() <= small_reference.length
    assert 2500 < lengths.mean() < 3500
    aligning = [read for read in reads if _header_fields(read)["aligns"] == "1"]
    assert len(aligning) == 120
    text = small_reference.sequence
    for read in aligning:
        fields = _header_fields(read)
        start = int(fields["src"])
        source = text[start : start + read.length]
        if fields["strand"] == "-":
            source = reverse_complement(source)
        assert read.sequence == source
    strands = {_header_fields(read)["strand"] for read in aligning}
    assert strands == {"+", "-"}


def test_long_read_errors_change_lengths(small_reference):
    reads = gen_longreads(
        small_reference, 2000, 50, 1.0, error_rate=0.2, indel_fraction=1.0, seed=2
    )
    text = small_reference.sequence
    changed = 0
    for read in reads:
        start = int(_header_fields(read)["src"])
        assert read.length >= 1
        changed += read.sequence != text[start : start + read.length]
    assert changed == len(reads)


def test_presets():
    assert get_preset("human-short-85").exact_fraction == 0.85
    assert get_preset("long-errors-1").align_fraction == 0.474
    assert get_preset("long-contamination").align_fraction == 0.010
    assert all(name == preset.name for name, preset in PRESETS.items())
    kinds = {type(preset) for preset in PRESETS.values()}
    assert kinds == {ShortReadPreset, LongReadPreset}
    assert get_preset("human-short-75").to_dict()["kind"] == "short"
    with pytest.raises(ConfigError):
        get_preset("human-short-99")


def test_presets_generate(small_reference):
    reads = get_preset("human-short-80").generate(small_reference, 100, seed=1)
    assert reads.read_length == 150
    long_reads = get_preset("long-noref-2").generate(small_reference, 20, seed=1)
    assert len(long_reads) == 20
    tiny = gen_reference(500, seed=1)
    capped = LongReadPreset("tiny", 1.0).generate(tiny, 5, seed=1)
    assert all(read.length <= 500 + 100 for read in capped)
