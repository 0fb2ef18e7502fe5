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
Named workloads.

The short-read presets set the share of reads that match the reference
exactly; the long-read presets set the share of reads that align at all,
one per read mapping use case (sequencing errors, rapidly evolving samples,
missing reference, contamination).

>>> get_preset("long-noref-1").align_fraction
0.0035
>>> get_preset("human-short-80").exact_fraction
0.8
"""

from dataclasses import asdict, dataclass

from genstore.errors import ConfigError
from genstore.synth.generators import gen_longreads, gen_reads


@dataclass(frozen=True)
class ShortReadPreset:
    """Fixed-length reads with a set share of exact matches."""

    name: str
    exact_fraction: float
    read_len: int = 150
    subst_rate: float = 0.01
    description: str = ""

    def generate(self, ref, count, seed=0):
        return gen_reads(
            ref,
            read_len=self.read_len,
            count=count,
            exact_fraction=self.exact_fraction,
            subst_rate=self.subst_rate,
            seed=seed,
        )

    def to_dict(self):
        return {"kind": "short", **asdict(self)}


@dataclass(frozen=True)
class LongReadPreset:
    """Noisy variable-length reads with a set share of aligning reads."""

    name: str
    align_fraction: float
    mean_len: int = 10_000
    error_rate: float = 0.10
    description: str = ""

    def generate(self, ref, count, seed=0):
        return gen_longreads(
            ref,
            mean_len=min(self.mean_len, ref.length),
            count=count,
            align_fraction=self.align_fraction,
            error_rate=self.error_rate,
            seed=seed,
        )

    def to_dict(self):
        return {"kind": "long", **asdict(self)}


PRESETS = {
    preset.name: preset
    for preset in (
        ShortReadPreset("human-short-75", 0.75, description="75% exactly matching short reads"),
        ShortReadPreset("human-short-80", 0.80, description="80% exactly matching short reads"),
        ShortReadPreset("human-short-85", 0.85, description="85% exactly matching short reads"),
        LongReadPreset("long-errors-1", 0.474, description="sequencing errors, nanopore run"),
        LongReadPreset("long-errors-2", 0.693, description="sequencing errors, second run"),
        LongReadPreset("long-evolving-1", 0.600, description="rapidly evolving sample"),
        LongReadPreset(
            "long-evolving-2",
            0.231,
            mean_len=150,
            error_rate=0.01,
            description="rapidly evolving sample, short reads",
        ),
        LongReadPreset("long-noref-1", 0.0035, description="sample without a reference"),
        LongReadPreset("long-noref-2", 0.370, description="sample without a reference"),
        LongReadPreset("long-contamination", 0.010, description="contamination screening"),
    )
}


def get_preset(name):
    """
    Look up a workload preset by name.

    Raises:
        :py:class:`genstore.errors.ConfigError`: For an unknown name.

    """
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"unknown workload preset {name!r}, expected one of {sorted(PRESETS)}"
        ) from None
