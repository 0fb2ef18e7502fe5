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
Synthetic references and read sets.

.. currentmodule:: genstore.synth

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: synth

    presets.ShortReadPreset
    presets.LongReadPreset

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: synth

    generators.gen_reference
    generators.gen_reads
    generators.gen_longreads
    presets.get_preset

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: synth
    :template: autosummary/submodule.rst

    generators
    presets

"""

from genstore.synth.generators import (
    GENERATOR_VERSION,
    gen_longreads,
    gen_reads,
    gen_reference,
)
from genstore.synth.presets import PRESETS, LongReadPreset, ShortReadPreset, get_preset

__ALL__ = [
    "GENERATOR_VERSION",
    "gen_longreads",
    "gen_reads",
    "gen_reference",
    "PRESETS",
    "LongReadPreset",
    "ShortReadPreset",
    "get_preset",
]
