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
Energy model: component powers and composable energy executors.

.. currentmodule:: genstore.energy

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: energy

    power.AcceleratorUnit
    power.PowerComponent
    power.PowerTable
    executor.Activity
    executor.EnergyExecutor
    executor.ComponentEnergy
    executor.SumEnergy

----

.. rubric:: Functions

.. autosummary::
    :nosignatures:
    :toctree: energy

    power.accelerator_power_w
    estimate.energy_estimate

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: energy
    :template: autosummary/submodule.rst

    power
    executor
    estimate

"""

from genstore.energy.power import (
    ACCELERATOR,
    ACCELERATOR_UNITS,
    HOST_CPU,
    HOST_DRAM,
    LINK,
    SSD,
    SSD_DRAM,
    AcceleratorUnit,
    PowerComponent,
    PowerTable,
    accelerator_power_w,
)
from genstore.energy.executor import (
    Activity,
    ComponentEnergy,
    EnergyExecutor,
    SumEnergy,
)
from genstore.energy.estimate import energy_estimate, system_energy

__ALL__ = [
    "ACCELERATOR",
    "ACCELERATOR_UNITS",
    "HOST_CPU",
    "HOST_DRAM",
    "LINK",
    "SSD",
    "SSD_DRAM",
    "AcceleratorUnit",
    "PowerComponent",
    "PowerTable",
    "accelerator_power_w",
    "Activity",
    "ComponentEnergy",
    "EnergyExecutor",
    "SumEnergy",
    "energy_estimate",
    "system_energy",
]
