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

"""End-to-end energy of a modelled run."""

from genstore.energy.executor import Activity, ComponentEnergy, SumEnergy


def system_energy(power_table):
    """One :py:class:`ComponentEnergy` per component of ``power_table``, summed."""
    return SumEnergy([ComponentEnergy(c) for c in power_table.components])


def energy_estimate(run, power_table):
    """
    Energy of a run in joules.

    Every component draws its active power while busy and its idle power for
    the rest of the run.

    Args:
        run: An :py:class:`genstore.energy.Activity`, or any object with an
            ``activity()`` method such as :py:class:`genstore.pipeline.PipelineReport`.
        power_table (:py:class:`genstore.energy.PowerTable`): Component powers.

    Returns:
        float

    >>> from genstore.energy import PowerTable
    >>> energy_estimate(Activity(0.0), PowerTable.default())
    0.0
    """
    activity = run if isinstance(run, Activity) else run.activity()
    if activity.total_s <= 0:
        return 0.0
    return system_energy(power_table)(activity)
