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
The energy executor.
An object that carries an energy term and the way of evaluating it,
given the activity of a run.

.. testcode::

    from genstore.energy import Activity, ComponentEnergy, PowerComponent

    cpu = ComponentEnergy(PowerComponent("host_cpu", 200.0, 50.0))
    dram = ComponentEnergy(PowerComponent("host_dram", 20.0, 5.0))
    total = cpu + dram
    print(total(Activity(10.0, {"host_cpu": 4.0, "host_dram": 4.0})))

.. testoutput::

    1210.0

"""

import abc
from dataclasses import dataclass, field
from typing import Dict


@dataclass(frozen=True)
class Activity:
    """
    How long a run took and how long each component was busy.

    Components missing from ``active_s`` were idle throughout.
    """

    total_s: float
    active_s: Dict[str, float] = field(default_factory=dict)

    def active(self, name):
        """Busy time of ``name``, clipped to the run length."""
        return min(max(self.active_s.get(name, 0.0), 0.0), self.total_s)


class EnergyExecutor:
    """Carry an energy term and the way of evaluating it. Given an activity."""

    @abc.abstractmethod
    def call(self, activity):
        r"""
        Evaluate the energy term in joules.

        Args:
            activity (:py:class:`genstore.energy.Activity`): The run activity.
        """

    def __call__(self, activity):
        r"""
        Evaluate the energy term.

        Args:
            activity (:py:class:`genstore.energy.Activity`): The run activity.

        """
        return self.call(activity)

    def __add__(self, other):
        if isinstance(other, SumEnergy):
            other_executors = other.executors
        else:
            other_executors = [other]

        all_executors = [self] + other_executors
        return SumEnergy(all_executors)


class ComponentEnergy(EnergyExecutor):
    """Active power over the busy time plus idle power over the rest of the run."""

    def __init__(self, component):
        """
        Args:
            component (:py:class:`genstore.energy.PowerComponent`): The component.
        """
        super().__init__()
        self._component = component

    @property
    def component(self):
        return self._component

    def call(self, activity):
        busy = activity.active(self._component.name)
        return (
            self._component.active_w * busy
            + self._component.idle_w * (activity.total_s - busy)
        )


class SumEnergy(EnergyExecutor):
    """
    The sum executor. Evaluates every executor and adds the results.
    """

    def __init__(self, executors):
        """
        Initialize the SumEnergy.

        Args:
            executors (:py:obj:`list` of :py:class:`genstore.energy.EnergyExecutor`): Array of
                executors to evaluate and sum together.

        Returns:
            :py:obj:`None`

        """
        super().__init__()
        self._executors = list(executors)

    @property
    def executors(self):
        """Return the array of Executors."""
        return self._executors

    def call(self, activity):
        """Evaluate and sum together the Executors."""
        return sum(executor(activity) for executor in self._executors)

    def __add__(self, other):
        if isinstance(other, SumEnergy):
            executors = other.executors
        else:
            executors = [other]

        return SumEnergy(self.executors + executors)
