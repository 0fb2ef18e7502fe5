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

"""Tests for :py:mod:`genstore.energy`."""

import pytest

from genstore.energy import (
    Activity,
    ComponentEnergy,
    PowerComponent,
    PowerTable,
    SumEnergy,
    accelerator_power_w,
    energy_estimate,
    system_energy,
)
from genstore.errors import ConfigError


def test_accelerator_power_scales_with_channels():
    assert accelerator_power_w(8) == pytest.approx(0.0266)
    assert accelerator_power_w(16) == pytest.approx(0.05309)


def test_default_table():
    table = PowerTable.default(channels=16)
    assert table["host_cpu"].active_w == 225.0
    assert table["host_cpu"].idle_w == 90.0
    assert table["accelerator"].active_w == pytest.approx(accelerator_power_w(16))
    assert set(table.to_dict()) == {
        "host_cpu",
        "host_dram",
        "ssd",
        "ssd_dram",
        "link",
        "accelerator",
    }
    with pytest.raises(KeyError):
        table["gpu"]


def test_table_validation():
    with pytest.raises(ConfigError):
        PowerComponent("cpu", -1.0)
    with pytest.raises(ConfigError):
        PowerTable((PowerComponent("cpu", 1.0), PowerComponent("cpu", 2.0)))


def test_replacing_a_component():
    table = PowerTable.default().with_component(PowerComponent("host_cpu", 100.0, 10.0))
    assert table["host_cpu"].active_w == 100.0
    assert len(table.components) == 6


def test_component_energy_splits_busy_and_idle_time():
    cpu = ComponentEnergy(PowerComponent("cpu", 100.0, 10.0))
    assert cpu(Activity(10.0, {"cpu": 4.0})) == pytest.approx(460.0)
    # busy time is clipped to the run
    assert cpu(Activity(10.0, {"cpu": 40.0})) == pytest.approx(1000.0)
    assert cpu(Activity(10.0)) == pytest.approx(100.0)


def test_executors_compose():
    cpu = ComponentEnergy(PowerComponent("cpu", 100.0, 10.0))
    link = ComponentEnergy(PowerComponent("link", 2.0))
    activity = Activity(10.0, {"cpu": 4.0, "link": 5.0})
    total = cpu + link
    assert isinstance(total, SumEnergy)
    assert total(activity) == pytest.approx(470.0)
    assert (total + cpu)(activity) == pytest.approx(930.0)
    with pytest.raises(TypeError):
        2 * cpu


def test_system_energy_covers_every_component():
    table = PowerTable.default()
    assert len(system_energy(table).executors) == len(table.components)
    idle = energy_estimate(Activity(1.0), table)
    assert idle == pytest.approx(sum(c.idle_w for c in table.components))


def test_empty_run_uses_no_energy():
    assert energy_estimate(Activity(0.0, {"host_cpu": 3.0}), PowerTable.default()) == 0.0
