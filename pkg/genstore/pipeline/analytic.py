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

r"""
Closed-form bounds of the end-to-end read mapping time and of the host link traffic.

With an ideal filter running inside the SSD concurrently with the mapper,

.. math::

    T_{ISF} = T_{ref} + \max(T_{io,unfiltered}, T_{rm,unfiltered})

while an ideal filter running on the host still has to move every read:

.. math::

    T_{OSF} = T_{ref} + \max(T_{io,all}, T_{rm,unfiltered})

The host link traffic saving of a filter removing a fraction ``r`` of the
read set is

.. math::

    \frac{S_{ref} + S_{reads}}{S_{ref} + S_{reads} (1 - r)}

>>> round(dm_saving(DmInputs(7, 22, 0.8)), 3)
2.544
>>> round(dm_saving(DmInputs(0.0146, 12.4, 0.9965)))
214
"""

import math
from dataclasses import dataclass


def _check_non_negative(instance):
    for name, value in vars(instance).items():
        if value < 0:
            raise ValueError(f"{name} cannot be negative")


@dataclass(frozen=True)
class TimingInputs:
    """
    The terms of the closed-form bounds, in seconds.

    Args:
        t_io_ref (float): Moving the reference to the host.
        t_io_unfiltered (float): Moving the reads that survive filtering.
        t_io_all (float): Moving every read.
        t_rm_unfiltered (float): Mapping the reads that survive filtering.
        t_rm_all (float): Mapping every read.
    """

    t_io_ref: float
    t_io_unfiltered: float
    t_io_all: float
    t_rm_unfiltered: float
    t_rm_all: float = 0.0

    def __post_init__(self):
        _check_non_negative(self)
        if self.t_io_unfiltered > self.t_io_all:
            raise ValueError("unfiltered reads cannot take longer to move than all reads")


def t_ideal_isf(inputs):
    """Run time with an ideal in-storage filter."""
    return inputs.t_io_ref + max(inputs.t_io_unfiltered, inputs.t_rm_unfiltered)


def t_ideal_osf(inputs):
    """Run time with an ideal filter outside storage; never below :py:func:`t_ideal_isf`."""
    return inputs.t_io_ref + max(inputs.t_io_all, inputs.t_rm_unfiltered)


def t_preloaded(inputs):
    """Run time without filtering when every input already sits in host DRAM."""
    return inputs.t_rm_all


@dataclass(frozen=True)
class DmInputs:
    """
    Sizes and filter ratio behind the host link traffic saving.

    Args:
        size_ref_gb (float): Reference data moved to the host.
        size_readset_gb (float): Read set size.
        ratio_filter (float): Fraction of the read set removed, in ``[0, 1]``.
    """

    size_ref_gb: float
    size_readset_gb: float
    ratio_filter: float

    def __post_init__(self):
        _check_non_negative(self)
        if self.ratio_filter > 1:
            raise ValueError("ratio_filter must be in [0, 1]")


def dm_saving(inputs):
    """
    Host link traffic without filtering over traffic with filtering.

    Returns:
        float: ``1.0`` when nothing is filtered, ``inf`` when nothing is left to move.

    """
    total = inputs.size_ref_gb + inputs.size_readset_gb
    moved = inputs.size_ref_gb + inputs.size_readset_gb * (1 - inputs.ratio_filter)
    if moved == 0:
        return 1.0 if total == 0 else math.inf
    return total / moved
