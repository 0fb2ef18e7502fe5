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
Seed chaining scores.

For seeds sorted by ``(x, y)`` the best score of a chain ending at seed ``i`` is

.. math::

    f(i) = \max\left(w_i, \max_{i - h \le j < i} f(j) + \alpha(j, i) - \beta(j, i)\right)

where :math:`\alpha(j, i) = \min(\min(y_i - y_j, x_i - x_j), w_i)` counts the
bases the chain gains and :math:`\beta` charges the diagonal gap
:math:`\ell = (y_i - y_j) - (x_i - x_j)`. A pair with non-increasing ``x`` or
``y``, or with :math:`|\ell|` above ``max_gap``, cannot be chained.

The exact gap cost is :math:`\lfloor 0.01 k |\ell| + 0.5 \log_2 |\ell| \rfloor`.
The hardware-friendly cost replaces the product with a shift by 7 and the
logarithm with the bit length, never charging more than the exact cost, so
its scores never fall below the exact ones.

>>> from genstore.nmfilter import NmParams, Seed
>>> seeds = [Seed(100, 15, 15), Seed(115, 30, 15)]
>>> chain_score_exact(seeds, NmParams()), chain_score_approx(seeds, NmParams())
(30, 30)
"""

import math
from dataclasses import dataclass
from typing import Tuple

from genstore.errors import UnsortedInputError


def gap_cost_exact(gap, k):
    """Exact penalty of a non-zero diagonal gap."""
    gap = abs(gap)
    return int(0.01 * k * gap + 0.5 * math.log2(gap))


def gap_cost_approx(gap, k):
    """Shift-and-bit-length penalty, never above :py:func:`gap_cost_exact`."""
    gap = abs(gap)
    return ((k * gap) >> 7) + ((gap.bit_length() - 1) >> 1)


@dataclass(frozen=True)
class ChainState:
    """Per-seed best scores and the predecessor each one extends (``-1`` for none)."""

    f: Tuple[int, ...]
    predecessors: Tuple[int, ...]

    @property
    def best(self):
        return max(self.f, default=0)


def check_sorted(seeds):
    for i in range(1, len(seeds)):
        if (seeds[i].x, seeds[i].y) < (seeds[i - 1].x, seeds[i - 1].y):
            raise UnsortedInputError("seed list", i)


def chain_state(seeds, params, gap_cost=gap_cost_exact, lookback=None):
    """
    Run the chaining recurrence.

    Args:
        seeds (list): :py:class:`genstore.nmfilter.Seed` sorted by ``(x, y)``.
        params (:py:class:`genstore.nmfilter.NmParams`): ``k``, ``max_gap`` and ``lookback``.
        gap_cost (callable): ``gap_cost(gap, k)`` penalty of a non-zero gap.
        lookback (int): Overrides ``params.lookback``.

    Returns:
        :py:class:`ChainState`

    Raises:
        :py:class:`genstore.errors.UnsortedInputError`: On unsorted seeds.

    """
    check_sorted(seeds)
    h = params.lookback if lookback is None else lookback
    k, max_gap = params.k, params.max_gap
    f, predecessors = [], []
    for i, seed in enumerate(seeds):
        best, parent = seed.w, -1
        for j in range(max(0, i - h), i):
            other = seeds[j]
            dx = seed.x - other.x
            dy = seed.y - other.y
            if dx <= 0 or dy <= 0:
                continue
            gap = dy - dx
            if abs(gap) > max_gap:
                continue
            score = f[j] + min(dx, dy, seed.w) - (gap_cost(gap, k) if gap else 0)
            if score > best:
                best, parent = score, j
        f.append(best)
        predecessors.append(parent)
    return ChainState(tuple(f), tuple(predecessors))


def chain_score_exact(seeds, params):
    """Best chaining score with the exact gap cost; 0 for no seeds."""
    return chain_state(seeds, params, gap_cost_exact).best


def chain_score_approx(seeds, params):
    """Best chaining score with the shift approximation; never below :py:func:`chain_score_exact`."""
    return chain_state(seeds, params, gap_cost_approx).best
