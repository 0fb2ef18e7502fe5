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

"""Parameters of the non-matching read filter."""

from dataclasses import asdict, dataclass

from genstore.index.hashing import MAX_PACKED_K
from genstore.index.params import DEFAULT_K, DEFAULT_W


@dataclass(frozen=True)
class NmParams:
    """
    Seed-count gate and chaining parameters.

    Args:
        min_seeds (int): Reads with fewer seeds are filtered without chaining.
        max_seeds (int): Seed cap; reads reaching it are forwarded without chaining.
        lookback (int): Predecessors examined per seed by the chaining recurrence.
        w (int): Minimizer window.
        k (int): Minimizer length.
        min_chain_score (int): Chained reads scoring below are filtered.
        max_gap (int): Larger diagonal gaps break a chain.
    """

    min_seeds: int = 3
    max_seeds: int = 64
    lookback: int = 50
    w: int = DEFAULT_W
    k: int = DEFAULT_K
    min_chain_score: int = 40
    max_gap: int = 5000

    def __post_init__(self):
        if not 1 <= self.min_seeds <= self.max_seeds:
            raise ValueError(
                f"need 1 <= min_seeds <= max_seeds, got {self.min_seeds}, {self.max_seeds}"
            )
        if self.lookback < 1:
            raise ValueError("lookback must be at least 1")
        if not 1 <= self.k <= MAX_PACKED_K:
            raise ValueError(f"k must be in [1, {MAX_PACKED_K}]")
        if self.w < 1:
            raise ValueError("w must be at least 1")
        if self.max_gap < 0:
            raise ValueError("max_gap cannot be negative")

    def to_dict(self):
        return asdict(self)
