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

"""Index construction parameters."""

from dataclasses import dataclass

from genstore.index.hashing import MAX_PACKED_K

DEFAULT_K = 15
DEFAULT_W = 10
DEFAULT_MAX_LOCATIONS = 495
DEFAULT_READ_LEN = 150


@dataclass(frozen=True)
class IndexParams:
    """
    Parameters shared by the index builders.

    Args:
        k (int): Minimizer k-mer length, packed in one 64-bit word.
        w (int): Minimizer window, in k-mers.
        max_locations (int): Minimizers seen at more reference positions are dropped.
        read_len (int): k-mer length of the exact-match index.
    """

    k: int = DEFAULT_K
    w: int = DEFAULT_W
    max_locations: int = DEFAULT_MAX_LOCATIONS
    read_len: int = DEFAULT_READ_LEN

    def __post_init__(self):
        if not 1 <= self.k <= MAX_PACKED_K:
            raise ValueError(f"k must be in [1, {MAX_PACKED_K}], got {self.k}")
        if self.w < 1:
            raise ValueError(f"w must be at least 1, got {self.w}")
        if self.max_locations < 0:
            raise ValueError("max_locations cannot be negative")
        if self.read_len < 1:
            raise ValueError("read_len must be positive")
