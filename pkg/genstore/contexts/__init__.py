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
Contexts hand the outcome of a filter run to the metrics measured on it.

.. currentmodule:: genstore.contexts

.. rubric:: Classes

.. autosummary::
    :nosignatures:
    :toctree: contexts

    base_context.BaseContext
    filter.FilterContext

----

.. rubric:: Modules

.. autosummary::
    :nosignatures:
    :toctree: contexts
    :template: autosummary/submodule.rst

    base_context
    filter

"""

from genstore.contexts.base_context import BaseContext
from genstore.contexts.filter import FilterContext

__ALL__ = ["BaseContext", "FilterContext"]
