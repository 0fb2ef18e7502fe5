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

"""GenStore Package."""

from . import seqio
from . import index
from . import emfilter
from . import nmfilter
from . import ssd
from . import metrics
from . import contexts
from . import energy
from . import pipeline
from . import refkit
from . import synth
from .modes import FilterMode

__version__ = "0.3.0"
__url__ = "https://github.com/genstore/genstore"
__author__ = "GenStore Team"
__email__ = "genstore@users.noreply.github.com"
