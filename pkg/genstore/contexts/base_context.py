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
Primitive Context Interface.

``Contexts`` carry what a filter run produced, so that metrics can be
measured on it without knowing which filter ran.
"""

from genstore.metrics import Metric


class BaseContext:
    r"""
    :py:class:`genstore.contexts.base_context.BaseContext` provide an interface for all contexts to inherit from.
    """

    def __init__(self, metrics=None, reads=None):
        r"""
        :py:class:`genstore.contexts.base_context.BaseContext`

        Args:
            metrics ([:py:class:`genstore.metrics.metric.Metric`]): array of :py:class:`genstore.metrics.metric.Metric` objects.
            reads (:py:class:`genstore.seqio.ReadSet`): The reads the context refers to.
        """
        self._metrics = metrics if metrics else []
        self._validate_metrics()
        self._reads = reads

    def _validate_metrics(self):
        """Check if every metric is an :py:class:`genstore.metrics.Metric`."""
        for metric in self._metrics:
            if not isinstance(metric, Metric):
                raise ValueError(
                    "Metric " + str(metric) + " is not a genstore.metrics.Metric"
                )

    def measure_metrics(self):
        """Measure the metrics."""
        for metric in self._metrics:
            metric.update_state(self)

    def results(self):
        """Current value of every metric, keyed by metric name."""
        return {metric.name: metric.result() for metric in self._metrics}

    @property
    def reads(self):
        """Return the reads."""
        return self._reads

    @property
    def metrics(self):
        """Return the metrics."""
        return self._metrics
