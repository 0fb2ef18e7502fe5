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

"""Metric is the abstract class that every GenStore filter metric must implement."""

import errno
import json
import os
from abc import ABC, abstractmethod


class Metric(ABC):
    """Metric is the abstract class that every GenStore filter metric must implement."""

    def __init__(self, name):
        """
        Construct the Metric object.

        Args:
            name (str): The name of the metric, used as its key in reports.

        Returns:
            :obj:`None`.
        """
        self._name = name

    @property
    def name(self):
        """The metric name."""
        return self._name

    def __repr__(self):
        return f"{type(self).__name__}(name={self._name!r})"

    @staticmethod
    def json_read(filename):
        """
        Read a JSON file.

        Args:
            filename: The JSON file to read.

        Returns:
            data: The data read.
        """
        if not os.path.exists(filename):
            raise FileNotFoundError(errno.ENOENT, os.strerror(errno.ENOENT), filename)

        with open(filename, "r") as fp:
            return json.load(fp)

    @staticmethod
    def json_write(filename, what_to_write):
        """
        Write a mapping to a JSON file, with sorted keys so equal inputs give equal bytes.

        Args:
            filename: The JSON file to write.
            what_to_write: A dict containing what to write.

        Returns:
             :obj:`None`.
        """
        directory = os.path.dirname(filename)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)

        with open(filename, "w") as fp:
            json.dump(what_to_write, fp, indent=4, sort_keys=True)
            fp.write("\n")

    @abstractmethod
    def update_state(self, context):
        """
        Update the internal state of the metric, using
        the information from the context object.

        Args:
            context: a Context Object that carries all the metric needs.
        """

    @abstractmethod
    def result(self):
        """
        Get the result of the metric.

        Returns:
            The current value of the metric.
        """

    @abstractmethod
    def reset_states(self):
        """
        Reset the state of the metric.

        Returns:
             :obj:`None`.
        """
