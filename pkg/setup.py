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

"""Package GenStore."""
import re
from setuptools import find_packages, setup

# Meta
INIT_PY = open("genstore/__init__.py").read()
METADATA = dict(re.findall(r"__([a-z]+)__ = \"([^\"]+)\"", INIT_PY))

# Info
README = open("README.md").read()

# Requirements
REQUIREMENTS = ["numpy>=1.17", "mmh3>=3.0", "simpy>=4.0"]
TEST_REQUIREMENTS = ["pytest"]

setup(
    name="genstore",
    version=METADATA["version"],
    description=(
        "In-storage read filtering models for genome sequence analysis: "
        "exact-match and non-matching filters with an SSD timing model."
    ),
    long_description=README,
    long_description_content_type="text/markdown",
    author=METADATA["author"],
    author_email=METADATA["email"],
    url=METADATA["url"],
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=REQUIREMENTS,
    tests_require=TEST_REQUIREMENTS,
    extras_require={"test": TEST_REQUIREMENTS},
    entry_points={"console_scripts": ["genstore=genstore.cli:main"]},
    license="Apache License, Version 2.0",
    zip_safe=False,
    keywords=["genstore", "genomics", "read-mapping", "ssd", "near-data-processing"],
    classifiers=["Programming Language :: Python :: 3.7"],
)
