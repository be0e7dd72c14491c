# Copyright (c) 2024 The diagsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import sys

from setuptools import setup, find_packages

if sys.argv[-1].startswith('--version='):
    version = sys.argv[-1].split('=')[1]
    sys.argv = sys.argv[0:len(sys.argv) - 1]
else:
    version = '0.0.0'

with open("README.md", "r", encoding="utf8") as fh:
    long_description = fh.read()

setup(
    name="diagsim",
    version=version,
    long_description=long_description,
    long_description_content_type="text/markdown",
    description="diagsim, similar matrices with a prescribed diagonal "
    "over Q, GF(p) and Z",
    packages=find_packages(),
    package_data={
        "diagsim": ["data/*.json", "data/golden/*.txt", "test/data/*.txt"],
    },
    python_requires=">=3.8",
    install_requires=['importlib_resources'],
    entry_points={
        "console_scripts": [
            "diagsim = diagsim.main:main",
        ]
    },
    tests_require=['pytest', 'hypothesis', 'sympy'],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
