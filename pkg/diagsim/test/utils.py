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

import os

from diagsim.matrix import parse_matrix
from diagsim.ring import RATIONAL

EXAMPLE_ROWS = [
    [4, 0, 4, -3, 5],
    [2, 3, 0, 2, 3],
    [0, -2, 2, 5, 4],
    [7, 1, 3, 4, 0],
    [2, 5, 3, 0, -2],
]
EXAMPLE_DIAGONAL = (3, 5, -2, 6, -1)


def parse_test_case(file_name):
    file = os.path.dirname(os.path.abspath(__file__)) + os.path.sep + file_name

    delimiter = '=>'
    with open(file) as fin:
        for line in fin:
            assert delimiter in line
            arr = line.strip().split(delimiter)
            assert 0 < len(arr) <= 2

            given = arr[0].strip()
            expected = ''
            if len(arr) > 1:
                expected = arr[1].strip()
            yield (given, expected)


def read_matrix(text, ring=RATIONAL):
    """'1 2; 3 4' -> 2x2 matrix over ring."""
    rows = [row.split() for row in text.split(';')]
    return parse_matrix(rows, ring)
