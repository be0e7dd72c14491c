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

from importlib_resources import files

from diagsim.errors import ParseError


def read_resource(rel_path):
    """
    Read a data file shipped inside the package

    Args:
        rel_path: path relative to the diagsim package, e.g.
            'data/golden/paper-example-1.txt'

    Returns the file content as text
    """
    return files('diagsim').joinpath(rel_path).read_text(encoding='utf-8')


def str2bool(s, default=False):
    s = s.lower()
    if s == 'true':
        return True
    elif s == 'false':
        return False
    else:
        return default


def parse_pivot(text):
    """'3,4' (1-based, as printed) -> (2, 3)."""
    try:
        r, s = (int(x) - 1 for x in text.split(','))
    except ValueError:
        raise ParseError('pivot must be "r,s", got {!r}'.format(text))
    return r, s
