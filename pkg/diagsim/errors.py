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


class DiagsimError(Exception):
    """Base class of every error raised by diagsim."""

    exit_code = 1


class ParseError(DiagsimError):

    exit_code = 2

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = '{} (line {}, column {})'.format(message, line, column)
        super().__init__(message)


class PreconditionError(DiagsimError):
    """A hypothesis of a lemma or of the theorem does not hold."""

    exit_code = 1


class SingularMatrixError(PreconditionError):

    def __init__(self, column):
        self.column = column
        super().__init__(
            'matrix is singular: no pivot in column {}'.format(column + 1))


class NotInvertibleError(PreconditionError):
    pass


class VerificationError(DiagsimError):

    exit_code = 3

    def __init__(self, report):
        self.report = report
        super().__init__('verification failed: {}'.format(
            report.first_failure))
