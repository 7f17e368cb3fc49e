"""
exceptions.py

Objetivo del script:
Exception hierarchy for cubegrowth.

Every failure mode that stops a computation has its own class so the CLI can
map it to an exit code (parse error 2, precondition or structural violation 3)
and so callers can catch a whole family at once. Identity failures are not
exceptions: they are reported as data.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any


class CubeGrowthError(Exception):
    """Base exception for all cubegrowth errors."""


class ParseError(CubeGrowthError):
    """A text input violates its file format.

    Attributes:
        message: What went wrong.
        path: File being read (None for in-memory text).
        line: 1-based line number, when the error is tied to a line.
        invariant: The format rule or structural invariant that was violated.
    """

    def __init__(
        self,
        message: str,
        path: Path | str | None = None,
        line: int | None = None,
        invariant: str | None = None,
    ) -> None:
        self.message = message
        self.path = str(path) if path is not None else None
        self.line = line
        self.invariant = invariant
        super().__init__(self.message)

    def __str__(self) -> str:
        where = self.path or "<text>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        parts = [f"{where}: {self.message}"]
        if self.invariant:
            parts.append(f"(invariant: {self.invariant})")
        return " ".join(parts)


class PreconditionError(CubeGrowthError):
    """An operation was called on inputs outside its domain.

    Attributes:
        message: Explanation of the violated precondition.
        field: The argument that failed (optional).
        value: The offending value (optional).
    """

    def __init__(self, message: str, field: str | None = None, value: Any = None) -> None:
        self.message = message
        self.field = field
        self.value = value
        super().__init__(self.message)

    def __str__(self) -> str:
        parts = [self.message]
        if self.field:
            parts.append(f"(field: {self.field})")
        if self.value is not None:
            parts.append(f"(value: {self.value!r})")
        return " ".join(parts)


class UnknownCellError(PreconditionError):
    """A vertex, cube or face is not part of the complex."""


class DisconnectedError(PreconditionError):
    """Two vertices lie in different components of the 1-skeleton."""


class StarIncompleteError(PreconditionError):
    """A vertex lies outside the star-complete region of a ball window."""


class TruncationError(PreconditionError):
    """A series degree exceeds what a ball window supports."""


class NonFlagNerveError(PreconditionError):
    """A nerve is not flag, so its Davis complex is not CAT(0)."""


class StructuralError(CubeGrowthError):
    """A complex is internally inconsistent.

    Raised for inconsistent face gluing and for ambiguous spanned cubes, both
    of which are impossible in CAT(0) cube complexes.

    Attributes:
        message: Explanation of the inconsistency.
        witness: The cells exhibiting it.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        self.message = message
        self.witness = witness
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.witness is None:
            return self.message
        return f"{self.message} (witness: {self.witness!r})"


class AlgebraError(CubeGrowthError):
    """Base class for exact-arithmetic failures."""


class ZeroDivisionInFieldError(AlgebraError, ZeroDivisionError):
    """Division by the zero rational function."""


class NotAPowerSeriesError(AlgebraError):
    """A rational function has a pole at t = 0 and cannot be expanded."""


class DimensionMismatchError(AlgebraError):
    """Matrix or vector shapes do not agree."""


class SingularMatrixError(AlgebraError):
    """A square system has no unique solution over the rational-function field."""


class ConfigurationError(CubeGrowthError):
    """Invalid configuration value in the environment or .env file."""
